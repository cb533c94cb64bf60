import pytest

from reeskernel.coefficients import Field
from reeskernel.fixtures import dual_numbers, embedding_example, free_plus
from reeskernel.freemod import PolyMatrix, Submodule
from reeskernel.groebner import QuotientRing
from reeskernel.modpres import (ModuleMap, ModulePresentation, dual_module, min_generators,
                                torsionless_quotient, versal_map)
from reeskernel.polyring import Ideal, PolyRing

QQ = Field.qq()


@pytest.fixture(scope="module")
def ex3():
    return embedding_example(3)


def test_dual_of_embedding_example_needs_three_generators(ex3):
    assert len(dual_module(ex3.M).gens) == 3


def test_versal_map_sends_z_to_xyz(ex3):
    f = versal_map(ex3.M)
    x, y, z = ex3.ring.gens()
    assert f.target_rank == 3
    assert sorted(map(str, f.matrix.rows[0])) == sorted(map(str, (x, y, z)))
    assert Submodule(ex3.R, 3, [f.matrix.rows[0]]).contains(
        torsionless_quotient(ex3.M).gens[0])


def test_given_maps_factor_through_versal(ex3):
    f = versal_map(ex3.M)
    for g in (ex3.g1, ex3.g2):
        W = g.factor_through(f)
        assert W is not None
        assert f.matrix @ W == g.matrix


def test_free_module_duals():
    P = PolyRing(QQ, ("x",))
    R = QuotientRing(P)
    M = ModulePresentation.free(R, 1)
    assert [tuple(v) for v in dual_module(M).gens] == [(P.one(),)]
    assert versal_map(M).matrix == PolyMatrix(R, [[1]])


def test_dual_over_dual_numbers():
    P, R, m, _ = dual_numbers(QQ)
    (x,) = P.gens()
    M = ModulePresentation(R, 1, PolyMatrix(R, [[x]]))  # R/(x)
    D = dual_module(M)
    assert D.contains([x]) and not D.contains([1])
    f = versal_map(M)
    assert f.matrix == PolyMatrix(R, [[x]])
    assert torsionless_quotient(M).contains([x])


def test_free_summand_gives_unimodular_row():
    P, R, m, N = dual_numbers(QQ)
    M = free_plus(N, 1)
    Q = torsionless_quotient(M)
    assert Q.contains([1, 0]) or Q.contains([0, 1])


def test_min_generators(ex3):
    assert min_generators(ex3.M, ex3.max_ideal) == 1
    P = PolyRing(QQ, ("x", "y"))
    R = QuotientRing(P)
    m = Ideal(P, P.gens())
    assert min_generators(ModulePresentation.free(R, 2), m) == 2
    assert min_generators(ModulePresentation(R, 1, PolyMatrix(R, [[1]])), m) == 0
    with pytest.raises(ValueError):
        min_generators(ModulePresentation.free(R, 1), Ideal(P, [P.one()]))


def test_map_must_respect_relations():
    P, R, m, _ = dual_numbers(QQ)
    M = ModulePresentation(R, 1, PolyMatrix(R, [[P.gen("x")]]))
    with pytest.raises(ValueError):
        ModuleMap(M, 1, PolyMatrix(R, [[1]]))
