import pytest
from hypothesis import given, strategies as st

from reeskernel.coefficients import Field
from reeskernel.fixtures import dual_numbers, embedding_example, free_plus
from reeskernel.freemod import Submodule
from reeskernel.groebner import QuotientRing
from reeskernel.integrality import (Status, analytic_spread, graded_power, in_generators,
                                    integral_in, integral_modulo_prime, is_reduction,
                                    spread_from_map, whole_module)
from reeskernel.modpres import ModulePresentation, min_generators
from reeskernel.polyring import Ideal, PolyRing
from reeskernel.rees import inclusion_map

QQ = Field.qq()


def plane():
    P = PolyRing(QQ, ("x", "y"))
    return P, QuotientRing(P), Ideal(P, P.gens())


def square_fixture():
    P, R, m = plane()
    x, y = P.gens()
    M = ModulePresentation.from_ideal(R, [x ** 2, x * y, y ** 2])
    amb = lambda gens: Submodule(R, 1, [[g] for g in gens])  # noqa: E731
    return P, R, m, M, amb


def test_graded_powers():
    P, R, m, N = dual_numbers(QQ)
    (x,) = P.gens()
    assert all(v.is_zero() for v in graded_power(Submodule(R, 1, [[x]]), 2).submodule.gens)
    Pp, Rp, _ = plane()
    G = graded_power(Submodule(Rp, 1, [[1]]), 3)
    assert G.monomials == [(3,)] and G.submodule.contains([1])
    G2 = graded_power(Submodule(Rp, 2, [[1, 0], [0, 1]]), 2)
    assert len(G2.monomials) == 3
    assert all(G2.submodule.contains(v) for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1]))


def test_dual_numbers_weak_integrality():
    P, R, m, N = dual_numbers(QQ)
    zero = Submodule(R, 1, [[0]])
    v = integral_in(zero, whole_module(N), N)
    assert v.status is Status.INTEGRAL and v.witness_degree == 1
    assert analytic_spread(N, m) == 0
    w = integral_modulo_prime(zero, whole_module(N), N, m)
    assert w.integral and w.witness_degree == 1


def test_self_integrality():
    P, R, m, M, amb = square_fixture()
    W = whole_module(M)
    v = integral_in(W, W, M)
    assert v.integral and v.witness_degree == 1


def test_reductions():
    P, R, m, M, amb = square_fixture()
    x, y = P.gens()
    U = in_generators(M, amb([x ** 2, y ** 2]))
    v = is_reduction(U, M)
    assert v.status is Status.INTEGRAL and v.witness_degree == 1
    w = is_reduction(in_generators(M, amb([x ** 2])), M, max_degree=6)
    assert w.status is Status.NOT_DECIDED and w.bound == 6 and w.witness_degree is None
    assert integral_in(U, whole_module(M), M).integral


def test_domain_with_zero_prime_agrees():
    P, R, m, M, amb = square_fixture()
    x, y = P.gens()
    U = in_generators(M, amb([x ** 2, y ** 2]))
    zero = Ideal(P, [])
    assert integral_modulo_prime(U, whole_module(M), M, zero, 4) == integral_in(
        U, whole_module(M), M, 4)


def test_errors():
    P, R, m, M, amb = square_fixture()
    x, y = P.gens()
    with pytest.raises(ValueError):
        integral_in(whole_module(M), in_generators(M, amb([x ** 2])), M)
    with pytest.raises(ValueError):
        integral_modulo_prime(whole_module(M), whole_module(M), M, Ideal(P, [P.one()]))
    with pytest.raises(ValueError):
        analytic_spread(M, Ideal(P, [P.one()]))


def test_spreads():
    P, R, m, M, amb = square_fixture()
    assert analytic_spread(M, m) == 2
    Pd, Rd, md, N = dual_numbers(QQ)
    assert [analytic_spread(free_plus(N, r), md) for r in range(3)] == [0, 1, 2]


def test_spread_through_an_embedding_matches():
    e = embedding_example(3)
    assert spread_from_map(e.g1, e.max_ideal) == analytic_spread(e.M, e.max_ideal)
    P, R, m, M, amb = square_fixture()
    assert spread_from_map(inclusion_map(M), m) == analytic_spread(M, m)


_P, _R, _m, _M, _amb = square_fixture()
_x, _y = _P.gens()
_pool = [_x ** 2, _y ** 2, _x * _y, _x ** 2 + _y ** 2, _x ** 2 - _x * _y, _x * _y + _y ** 2]


@given(st.lists(st.sampled_from(_pool), min_size=1, max_size=3, unique_by=str),
       st.sampled_from(_pool))
def test_reductions_are_monotone(gens, extra):
    U = in_generators(_M, _amb(gens))
    bigger = in_generators(_M, _amb(gens + [extra]))
    v = is_reduction(U, _M, 3)
    if v.integral:
        w = is_reduction(bigger, _M, 3)
        assert w.integral and w.witness_degree <= v.witness_degree


@given(st.lists(st.sampled_from(_pool), min_size=1, max_size=3, unique_by=str))
def test_spread_is_at_most_number_of_generators(gens):
    N = ModulePresentation.from_ideal(_R, gens)
    assert analytic_spread(N, _m) <= min_generators(N, _m)
