"""Small worked fixtures used by the tests and the golden scripts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .coefficients import Field
from .freemod import PolyMatrix, Submodule
from .groebner import QuotientRing
from .modpres import ModuleMap, ModulePresentation
from .polyring import Ideal, MonomialOrder, Polynomial, PolyRing


@dataclass
class EmbeddingExample:
    """``R = k[x,y,z] / ((x^p, y^p) + (x,y,z)^(p+1))`` with ``M = (z)``.

    ``g1: M -> R`` is the inclusion and ``g2: M -> R^2`` sends ``z`` to ``(x, y)``.
    """

    p: int
    ring: PolyRing
    R: QuotientRing
    max_ideal: Ideal
    M: ModulePresentation
    g1: ModuleMap
    g2: ModuleMap


def embedding_example(p: int, field: Field = None) -> EmbeddingExample:
    F = field or Field.gf(p)
    P = PolyRing(F, ("x", "y", "z"))
    x, y, z = P.gens()
    m = Ideal(P, [x, y, z])
    R = QuotientRing(P, Ideal(P, [x ** p, y ** p]) + m ** (p + 1))
    M = ModulePresentation.from_ideal(R, [z])
    g1 = ModuleMap(M, 1, PolyMatrix(R, [[z]]))
    g2 = ModuleMap(M, 2, PolyMatrix(R, [[x, y]]))
    return EmbeddingExample(p, P, R, m, M, g1, g2)


def polynomial_ring(field: Field, names=("x", "y"), order: str = "grevlex"):
    """``(P, P/0, (vars))`` for quick fixtures."""
    P = PolyRing(field, tuple(names), MonomialOrder(order))
    return P, QuotientRing(P, Ideal(P, [])), Ideal(P, P.gens())


def ideal_module(R: QuotientRing, gens: List[Polynomial]) -> ModulePresentation:
    return ModulePresentation.from_ideal(R, gens)


def dual_numbers(field: Field):
    """``k[x]/(x^2)``, its maximal ideal and ``N = (x)``."""
    P = PolyRing(field, ("x",))
    (x,) = P.gens()
    R = QuotientRing(P, Ideal(P, [x ** 2]))
    N = ModulePresentation.from_ideal(R, [x])
    return P, R, Ideal(P, [x]), N


def free_plus(N: ModulePresentation, r: int) -> ModulePresentation:
    """``R^r (+) N``."""
    return ModulePresentation.free(N.ring, r).direct_sum(N)


def submodule_of(R: QuotientRing, vectors) -> ModulePresentation:
    rank = len(vectors[0])
    return ModulePresentation.from_submodule(Submodule(R, rank, vectors))
