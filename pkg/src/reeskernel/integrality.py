"""Integral dependence of submodules, reductions and analytic spread.

Integrality is tested on images under the versal map inside ``Sym(R^m)``:
``R[U'] <= R[L']`` is integral iff ``L'^(n+1) = U' L'^n`` for some ``n``.
Only finitely many ``n`` are tried, so a negative answer is ``NOT_DECIDED``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .freemod import ModuleVector, Submodule
from .groebner import QuotientRing, buchberger, krull_dim
from .modpres import ModuleMap, ModulePresentation, maximal_ideal_basis, versal_map
from .polyring import Ideal, Polynomial, PolyRing, RingMismatch
from .rees import rees_ideal, rees_of_map

DEFAULT_MAX_DEGREE = 10

TForm = Dict[Tuple[int, ...], Polynomial]


class Status(str, Enum):
    INTEGRAL = "INTEGRAL"
    NOT_DECIDED = "NOT_DECIDED"


@dataclass(frozen=True)
class IntegralityVerdict:
    status: Status
    witness_degree: Optional[int]
    bound: int

    @property
    def integral(self) -> bool:
        return self.status is Status.INTEGRAL


def sym_basis(m: int, n: int) -> List[Tuple[int, ...]]:
    """Exponent vectors of the degree-``n`` monomials in ``m`` variables."""
    out = []
    for combo in combinations_with_replacement(range(m), n):
        e = [0] * m
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _linear_form(v: ModuleVector) -> TForm:
    m = v.rank
    out = {}
    for i, c in enumerate(v):
        if not c.is_zero():
            e = [0] * m
            e[i] = 1
            out[tuple(e)] = c
    return out


def _mul_forms(a: TForm, b: TForm, R: QuotientRing) -> TForm:
    out: TForm = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out[e] + ca * cb if e in out else ca * cb
    reduced = {}
    for e, c in out.items():
        c = R.reduce(c)
        if not c.is_zero():
            reduced[e] = c
    return reduced


def _form_to_vector(f: TForm, basis_index: Dict[Tuple[int, ...], int], R: QuotientRing) -> ModuleVector:
    zero = R.ring.zero()
    entries = [zero] * len(basis_index)
    for e, c in f.items():
        entries[basis_index[e]] = c
    return ModuleVector(R, entries, reduce=False)


@dataclass
class GradedPower:
    """The degree-``n`` power of a submodule of ``R^m`` inside ``Sym_n(R^m)``."""

    rank: int
    degree: int
    monomials: List[Tuple[int, ...]]
    submodule: Submodule

    def k_dimension(self) -> int:
        return self.submodule.k_dimension()


def _power_forms(S: Submodule, n: int) -> List[TForm]:
    R = S.ring
    lins = [_linear_form(v) for v in S.gens]
    if n == 0:
        return [{(0,) * S.rank: R.ring.one()}]
    forms = []
    for combo in combinations_with_replacement(range(len(lins)), n):
        f = lins[combo[0]]
        for j in combo[1:]:
            if not f:
                break
            f = _mul_forms(f, lins[j], R)
        forms.append(f)
    return forms


def _as_graded(R: QuotientRing, m: int, n: int, forms: List[TForm]) -> GradedPower:
    basis = sym_basis(m, n)
    index = {e: i for i, e in enumerate(basis)}
    vecs = [_form_to_vector(f, index, R) for f in forms]
    return GradedPower(m, n, basis, Submodule(R, len(basis), vecs))


def graded_power(S: Submodule, n: int) -> GradedPower:
    """All ``n``-fold products of the generators of ``S`` (linear forms in ``t``)."""
    if n < 1:
        raise ValueError("graded powers need n >= 1")
    return _as_graded(S.ring, S.rank, n, _power_forms(S, n))


def _images(vectors: Sequence[ModuleVector], H, R: QuotientRing) -> List[ModuleVector]:
    """Apply the map with matrix ``H`` (rows = generator images) to coefficient vectors."""
    P = R.ring
    out = []
    for v in vectors:
        entries = []
        for i in range(H.ncols):
            acc = P.zero()
            for j, c in enumerate(v):
                if not c.is_zero():
                    acc = acc + P.convert(c) * P.convert(H[j, i])
            entries.append(acc)
        out.append(ModuleVector(R, entries))
    return out


def _stabilization(Uimg: Submodule, Limg: Submodule, max_degree: int) -> IntegralityVerdict:
    R = Uimg.ring
    m = Limg.rank
    lin_u = [_linear_form(v) for v in Uimg.gens]
    for n in range(1, max_degree + 1):
        L_n = _power_forms(Limg, n)
        L_next = _power_forms(Limg, n + 1)
        products = [_mul_forms(u, f, R) for u in lin_u for f in L_n]
        target = _as_graded(R, m, n + 1, products).submodule
        index = {e: i for i, e in enumerate(sym_basis(m, n + 1))}
        if all(target.contains(_form_to_vector(f, index, R)) for f in L_next):
            return IntegralityVerdict(Status.INTEGRAL, n, max_degree)
    return IntegralityVerdict(Status.NOT_DECIDED, None, max_degree)


def _check_inside(U: Submodule, L: Submodule, M: ModulePresentation):
    if U.rank != M.ngens or L.rank != M.ngens:
        raise ValueError(f"submodules must be given in the {M.ngens} generators of the module")
    span = Submodule(M.ring, M.ngens, list(L.gens) + M.relations.columns())
    for u in U.gens:
        if not span.contains(u):
            raise ValueError(f"{u} is not in L: U is not contained in L")


def integral_in(U: Submodule, L: Submodule, M: ModulePresentation,
                max_degree: int = DEFAULT_MAX_DEGREE) -> IntegralityVerdict:
    """Is ``L`` integral over ``U`` in ``M``?  ``U`` and ``L`` are given as
    coefficient vectors in the generators of ``M``."""
    _check_inside(U, L, M)
    f = versal_map(M)
    R = M.ring
    Uimg = Submodule(R, f.target_rank, _images(U.gens, f.matrix, R))
    Limg = Submodule(R, f.target_rank, _images(L.gens, f.matrix, R))
    return _stabilization(Uimg, Limg, max_degree)


def whole_module(M: ModulePresentation) -> Submodule:
    one, zero = M.ring.ring.one(), M.ring.ring.zero()
    return Submodule(M.ring, M.ngens, [[one if i == j else zero for j in range(M.ngens)]
                                       for i in range(M.ngens)])


def is_reduction(U: Submodule, M: ModulePresentation,
                 max_degree: int = DEFAULT_MAX_DEGREE) -> IntegralityVerdict:
    """Reduction test; the witness degree is the reduction number found."""
    return integral_in(U, whole_module(M), M, max_degree)


def reduce_mod_prime(R: QuotientRing, Q: Ideal) -> QuotientRing:
    P = R.ring
    G = buchberger(Ideal(P, [P.convert(g) for g in Q.gens]), quotient=R.gb)
    if G.is_unit():
        raise ValueError("Q is the unit ideal")
    return QuotientRing(P, Ideal(P, G.polys))


def integral_modulo_prime(U: Submodule, L: Submodule, M: ModulePresentation, Q: Ideal,
                          max_degree: int = DEFAULT_MAX_DEGREE) -> IntegralityVerdict:
    """The integrality test after passing to ``R/Q`` with images in ``F/QF``.

    ``Q`` is trusted to be a (minimal) prime of ``R``.
    """
    _check_inside(U, L, M)
    RQ = reduce_mod_prime(M.ring, Q)
    f = versal_map(M)
    Uimg = Submodule(RQ, f.target_rank, _images(U.gens, f.matrix, RQ))
    Limg = Submodule(RQ, f.target_rank, _images(L.gens, f.matrix, RQ))
    return _stabilization(Uimg, Limg, max_degree)


def _fiber_dimension(Rp, max_ideal: Ideal) -> int:
    maximal_ideal_basis(Rp.base, max_ideal)
    ring = Rp.ring
    fiber = Rp.relations + Ideal(ring, [ring.convert(g) for g in max_ideal.gens])
    return krull_dim(QuotientRing(ring, fiber))


def analytic_spread(M: ModulePresentation, max_ideal: Ideal) -> int:
    """Krull dimension of the special fiber ``k (x) R(M)``."""
    return _fiber_dimension(rees_ideal(M), max_ideal)


def spread_from_map(g: ModuleMap, max_ideal: Ideal) -> int:
    """Krull dimension of ``k (x) R(g)``."""
    return _fiber_dimension(rees_of_map(g), max_ideal)


def in_generators(M: ModulePresentation, S: Submodule) -> Submodule:
    """Rewrite a submodule of ``M``'s ambient free module in ``M``'s generators."""
    if M.embedding is None:
        raise ValueError("module has no recorded embedding")
    if S.rank != M.embedding.ncols or S.ring != M.ring:
        raise RingMismatch("submodule does not live in the module's ambient free module")
    span = Submodule(M.ring, M.embedding.ncols,
                     [M.embedding.row(j) for j in range(M.embedding.nrows)])
    out = []
    for v in S.gens:
        c = span.lift(v)
        if c is None:
            raise ValueError(f"{v} is not an element of the module")
        out.append(c)
    return Submodule(M.ring, M.ngens, out)
