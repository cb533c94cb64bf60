"""Groebner bases and the ideal operations derived from them."""
from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ._engine import Elem, ideal_engine, to_engine
from .polyring import Ideal, MonomialOrder, Polynomial, PolyRing, RingMismatch

INFINITE = float("inf")


class GroebnerBasis:
    """Reduced, monic Groebner basis, sorted by leading monomial (descending)."""

    def __init__(self, ring: PolyRing, polys: Sequence[Polynomial]):
        self.ring = ring
        self.order = ring.order
        self.polys: Tuple[Polynomial, ...] = tuple(polys)
        self._elems: Optional[List[Elem]] = None
        self._engine = None

    @property
    def leading_monomials(self) -> List[Tuple[int, ...]]:
        return [g.lm for g in self.polys]

    def engine_elems(self):
        if self._elems is None:
            eng = ideal_engine(self.ring.field, self.ring.order)
            self._elems = [eng.make_elem(to_engine(g._d), scalar=True) for g in self.polys]
            self._engine = eng
        return self._engine, self._elems

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.polys == other.polys)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.polys))}])"


def _to_poly(ring: PolyRing, d) -> Polynomial:
    return Polynomial(ring, {m[1:]: c for m, c in d.items()})


def buchberger(I: Ideal, order: MonomialOrder = None, quotient: "GroebnerBasis" = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` (plus the ideal of ``quotient``, if given).

    ``quotient`` must be a Groebner basis under the same order; its internal
    S-pairs are skipped.
    """
    ring = I.ring if order is None else I.ring.with_order(order)
    if quotient is not None and quotient.ring != ring:
        raise RingMismatch("quotient basis lives in a different ring or order")
    eng = ideal_engine(ring.field, ring.order)
    gens = [to_engine(ring.convert(g)._d if g.ring != ring else g._d) for g in I.gens]
    q = [to_engine(g._d) for g in quotient.polys] if quotient is not None else ()
    elems = eng.groebner(gens, q, include_quotient=True)
    return GroebnerBasis(ring, [_to_poly(ring, e.d) for e in elems])


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring.vars != G.ring.vars or f.ring.field != G.ring.field:
        raise RingMismatch(f"{f.ring} vs {G.ring}")
    if f.ring.order != G.order:
        raise RingMismatch(f"order {f.ring.order} vs basis order {G.order}")
    eng, elems = G.engine_elems()
    return _to_poly(f.ring, eng.reduce(to_engine(f._d), elems))


def ideal_member(f: Polynomial, I) -> bool:
    G = I if isinstance(I, GroebnerBasis) else buchberger(I)
    return normal_form(f, G).is_zero()


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    return buchberger(I) == buchberger(J)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """Whether every generator of ``J`` lies in ``I``."""
    G = buchberger(I)
    return all(normal_form(g, G).is_zero() for g in J.gens)


def eliminate(I: Ideal, drop_vars: Iterable[str]) -> Ideal:
    """Generators of ``I`` intersected with the subring free of ``drop_vars``."""
    ring = I.ring
    drop = [v for v in ring.vars if v in set(drop_vars)]
    unknown = set(drop_vars) - set(ring.vars)
    if unknown:
        raise KeyError(f"unknown variables {sorted(unknown)}")
    if not drop:
        return Ideal(ring, buchberger(I).polys)
    keep = [v for v in ring.vars if v not in drop]
    if not keep:
        raise ValueError("cannot eliminate every variable")
    work = PolyRing(ring.field, drop + keep, MonomialOrder.block(len(drop)))
    G = buchberger(Ideal(work, [work.convert(g) for g in I.gens]))
    k = len(drop)
    kept = [ring.convert(g) for g in G.polys if not any(any(m[:k]) for m in g._d)]
    return Ideal(ring, kept)


class QuotientRing:
    """``P / I`` together with the reduced Groebner basis of ``I``."""

    def __init__(self, ring: PolyRing, ideal: Ideal = None):
        self.ring = ring
        self.ideal = ideal if ideal is not None else Ideal(ring, [])
        if self.ideal.ring != ring:
            raise RingMismatch("defining ideal lives in another ring")
        self.gb = buchberger(self.ideal)

    @property
    def field(self):
        return self.ring.field

    @property
    def vars(self):
        return self.ring.vars

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)

    def is_zero_ring(self) -> bool:
        return self.gb.is_unit()

    def ideal_gb(self, J: Ideal) -> GroebnerBasis:
        """Basis of ``J + I`` (the preimage in P of the ideal J of P/I)."""
        return buchberger(J, quotient=self.gb)

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.ring == other.ring and self.gb == other.gb

    def __hash__(self):
        return hash((self.ring, self.gb.polys))

    def __repr__(self):
        gens = ", ".join(map(str, self.gb.polys))
        return f"{self.ring}/({gens})"


def ring_map_kernel(source_vars: Sequence[str], images: Sequence[Polynomial],
                    target: QuotientRing, fixed_vars: Sequence[str] = ()) -> Ideal:
    """Kernel of ``k[source_vars, fixed_vars] -> target``.

    ``s_i`` goes to ``images[i]``; each fixed variable goes to the target
    variable of the same name.  The kernel lives in the polynomial ring on
    ``source_vars + fixed_vars`` (grevlex).
    """
    if len(source_vars) != len(images):
        raise ValueError(f"{len(source_vars)} source variables but {len(images)} images")
    tring = target.ring
    clash = set(source_vars) & set(tring.vars)
    if clash:
        raise ValueError(f"source variables {sorted(clash)} collide with target variables")
    missing = set(fixed_vars) - set(tring.vars)
    if missing:
        raise KeyError(f"fixed variables {sorted(missing)} not in target ring")
    elim = [v for v in tring.vars if v not in set(fixed_vars)]
    keep = list(source_vars) + list(fixed_vars)
    if not elim:
        work = PolyRing(tring.field, keep)
    else:
        work = PolyRing(tring.field, elim + keep, MonomialOrder.block(len(elim)))
    gens = [work.gen(s) - work.convert(img) for s, img in zip(source_vars, images)]
    # the target's defining ideal: rebase its basis under the work order
    base = buchberger(Ideal(work, [work.convert(g) for g in target.gb.polys]))
    G = buchberger(Ideal(work, gens), quotient=base)
    out_ring = PolyRing(tring.field, keep)
    k = len(elim)
    kept = [out_ring.convert(g) for g in G.polys if not any(any(m[:k]) for m in g._d)]
    return Ideal(out_ring, kept)


# dimension theory ---------------------------------------------------------------
def _supports(lms: Iterable[Tuple[int, ...]]) -> List[frozenset]:
    return [frozenset(i for i, a in enumerate(m) if a) for m in lms]


def krull_dim(Q: QuotientRing) -> int:
    """Size of a largest variable set independent modulo the leading ideal; -1 for 0."""
    if Q.is_zero_ring():
        return -1
    n = Q.ring.nvars
    supports = _supports(Q.gb.leading_monomials)
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0  # unreachable: the empty set is independent in a nonzero ring


def _pure_power_bounds(lms, n) -> List[Optional[int]]:
    bound: List[Optional[int]] = [None] * n
    for m in lms:
        nz = [i for i, a in enumerate(m) if a]
        if len(nz) == 1:
            i = nz[0]
            bound[i] = m[i] if bound[i] is None else min(bound[i], m[i])
    return bound


def standard_monomials(lms: Sequence[Tuple[int, ...]], n: int) -> List[Tuple[int, ...]]:
    """Monomials outside the monomial ideal ``(lms)``; it must be Artinian."""
    bound = _pure_power_bounds(lms, n)
    if any(b is None for b in bound):
        raise ValueError("infinitely many standard monomials")
    out = []
    e = [0] * n

    def divisible(mono):
        return any(all(a <= b for a, b in zip(m, mono)) for m in lms)

    def rec(i):
        if i == n:
            out.append(tuple(e))
            return
        for a in range(bound[i]):
            e[i] = a
            if a and divisible(tuple(e[: i + 1]) + (0,) * (n - i - 1)):
                break
            rec(i + 1)
        e[i] = 0

    rec(0)
    return [m for m in out if not divisible(m)]


def k_dimension(Q: QuotientRing):
    """Vector-space dimension of ``Q`` over its field, or ``INFINITE``."""
    if Q.is_zero_ring():
        return 0
    n = Q.ring.nvars
    lms = Q.gb.leading_monomials
    if any(b is None for b in _pure_power_bounds(lms, n)):
        return INFINITE
    return len(standard_monomials(lms, n))


def _check_homogeneous(Q: QuotientRing, weights: Sequence[int]):
    for g in Q.gb.polys:
        if not g.is_homogeneous(weights):
            raise ValueError(f"{g} is not homogeneous for weights {list(weights)}")


def graded_standard_monomials(lms, weights: Sequence[int], d: int) -> List[Tuple[int, ...]]:
    """Standard monomials of weighted degree ``d``; raises if there are infinitely many.

    A weight-0 variable whose exponent in a standard monomial reaches its
    largest exponent among ``lms`` can be raised forever, so exponents of
    such variables are enumerated only up to that cap.
    """
    n = len(weights)
    cap = [max((m[i] for m in lms), default=0) for i in range(n)]
    out = []
    e = [0] * n

    def divisible(mono):
        return any(all(a <= b for a, b in zip(m, mono)) for m in lms)

    def rec(i, remaining):
        if i == n:
            if remaining == 0:
                out.append(tuple(e))
            return
        w = weights[i]
        top = cap[i] if w == 0 else remaining // w
        for a in range(top + 1):
            e[i] = a
            if a and divisible(tuple(e)):
                break
            rec(i + 1, remaining - w * a)
        e[i] = 0

    rec(0, d)
    for m in out:
        if any(weights[i] == 0 and m[i] >= cap[i] for i in range(n)):
            raise ValueError("the graded piece is infinite-dimensional")
    return out


def hilbert_by_degree(Q: QuotientRing, weights: Sequence[int], d: int) -> int:
    """Dimension of the weighted-degree ``d`` piece of ``Q``."""
    if len(weights) != Q.ring.nvars or any(w < 0 for w in weights):
        raise ValueError("one nonnegative weight per variable is required")
    _check_homogeneous(Q, weights)
    if Q.is_zero_ring():
        return 0
    return len(graded_standard_monomials(Q.gb.leading_monomials, weights, d))


def _fresh_name(taken: Iterable[str], stem: str = "w") -> str:
    taken = set(taken)
    if stem not in taken:
        return stem
    i = 1
    while f"{stem}{i}" in taken:
        i += 1
    return f"{stem}{i}"


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """Rabinowitsch test: ``f`` is in the radical iff ``1 in I + (1 - w f)``."""
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    ring = I.ring
    w = _fresh_name(ring.vars)
    big = PolyRing(ring.field, ring.vars + (w,), ring.order if ring.order.kind != "block"
                   else MonomialOrder())
    gens = [big.convert(g) for g in I.gens]
    gens.append(big.one() - big.gen(w) * big.convert(f))
    return buchberger(Ideal(big, gens)).is_unit()
