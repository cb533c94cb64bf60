"""Buchberger kernel shared by ideals and submodules of free modules.

Engine polynomials are dicts ``{monomial: coefficient}`` whose monomials are
tuples ``(component, e1, ..., en)``.  Ideals use component 0 throughout.
Components are ordered position-over-term: a smaller component index is
larger, ties are broken by the ring order on the exponents.

Elements flagged ``scalar`` are ring elements (the defining ideal of a
quotient ring); they act on every component, so a submodule of ``(P/I)^a``
is handled without ever writing down ``I * e_j`` explicitly.
"""
from __future__ import annotations

from heapq import heapify, heappop, heappush
from operator import add, le, sub
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .coefficients import Field
from .polyring import MonomialOrder

Mon = Tuple[int, ...]
EPoly = Dict[Mon, object]


class Elem:
    """A monic basis element.

    ``scalar``: a ring element acting on every component.
    ``fixed``: part of the given quotient basis (pairs among these are skipped).
    """

    __slots__ = ("lm", "exps", "tail", "d", "scalar", "fixed")

    def __init__(self, d: EPoly, lm: Mon, scalar: bool, fixed: bool = False):
        self.d = d
        self.lm = lm
        self.exps = lm[1:]
        self.tail = [(m, c) for m, c in d.items() if m != lm]
        self.scalar = scalar
        self.fixed = fixed


class Engine:
    def __init__(self, field: Field, order: MonomialOrder, ideal_mode: bool = False):
        self.ideal_mode = ideal_mode
        self.field = field
        self.p = field.p
        self.order = order
        self._keys: Dict[Mon, tuple] = {}
        self._rkeys: Dict[Mon, tuple] = {}

    # ordering ----------------------------------------------------------------
    def key(self, m: Mon) -> tuple:
        k = self._keys.get(m)
        if k is None:
            k = (-m[0],) + self.order.key(m[1:])
            self._keys[m] = k
        return k

    def rkey(self, m: Mon) -> tuple:
        """Ascending in this key is descending in the monomial order."""
        k = self._rkeys.get(m)
        if k is None:
            k = tuple([-v for v in self.key(m)])
            self._rkeys[m] = k
        return k

    def leading(self, d: EPoly) -> Mon:
        return max(d, key=self.key)

    def make_elem(self, d: EPoly, scalar: bool = False, fixed: bool = False) -> Elem:
        """Monic element from a nonzero engine polynomial."""
        lm = self.leading(d)
        c = d[lm]
        one = self.field.one()
        if c != one:
            inv = self.field.inv(c)
            p = self.p
            if p:
                d = {m: v * inv % p for m, v in d.items()}
            else:
                d = {m: v * inv for m, v in d.items()}
        return Elem(d, lm, scalar, fixed)

    # reduction ---------------------------------------------------------------
    @staticmethod
    def _divisor(m: Mon, elems: Sequence[Elem]) -> Optional[Elem]:
        comp = m[0]
        exps = m[1:]
        for g in elems:
            if (g.scalar or g.lm[0] == comp) and all(map(le, g.exps, exps)):
                return g
        return None

    def reduce(self, f: EPoly, elems: Sequence[Elem]) -> EPoly:
        """Full normal form of ``f`` with respect to ``elems``."""
        if not f or not elems:
            return dict(f)
        p = self.p
        rkey = self.rkey
        f = dict(f)
        heap = [(rkey(m), m) for m in f]
        heapify(heap)
        out: EPoly = {}
        divisor = self._divisor
        while heap:
            m = heappop(heap)[1]
            c = f.pop(m, None)
            if c is None:
                continue
            g = divisor(m, elems)
            if g is None:
                out[m] = c
                continue
            shift = tuple(map(sub, m, g.lm))
            if g.scalar:
                shift = (m[0],) + shift[1:]
            for gm, gc in g.tail:
                mm = tuple(map(add, gm, shift))
                old = f.get(mm)
                if old is None:
                    nc = -c * gc % p if p else -c * gc
                    if nc:
                        f[mm] = nc
                        heappush(heap, (rkey(mm), mm))
                else:
                    nc = (old - c * gc) % p if p else old - c * gc
                    if nc:
                        f[mm] = nc
                    else:
                        del f[mm]
        return out

    # pairs ---------------------------------------------------------------
    @staticmethod
    def _compatible(a: Elem, b: Elem) -> bool:
        return a.scalar or b.scalar or a.lm[0] == b.lm[0]

    @staticmethod
    def _lcm(a: Elem, b: Elem) -> Mon:
        comp = b.lm[0] if a.scalar else a.lm[0]
        return (comp,) + tuple(map(max, a.exps, b.exps))

    @staticmethod
    def _divides(m: Mon, n: Mon) -> bool:
        return m[0] == n[0] and all(map(le, m[1:], n[1:]))

    @staticmethod
    def _elem_divides(g: Elem, n: Mon) -> bool:
        return (g.scalar or g.lm[0] == n[0]) and all(map(le, g.exps, n[1:]))

    def spoly(self, a: Elem, b: Elem, L: Mon) -> EPoly:
        p = self.p
        out: EPoly = {}
        for g, sign in ((a, 1), (b, -1)):
            shift = tuple(map(sub, L, g.lm))
            if g.scalar:
                shift = (L[0],) + shift[1:]
            for gm, gc in g.tail:
                mm = tuple(map(add, gm, shift))
                v = out.get(mm, 0) + sign * gc
                if p:
                    v %= p
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return out

    # Buchberger ------------------------------------------------------------
    def groebner(self, gens: Iterable[EPoly], quotient: Sequence[EPoly] = (),
                 include_quotient: bool = False) -> List[Elem]:
        """Reduced Groebner basis of ``gens`` modulo the scalar basis ``quotient``.

        ``quotient`` must already be a Groebner basis (of an ideal, component
        0) under this order; its internal pairs are never formed.  With
        ``include_quotient`` the result is the reduced basis of the sum.
        """
        G: List[Elem] = []
        active: List[int] = []
        for q in quotient:
            if q:
                G.append(self.make_elem(q, scalar=True, fixed=True))
                active.append(len(G) - 1)
        pairs: Dict[Tuple[int, int], Mon] = {}
        heap: list = []

        def update(h: int):
            eh = G[h]
            C = []
            for g in active:
                eg = G[g]
                if eg.fixed and eh.fixed:
                    continue  # the quotient basis is already a Groebner basis
                if not self._compatible(eg, eh):
                    continue
                C.append((g, self._lcm(eg, eh)))
            D = []
            for idx, (g, L) in enumerate(C):
                eg = G[g]
                # product criterion holds for ideals and for scalar partners
                coprime = ((eg.scalar or eh.scalar)
                           and not any(a and b for a, b in zip(eg.exps, eh.exps)))
                if coprime:
                    D.append((g, L, True))
                    continue
                div = self._divides
                if any(div(L2, L) for _, L2 in C[idx + 1:]) or any(div(L2, L) for _, L2, _ in D):
                    continue
                D.append((g, L, False))
            hl = eh
            for (i, j), L in list(pairs.items()):
                if self._elem_divides(hl, L):
                    if (self._lcm_or_none(G[i], hl) != L and self._lcm_or_none(G[j], hl) != L):
                        del pairs[(i, j)]
            for g, L, coprime in D:
                if not coprime:
                    pairs[(g, h)] = L
                    heappush(heap, (self.key(L), g, h))
            keep = []
            for g in active:
                eg = G[g]
                if (eh.scalar or (not eg.scalar and eh.lm[0] == eg.lm[0])) \
                        and all(map(le, eh.exps, eg.exps)):
                    continue
                keep.append(g)
            keep.append(h)
            active[:] = keep

        start = [g for g in gens if g]
        start.sort(key=lambda d: self.key(self.leading(d)))
        for d in start:
            r = self.reduce(d, [G[i] for i in active])
            if r:
                G.append(self.make_elem(r, scalar=self.ideal_mode))
                update(len(G) - 1)

        while heap:
            _, i, j = heappop(heap)
            L = pairs.pop((i, j), None)
            if L is None:
                continue
            s = self.spoly(G[i], G[j], L)
            if not s:
                continue
            r = self.reduce(s, [G[t] for t in active])
            if r:
                G.append(self.make_elem(r, scalar=self.ideal_mode))
                update(len(G) - 1)

        chosen = [G[i] for i in active if include_quotient or not G[i].scalar]
        support = [G[i] for i in active]
        return self.interreduce(chosen, support)

    def _lcm_or_none(self, a: Elem, b: Elem):
        if not self._compatible(a, b):
            return None
        return self._lcm(a, b)

    def interreduce(self, chosen: List[Elem], support: List[Elem]) -> List[Elem]:
        out = []
        for e in chosen:
            others = [g for g in support if g is not e]
            tail = self.reduce(dict(e.tail), others)
            tail[e.lm] = self.field.one()
            out.append(Elem(tail, e.lm, e.scalar, e.fixed))
        out.sort(key=lambda e: self.key(e.lm), reverse=True)
        return out


def ideal_engine(field: Field, order: MonomialOrder) -> Engine:
    """Engine for ideals: every element is a ring element."""
    return Engine(field, order, ideal_mode=True)


def to_engine(d: Dict[Tuple[int, ...], object], comp: int = 0) -> EPoly:
    return {(comp,) + m: c for m, c in d.items()}


def from_engine(d: EPoly) -> Dict[Tuple[int, ...], object]:
    return {m[1:]: c for m, c in d.items()}
