"""Submodules of free modules over a quotient ring ``R = P/I``.

Everything is computed upstairs in ``P^a`` with ``I`` acting on every
component (position-over-term, smaller component index dominant).
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from ._engine import Engine, EPoly
from .groebner import QuotientRing, standard_monomials
from .polyring import Polynomial, RingMismatch


class ModuleVector:
    """Element of ``R^a`` stored as normal forms modulo the quotient's basis."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: QuotientRing, entries: Sequence, reduce: bool = True):
        self.ring = ring
        P = ring.ring
        vals = []
        for e in entries:
            if not isinstance(e, Polynomial):
                e = P.const(e)
            elif e.ring != P:
                e = P.convert(e)
            vals.append(ring.reduce(e) if reduce else e)
        self.entries: Tuple[Polynomial, ...] = tuple(vals)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def _check(self, other: "ModuleVector"):
        if other.ring != self.ring or other.rank != self.rank:
            raise RingMismatch("vectors of different rank or ring")

    def __add__(self, other):
        self._check(other)
        return ModuleVector(self.ring, [a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        self._check(other)
        return ModuleVector(self.ring, [a - b for a, b in zip(self, other)])

    def scale(self, f: Polynomial) -> "ModuleVector":
        return ModuleVector(self.ring, [f * a for a in self])

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.ring == other.ring \
            and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "(" + ", ".join(map(str, self.entries)) + ")"


def _to_engine(v: Sequence[Polynomial], offset: int = 0) -> EPoly:
    out: EPoly = {}
    for i, f in enumerate(v):
        for m, c in f._d.items():
            out[(i + offset,) + m] = c
    return out


def _from_engine(ring: QuotientRing, d: EPoly, rank: int, offset: int = 0) -> ModuleVector:
    parts: List[dict] = [dict() for _ in range(rank)]
    for m, c in d.items():
        parts[m[0] - offset][m[1:]] = c
    P = ring.ring
    return ModuleVector(ring, [Polynomial(P, p) for p in parts], reduce=False)


class Submodule:
    """Submodule of ``R^rank`` given by generators."""

    def __init__(self, ring: QuotientRing, rank: int, gens: Sequence = ()):
        self.ring = ring
        self.rank = rank
        vecs = []
        for g in gens:
            if not isinstance(g, ModuleVector):
                g = ModuleVector(ring, g)
            if g.ring != ring or g.rank != rank:
                raise RingMismatch(f"generator {g} is not in R^{rank} over this ring")
            vecs.append(g)
        self.gens: Tuple[ModuleVector, ...] = tuple(vecs)
        self._gb_elems = None
        self._lift_elems = None

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def _engine(self) -> Engine:
        return Engine(self.ring.field, self.ring.ring.order)

    def _quotient(self):
        return [{(0,) + m: c for m, c in g._d.items()} for g in self.ring.gb.polys]

    def gb_elems(self):
        if self._gb_elems is None:
            eng = self._engine()
            q = self._quotient()
            elems = eng.groebner([_to_engine(v) for v in self.gens], q)
            qelems = [eng.make_elem(d, scalar=True, fixed=True) for d in q if d]
            self._gb_elems = (eng, elems, elems + qelems)
        return self._gb_elems

    def reduce(self, v: ModuleVector) -> ModuleVector:
        eng, _, support = self.gb_elems()
        return _from_engine(self.ring, eng.reduce(_to_engine(v), support), self.rank)

    def contains(self, v) -> bool:
        if not isinstance(v, ModuleVector):
            v = ModuleVector(self.ring, v)
        if v.rank != self.rank or v.ring != self.ring:
            raise RingMismatch("vector rank/ring does not match the submodule")
        return self.reduce(v).is_zero()

    def __contains__(self, v):
        return self.contains(v)

    def leading_terms(self) -> List[Tuple[int, Tuple[int, ...]]]:
        _, elems, _ = self.gb_elems()
        return [(e.lm[0], e.lm[1:]) for e in elems]

    def quotient_dimension(self) -> int:
        """k-dimension of ``R^rank / self``; requires an Artinian base ring."""
        n = self.ring.ring.nvars
        base = list(self.ring.gb.leading_monomials)
        per_comp = [list(base) for _ in range(self.rank)]
        for comp, exps in self.leading_terms():
            per_comp[comp].append(exps)
        return sum(len(standard_monomials(lms, n)) for lms in per_comp)

    def k_dimension(self) -> int:
        """k-dimension of this submodule; requires an Artinian base ring."""
        n = self.ring.ring.nvars
        free = len(standard_monomials(list(self.ring.gb.leading_monomials), n)) * self.rank
        return free - self.quotient_dimension()

    # lifting ------------------------------------------------------------------
    def _lift_data(self):
        if self._lift_elems is None:
            eng = self._engine()
            r, c = self.rank, len(self.gens)
            tracked = []
            for i, g in enumerate(self.gens):
                d = _to_engine(g)
                d[(r + i,) + (0,) * self.ring.ring.nvars] = self.ring.field.one()
                tracked.append(d)
            q = self._quotient()
            elems = eng.groebner(tracked, q)
            qelems = [eng.make_elem(d, scalar=True, fixed=True) for d in q if d]
            self._lift_elems = (eng, elems, elems + qelems)
        return self._lift_elems

    def syzygy_elems(self):
        eng, elems, _ = self._lift_data()
        return [e for e in elems if e.lm[0] >= self.rank]

    def lift(self, v) -> Optional[List[Polynomial]]:
        """Coefficients ``c`` with ``v = sum c_i gens[i]`` (mod I), or ``None``."""
        if not isinstance(v, ModuleVector):
            v = ModuleVector(self.ring, v)
        if v.rank != self.rank:
            raise RingMismatch("vector rank does not match the submodule")
        eng, _, support = self._lift_data()
        r, c = self.rank, len(self.gens)
        red = eng.reduce(_to_engine(v), support)
        if any(m[0] < r for m in red):
            return None
        w = _from_engine(self.ring, red, c, offset=r)
        return [self.ring.reduce(-x) for x in w]

    def __repr__(self):
        return f"Submodule(rank={self.rank}, gens=[{', '.join(map(repr, self.gens))}])"


class PolyMatrix:
    """An ``r x c`` matrix over a quotient ring; entries kept in normal form."""

    def __init__(self, ring: QuotientRing, rows: Sequence[Sequence], ncols: int = None):
        self.ring = ring
        P = ring.ring
        out = []
        for row in rows:
            vals = []
            for e in row:
                if not isinstance(e, Polynomial):
                    e = P.const(e)
                elif e.ring != P:
                    e = P.convert(e)
                vals.append(ring.reduce(e))
            out.append(tuple(vals))
        widths = {len(r) for r in out}
        if len(widths) > 1:
            raise ValueError("matrix rows have different lengths")
        self.rows: Tuple[Tuple[Polynomial, ...], ...] = tuple(out)
        self.nrows = len(out)
        self.ncols = widths.pop() if widths else (ncols or 0)
        if ncols is not None and self.ncols != ncols:
            raise ValueError(f"expected {ncols} columns, got {self.ncols}")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> ModuleVector:
        return ModuleVector(self.ring, [r[j] for r in self.rows], reduce=False)

    def row(self, i: int) -> ModuleVector:
        return ModuleVector(self.ring, self.rows[i], reduce=False)

    def columns(self) -> List[ModuleVector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.rows[i][j] for i in range(self.nrows)]
                                      for j in range(self.ncols)], ncols=self.nrows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.ring != self.ring or self.ncols != other.nrows:
            raise ValueError("matrix shapes or rings do not match")
        P = self.ring.ring
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = P.zero()
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return PolyMatrix(self.ring, rows, ncols=other.ncols)

    def apply(self, v: ModuleVector) -> ModuleVector:
        """Matrix times column vector."""
        if v.rank != self.ncols:
            raise ValueError("vector length does not match matrix width")
        P = self.ring.ring
        out = []
        for row in self.rows:
            acc = P.zero()
            for a, b in zip(row, v):
                acc = acc + a * b
            out.append(acc)
        return ModuleVector(self.ring, out)

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ring == other.ring \
            and self.rows == other.rows and self.ncols == other.ncols

    def __repr__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "]"


def module_gb(S: Submodule) -> Submodule:
    """Reduced module Groebner basis of ``S`` (the quotient ideal stays implicit)."""
    eng, elems, _ = S.gb_elems()
    out = Submodule(S.ring, S.rank, [_from_engine(S.ring, e.d, S.rank) for e in elems])
    out._gb_elems = S._gb_elems
    return out


def module_member(v: ModuleVector, S: Submodule) -> bool:
    return S.contains(v)


def syzygies(S: Submodule) -> Submodule:
    """Relations among the listed generators of ``S`` over the quotient ring."""
    c = len(S.gens)
    vecs = [_from_engine(S.ring, e.d, c, offset=S.rank) for e in S.syzygy_elems()]
    return Submodule(S.ring, c, vecs)


def matrix_kernel(A: PolyMatrix) -> Submodule:
    """Generators of ``ker(A: R^c -> R^r)``."""
    if A.ncols == 0:
        return Submodule(A.ring, 0, [])
    if A.nrows == 0:
        one = A.ring.ring.one()
        zero = A.ring.ring.zero()
        return Submodule(A.ring, A.ncols, [[one if i == j else zero for j in range(A.ncols)]
                                           for i in range(A.ncols)])
    return syzygies(Submodule(A.ring, A.nrows, A.columns()))
