"""Finitely presented modules, their duals and versal maps."""
from __future__ import annotations

from typing import List, Optional, Sequence

from .freemod import PolyMatrix, Submodule, _from_engine, matrix_kernel, syzygies
from .groebner import QuotientRing, buchberger, normal_form
from .polyring import Ideal, RingMismatch


class ModulePresentation:
    """``M = coker(phi: R^b -> R^a)``; column ``c`` of ``phi`` is a relation.

    ``embedding`` is set when the module was built from a submodule of a free
    module: row ``j`` is the image of generator ``j`` there.
    """

    def __init__(self, ring: QuotientRing, ngens: int, relations: PolyMatrix,
                 labels: Sequence[str] = None, embedding: Optional[PolyMatrix] = None):
        if relations.ring != ring:
            raise RingMismatch("presentation matrix lives over another ring")
        if relations.nrows != ngens and not (relations.nrows == 0 and relations.ncols == 0):
            raise ValueError(f"presentation matrix has {relations.nrows} rows, expected {ngens}")
        if relations.nrows == 0 and ngens:
            relations = PolyMatrix(ring, [[] for _ in range(ngens)], ncols=0)
        labels = list(labels) if labels is not None else [f"m{j + 1}" for j in range(ngens)]
        if len(labels) != ngens or len(set(labels)) != ngens:
            raise ValueError("generator labels must be distinct, one per generator")
        self.ring = ring
        self.ngens = ngens
        self.relations = relations
        self.labels = labels
        self.embedding = embedding
        self._dual: Optional[Submodule] = None
        self._versal: Optional["ModuleMap"] = None
        self._rees = None

    @classmethod
    def free(cls, ring: QuotientRing, rank: int) -> "ModulePresentation":
        return cls(ring, rank, PolyMatrix(ring, [[] for _ in range(rank)], ncols=0))

    @classmethod
    def from_submodule(cls, S: Submodule, labels: Sequence[str] = None) -> "ModulePresentation":
        """Present the submodule generated by ``S.gens`` via their syzygies."""
        syz = syzygies(S)
        a = len(S.gens)
        cols = [v.entries for v in syz.gens]
        phi = PolyMatrix(S.ring, [[c[j] for c in cols] for j in range(a)], ncols=len(cols))
        emb = PolyMatrix(S.ring, [g.entries for g in S.gens], ncols=S.rank)
        return cls(S.ring, a, phi, labels, embedding=emb)

    @classmethod
    def from_ideal(cls, ring: QuotientRing, gens: Sequence, labels=None) -> "ModulePresentation":
        return cls.from_submodule(Submodule(ring, 1, [[g] for g in gens]), labels)

    def relation_module(self) -> Submodule:
        """Image of ``phi`` inside ``R^ngens``."""
        return Submodule(self.ring, self.ngens, self.relations.columns())

    def direct_sum(self, other: "ModulePresentation") -> "ModulePresentation":
        if other.ring != self.ring:
            raise RingMismatch("direct sum of modules over different rings")
        a, b = self.ngens, other.ngens
        P = self.ring.ring
        z = P.zero()
        rows = [list(r) + [z] * other.relations.ncols for r in self.relations.rows]
        rows += [[z] * self.relations.ncols + list(r) for r in other.relations.rows]
        phi = PolyMatrix(self.ring, rows, ncols=self.relations.ncols + other.relations.ncols)
        labels = [f"m{j + 1}" for j in range(a + b)]
        return ModulePresentation(self.ring, a + b, phi, labels)

    def __repr__(self):
        return f"ModulePresentation(ngens={self.ngens}, relations={self.relations})"


class ModuleMap:
    """``M -> R^m``; row ``j`` of ``matrix`` is the image of generator ``j``."""

    def __init__(self, source: ModulePresentation, target_rank: int, matrix: PolyMatrix,
                 versal: bool = False):
        if matrix.ring != source.ring:
            raise RingMismatch("map matrix lives over another ring")
        if matrix.nrows != source.ngens or matrix.ncols != target_rank:
            raise ValueError(
                f"map matrix must be {source.ngens}x{target_rank}, "
                f"got {matrix.nrows}x{matrix.ncols}")
        self.source = source
        self.target_rank = target_rank
        self.matrix = matrix
        self.versal = versal
        if source.relations.ncols and not (source.relations.transpose() @ matrix).is_zero():
            raise ValueError("map does not send the module's relations to zero")

    def image(self) -> Submodule:
        return Submodule(self.source.ring, self.target_rank,
                         [self.matrix.row(j) for j in range(self.matrix.nrows)])

    def factor_through(self, other: "ModuleMap") -> Optional[PolyMatrix]:
        """``W`` with ``other.matrix @ W == self.matrix`` (mod I), if one exists."""
        if other.source is not self.source and other.source.ngens != self.source.ngens:
            raise ValueError("maps have different sources")
        # columns of self.matrix must lie in the column space of other.matrix
        span = Submodule(other.matrix.ring, other.matrix.nrows, other.matrix.columns())
        cols = []
        for j in range(self.matrix.ncols):
            c = span.lift(self.matrix.column(j))
            if c is None:
                return None
            cols.append(c)
        if not cols:
            return PolyMatrix(self.matrix.ring, [[] for _ in range(other.target_rank)], ncols=0)
        return PolyMatrix(self.matrix.ring,
                          [[cols[j][i] for j in range(len(cols))] for i in range(other.target_rank)],
                          ncols=len(cols))

    def __repr__(self):
        tag = " versal" if self.versal else ""
        return f"ModuleMap({self.source.ngens} gens -> R^{self.target_rank}{tag}: {self.matrix})"


def dual_module(M: ModulePresentation) -> Submodule:
    """``M* = ker(phi^T)`` inside ``R^ngens``, as a reduced module basis."""
    if M._dual is None:
        R = M.ring
        if M.relations.ncols == 0:
            one, zero = R.ring.one(), R.ring.zero()
            gens = [[one if i == j else zero for j in range(M.ngens)] for i in range(M.ngens)]
            M._dual = Submodule(R, M.ngens, gens)
        else:
            K = matrix_kernel(M.relations.transpose())
            eng, elems, _ = K.gb_elems()
            M._dual = Submodule(R, M.ngens, [_from_engine(R, e.d, M.ngens) for e in elems])
    return M._dual


def versal_map(M: ModulePresentation) -> ModuleMap:
    """``f: M -> R^m`` whose dual map onto ``M*`` is surjective."""
    if M._versal is None:
        D = dual_module(M)
        m = len(D.gens)
        rows = [[D.gens[i][j] for i in range(m)] for j in range(M.ngens)]
        M._versal = ModuleMap(M, m, PolyMatrix(M.ring, rows, ncols=m), versal=True)
    return M._versal


def torsionless_quotient(M: ModulePresentation) -> Submodule:
    """Image of the versal map, a submodule of ``R^m``."""
    return versal_map(M).image()


def residue_scalar(f, Qm) -> object:
    """Value of ``f`` in the residue field ``P/(I + m)``; ``Qm`` is that basis."""
    r = normal_form(f, Qm)
    if not r.is_constant():
        raise ValueError(f"{f} does not reduce to a constant: the ideal is not maximal")
    return r.constant_value()


def rank_over_field(rows: List[List], field) -> int:
    """Rank of a matrix of raw field values by Gaussian elimination."""
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = field.inv(M[rank][c])
        M[rank] = [field.mul(v, inv) for v in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def maximal_ideal_basis(R: QuotientRing, max_ideal: Ideal):
    P = R.ring
    J = Ideal(P, [P.convert(g) for g in max_ideal.gens])
    G = buchberger(J, quotient=R.gb)
    if G.is_unit():
        raise ValueError("the given ideal is not proper")
    return G


def min_generators(M: ModulePresentation, max_ideal: Ideal) -> int:
    """Minimal number of generators (Nakayama): ``a - rank_k(phi mod m)``."""
    G = maximal_ideal_basis(M.ring, max_ideal)
    if M.relations.ncols == 0:
        return M.ngens
    F = M.ring.field
    rows = [[residue_scalar(e, G) for e in row] for row in M.relations.rows]
    return M.ngens - rank_over_field(rows, F)
