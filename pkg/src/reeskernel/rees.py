"""Rees algebras of modules and of maps to free modules.

A :class:`ReesPresentation` is a graded quotient ``P[y_1..y_a] / relations``
where ``y_j`` stands for generator ``j`` of the module (degree 1) and the
base variables have degree 0.  ``R(M)`` is always computed as the image of
``Sym`` of a versal map; the intersection over all maps is never formed.
"""
from __future__ import annotations

from enum import Enum
from itertools import combinations_with_replacement
from typing import Iterable, List, Optional, Sequence

from .groebner import (QuotientRing, buchberger, eliminate, hilbert_by_degree, ideal_contains,
                       ideal_equal, k_dimension, normal_form, radical_member, ring_map_kernel)
from .modpres import ModuleMap, ModulePresentation, versal_map
from .freemod import PolyMatrix
from .polyring import Ideal, Polynomial, PolyRing, RingMismatch

SYM_STEM = "y"
TARGET_STEM = "t"


class Comparison(str, Enum):
    EQUAL = "EQUAL"
    PROPER_QUOTIENT = "PROPER_QUOTIENT"
    INCOMPARABLE = "INCOMPARABLE"


def fresh_names(stem: str, count: int, taken: Iterable[str]) -> List[str]:
    """``stem1..stemN``, lengthening the stem with ``_`` until nothing collides."""
    taken = set(taken)
    while True:
        names = [f"{stem}{i + 1}" for i in range(count)]
        if not taken.intersection(names):
            return names
        stem += "_"


class ReesPresentation:
    """Generators-and-relations form of a graded algebra over ``base``.

    ``provenance`` is one of ``versal``, ``of_map``, ``classical`` or
    ``symmetric``; ``map_matrix`` is the defining map for all but the last.
    """

    def __init__(self, base: QuotientRing, sym_vars: Sequence[str], relations: Ideal,
                 provenance: str, map_matrix: Optional[PolyMatrix] = None):
        self.base = base
        self.sym_vars = tuple(sym_vars)
        self.ring: PolyRing = relations.ring
        self.relations = relations
        self.provenance = provenance
        self.map_matrix = map_matrix
        self._quotient: Optional[QuotientRing] = None

    @property
    def ngens(self) -> int:
        return len(self.sym_vars)

    @property
    def target_rank(self) -> Optional[int]:
        return None if self.map_matrix is None else self.map_matrix.ncols

    def quotient(self) -> QuotientRing:
        if self._quotient is None:
            self._quotient = QuotientRing(self.ring, self.relations)
        return self._quotient

    @property
    def gb(self):
        return self.quotient().gb

    def weights(self) -> List[int]:
        return [1 if v in self.sym_vars else 0 for v in self.ring.vars]

    def sym_degree(self, f: Polynomial) -> set:
        return f.weighted_degrees(self.weights())

    def relation_generators(self) -> List[Polynomial]:
        """Reduced basis of the relations, sorted canonically."""
        return list(self.gb.polys)

    def __repr__(self):
        return (f"ReesPresentation({self.provenance}, vars={list(self.ring.vars)}, "
                f"relations=[{', '.join(map(str, self.gb.polys))}])")


def _rees_ring(base: QuotientRing, ngens: int) -> (PolyRing, List[str]):
    ys = fresh_names(SYM_STEM, ngens, base.ring.vars)
    return PolyRing(base.field, tuple(ys) + base.ring.vars), ys


def _base_ideal(ring: PolyRing, base: QuotientRing) -> List[Polynomial]:
    return [ring.convert(g) for g in base.gb.polys]


def sym_presentation(M: ModulePresentation) -> ReesPresentation:
    """``Sym(M) = R[y] / (sum_j phi[j][c] y_j  for each relation column c)``."""
    R = M.ring
    ring, ys = _rees_ring(R, M.ngens)
    gens = _base_ideal(ring, R)
    yv = [ring.gen(v) for v in ys]
    for c in range(M.relations.ncols):
        form = ring.zero()
        for j in range(M.ngens):
            form = form + ring.convert(M.relations[j, c]) * yv[j]
        gens.append(form)
    return ReesPresentation(R, ys, Ideal(ring, gens), "symmetric")


def rees_of_map(g: ModuleMap, provenance: str = "of_map") -> ReesPresentation:
    """Image of ``Sym(g)``: the kernel of ``y_j -> sum_i H[j][i] t_i`` modulo ``I``."""
    M = g.source
    R = M.ring
    ring, ys = _rees_ring(R, M.ngens)
    ts = fresh_names(TARGET_STEM, g.target_rank, set(R.ring.vars) | set(ys))
    T = PolyRing(R.field, tuple(ts) + R.ring.vars)
    target = QuotientRing(T, Ideal(T, [T.convert(h) for h in R.gb.polys]))
    tv = [T.gen(v) for v in ts]
    images = []
    for j in range(M.ngens):
        img = T.zero()
        for i in range(g.target_rank):
            img = img + T.convert(g.matrix[j, i]) * tv[i]
        images.append(img)
    K = ring_map_kernel(ys, images, target, fixed_vars=R.ring.vars)
    relations = Ideal(ring, [ring.convert(h) for h in K.gens])
    return ReesPresentation(R, ys, relations, provenance, g.matrix)


def rees_ideal(M: ModulePresentation) -> ReesPresentation:
    """``R(M)``, computed from the versal map and cached on ``M``."""
    if M._rees is None:
        M._rees = rees_of_map(versal_map(M), provenance="versal")
    return M._rees


def inclusion_map(M: ModulePresentation) -> ModuleMap:
    """The embedding ``M -> R^k`` recorded when ``M`` came from a submodule."""
    if M.embedding is None:
        raise ValueError("module was not built from a submodule of a free module")
    return ModuleMap(M, M.embedding.ncols, M.embedding)


def classical_ideal_rees(R: QuotientRing, gens: Sequence[Polynomial]) -> ReesPresentation:
    """``sum_n I^n`` for ``I = (gens)``, presented on the listed generators."""
    M = ModulePresentation.from_ideal(R, gens)
    return rees_of_map(inclusion_map(M), provenance="classical")


def _check_comparable(A: ReesPresentation, B: ReesPresentation):
    if A.base != B.base:
        raise RingMismatch("Rees algebras over different base rings")
    if A.ngens != B.ngens or A.ring != B.ring:
        raise RingMismatch("Rees algebras on different generator sets")


def compare_rees(A: ReesPresentation, B: ReesPresentation) -> Comparison:
    """EQUAL, PROPER_QUOTIENT (``B`` is a proper quotient of ``A``) or INCOMPARABLE."""
    _check_comparable(A, B)
    if ideal_equal(A.relations, B.relations):
        return Comparison.EQUAL
    GB = B.gb
    if all(normal_form(f, GB).is_zero() for f in A.relations.gens):
        return Comparison.PROPER_QUOTIENT
    return Comparison.INCOMPARABLE


def nilpotent_kernel_check(M: ModulePresentation, g: ModuleMap) -> bool:
    """Every relation of ``R(g)`` is nilpotent in ``R(M)``.

    ``g`` is assumed to induce an inclusion on the torsionless quotient.
    """
    A = rees_ideal(M)
    B = rees_of_map(g)
    _check_comparable(A, B)
    GA = A.gb
    for f in B.gb.polys:
        if normal_form(f, GA).is_zero():
            continue
        if not radical_member(f, A.relations):
            return False
    return True


def sym_monomials(ring: PolyRing, sym_vars: Sequence[str], degree: int) -> List[Polynomial]:
    ys = [ring.gen(v) for v in sym_vars]
    out = []
    for combo in combinations_with_replacement(range(len(ys)), degree):
        f = ring.one()
        for j in combo:
            f = f * ys[j]
        out.append(f)
    return out


def degree_slice_contained(small: ReesPresentation, big: ReesPresentation, d: int) -> bool:
    """Whether the degree-``d`` part of ``big.relations`` lies in ``small.relations``."""
    G_small = small.gb
    for g in big.gb.polys:
        degs = big.sym_degree(g)
        if len(degs) != 1:
            raise ValueError(f"relation {g} is not homogeneous in the module variables")
        e = degs.pop()
        if e > d:
            continue
        for mono in sym_monomials(big.ring, big.sym_vars, d - e):
            if not normal_form(mono * g, G_small).is_zero():
                return False
    return True


def lemma16_check(Rp: ReesPresentation, split_rank: int, d: int) -> bool:
    """Degree-``d`` test that killing the last ``split_rank`` coordinates of ``F``
    adds no relations among the generators of ``M``.

    Needs a map presentation of ``M`` inside ``F`` and a rational base field,
    so that ``d!`` is invertible.
    """
    if Rp.map_matrix is None:
        raise ValueError("need the Rees algebra of a map into a free module")
    if Rp.base.field.is_prime_field:
        raise ValueError("characteristic p base field: d! need not be a nonzerodivisor")
    n = Rp.map_matrix.ncols
    if not 0 <= split_rank <= n:
        raise ValueError(f"split rank must lie in [0, {n}]")
    if split_rank == 0:
        return True
    H = Rp.map_matrix
    M = _source_stub(Rp)
    keep = n - split_rank
    g = ModuleMap(M, keep, PolyMatrix(H.ring, [row[:keep] for row in H.rows], ncols=keep))
    projected = rees_of_map(g)
    return degree_slice_contained(Rp, projected, d)


def _source_stub(Rp: ReesPresentation) -> ModulePresentation:
    # a presentation with no relations suffices: only the generator count is used
    return ModulePresentation.free(Rp.base, Rp.ngens)


def extend_base(R: QuotientRing, fresh_vars: Sequence[str]) -> QuotientRing:
    clash = set(fresh_vars) & set(R.ring.vars)
    if clash:
        raise ValueError(f"variables {sorted(clash)} already exist in the base ring")
    if len(set(fresh_vars)) != len(fresh_vars):
        raise ValueError("duplicate fresh variables")
    P = PolyRing(R.field, R.ring.vars + tuple(fresh_vars), R.ring.order)
    return QuotientRing(P, Ideal(P, [P.convert(g) for g in R.gb.polys]))


def base_change_check(M: ModulePresentation, fresh_vars: Sequence[str]) -> bool:
    """``R(M (x) R[w]) == R(M) (x) R[w]`` for the polynomial extension by ``fresh_vars``."""
    A = rees_ideal(M)
    clash = set(fresh_vars) & set(A.ring.vars)
    if clash:
        raise ValueError(f"variables {sorted(clash)} collide with existing variables")
    R2 = extend_base(M.ring, fresh_vars)
    P2 = R2.ring
    phi = PolyMatrix(R2, [[P2.convert(e) for e in row] for row in M.relations.rows],
                     ncols=M.relations.ncols)
    M2 = ModulePresentation(R2, M.ngens, phi, M.labels)
    B = rees_ideal(M2)
    if B.sym_vars != A.sym_vars:
        raise ValueError("fresh variables collide with the module variable names")
    extended = Ideal(B.ring, [B.ring.convert(f) for f in A.relations.gens])
    return ideal_equal(B.relations, extended)


def is_module_map(M: ModulePresentation, N: ModulePresentation, mat: PolyMatrix) -> bool:
    """Row ``j`` of ``mat`` (image of generator ``j`` of M in N's generators)
    respects the relations of ``M``."""
    if mat.nrows != M.ngens or mat.ncols != N.ngens:
        raise ValueError(f"expected a {M.ngens}x{N.ngens} matrix")
    if M.relations.ncols == 0:
        return True
    rel = N.relation_module()
    images = M.relations.transpose() @ mat
    return all(rel.contains(images.row(i)) for i in range(images.nrows))


def functoriality_check(M: ModulePresentation, N: ModulePresentation, surj: PolyMatrix) -> bool:
    """The algebra map ``y^M_j -> sum_k surj[j][k] y^N_k`` kills ``R(M)``'s relations
    modulo ``R(N)``'s."""
    if M.ring != N.ring or surj.ring != M.ring:
        raise RingMismatch("modules and map must share a base ring")
    if not is_module_map(M, N, surj):
        raise ValueError("matrix does not define a module homomorphism")
    A = rees_ideal(M)
    B = rees_ideal(N)
    images = {}
    for j, v in enumerate(A.sym_vars):
        img = B.ring.zero()
        for k, w in enumerate(B.sym_vars):
            img = img + B.ring.convert(surj[j, k]) * B.ring.gen(w)
        images[v] = img
    GB = B.gb
    return all(normal_form(f.subs(images, target=B.ring), GB).is_zero() for f in A.relations.gens)


def contract_to_base(Rp: ReesPresentation) -> Ideal:
    """Relations intersected with the base polynomial ring."""
    E = eliminate(Rp.relations, Rp.sym_vars)
    P = Rp.base.ring
    return Ideal(P, [P.convert(f) for f in E.gens])


def contract_prime(Rp: ReesPresentation, prime: Ideal) -> Ideal:
    """Contraction to the base of an ideal of the Rees algebra (given upstairs)."""
    if prime.ring != Rp.ring:
        raise RingMismatch("ideal does not live in the Rees algebra's ring")
    E = eliminate(Rp.relations + prime, Rp.sym_vars)
    P = Rp.base.ring
    return Ideal(P, [P.convert(f) for f in E.gens])


def rees_hilbert(Rp: ReesPresentation, d: int) -> int:
    """Dimension of the degree-``d`` component; the base ring must be Artinian."""
    if k_dimension(Rp.base) == float("inf"):
        raise ValueError("graded pieces are finite-dimensional only over an Artinian base")
    return hilbert_by_degree(Rp.quotient(), Rp.weights(), d)


def rees_k_dimension(Rp: ReesPresentation):
    return k_dimension(Rp.quotient())


def contains_relations(A: ReesPresentation, B: ReesPresentation) -> bool:
    """``A.relations`` inside ``B.relations``: B is a quotient of A."""
    _check_comparable(A, B)
    return ideal_contains(B.relations, A.relations)
