"""Sparse multivariate polynomials, monomial orders and ideal arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .coefficients import Field

Monomial = Tuple[int, ...]

ORDER_KINDS = ("lex", "grevlex")


class RingMismatch(ValueError):
    pass


def _lex_key(e):
    return tuple(e)


def _grevlex_key(e):
    return (sum(e),) + tuple(-v for v in reversed(e))


_INNER = {"lex": _lex_key, "grevlex": _grevlex_key}


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block``.

    A block order compares the first ``elim_count`` exponents with the
    ``inner`` order and breaks ties with the ``inner`` order on the rest.
    """

    kind: str = "grevlex"
    elim_count: int = 0
    inner: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.inner not in _INNER:
            raise ValueError(f"unknown inner order {self.inner!r}")
        if self.kind == "block" and self.elim_count < 1:
            raise ValueError("block order needs a nonempty eliminated block")

    @classmethod
    def block(cls, elim_count: int, inner: str = "grevlex") -> "MonomialOrder":
        return cls("block", elim_count, inner)

    def key(self, exps: Sequence[int]) -> tuple:
        """Sort key: a larger key means a larger monomial."""
        if self.kind == "block":
            f = _INNER[self.inner]
            k = self.elim_count
            return f(exps[:k]) + f(exps[k:])
        return _INNER[self.kind](exps)

    def validate(self, nvars: int):
        if self.kind == "block" and self.elim_count >= nvars:
            raise ValueError(
                f"block order eliminates {self.elim_count} of only {nvars} variables")

    def __str__(self):
        if self.kind == "block":
            return f"block({self.elim_count},{self.inner})"
        return self.kind


@dataclass(frozen=True)
class PolyRing:
    field: Field
    vars: Tuple[str, ...]
    order: MonomialOrder = MonomialOrder()

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("a polynomial ring needs at least one variable")
        if any(not v for v in self.vars):
            raise ValueError("variable names must be nonempty")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        self.order.validate(len(self.vars))

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring {self}") from None

    def gen(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.field.one()})

    def gens(self) -> List["Polynomial"]:
        return [self.gen(v) for v in self.vars]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Sequence[int], c=1) -> "Polynomial":
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self}")
        c = self.field.coerce(c)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_terms(self, terms: Mapping[Monomial, object]) -> "Polynomial":
        """Build from ``{exponent tuple: coefficient}`` (coefficients coerced)."""
        d = {}
        for m, c in terms.items():
            c = self.field.coerce(c)
            if c:
                d[tuple(m)] = c
        return Polynomial(self, d)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.vars, order)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Re-express ``f`` in this ring by matching variable names.

        Variables of ``f`` that do not occur here must have exponent 0.
        """
        if f.ring == self:
            return f
        if f.ring.field != self.field:
            raise RingMismatch(f"field {f.ring.field} vs {self.field}")
        pos = []
        for i, v in enumerate(f.ring.vars):
            pos.append(self.vars.index(v) if v in self.vars else None)
        n = self.nvars
        out = {}
        for m, c in f._d.items():
            e = [0] * n
            for i, a in enumerate(m):
                if a:
                    j = pos[i]
                    if j is None:
                        raise RingMismatch(
                            f"variable {f.ring.vars[i]} of {f} is not in {self}")
                    e[j] = a
            out[tuple(e)] = c
        return Polynomial(self, out)

    def __str__(self):
        return f"{self.field}[{', '.join(self.vars)}]"


class Polynomial:
    """An element of a :class:`PolyRing`.

    Terms live in a dict ``{exponent tuple: raw coefficient}`` with no zero
    coefficients; :meth:`terms` gives the canonical, order-descending list.
    Instances are treated as immutable.
    """

    __slots__ = ("ring", "_d", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, d: Dict[Monomial, object]):
        self.ring = ring
        self._d = d
        self._sorted = None
        self._hash = None

    # structure -------------------------------------------------------------
    def terms(self) -> List[Tuple[Monomial, object]]:
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = sorted(self._d.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def as_dict(self) -> Dict[Monomial, object]:
        return dict(self._d)

    def coefficient(self, exps: Sequence[int]):
        return self._d.get(tuple(exps), self.ring.field.zero())

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    @property
    def lm(self) -> Monomial:
        if not self._d:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms()[0][0]

    @property
    def lc(self):
        if not self._d:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms()[0][1]

    def total_degree(self) -> int:
        return max((sum(m) for m in self._d), default=-1)

    def weighted_degrees(self, weights: Sequence[int]) -> set:
        return {sum(w * a for w, a in zip(weights, m)) for m in self._d}

    def is_homogeneous(self, weights: Sequence[int] = None) -> bool:
        if weights is None:
            weights = [1] * self.ring.nvars
        return len(self.weighted_degrees(weights)) <= 1

    def support(self) -> set:
        """Names of the variables that actually occur."""
        used = set()
        for m in self._d:
            for i, a in enumerate(m):
                if a:
                    used.add(self.ring.vars[i])
        return used

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._d)

    def constant_value(self):
        return self._d.get((0,) * self.ring.nvars, self.ring.field.zero())

    def monic(self) -> "Polynomial":
        if not self._d:
            return self
        F = self.ring.field
        inv = F.inv(self.lc)
        return Polynomial(self.ring, {m: F.mul(c, inv) for m, c in self._d.items()})

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        d = dict(self._d)
        for m, c in other._d.items():
            s = F.add(d[m], c) if m in d else c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self._d.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        p = F.p
        d: Dict[Monomial, object] = {}
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = tuple([a + b for a, b in zip(m1, m2)])
                c = c1 * c2
                if m in d:
                    c += d[m]
                if p:
                    c %= p
                if c:
                    d[m] = c
                else:
                    d.pop(m, None)
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: F.mul(a, c) for m, a in self._d.items()})

    def mul_monomial(self, exps: Sequence[int], c=1) -> "Polynomial":
        F = self.ring.field
        c = F.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {
            tuple([a + b for a, b in zip(m, exps)]): F.mul(v, c) for m, v in self._d.items()})

    def subs(self, images: Mapping[str, "Polynomial"], target: PolyRing = None) -> "Polynomial":
        """Ring homomorphism: replace variables by ``images`` (by name).

        Variables without an image map to the variable of the same name in
        ``target`` (default: this ring).
        """
        target = target or self.ring
        gens = []
        for v in self.ring.vars:
            if v in images:
                img = images[v]
                if img.ring != target:
                    img = target.convert(img)
                gens.append(img)
            else:
                gens.append(target.gen(v))
        result = target.zero()
        cache: Dict[Tuple[int, int], Polynomial] = {}
        for m, c in self._d.items():
            term = target.const(c)
            for i, a in enumerate(m):
                if a:
                    if (i, a) not in cache:
                        cache[(i, a)] = gens[i] ** a
                    term = term * cache[(i, a)]
            result = result + term
        return result

    # comparison / display --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r})"


def render_monomial(vars: Sequence[str], m: Monomial) -> str:
    parts = []
    for v, a in zip(vars, m):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def _render_coeff(c, p: int) -> Tuple[bool, str]:
    """(negative?, magnitude text).  GF(p) residues above p/2 print as negatives."""
    if p:
        if c > p // 2:
            return True, str(p - c)
        return False, str(c)
    if c < 0:
        return True, str(-c)
    return False, str(c)


def render(f: Polynomial) -> str:
    """Canonical text: terms in descending order, ``*`` between factors, ``^`` powers."""
    if f.is_zero():
        return "0"
    p = f.ring.field.p
    out = []
    for i, (m, c) in enumerate(f.terms()):
        neg, mag = _render_coeff(c, p)
        mono = render_monomial(f.ring.vars, m)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class Ideal:
    """A finitely generated ideal, stored as its generator list (zeros dropped)."""

    def __init__(self, ring: PolyRing, gens: Iterable = ()):
        self.ring = ring
        kept: List[Polynomial] = []
        seen = set()
        for g in gens:
            g = g if isinstance(g, Polynomial) else ring.const(g)
            if g.ring != ring:
                raise RingMismatch(f"generator {g} lives in {g.ring}, not {ring}")
            if g and g not in seen:
                seen.add(g)
                kept.append(g)
        self.gens: Tuple[Polynomial, ...] = tuple(kept)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch(f"{other.ring} vs {self.ring}")
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, n: int) -> "Ideal":
        return ideal_power(self, n)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    return Ideal(I.ring, I.gens + J.gens)


def ideal_power(I: Ideal, n: int) -> Ideal:
    """All n-fold products of the generators of ``I``, deduplicated in order."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("ideal powers need n >= 1 (pass the ideal itself for n = 1)")
    gens = []
    for combo in combinations_with_replacement(I.gens, n):
        f = combo[0]
        for g in combo[1:]:
            f = f * g
        gens.append(f)
    return Ideal(I.ring, gens)
