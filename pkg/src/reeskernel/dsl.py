"""Line-oriented input language.

One statement per line, ``#`` starts a comment::

    ring P = poly(GF(3), [x, y, z], order=grevlex)
    ideal I = sum(ideal(x^3, y^3), power(ideal(x, y, z), 4))
    quotient R = P / I
    module M = submodule(R, [z])
    map g = map(M, rank=2, rows=[[x, y]])
    rees M

Ideals are built in the most recently declared ring.  Bindings are
evaluated while parsing (polynomials need their ring); commands are only
checked here and executed by :mod:`reeskernel.cli`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .coefficients import Field, FieldError
from .freemod import PolyMatrix, Submodule
from .groebner import QuotientRing
from .modpres import ModuleMap, ModulePresentation
from .polyring import Ideal, MonomialOrder, Polynomial, PolyRing, ideal_power, ideal_sum
from .rees import ReesPresentation, classical_ideal_rees, rees_ideal, rees_of_map


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int, token: str = ""):
        self.message = message
        self.line = line
        self.col = col
        self.token = token
        where = f"line {line}, column {col}"
        tok = f" near {token!r}" if token else ""
        super().__init__(f"{where}: {message}{tok}")


class ScriptError(Exception):
    """A well-formed statement whose evaluation failed (domain error)."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


_TOKEN = re.compile(r"""
    (?P<ws>[ \t]+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[-+*^/=(),\[\]])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str  # int | name | op | end
    text: str
    line: int
    col: int


def tokenize(line: str, lineno: int) -> List[Token]:
    toks = []
    pos = 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if not m:
            raise ParseError("unexpected character", lineno, pos + 1, line[pos])
        if m.lastgroup != "ws":
            toks.append(Token(m.lastgroup, m.group(), lineno, pos + 1))
        pos = m.end()
    toks.append(Token("end", "", lineno, len(line) + 1))
    return toks


BINDING_KINDS = ("ring", "ideal", "quotient", "module", "map", "rees")
COMMANDS = ("rees", "rees_of", "classical", "compare", "kdim", "hilb", "spread",
            "reduction", "integral", "nilkernel", "basechange", "lemma16")


@dataclass
class Command:
    name: str
    args: Dict[str, object]
    text: str
    line: int


@dataclass
class Session:
    bindings: Dict[str, object] = field(default_factory=dict)
    kinds: Dict[str, str] = field(default_factory=dict)
    current_ring: Optional[PolyRing] = None
    default_order: str = "grevlex"

    def bind(self, name: str, kind: str, value, tok: Token):
        if name in self.bindings:
            raise ParseError(f"name {name!r} is already bound", tok.line, tok.col, name)
        self.bindings[name] = value
        self.kinds[name] = kind

    def lookup(self, tok: Token, *kinds: str):
        name = tok.text
        if name not in self.bindings:
            raise ParseError("unknown name", tok.line, tok.col, name)
        if kinds and self.kinds[name] not in kinds:
            raise ParseError(f"{name!r} is a {self.kinds[name]}, expected {' or '.join(kinds)}",
                             tok.line, tok.col, name)
        return self.bindings[name]


class _Parser:
    def __init__(self, toks: List[Token], session: Session, source: str):
        self.toks = toks
        self.i = 0
        self.s = session
        self.source = source

    # token helpers -----------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token = None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col, tok.text or "end of line")

    def next(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "end":
            self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "end":
            raise self.error(f"expected {text!r}")
        return self.next()

    def accept(self, text: str) -> bool:
        if self.tok.kind != "end" and self.tok.text == text:
            self.next()
            return True
        return False

    def name(self, what: str = "a name") -> Token:
        if self.tok.kind != "name":
            raise self.error(f"expected {what}")
        return self.next()

    def integer(self) -> int:
        if self.tok.kind != "int":
            raise self.error("expected an integer")
        return int(self.next().text)

    def end(self):
        if self.tok.kind != "end":
            raise self.error("unexpected trailing input")

    def keyword_int(self, key: str) -> int:
        t = self.name(f"'{key}='")
        if t.text != key:
            raise self.error(f"expected '{key}='", t)
        self.expect("=")
        return self.integer()

    # polynomials -------------------------------------------------------------
    def poly(self, ring: PolyRing) -> Polynomial:
        f = self._term(ring)
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.next().text
            g = self._term(ring)
            f = f + g if op == "+" else f - g
        return f

    def _term(self, ring):
        f = self._unary(ring)
        while self.tok.kind == "op" and self.tok.text == "*":
            self.next()
            f = f * self._unary(ring)
        if self.tok.kind in ("name", "int") or self.tok.text == "(":
            raise self.error("expected an operator ('*' is required between factors)")
        return f

    def _unary(self, ring):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.next()
            return -self._unary(ring)
        if self.tok.kind == "op" and self.tok.text == "+":
            self.next()
            return self._unary(ring)
        return self._power(ring)

    def _power(self, ring):
        base = self._atom(ring)
        if self.tok.kind == "op" and self.tok.text == "^":
            self.next()
            base = base ** self.integer()
        return base

    def _atom(self, ring):
        t = self.tok
        if t.kind == "int":
            self.next()
            return ring.const(int(t.text))
        if t.kind == "name":
            if t.text not in ring.vars:
                raise self.error(f"unknown variable (ring has {', '.join(ring.vars)})")
            self.next()
            return ring.gen(t.text)
        if t.text == "(":
            self.next()
            f = self.poly(ring)
            self.expect(")")
            return f
        raise self.error("expected a polynomial")

    def poly_list(self, ring: PolyRing, open_="(", close=")") -> List[Polynomial]:
        self.expect(open_)
        out = []
        if not self.accept(close):
            out.append(self.poly(ring))
            while self.accept(","):
                out.append(self.poly(ring))
            self.expect(close)
        return out

    def matrix(self, ring: PolyRing) -> List[List[Polynomial]]:
        self.expect("[")
        rows = []
        if not self.accept("]"):
            rows.append(self.poly_list(ring, "[", "]"))
            while self.accept(","):
                rows.append(self.poly_list(ring, "[", "]"))
            self.expect("]")
        return rows

    # statements --------------------------------------------------------------
    def field_spec(self) -> Field:
        t = self.name("a field (GF(p) or QQ)")
        if t.text == "QQ":
            return Field.qq()
        if t.text == "GF":
            self.expect("(")
            pt = self.tok
            p = self.integer()
            self.expect(")")
            try:
                return Field.gf(p)
            except FieldError as e:
                raise ParseError(str(e), pt.line, pt.col, pt.text) from None
        raise self.error("expected a field (GF(p) or QQ)", t)

    def ring_stmt(self, name: Token):
        t = self.name("'poly'")
        if t.text != "poly":
            raise self.error("expected 'poly'", t)
        self.expect("(")
        F = self.field_spec()
        self.expect(",")
        self.expect("[")
        vars_ = [self.name("a variable name")]
        while self.accept(","):
            vars_.append(self.name("a variable name"))
        self.expect("]")
        order = self.s.default_order
        if self.accept(","):
            k = self.name("'order='")
            if k.text != "order":
                raise self.error("expected 'order='", k)
            self.expect("=")
            o = self.name("an order (lex or grevlex)")
            if o.text not in ("lex", "grevlex"):
                raise self.error("expected an order (lex or grevlex)", o)
            order = o.text
        self.expect(")")
        self.end()
        names = [v.text for v in vars_]
        if len(set(names)) != len(names):
            raise self.error("duplicate variable names", vars_[0])
        ring = PolyRing(F, tuple(names), MonomialOrder(order))
        self.s.bind(name.text, "ring", ring, name)
        self.s.current_ring = ring

    def ideal_expr(self) -> Ideal:
        t = self.name("an ideal expression")
        ring = self.s.current_ring
        if t.text == "ideal":
            if ring is None:
                raise self.error("no ring declared yet", t)
            return Ideal(ring, self.poly_list(ring))
        if t.text == "power":
            self.expect("(")
            I = self.ideal_expr()
            self.expect(",")
            nt = self.tok
            n = self.integer()
            self.expect(")")
            if n < 1:
                raise self.error("power exponent must be at least 1", nt)
            return ideal_power(I, n)
        if t.text == "sum":
            self.expect("(")
            I = self.ideal_expr()
            self.expect(",")
            J = self.ideal_expr()
            self.expect(")")
            if I.ring != J.ring:
                raise self.error("ideals live in different rings", t)
            return ideal_sum(I, J)
        return self.s.lookup(t, "ideal")

    def ideal_stmt(self, name: Token):
        I = self.ideal_expr()
        self.end()
        self.s.bind(name.text, "ideal", I, name)

    def quotient_stmt(self, name: Token):
        rt = self.name("a ring name")
        ring = self.s.lookup(rt, "ring")
        self.expect("/")
        it = self.tok
        I = self.ideal_expr()
        self.end()
        if I.ring != ring:
            raise self.error("ideal does not live in this ring", it)
        self.s.bind(name.text, "quotient", QuotientRing(ring, I), name)

    def module_stmt(self, name: Token):
        t = self.name("'coker' or 'submodule'")
        if t.text not in ("coker", "submodule"):
            raise self.error("expected 'coker' or 'submodule'", t)
        self.expect("(")
        qt = self.name("a quotient ring name")
        R = self.s.lookup(qt, "quotient")
        self.expect(",")
        if t.text == "coker":
            rows = self.matrix(R.ring)
            self.expect(")")
            self.end()
            if not rows:
                raise self.error("coker needs at least one row", t)
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise self.error("presentation rows have different lengths", t)
            M = ModulePresentation(R, len(rows), PolyMatrix(R, rows, ncols=ncols))
        else:
            self.expect("[")
            elems = []
            if not self.accept("]"):
                elems.append(self._vector(R.ring))
                while self.accept(","):
                    elems.append(self._vector(R.ring))
                self.expect("]")
            self.expect(")")
            self.end()
            ranks = {len(v) for v in elems}
            if len(ranks) > 1:
                raise self.error("submodule generators have different lengths", t)
            rank = ranks.pop() if ranks else 1
            M = ModulePresentation.from_submodule(Submodule(R, rank, elems))
        self.s.bind(name.text, "module", M, name)

    def _vector(self, ring) -> List[Polynomial]:
        if self.tok.text == "[":
            return self.poly_list(ring, "[", "]")
        return [self.poly(ring)]

    def map_stmt(self, name: Token):
        t = self.name("'map'")
        if t.text != "map":
            raise self.error("expected 'map'", t)
        self.expect("(")
        mt = self.name("a module name")
        M = self.s.lookup(mt, "module")
        self.expect(",")
        rank = self.keyword_int("rank")
        self.expect(",")
        k = self.name("'rows='")
        if k.text != "rows":
            raise self.error("expected 'rows='", k)
        self.expect("=")
        rt = self.tok
        rows = self.matrix(M.ring.ring)
        self.expect(")")
        self.end()
        if len(rows) != M.ngens or any(len(r) != rank for r in rows):
            raise self.error(f"expected {M.ngens} rows of length {rank}", rt)
        try:
            g = ModuleMap(M, rank, PolyMatrix(M.ring, rows, ncols=rank))
        except ValueError as e:
            raise ScriptError(str(e), name.line) from None
        self.s.bind(name.text, "map", g, name)

    def rees_stmt(self, name: Token):
        t = self.name("'rees', 'rees_of' or 'classical'")
        self.expect("(")
        if t.text == "rees":
            M = self.s.lookup(self.name("a module name"), "module")
            value = lambda: rees_ideal(M)  # noqa: E731
        elif t.text == "rees_of":
            g = self.s.lookup(self.name("a map name"), "map")
            value = lambda: rees_of_map(g)  # noqa: E731
        elif t.text == "classical":
            I = self.ideal_expr()
            self.expect(",")
            R = self.s.lookup(self.name("a quotient ring name"), "quotient")
            if I.ring != R.ring:
                raise self.error("ideal does not live in the quotient's ring", t)
            value = lambda: classical_ideal_rees(R, list(I.gens))  # noqa: E731
        else:
            raise self.error("expected 'rees', 'rees_of' or 'classical'", t)
        self.expect(")")
        self.end()
        self.s.bind(name.text, "rees", LazyRees(value), name)

    # commands --------------------------------------------------------------
    def command(self, head: Token) -> Command:
        c = head.text
        args: Dict[str, object] = {}
        if c == "rees":
            args["module"] = self._named("module")
        elif c == "rees_of":
            args["map"] = self._named("map")
        elif c == "classical":
            args["ideal"] = self._named("ideal")
            self._word("in")
            args["quotient"] = self._named("quotient")
        elif c == "compare":
            args["a"] = self._named("module", "map", "rees")
            args["b"] = self._named("module", "map", "rees")
        elif c == "kdim":
            args["target"] = self._named("quotient", "module", "map", "rees")
        elif c == "hilb":
            args["target"] = self._named("quotient", "module", "map", "rees")
            args["degree"] = self.integer()
        elif c == "spread":
            args["module"] = self._named("module")
            self._word("at")
            args["ideal"] = self._named("ideal")
        elif c == "reduction":
            args["u"] = self._named("module")
            self._word("in")
            args["module"] = self._named("module")
            args["maxdeg"] = self._maxdeg()
        elif c == "integral":
            args["u"] = self._named("module")
            args["l"] = self._named("module")
            self._word("in")
            args["module"] = self._named("module")
            args["maxdeg"] = self._maxdeg()
        elif c == "nilkernel":
            args["module"] = self._named("module")
            args["map"] = self._named("map")
        elif c == "basechange":
            args["module"] = self._named("module")
            self.expect("[")
            names = [self.name("a variable name").text]
            while self.accept(","):
                names.append(self.name("a variable name").text)
            self.expect("]")
            args["fresh"] = names
        elif c == "lemma16":
            args["target"] = self._named("module", "map")
            args["split"] = self.keyword_int("split")
            args["deg"] = self.keyword_int("deg")
        self.end()
        return Command(c, args, self.source.strip(), head.line)

    def _named(self, *kinds) -> Tuple[str, object]:
        t = self.name(f"a {' or '.join(kinds)} name")
        return (t.text, self.s.lookup(t, *kinds))

    def _word(self, w: str):
        t = self.name(f"'{w}'")
        if t.text != w:
            raise self.error(f"expected '{w}'", t)

    def _maxdeg(self) -> Optional[int]:
        if self.tok.kind == "end":
            return None
        return self.keyword_int("maxdeg")


class LazyRees:
    """A Rees binding, computed on first use."""

    def __init__(self, thunk):
        self._thunk = thunk
        self._value: Optional[ReesPresentation] = None

    def get(self) -> ReesPresentation:
        if self._value is None:
            self._value = self._thunk()
        return self._value


def parse_session(text: str, default_order: str = "grevlex") -> Tuple[Session, List[Command]]:
    """Parse a whole script; raises :class:`ParseError` with the position."""
    session = Session(default_order=default_order)
    commands: List[Command] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = tokenize(line, lineno)
        p = _Parser(toks, session, line)
        head = p.name("a statement keyword")
        if head.text in BINDING_KINDS and len(toks) > 2 and toks[2].text == "=":
            name = p.name("a binding name")
            p.expect("=")
            try:
                getattr(p, f"{head.text}_stmt")(name)
            except (ValueError, ArithmeticError) as e:
                raise ScriptError(str(e), lineno) from None
        elif head.text in COMMANDS:
            commands.append(p.command(head))
        else:
            raise ParseError("unknown statement", head.line, head.col, head.text)
    return session, commands
