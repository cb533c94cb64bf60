"""Command dispatcher, reports and the ``reeskernel`` entry point.

Machine format: one JSON document per run::

    {"engine": "reeskernel", "version": "...",
     "reports": [{"command": ..., "status": "ok"|"error", "payload": {...}, "ms": ...}]}

Payload numbers are exact integers; an infinite dimension is the string
``"infinite"``.  ``ms`` is ``null`` unless ``--timing`` is given, so the
document is byte-stable by default.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional

from . import __version__
from .dsl import Command, LazyRees, ParseError, ScriptError, Session, parse_session
from .freemod import Submodule
from .groebner import INFINITE, QuotientRing, hilbert_by_degree, k_dimension
from .integrality import DEFAULT_MAX_DEGREE, analytic_spread, in_generators, integral_in, \
    is_reduction
from .modpres import ModuleMap, ModulePresentation
from .polyring import render
from .rees import (ReesPresentation, base_change_check, classical_ideal_rees, compare_rees,
                   inclusion_map, lemma16_check, nilpotent_kernel_check, rees_hilbert,
                   rees_ideal, rees_k_dimension, rees_of_map)

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


@dataclass
class Report:
    command: str
    status: str
    payload: dict
    ms: Optional[int] = None
    version: str = __version__
    text: List[str] = field(default_factory=list, compare=False)

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _dim(v):
    return "infinite" if v == INFINITE else int(v)


def _label(name: str, value) -> str:
    if isinstance(value, (ModulePresentation, ModuleMap)):
        return f"R({name})"
    return name


def _rees_of(name: str, value) -> ReesPresentation:
    if isinstance(value, ModulePresentation):
        return rees_ideal(value)
    if isinstance(value, ModuleMap):
        return rees_of_map(value)
    if isinstance(value, LazyRees):
        return value.get()
    raise ValueError(f"{name} does not designate a Rees algebra")


def _rees_payload(label: str, Rp: ReesPresentation):
    """Relations in canonical text, largest leading monomial first."""
    key = Rp.ring.order.key
    gens = sorted(Rp.relation_generators(), reverse=True,
                  key=lambda f: ([key(m) for m, _ in f.terms()], render(f)))
    rels = [render(f) for f in gens]
    payload = {"algebra": label, "provenance": Rp.provenance,
               "variables": list(Rp.ring.vars), "relations": rels}
    text = [f"rees {label} over [{', '.join(Rp.ring.vars)}]: {len(rels)} relations"]
    text += [f"  {r}" for r in rels]
    return payload, text


def _ambient_submodule(name: str, U: ModulePresentation) -> Submodule:
    if U.embedding is None:
        raise ValueError(f"{name} was not given as a submodule")
    E = U.embedding
    return Submodule(U.ring, E.ncols, [E.row(j) for j in range(E.nrows)])


def _verdict(v, maxdeg: int):
    payload = {"status": v.status.value, "witness_degree": v.witness_degree, "maxdeg": maxdeg}
    if v.integral:
        return payload, f"INTEGRAL (witness degree {v.witness_degree})"
    return payload, f"NOT_DECIDED (maxdeg {maxdeg})"


def _execute(session: Session, cmd: Command, maxdeg: int):
    a = cmd.args
    c = cmd.name
    if c == "rees":
        name, M = a["module"]
        return _rees_payload(f"R({name})", rees_ideal(M))
    if c == "rees_of":
        name, g = a["map"]
        return _rees_payload(f"R({name})", rees_of_map(g))
    if c == "classical":
        (iname, I), (qname, Q) = a["ideal"], a["quotient"]
        if I.ring != Q.ring:
            raise ValueError(f"{iname} does not live in the ring of {qname}")
        return _rees_payload(f"R({iname})", classical_ideal_rees(Q, list(I.gens)))
    if c == "compare":
        (na, va), (nb, vb) = a["a"], a["b"]
        la, lb = _label(na, va), _label(nb, vb)
        res = compare_rees(_rees_of(na, va), _rees_of(nb, vb)).value
        return {"a": la, "b": lb, "result": res}, [f"compare {la} {lb} = {res}"]
    if c in ("kdim", "hilb"):
        name, v = a["target"]
        label = _label(name, v)
        if isinstance(v, QuotientRing):
            if c == "kdim":
                val = k_dimension(v)
            else:
                val = hilbert_by_degree(v, [1] * v.ring.nvars, a["degree"])
        else:
            Rp = _rees_of(name, v)
            val = rees_k_dimension(Rp) if c == "kdim" else rees_hilbert(Rp, a["degree"])
        val = _dim(val)
        if c == "kdim":
            return {"algebra": label, "dimension": val}, [f"kdim {label} = {val}"]
        d = a["degree"]
        return ({"algebra": label, "degree": d, "dimension": val},
                [f"hilb {label} {d} = {val}"])
    if c == "spread":
        (mname, M), (iname, I) = a["module"], a["ideal"]
        if I.ring != M.ring.ring:
            raise ValueError(f"{iname} does not live in the base ring of {mname}")
        val = analytic_spread(M, I)
        return ({"module": mname, "ideal": iname, "spread": val},
                [f"spread R({mname}) at {iname} = {val}"])
    if c in ("reduction", "integral"):
        mname, M = a["module"]
        bound = a["maxdeg"] if a["maxdeg"] is not None else maxdeg
        uname, U = a["u"]
        Ug = in_generators(M, _ambient_submodule(uname, U))
        if c == "reduction":
            payload, verdict = _verdict(is_reduction(Ug, M, bound), bound)
            head = f"reduction {uname} in {mname}"
        else:
            lname, L = a["l"]
            Lg = in_generators(M, _ambient_submodule(lname, L))
            payload, verdict = _verdict(integral_in(Ug, Lg, M, bound), bound)
            head = f"integral {uname} {lname} in {mname}"
        return payload, [f"{head}: {verdict}"]
    if c == "nilkernel":
        (mname, M), (gname, g) = a["module"], a["map"]
        if g.source is not M:
            raise ValueError(f"{gname} is not a map out of {mname}")
        ok = nilpotent_kernel_check(M, g)
        return {"holds": ok}, [f"nilkernel {mname} {gname} = {str(ok).lower()}"]
    if c == "basechange":
        mname, M = a["module"]
        ok = base_change_check(M, a["fresh"])
        fresh = ", ".join(a["fresh"])
        return {"holds": ok}, [f"basechange {mname} [{fresh}] = {str(ok).lower()}"]
    if c == "lemma16":
        name, v = a["target"]
        g = v if isinstance(v, ModuleMap) else inclusion_map(v)
        ok = lemma16_check(rees_of_map(g), a["split"], a["deg"])
        return ({"holds": ok},
                [f"lemma16 {name} split={a['split']} deg={a['deg']} = {str(ok).lower()}"])
    raise ValueError(f"unknown command {c!r}")  # pragma: no cover


def run_command(session: Session, command: Command, maxdeg: int = DEFAULT_MAX_DEGREE,
                timing: bool = False) -> Report:
    """Run one command; domain errors become an ``error`` report."""
    start = time.perf_counter()
    try:
        payload, text = _execute(session, command, maxdeg)
        status = "ok"
    except (ValueError, ArithmeticError) as e:
        payload = {"error": str(e)}
        text = [f"error: {command.text}: {e}"]
        status = "error"
    ms = round((time.perf_counter() - start) * 1000) if timing else None
    return Report(command.text, status, payload, ms, text=text)


def _machine_doc(reports: List[Report]) -> dict:
    return {"engine": "reeskernel", "version": __version__,
            "reports": [{"command": r.command, "status": r.status,
                         "payload": r.payload, "ms": r.ms} for r in reports]}


def emit_reports(reports: List[Report], fmt: str = "text") -> bytes:
    if fmt == "machine":
        return (json.dumps(_machine_doc(reports), indent=2, sort_keys=True) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"# reeskernel {__version__}"]
    for r in reports:
        lines.append("")
        lines.append(f"> {r.command}")
        lines.extend(r.text or [json.dumps(r.payload, sort_keys=True)])
        if r.ms is not None:
            lines.append(f"  ({r.ms} ms)")
    return ("\n".join(lines) + "\n").encode()


def emit_report(report: Report, fmt: str = "text") -> bytes:
    return emit_reports([report], fmt)


def parse_machine(data) -> List[Report]:
    """Inverse of the machine format."""
    doc = json.loads(data)
    return [Report(r["command"], r["status"], r["payload"], r["ms"], doc["version"])
            for r in doc["reports"]]


def run_script(text: str, maxdeg: int = DEFAULT_MAX_DEGREE, order: str = "grevlex",
               timing: bool = False) -> List[Report]:
    session, commands = parse_session(text, default_order=order)
    return [run_command(session, c, maxdeg, timing) for c in commands]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reeskernel",
                                 description="Rees algebras of modules from small scripts.")
    ap.add_argument("--version", action="version", version=f"reeskernel {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)
    run = sub.add_parser("run", help="execute a script")
    run.add_argument("script", help="script path, or - for stdin")
    run.add_argument("--format", choices=("text", "machine"), default="text")
    run.add_argument("--maxdeg", type=int, default=DEFAULT_MAX_DEGREE,
                     help="degree bound for integrality tests (default %(default)s)")
    run.add_argument("--order", choices=("lex", "grevlex"), default="grevlex",
                     help="order for rings declared without order=")
    run.add_argument("--timing", action="store_true", help="record wall time per command")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.maxdeg < 1:
        print("reeskernel: --maxdeg must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.script == "-":
            text = sys.stdin.read()
        else:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        print(f"reeskernel: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        reports = run_script(text, args.maxdeg, args.order, args.timing)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ScriptError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.buffer.write(emit_reports(reports, args.format))
    sys.stdout.flush()
    failed = [r for r in reports if not r.ok]
    for r in failed:
        print(f"error: {r.command}: {r.payload['error']}", file=sys.stderr)
    return EXIT_DOMAIN if failed else EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
