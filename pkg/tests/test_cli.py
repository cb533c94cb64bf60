import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from reeskernel import __version__
from reeskernel.cli import Report, emit_report, emit_reports, main, parse_machine, run_command, \
    run_script
from reeskernel.dsl import ParseError, ScriptError, parse_session

GOLDEN = Path(__file__).parent / "golden"
HEAD = "ring P = poly(QQ, [x, y])\nideal Z = ideal(0)\nquotient R = P / Z\n"


def strip_comments(text: str) -> str:
    return "\n".join(l for l in text.splitlines() if not l.startswith("#"))


def test_embedding_script_parses():
    session, commands = parse_session((GOLDEN / "embedding_p3.rk").read_text())
    assert len(session.bindings) == 9
    assert [c.name for c in commands] == ["rees", "rees_of", "rees_of", "kdim", "kdim", "hilb"]


def test_empty_input():
    session, commands = parse_session("")
    assert session.bindings == {} and commands == []
    session, commands = parse_session("# only a comment\n\n")
    assert commands == []


def test_power_binding():
    session, _ = parse_session("ring P = poly(QQ, [x, y])\nideal I = power(ideal(x,y), 2)")
    assert sorted(map(str, session.bindings["I"].gens)) == ["x*y", "x^2", "y^2"]


def test_default_order_flag():
    s, _ = parse_session("ring P = poly(QQ, [x, y])", default_order="lex")
    assert s.bindings["P"].order.kind == "lex"
    s, _ = parse_session("ring P = poly(QQ, [x, y], order=grevlex)", default_order="lex")
    assert s.bindings["P"].order.kind == "grevlex"


@pytest.mark.parametrize("script, line, col, token", [
    # ring
    ("ring P = poly(QQ [x])", 1, 18, "["),
    ("ring P = poly(GF(4), [x])", 1, 18, "4"),
    ("ring P = poly(QQ, [x], order=deglex)", 1, 30, "deglex"),
    ("ring P = ring(QQ, [x])", 1, 10, "ring"),
    # ideal
    ("ring P = poly(QQ, [x])\nideal I = ideal(x, 2x)", 2, 21, "x"),
    ("ring P = poly(QQ, [x])\nideal I = power(ideal(x), 0)", 2, 27, "0"),
    ("ring P = poly(QQ, [x])\nideal I = sum(ideal(x))", 2, 23, ")"),
    ("ring P = poly(QQ, [x])\nideal I = ideal(x +)", 2, 20, ")"),
    ("ring P = poly(QQ, [x])\nideal I = ideal(q)", 2, 17, "q"),
    # quotient
    ("ring P = poly(QQ, [x])\nideal I = ideal(x)\nquotient R = I / P", 3, 14, "I"),
    ("ring P = poly(QQ, [x])\nideal I = ideal(x)\nquotient R = P I", 3, 16, "I"),
    # module
    (HEAD + "module M = coker(R, [[x], [x, x]])", 4, 12, "coker"),
    (HEAD + "module M = submodule(R, [x, [x, y]])", 4, 12, "submodule"),
    (HEAD + "module M = submodule(P, [x])", 4, 22, "P"),
    (HEAD + "module M = span(R, [x])", 4, 12, "span"),
    # map
    (HEAD + "module M = submodule(R, [x])\nmap g = map(M, rank=2, rows=[[x]])", 5, 29, "["),
    (HEAD + "module M = submodule(R, [x])\nmap g = map(M, size=1, rows=[[x]])", 5, 16, "size"),
    (HEAD + "module M = submodule(R, [x])\nmap g = map(R, rank=1, rows=[[x]])", 5, 13, "R"),
    # commands
    (HEAD + "ideal m = ideal(x)\nspread m at m", 5, 8, "m"),
    (HEAD + "kdim Q", 4, 6, "Q"),
    (HEAD + "module M = submodule(R, [x])\nhilb M", 5, 7, "end of line"),
    (HEAD + "module M = submodule(R, [x])\nreduction M of M", 5, 13, "of"),
    (HEAD + "module M = submodule(R, [x])\nlemma16 M split=1", 5, 18, "end of line"),
    (HEAD + "module M = submodule(R, [x])\nbasechange M w", 5, 14, "w"),
    (HEAD + "module M = submodule(R, [x])\nrees M extra", 5, 8, "extra"),
    (HEAD + "frobnicate R", 4, 1, "frobnicate"),
    ("ring P = poly(QQ, [x]) $", 1, 24, "$"),
])
def test_parse_errors_report_position(script, line, col, token):
    with pytest.raises(ParseError) as err:
        parse_session(script)
    e = err.value
    assert (e.line, e.col, e.token) == (line, col, token)
    assert f"line {line}, column {col}" in str(e)


def test_names_are_unique_and_declared_first():
    with pytest.raises(ParseError, match="already bound"):
        parse_session("ring P = poly(QQ, [x])\nring P = poly(QQ, [y])")
    with pytest.raises(ParseError, match="unknown name"):
        parse_session("quotient R = P / I\nring P = poly(QQ, [x])")
    with pytest.raises(ParseError, match="no ring"):
        parse_session("ideal I = ideal(1)")


def test_ill_defined_map_is_a_domain_error():
    script = ("ring P = poly(QQ, [x])\nideal I = ideal(x^2)\nquotient R = P / I\n"
              "module M = coker(R, [[x]])\nmap g = map(M, rank=1, rows=[[1]])")
    with pytest.raises(ScriptError):
        parse_session(script)


def test_embedding_commands():
    reports = run_script((GOLDEN / "embedding_p3.rk").read_text())
    by_cmd = {r.command: r for r in reports}
    assert by_cmd["kdim M"].payload["dimension"] == 33
    assert by_cmd["hilb g2 3"].payload["dimension"] == 0
    assert by_cmd["kdim M"].text == ["kdim R(M) = 33"]
    assert "y1^3" in by_cmd["rees_of g2"].payload["relations"]


def test_compare_identical_bindings():
    session, commands = parse_session(HEAD + "module M = submodule(R, [x, y])\ncompare M M")
    r = run_command(session, commands[0])
    assert r.ok and r.payload["result"] == "EQUAL"


def test_domain_error_is_reported():
    session, commands = parse_session(HEAD + "module M = submodule(R, [x])\nkdim M")
    r = run_command(session, commands[0])
    # graded pieces over QQ[x, y] are fine but the total dimension is infinite
    assert r.ok and r.payload["dimension"] == "infinite"
    session, commands = parse_session(HEAD + "module M = submodule(R, [x])\nhilb M 1")
    r = run_command(session, commands[0])
    assert r.status == "error" and "Artinian" in r.payload["error"]


def test_machine_roundtrip():
    reports = run_script((GOLDEN / "artinian_gf5.rk").read_text(), timing=True)
    assert parse_machine(emit_reports(reports, "machine")) == reports
    r = Report("kdim M", "ok", {"algebra": "R(M)", "dimension": 33}, 5)
    assert parse_machine(emit_report(r, "machine")) == [r]
    doc = json.loads(emit_report(r, "machine"))
    assert set(doc["reports"][0]) == {"command", "status", "payload", "ms"}
    assert doc["version"] == __version__


def test_machine_output_is_deterministic():
    text = (GOLDEN / "ideals_qq.rk").read_text()
    assert emit_reports(run_script(text), "machine") == emit_reports(run_script(text), "machine")


@pytest.mark.parametrize("name", sorted(p.stem for p in GOLDEN.glob("*.rk")))
def test_golden_text(name):
    out = emit_reports(run_script((GOLDEN / f"{name}.rk").read_text()), "text").decode()
    assert strip_comments(out) == strip_comments((GOLDEN / f"{name}.expected").read_text())


@pytest.mark.parametrize("name", sorted(p.stem for p in GOLDEN.glob("*.rk")))
def test_golden_machine(name):
    out = emit_reports(run_script((GOLDEN / f"{name}.rk").read_text()), "machine")
    assert json.loads(out) == json.loads((GOLDEN / f"{name}.machine.json").read_text())


def test_main_exit_codes(tmp_path, capsys):
    ok = tmp_path / "ok.rk"
    ok.write_text(HEAD + "module M = submodule(R, [x, y])\ncompare M M\n")
    assert main(["run", str(ok)]) == 0
    assert "compare R(M) R(M) = EQUAL" in capsys.readouterr().out
    bad = tmp_path / "bad.rk"
    bad.write_text("ring P = poly(QQ, [x]\n")
    assert main(["run", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err
    dom = tmp_path / "dom.rk"
    dom.write_text(HEAD + "module M = submodule(R, [x])\nhilb M 1\n")
    assert main(["run", str(dom), "--format", "machine"]) == 1
    captured = capsys.readouterr()
    assert "error" in captured.err
    assert json.loads(captured.out)["reports"][0]["status"] == "error"


def test_console_script_runs():
    script = GOLDEN / "artinian_gf5.rk"
    proc = subprocess.run([sys.executable, "-m", "reeskernel.cli", "run", str(script)],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0
    assert "spread R(N) at m = 0" in proc.stdout
