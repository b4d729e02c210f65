from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from helpers import FIXTURES
from knotgenus.cli import main
from knotgenus.fixtures import FixtureEntry, FixtureError, MatrixEntry, read_fixture_lines, read_matrix_lines


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stream=buf)
    return code, buf.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_fixture_grammar():
    text = (
        "# comment\n\n"
        'k PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) @ genus_cited=3 source="a table, row 1"\n'
        "no header\n"
        "j PD: @ broken\n"
    )
    out = list(read_fixture_lines(text))
    assert isinstance(out[0], FixtureEntry)
    assert out[0].line_no == 3
    assert out[0].genus_cited == 3
    assert out[0].source == "a table, row 1"
    assert out[0].diagram().crossing_count == 3
    assert isinstance(out[1], FixtureError) and out[1].line_no == 4
    assert isinstance(out[2], FixtureError)


def test_matrix_grammar():
    out = list(read_matrix_lines("a: [[1,2],[3,4]]\nb: [[1,2]]\nc [[1]]\n"))
    assert isinstance(out[0], MatrixEntry) and out[0].rows == ((1, 2), (3, 4))
    assert isinstance(out[1], FixtureError) and "square" in out[1].error
    assert isinstance(out[2], FixtureError)


def test_invariants_basic():
    code, text = run("invariants", str(FIXTURES / "basic.pd"), "--json")
    assert code == 0
    recs = records(text)
    assert [r["name"] for r in recs] == ["trefoil", "figure_eight", "unknot"]
    assert all(r["genus_determined"] and r["schema"] == 1 for r in recs)


def test_empty_file(tmp_path):
    p = tmp_path / "empty.pd"
    p.write_text("")
    assert run("invariants", str(p)) == (0, "")
    assert run("invariants", str(p), "--json") == (0, "")


def test_malformed_line_among_valid():
    code, text = run("invariants", str(FIXTURES / "with_error.pd"), "--json")
    assert code == 1
    recs = records(text)
    assert [r["kind"] for r in recs] == ["report", "error", "report"]
    assert recs[1]["line"] == 3
    assert "column" in recs[1]["error"]


def test_verify_alternating_all_pass():
    code, text = run("verify", str(FIXTURES / "alternating_3to8.pd"), "--json")
    assert code == 0
    recs = records(text)
    alt = [r for r in recs if r.get("theorem") == "alternating-genus"]
    assert len(alt) == 32 and {r["status"] for r in alt} == {"pass"}
    assert recs[-1]["kind"] == "summary" and recs[-1]["fail"] == 0


def test_verify_eleven_crossing():
    code, text = run("verify", str(FIXTURES / "eleven_crossing.pd"), "--json")
    assert code == 0
    recs = records(text)
    for theorem in ("alternating-genus", "homogeneous-genus"):
        assert {r["status"] for r in recs if r.get("theorem") == theorem} == {"not-applicable"}
    gap = [r for r in recs if r.get("theorem") == "genus-gap"]
    assert len(gap) == 7 and {r["status"] for r in gap} == {"pass"}


def test_verify_homogeneous():
    code, text = run("verify", str(FIXTURES / "homogeneous.pd"), "--json")
    assert code == 0
    hom = [r for r in records(text) if r.get("theorem") == "homogeneous-genus"]
    assert hom and {r["status"] for r in hom} == {"pass"}


def test_failed_verdict_sets_exit_code(tmp_path):
    p = tmp_path / "lie.pd"
    p.write_text("trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) @ genus_cited=1\n")
    code, text = run("verify", str(p))
    assert code == 1
    assert "genus-gap            fail" in text


def test_matrix_analyze():
    code, text = run("matrix-analyze", str(FIXTURES / "pretzel_matrices.txt"), "--json")
    assert code == 0
    recs = records(text)
    assert [r["det"] for r in recs] == [0, 0, 0]
    assert [r["rank"] for r in recs] == [2, 2, 1]
    assert all(r["breadth_vs_size"] == "less" for r in recs)


def test_matrix_analyze_rejects_non_square(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("ok: [[1,0],[0,1]]\nbad: [[1,2,3],[4,5,6]]\n")
    code, text = run("matrix-analyze", str(p), "--json")
    assert code == 1
    assert [r["kind"] for r in records(text)] == ["matrix-report", "error"]


@pytest.mark.parametrize("command", ["parse", "decompose", "matrix", "oracle"])
def test_other_commands(command):
    code, text = run(command, str(FIXTURES / "basic.pd"), "--json")
    assert code == 0
    assert len(records(text)) == 3


def test_oracle_reports_links_as_errors():
    code, text = run("oracle", str(FIXTURES / "links.pd"), "--json")
    assert code == 1
    assert {r["kind"] for r in records(text)} == {"error"}


def test_selftest_deterministic():
    a = run("selftest", "--seed", "42", "--trials", "50", "--json")
    b = run("selftest", "--seed", "42", "--trials", "50", "--json")
    assert a == b and a[0] == 0
    header = records(a[1])[0]
    assert header["seed"] == 42 and header["kind"] == "header"


def test_selftest_rejects_zero_trials(capsys):
    with pytest.raises(SystemExit) as info:
        main(["selftest", "--trials", "0"])
    assert info.value.code == 2
    assert "at least 1" in capsys.readouterr().err


def test_missing_file():
    assert run("invariants", "/nonexistent/file.pd")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "knotgenus", "invariants", str(FIXTURES / "basic.pd")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].startswith("name")
    assert "figure_eight" in proc.stdout
