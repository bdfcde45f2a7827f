import subprocess
import sys

import pytest

from mtlkit import catalog
from mtlkit.algebra import goedel, lukasiewicz
from mtlkit.cli import main
from mtlkit.enumeration import census


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_taut(capsys):
    assert run(capsys, "taut", "-a", "G3", "x -> x") == (0, "holds\n", "")
    code, out, _ = run(capsys, "taut", "-a", "L3", "~(x /\\ ~x)")
    assert code == 1 and out == "fails: countermodel {x=1}\n"


def test_conseq_and_ldt(capsys):
    code, out, _ = run(capsys, "conseq", "-a", "L3", "-p", "x /\\ ~x", "y \\/ ~y")
    assert code == 0 and out == "holds\n"
    code, out, _ = run(capsys, "ldt", "-a", "L4", "--psi", "x", "x^3")
    assert code == 0 and "minimal n: 3" in out
    code, out, _ = run(capsys, "ldt", "-a", "G3", "--psi", "x", "y")
    assert code == 1 and "minimal n: none" in out


def test_interp(capsys):
    code, out, _ = run(capsys, "interp", "-a", "G3", "--phi", "x /\\ y", "--psi", "x \\/ z",
                       "--depth", "1")
    assert (code, out) == (0, "x\n")
    code, out, err = run(capsys, "interp", "-a", "G3", "--phi", "x", "--psi", "y")
    assert code == 2 and "premise" in err


def test_filters_and_si(capsys):
    assert run(capsys, "filters", "G3")[1] == "[2]\n[1, 2]\n[0, 1, 2]\n"
    code, out, _ = run(capsys, "si", "L4")
    assert code == 0 and "monolith: [0, 1, 2, 3]" in out and "simple: yes" in out


def test_constructions_emit_algebra_files(capsys, tmp_path):
    code, out, _ = run(capsys, "product", "B2", "B2")
    assert code == 0 and out.startswith("mtl-algebra v1\nname: B2xB2\n")
    path = tmp_path / "b22.alg"
    path.write_text(out)
    code, out, _ = run(capsys, "si", str(path))
    assert code == 1 and "monolith: none" in out
    code, out, _ = run(capsys, "osum", "L3", "B2")
    assert catalog.loads(out).mult[2, 2] == 2
    code, out, _ = run(capsys, "subalg", "L5", "2")
    assert catalog.loads(out).same_tables(lukasiewicz(3)) and "# inclusion: 0 2 4" in out
    code, out, _ = run(capsys, "quotient", "G4", "2")
    assert catalog.loads(out).same_tables(goedel(3))
    code, out, _ = run(capsys, "--out", str(tmp_path), "osum", "L3", "B2")
    assert (tmp_path / "L3+B2.alg").is_file()


def test_check(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "L3", "G4")
    assert code == 0 and out.count("MTL\tyes") == 2
    bad = tmp_path / "bad.alg"
    bad.write_text("mtl-algebra v1\nsize: 4\nkind: chain\nmult:\n"
                   "0 0 0 0\n0 0 1 1\n0 1 1 2\n0 1 2 3\n")
    code, out, _ = run(capsys, "check", str(bad))
    assert code == 1 and "associative\tFAILS witness=" in out


def test_embed_family(capsys, tmp_path):
    assert run(capsys, "embed", "-a", "L3", "-b", "L5")[:2] == (0, "[0, 2, 4]\n")
    assert run(capsys, "embed", "-a", "G3", "-b", "L3")[:2] == (1, "no embedding\n")
    code, out, _ = run(capsys, "jointembed", "-a", "L3", "-b", "L4", "--targets", "L7")
    assert code == 0 and "L3: [0, 3, 6]" in out
    catalog.write_census(census(4), tmp_path)
    code, out, _ = run(capsys, "jointembed", "-a", "L3", "-b", "G3",
                       "--targets", str(tmp_path / "*.alg"))
    assert code == 0 and "target: chain_4_0003" in out
    span = tmp_path / "v.span"
    span.write_text(catalog.dumps_span({"A": "B2", "B": "L3", "C": "G3"}, [0, 2], [0, 2]))
    code, out, _ = run(capsys, "amalgam", "--span", str(span), "--enum-upto", "4")
    assert code == 0 and "h: [0, 1, 3]" in out
    code, out, _ = run(capsys, "amalgam", "--span", str(span), "--targets", "L5")
    assert code == 1
    assert run(capsys, "jointembed", "-a", "L3", "-b", "G3")[0] == 2


def test_enum(capsys, tmp_path):
    code, out, _ = run(capsys, "enum", "-n", "4", "--oracle")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# generator 6, oracle 6" and len(lines) == 8
    code, out, _ = run(capsys, "enum", "-n", "4", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "census_4.tsv").is_file() and (tmp_path / "census_4.png").is_file()
    code, out, _ = run(capsys, "list", str(tmp_path))
    assert len(out.splitlines()) == 6
    assert run(capsys, "enum", "-n", "9")[0] == 2


def test_relations(capsys, tmp_path):
    code, out, _ = run(capsys, "relations", "CJEP", "SSCC")
    assert code == 0 and out.splitlines()[0] == "CJEP SSCC: equivalent"
    assert run(capsys, "relations", "HC", "DMVP")[1].startswith("HC DMVP: open")
    code, out, _ = run(capsys, "relations", "--check-consistency", "--figure",
                       str(tmp_path / "g.png"))
    assert code == 0 and "consistency: ok" in out and (tmp_path / "g.png").is_file()
    code, out, _ = run(capsys, "relations")
    assert len(out.splitlines()) == 25
    code, _, err = run(capsys, "relations", "SCC", "NOPE")
    assert code == 2 and "unknown property 'NOPE'" in err


def test_scenario_command(capsys, tmp_path):
    code, out, _ = run(capsys, "scenario", "dp_failure")
    assert code == 0 and out.endswith("verdict: PASS\n")
    assert run(capsys, "scenario", "bogus")[0] == 2
    assert run(capsys, "scenario")[0] == 2
    assert len(run(capsys, "scenario", "--list")[1].splitlines()) == 8
    code, out, _ = run(capsys, "--out", str(tmp_path), "scenario", "osum_si")
    assert (tmp_path / "scenarios.tsv").read_text().splitlines()[1].startswith("osum_si\tPASS")
    assert (tmp_path / "scenarios.png").is_file()


def test_budget_flag(capsys):
    code, _, err = run(capsys, "--budget", "10", "taut", "-a", "L5", "x -> y -> z")
    assert code == 2 and "budget" in err
    assert run(capsys, "taut", "--budget", "200", "-a", "L5", "x -> y -> z")[0] == 1


def test_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, "taut", "-a", "L3", "x ->")
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["taut"])
    assert exc.value.code == 2


def test_stdout_is_deterministic():
    cmd = [sys.executable, "-m", "mtlkit.cli", "conseq", "-a", "NM5", "-p", "x", "x & y"]
    outs = {subprocess.run(cmd, capture_output=True, text=True).stdout for _ in range(2)}
    assert len(outs) == 1 and outs.pop().startswith("fails: countermodel")
