"""Command-line surface and the verify-all report machinery."""

import copy
import json

import pytest

from pathpower import SignedMatrix, VertexSet, read_matrix_market
from pathpower.cli import main
from pathpower.report import export_table, run_verify_all, subseed


def run_cli(*argv):
    return main(list(argv))


def test_construct_writes_set_json(tmp_path):
    out = tmp_path / "sets.json"
    assert run_cli("construct", "--kind", "vk", "--m", "3", "--k", "2", "--out", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["m"] == 3 and doc["k"] == 2
    assert doc["ranks"] == sorted(doc["ranks"])
    assert len(doc["ranks"]) == 5
    assert VertexSet.from_dict(doc).ranks() == doc["ranks"]


def test_construct_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run_cli("construct", "--kind", "xk", "--m", "4", "--k", "2")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run_cli("construct", "--kind", "zz", "--m", "3", "--k", "2")
    assert exc.value.code == 2


def test_matrix_roundtrip(tmp_path):
    out = tmp_path / "a.mtx"
    assert run_cli("matrix", "--parity", "even", "--n", "2", "--k", "2", "--out", str(out)) == 0
    back = read_matrix_market(str(out))
    assert back.dim == 16
    assert len(back.entries) == 48


def test_matrix_parity_flag_validation():
    with pytest.raises(SystemExit) as exc:
        run_cli("matrix", "--parity", "odd3", "--n", "1", "--k", "2")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run_cli("matrix", "--parity", "even", "--k", "2")
    assert exc.value.code == 2


def test_unknown_flag_and_command_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli("beta", "--n", "2", "--frobnicate")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run_cli("no-such-command")
    assert exc.value.code == 2
    capsys.readouterr()


def test_beta_command(tmp_path, capsys):
    assert run_cli("beta", "--n", "2") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 2
    assert abs(doc["beta"] - 0.3819660112501051) < 1e-9


def test_spectrum_dense_and_composed(capsys):
    assert run_cli("spectrum", "--parity", "odd3", "--k", "2", "--compose", "--dense") == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["eigenvalues"]) == 9
    assert doc["zero_multiplicity"] == 1
    assert doc["min_positive"] == pytest.approx(2**0.5, abs=1e-8)
    assert doc["multiset_distance"] < 1e-7


def test_spectrum_compose_only(capsys):
    assert run_cli("spectrum", "--parity", "even", "--n", "1", "--k", "3", "--compose") == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["eigenvalues"]) == 8
    assert doc["zero_multiplicity"] == 0
    assert doc["min_positive"] == pytest.approx(3**0.5, abs=1e-8)
    assert "multiset_distance" not in doc


def test_matrix_to_stdout(capsys):
    assert run_cli("matrix", "--parity", "odd3", "--k", "1") == 0
    out = capsys.readouterr().out
    assert out.startswith("%%MatrixMarket matrix coordinate integer symmetric")
    assert out.splitlines()[1] == "3 3 2"


def test_alpha_command_brute_match(capsys):
    assert run_cli("alpha", "--m", "3", "--k", "2", "--brute") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["alpha"] == 5 and doc["brute"] == 5 and doc["match"] is True


def test_f_command_theory_and_brute(capsys):
    assert run_cli("f", "--m", "3", "--k", "4") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["value"] == 2 and doc["kind"] == "exact"

    assert run_cli("f", "--m", "4", "--k", "1", "--brute") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["value"] == 1 and doc["kind"] == "exact"
    assert doc["witness"] == [0, 1, 3]
    assert doc["subsets_examined"] > 0
    assert doc["theory"] == {"kind": "lower", "value": 1}


def test_export_table_bounds_and_beta(capsys, tmp_path):
    assert run_cli("export-table", "--kind", "bounds", "--m-min", "2", "--m-max", "5", "--k-max", "3") == 0
    rows = json.loads(capsys.readouterr().out)
    odd3 = [r for r in rows if r["m"] == 3]
    assert all(r["kind"] == "exact" and r["value"] == 2 for r in odd3)
    odd5 = [r for r in rows if r["m"] == 5]
    assert all(r["kind"] == "exact" and r["value"] == 1 for r in odd5)

    out = tmp_path / "beta.csv"
    assert run_cli("export-table", "--kind", "beta", "--n-max", "6", "--format", "csv", "--out", str(out)) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,beta"
    assert len(lines) == 7
    first = float(lines[1].split(",")[1])
    assert first == 1.0


def test_export_table_alpha_skips_beyond_cap(capsys):
    assert run_cli(
        "export-table", "--kind", "alpha", "--m-max", "4", "--k-max", "9", "--size-cap", "100"
    ) == 0
    rows = json.loads(capsys.readouterr().out)
    assert any(r.get("skipped") for r in rows)
    assert {"m": 3, "k": 2, "alpha": 5} in rows


def test_verify_all_cli_quick(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    assert run_cli(
        "verify-all", "--max-size", "9", "--chain-trials", "25", "--out", str(report_path)
    ) == 0
    out = capsys.readouterr().out
    assert "PASS overall" in out
    assert "FAIL" not in out
    doc = json.loads(report_path.read_text())
    assert doc["passed"] is True
    assert len(doc["checks"]) == 9
    assert all(c["passed"] for c in doc["checks"])
    assert doc["config"]["max_size"] == 9


def test_report_determinism():
    r1 = run_verify_all(max_size=9, chain_trials=10).to_dict()
    r2 = run_verify_all(max_size=9, chain_trials=10).to_dict()

    def strip(doc):
        doc = copy.deepcopy(doc)
        doc.pop("seconds", None)
        for c in doc["checks"]:
            c.pop("seconds", None)
        return doc

    assert strip(r1) == strip(r2)
    r3 = run_verify_all(max_size=9, chain_trials=10, seed=1).to_dict()
    assert strip(r3)["config"]["seed"] == 1


def test_report_negative_control():
    def tamper(a: SignedMatrix) -> SignedMatrix:
        key = next(iter(a.entries))
        a.entries.pop(key)
        a.entries.pop((key[1], key[0]))
        return a

    report = run_verify_all(max_size=9, chain_trials=5, tamper=tamper)
    assert not report.passed
    failed = [c.name for c in report.checks if not c.passed]
    assert failed == ["integer-structure"]


def test_subseed_stability():
    assert subseed("x", 1) == subseed("x", 1)
    assert subseed("x", 1) != subseed("y", 1)
    assert subseed("x", 1) != subseed("x", 2)
