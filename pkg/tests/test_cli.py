import json
import math

import pytest

from sbmpot import cli

GOLD_U1 = 0.5641895835477563       # 1/sqrt(pi)
GOLD_G3 = 0.05066059182116889      # 1/(2 pi^2)


def _rows(text):
    lines = text.strip().splitlines()
    keys = lines[0].split(",")
    return [dict(zip(keys, line.split(","))) for line in lines[1:]]


def _run(capsys, argv):
    rc = cli.main(argv)
    return rc, capsys.readouterr().out


def test_phi_table_stable(capsys):
    rc, out = _run(capsys, ["phi", "--kind", "stable", "--alpha", "1",
                            "--lmin", "1", "--lmax", "100", "--points", "3"])
    assert rc == 0
    rows = _rows(out)
    assert [r["lambda"] for r in rows] == ["1", "10", "100"]
    phis = [float(r["phi"]) for r in rows]
    assert phis == pytest.approx([1.0, math.sqrt(10.0), 10.0], rel=1e-15)
    for r in rows:
        assert float(r["psi"]) == pytest.approx(float(r["lambda"]) / float(r["phi"]), rel=1e-15)
        assert float(r["ell"]) == pytest.approx(1.0, rel=1e-14)


def test_phi_json_entry_flag(capsys):
    rc, out = _run(capsys, ["phi", "--phi", '{"kind": "stable", "alpha": 1.0}',
                            "--lambda", "4", "--format", "json"])
    assert rc == 0
    rec = json.loads(out)[0]
    assert rec["phi"] == pytest.approx(2.0, rel=1e-15)


def test_density_single_point(capsys):
    rc, out = _run(capsys, ["density", "--kind", "stable", "--alpha", "1", "--t", "1"])
    assert rc == 0
    row = _rows(out)[0]
    assert float(row["u"]) == pytest.approx(GOLD_U1, rel=1e-8)
    assert float(row["tail"]) > 0.0 and float(row["mu"]) > 0.0


def test_kernel_single_radius(capsys):
    rc, out = _run(capsys, ["kernel", "--kind", "stable", "--alpha", "1",
                            "--dim", "3", "--r", "1"])
    assert rc == 0
    row = _rows(out)[0]
    assert float(row["G"]) == pytest.approx(GOLD_G3, rel=1e-6)
    assert float(row["J"]) == pytest.approx(1.0 / math.pi**2, rel=1e-6)


def test_ladder_chi_value(capsys):
    rc, out = _run(capsys, ["ladder", "chi", "--kind", "stable", "--alpha", "1",
                            "--lambda", "4"])
    assert rc == 0
    row = _rows(out)[0]
    assert float(row["chi"]) == pytest.approx(2.0, rel=1e-8)
    assert float(row["ratio"]) == pytest.approx(1.0, rel=1e-8)


def test_ladder_halfline_value(capsys):
    rc, out = _run(capsys, ["ladder", "halfline", "--kind", "stable", "--alpha", "1",
                            "--x", "1", "--y", "2"])
    assert rc == 0
    row = _rows(out)[0]
    expect = (2.0 / math.pi) * math.log(1.0 + math.sqrt(2.0))
    assert float(row["G_halfline"]) == pytest.approx(expect, abs=1e-4)


def test_ladder_halfline_requires_coords(capsys):
    rc, _ = _run(capsys, ["ladder", "halfline", "--kind", "stable", "--alpha", "1"])
    assert rc == 2


def test_csv_values_round_trip(capsys):
    rc, out = _run(capsys, ["phi", "--kind", "stable", "--alpha", "0.5",
                            "--lambda", "2"])
    assert rc == 0
    row = _rows(out)[0]
    assert float(row["phi"]) == 2.0**0.25


def test_check_sandwich_passes(capsys):
    rc, out = _run(capsys, ["check", "sandwich", "--kind", "sum", "--alpha", "1"])
    assert rc == 0
    assert _rows(out)[0]["pass"] == "true"


def test_check_zahle_passes(capsys):
    rc, out = _run(capsys, ["check", "zahle", "--kind", "stable", "--alpha", "0.5"])
    assert rc == 0
    assert _rows(out)[0]["pass"] == "true"


def test_check_doubling_passes(capsys):
    rc, out = _run(capsys, ["check", "doubling", "--kind", "stable", "--alpha", "1",
                            "--dim", "1"])
    assert rc == 0


def test_check_asym_passes(capsys):
    rc, out = _run(capsys, ["check", "asym", "--kind", "sum", "--alpha", "1",
                            "--dim", "3"])
    assert rc == 0
    rows = _rows(out)
    assert {r["quantity"] for r in rows} == {"u", "mu", "G", "j"}
    assert all(float(r["spread"]) < 1e3 for r in rows)


def test_failed_check_returns_one_with_report(capsys):
    # deliberately underpowered run: the stability gate must reject it
    rc, out = _run(capsys, ["check", "bhp", "--kind", "stable", "--alpha", "1",
                            "--r", "0.05", "--paths", "12", "--seed", "3",
                            "--format", "json"])
    rows = json.loads(out)
    assert rows[0]["check"] == "bhp"
    if rows[0]["pass"]:
        pytest.skip("underpowered run passed by luck; exit-code path covered elsewhere")
    assert rc == 1


def test_simulate_exit_summary(capsys):
    rc, out = _run(capsys, ["simulate", "exit", "--kind", "stable", "--alpha", "1",
                            "--paths", "400", "--seed", "9", "--format", "json"])
    assert rc == 0
    rec = json.loads(out)[0]
    assert rec["n"] + rec["censored"] == 400
    assert rec["mean"] == pytest.approx(1.0, abs=6.0 * rec["std_error"] + 0.05)


def test_simulate_csv_deterministic(capsys):
    argv = ["simulate", "exit", "--kind", "stable", "--alpha", "1",
            "--paths", "200", "--seed", "4"]
    rc1, out1 = _run(capsys, argv)
    rc2, out2 = _run(capsys, argv)
    assert rc1 == rc2 == 0
    assert out1 == out2
    header = out1.splitlines()[0]
    assert header == "path,tau,x1,exited_by_jump"


def test_thread_count_does_not_change_output(capsys):
    base = ["simulate", "exit", "--kind", "stable", "--alpha", "1",
            "--paths", "300", "--seed", "4", "--threads"]
    _, out1 = _run(capsys, base + ["1"])
    _, out4 = _run(capsys, base + ["4"])
    assert out1 == out4


def test_output_manifest_and_replay(tmp_path, capsys):
    art = tmp_path / "exit.csv"
    argv = ["simulate", "exit", "--kind", "stable", "--alpha", "1",
            "--paths", "150", "--seed", "5", "--output", str(art)]
    assert cli.main(argv) == 0
    manifest_path = tmp_path / "exit.csv.manifest.json"
    manifest = json.loads(manifest_path.read_text())
    assert manifest["command"] == "simulate"
    assert manifest["flags"] == argv
    assert manifest["seed"] == 5
    assert set(manifest) == {"command", "flags", "seed", "artifact_version", "timestamp"}
    first = art.read_bytes()
    art.unlink()
    assert cli.main(["--from-manifest", str(manifest_path)]) == 0
    assert art.read_bytes() == first


def test_from_manifest_missing_file(capsys):
    assert cli.main(["--from-manifest", "/nonexistent/m.json"]) == 2


def test_malformed_phi_json_is_usage_error(capsys):
    rc, _ = _run(capsys, ["phi", "--phi", "{not json", "--lambda", "1"])
    assert rc == 2


def test_unknown_kind_in_phi_json(capsys):
    rc, _ = _run(capsys, ["phi", "--phi", '{"kind": "mystery", "alpha": 1.0}',
                          "--lambda", "1"])
    assert rc == 2


def test_zero_paths_is_usage_error(capsys):
    rc, _ = _run(capsys, ["simulate", "exit", "--kind", "stable", "--alpha", "1",
                          "--paths", "0"])
    assert rc == 2


def test_unknown_flag_is_usage_error(capsys):
    rc = cli.main(["phi", "--kind", "stable", "--alpha", "1", "--frobnicate"])
    assert rc == 2


def test_recurrent_kernel_is_usage_error(capsys):
    rc, _ = _run(capsys, ["kernel", "--kind", "stable", "--alpha", "1.5",
                          "--dim", "1", "--r", "1"])
    assert rc == 2


def test_missing_alpha_is_usage_error(capsys):
    rc, _ = _run(capsys, ["phi", "--kind", "stable", "--lambda", "1"])
    assert rc == 2


def test_version_flag(capsys):
    assert cli.main(["--version"]) == 0
