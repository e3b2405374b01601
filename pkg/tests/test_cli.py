"""End-to-end runs of the command line through a subprocess.

Everything here shells out, so these tests double as packaging checks: they
fail if the console entry point or the module layout breaks.
"""

import json
import math
import subprocess
import sys

from numpy.testing import assert_allclose

from cvsteer import __version__

TMST = '{"kind":"tmst","muA":0.4,"muB":0.4,"r":1.2}'
A3 = '{"kind":"canonical","a":0.9,"b":0.9,"c1":0.55,"c2":-0.7}'
FLAT_THERMAL = '{"kind":"cm","matrix":[0.3,0,0,0,0,0.3,0,0,0,0,0.3,0,0,0,0,0.3]}'


def run_cli(*args, expect=0):
    proc = subprocess.run(
        [sys.executable, "-m", "cvsteer.cli", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == expect, (proc.returncode, proc.stderr)
    return proc


def test_check_json_values_and_determinism():
    first = run_cli("check", "--state", TMST, "--format", "json").stdout
    second = run_cli("check", "--state", TMST, "--format", "json").stdout
    assert first == second
    assert first == json.dumps(json.loads(first), indent=2) + "\n"
    d = json.loads(first)
    assert d["version"] == __version__
    assert d["direction"] == "B_steers_A"
    assert_allclose(d["sigma_steer"], 2.222778866786203, rtol=1e-12)
    assert_allclose(d["canonical"]["a"], 6.946183958706884, rtol=1e-12)
    assert d["wns"] is True and d["sns"] is True and d["epr"] is True
    assert set(d["invariants"]) == {"I1", "I2", "I3", "I4"}


def test_check_csv_layout():
    lines = run_cli("check", "--state", A3).stdout.splitlines()
    assert lines[0] == f"# cvsteer {__version__}"
    assert lines[1] == "field,value"
    rows = dict(line.split(",", 1) for line in lines[2:])
    assert rows["direction"] == "B_steers_A"
    assert rows["canonical.a"] == "0.9"
    assert rows["canonical.c1"] == "0.7"
    assert rows["sigma_steer"] == ""
    assert rows["wns"] == "true"
    assert rows["sns"] == "false"
    assert rows["epr"] == "true"
    assert "np.float64" not in "".join(lines)


def test_check_direction_flag():
    d = json.loads(run_cli("check", "--state", A3, "--dir", "AB", "--format", "json").stdout)
    assert d["direction"] == "A_steers_B"


def test_check_exit_codes():
    proc = run_cli("check", "--state", FLAT_THERMAL, expect=2)
    assert "not a physical state" in proc.stderr
    run_cli("check", "--state", "not json", expect=1)
    run_cli("check", "--state", '{"kind":"wat"}', expect=1)
    run_cli("check", "--state", "[1,2]", expect=1)
    run_cli("check", expect=1)
    run_cli("check", "--state", TMST, "--state-file", "x.json", expect=1)


def test_check_state_file(tmp_path):
    p = tmp_path / "state.json"
    p.write_text(TMST)
    inline = run_cli("check", "--state", TMST, "--format", "json").stdout
    from_file = run_cli("check", "--state-file", str(p), "--format", "json").stdout
    assert inline == from_file


def test_out_flag_writes_identical_bytes(tmp_path):
    p = tmp_path / "report.csv"
    streamed = run_cli("check", "--state", A3).stdout
    run_cli("check", "--state", A3, "--out", str(p))
    assert p.read_text() == streamed


def test_triangoloid_csv_head_and_rows():
    lines = run_cli(
        "triangoloid", "--state", '{"kind":"twb","r":1.2}', "--grid-n", "5"
    ).stdout.splitlines()
    assert lines[0] == f"# cvsteer {__version__}"
    assert lines[1] == "# overlap true"
    assert lines[2] == "# max_depth 0.41002253845918135"
    assert lines[3] == "mu,mu_s,t,mu_c,mu_sc,lambda_minus,depth,tag"
    body = lines[4:]
    assert all(len(row.split(",")) == 8 for row in body)
    assert [row.rsplit(",", 1)[1] for row in body[-3:]] == [
        "vertex_red",
        "vertex_green",
        "vertex_blue",
    ]
    assert "np.float64" not in "".join(lines)


def test_triangoloid_plot_and_out(tmp_path):
    csv_path = tmp_path / "tri.csv"
    png_path = tmp_path / "tri.png"
    run_cli(
        "triangoloid",
        "--state",
        TMST,
        "--grid-n",
        "4",
        "--out",
        str(csv_path),
        "--plot",
        str(png_path),
    )
    assert csv_path.read_text().startswith(f"# cvsteer {__version__}\n")
    assert png_path.read_bytes()[:4] == b"\x89PNG"


def test_triangoloid_rejects_states_without_purity_form():
    proc = run_cli("triangoloid", "--state", '{"kind":"gqd_seq","n":3}', expect=1)
    assert "tmst" in proc.stderr


def test_noisy_csv_lifetime_comments():
    out = run_cli(
        "noisy", "--Ns", "1.0", "--Gamma", "0.1", "--Nth", "0.2", "--n-times", "3"
    ).stdout
    lines = out.splitlines()
    assert lines[0] == f"# cvsteer {__version__}"
    assert lines[1] == "# t_ns 9.808292530117262"
    assert lines[2] == "# t_ent 17.91759469228055"
    assert lines[3] == "t,muA,muB,r,sigma_steer,negativity,overlap"
    assert len(lines) == 4 + 3
    first = lines[4].split(",")
    assert float(first[0]) == 0.0
    assert float(first[1]) == 1.0 and float(first[2]) == 1.0
    assert_allclose(float(first[3]), math.asinh(1.0), rtol=1e-12)
    assert first[6] == "true"
    assert lines[-1].split(",")[6] == "false"


def test_noisy_never_and_empty_grid():
    out = run_cli(
        "noisy", "--Ns", "1.0", "--Gamma", "0.1", "--Nth", "0", "--n-times", "0"
    ).stdout
    assert out.splitlines() == [
        f"# cvsteer {__version__}",
        "# t_ns never",
        "# t_ent never",
        "t,muA,muB,r,sigma_steer,negativity,overlap",
    ]


def test_noisy_json_payload():
    d = json.loads(
        run_cli(
            "noisy",
            "--Ns",
            "1.0",
            "--Gamma",
            "0.1",
            "--Nth",
            "0.2",
            "--n-times",
            "4",
            "--format",
            "json",
        ).stdout
    )
    assert set(d) == {
        "version", "Ns", "Gamma", "Nth", "t_ns", "t_ent", "columns", "points",
    }
    assert d["columns"] == ["t", "muA", "muB", "r", "sigma_steer", "negativity", "overlap"]
    assert_allclose(d["t_ns"], 9.808292530117262, rtol=1e-12)
    assert_allclose(d["t_ent"], 17.91759469228055, rtol=1e-12)
    assert len(d["points"]) == 4
    assert all(len(row) == 7 for row in d["points"])
    assert isinstance(d["points"][0][6], bool)


def test_noisy_json_infinite_lifetimes_are_null():
    d = json.loads(
        run_cli(
            "noisy", "--Ns", "1.0", "--Gamma", "0.1", "--Nth", "0",
            "--n-times", "2", "--format", "json",
        ).stdout
    )
    assert d["t_ns"] is None and d["t_ent"] is None


def test_noisy_rejects_bad_channel():
    run_cli("noisy", "--Ns", "1.0", "--Gamma", "-0.1", "--Nth", "0.2", expect=1)


def test_noisy_plot(tmp_path):
    png_path = tmp_path / "noisy.png"
    run_cli(
        "noisy", "--Ns", "1.0", "--Gamma", "0.1", "--Nth", "0.2",
        "--n-times", "5", "--plot", str(png_path),
    )
    assert png_path.read_bytes()[:4] == b"\x89PNG"


def test_appendix_text():
    out = run_cli("appendix").stdout.splitlines()
    assert len(out) == 5
    assert all(line.startswith("PASS ") for line in out)
    names = [line.split()[1].rstrip(":") for line in out]
    assert names == [
        "separable_wns",
        "separable_by_sign",
        "swns_state",
        "discord_sequence",
        "epr_without_sns",
    ]


def test_appendix_json():
    results = json.loads(run_cli("appendix", "--format", "json").stdout)
    assert len(results) == 5
    for r in results:
        assert set(r) == {"name", "passed", "details"}
        assert r["passed"] is True


def test_sweep_json_small_grid():
    d = json.loads(
        run_cli(
            "sweep", "--state", TMST, "--n-mu", "4", "--n-mus", "8",
            "--n-phi", "4", "--format", "json",
        ).stdout
    )
    assert set(d) == {
        "version", "best_depth", "best_mu", "best_mu_s", "best_phi",
        "closed_form_depth", "within_tol", "exceeds_closed_form",
        "grid", "floors", "tol",
    }
    assert d["grid"] == [4, 8, 4]
    assert d["floors"] == [0.001, 0.001]
    assert d["best_depth"] <= d["closed_form_depth"] + 1e-9
    assert d["within_tol"] is True
    assert d["exceeds_closed_form"] is False
    assert_allclose(d["closed_form_depth"], 0.2750563461479514, rtol=1e-12)


def test_version_and_unknown_command():
    assert run_cli("--version").stdout.strip() == f"cvsteer {__version__}"
    run_cli("wat", expect=1)
