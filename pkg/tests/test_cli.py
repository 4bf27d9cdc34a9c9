import json
import subprocess
import sys

CLI = [sys.executable, "-m", "planarham.cli"]


def run(*args, **kw):
    return subprocess.run(CLI + list(args), capture_output=True, text=True, **kw)


def test_verify_petersen_pass_exit0():
    r = run("verify", "hypohamiltonian", "--fixture", "petersen", "--quiet")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["claim"] == "hypohamiltonian" and doc["verdict"] == "pass"
    assert len(doc["witnesses"]) == 10


def test_verify_fail_exit1(tmp_path):
    p = tmp_path / "k4.g6"
    p.write_text("C~\n")
    r = run("verify", "hypohamiltonian", "--in", str(p), "--quiet")
    assert r.returncode == 1
    assert json.loads(r.stdout)["verdict"] == "fail"


def test_progress_lines_on_stderr():
    r = run("verify", "hypohamiltonian", "--fixture", "petersen")
    assert "10/10" in r.stderr
    assert "10/10" not in r.stdout


def test_parse_error_exit3(tmp_path):
    p = tmp_path / "bad.edges"
    p.write_text("3 2\n0 1\n")
    r = run("verify", "hypohamiltonian", "--in", str(p))
    assert r.returncode == 3
    assert "error" in r.stderr


def test_missing_input_exit3():
    r = run("verify", "hypohamiltonian")
    assert r.returncode == 3


def test_unknown_flag_exit3():
    r = run("verify", "hypohamiltonian", "--fixture", "petersen", "--bogus")
    assert r.returncode == 3


def test_both_sources_exit3(tmp_path):
    p = tmp_path / "k4.g6"
    p.write_text("C~\n")
    r = run("verify", "hypohamiltonian", "--fixture", "petersen", "--in", str(p))
    assert r.returncode == 3


def test_hamilton_cycle_exit_codes(tmp_path):
    p = tmp_path / "k4.g6"
    p.write_text("C~\n")
    assert run("hamilton", "cycle", "--in", str(p)).returncode == 0
    assert run("hamilton", "cycle", "--fixture", "petersen").returncode == 1
    assert run("hamilton", "path", "--fixture", "petersen").returncode == 0


def test_grinberg_inconclusive_exit2(tmp_path):
    p = tmp_path / "k4.g6"
    p.write_text("C~\n")
    r = run("grinberg", "--in", str(p))
    assert r.returncode == 2
    assert json.loads(r.stdout)["verdict"] == "inconclusive"


def test_construct_and_convert_roundtrip(tmp_path):
    r = run("construct", "petersen", "--format", "g6")
    assert r.returncode == 0
    g6 = r.stdout.strip()
    src = tmp_path / "p.g6"
    src.write_text(g6 + "\n")
    r2 = run("convert", "--in", str(src), "--format", "edges")
    assert r2.returncode == 0
    assert r2.stdout.splitlines()[0] == "10 15"
    # convert back
    edges = tmp_path / "p.edges"
    edges.write_text(r2.stdout)
    r3 = run("convert", "--in", str(edges), "--format", "g6")
    assert r3.stdout.strip() == g6


def test_out_file_matches_stdout(tmp_path):
    out = tmp_path / "cert.json"
    r = run(
        "verify", "hypohamiltonian", "--fixture", "petersen",
        "--quiet", "--out", str(out),
    )
    assert r.returncode == 0
    assert out.read_text() == r.stdout


def test_avoidance_cli():
    r = run(
        "verify", "avoidance", "--fixture", "petersen",
        "--j", "1", "--kind", "cycle", "--k", "3", "--quiet",
    )
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["claim"] == "avoidance(j=1,kind=cycle,k=3)"
