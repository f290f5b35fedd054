import io
import json
import subprocess
import sys

import pytest

from ncsphere.cli import run


def _run(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


def test_normalize_example():
    assert _run(["normalize", "b a"]) == (0, "q' a b\n")


def test_normalize_json():
    code, out = _run(["normalize", "b b'", "--json"])
    assert code == 0
    assert json.loads(out)["normal_form"] == "1 - a a'"


def test_verify_galois_exit_zero():
    code, out = _run(["verify-galois", "--max-degree", "4"])
    assert code == 0
    assert out.count("PASS") == 3


def test_chern_json():
    code, out = _run(["chern", "--charge", "1", "--grid", "400", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["check"] == "chern"
    assert abs(abs(data["c1"]) - 1) < 1e-6


def test_json_output_is_deterministic():
    argv = ["verify-connection", "--max-degree", "3", "--samples", "30", "--json"]
    assert _run(argv) == _run(argv)


@pytest.mark.parametrize(
    "argv",
    [["normalize", "a +"], ["normalize", "a^9999999999"], ["chern", "--lambda", "2"],
     ["verify-galois", "--lambda", "1+"], ["chern", "--grid", "0"], ["nonsense"], []],
)
def test_usage_errors_exit_two(argv):
    assert _run(argv)[0] == 2


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# test\nmax-degree = 2\nlambda = i\nsamples = 5\n")
    code, out = _run(["verify-connection", "--config", str(cfg), "--json"])
    assert code == 0
    assert json.loads(out)["params"]["N"] == 2
    code, out = _run(["verify-connection", "--config", str(cfg), "--max-degree", "3", "--json"])
    assert json.loads(out)["params"]["N"] == 3


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = red\n")
    assert _run(["chern", "--config", str(cfg)])[0] == 2
    assert _run(["chern", "--config", str(tmp_path / "missing.cfg")])[0] == 2


def test_projector_show():
    code, out = _run(["projector", "--charge", "1", "--show"])
    assert code == 0
    assert "[ z | x- ]" in out


def test_failing_check_exits_one():
    # grid 8 is too coarse to land within tolerance of an integer
    code, out = _run(["chern", "--charge", "3", "--grid", "8"])
    assert code == 1
    assert "FAIL" in out


def test_heegaard_check():
    assert _run(["heegaard-check", "--samples", "20"])[0] == 0


def test_all_suites():
    code, out = _run(["all", "--max-degree", "3", "--grid", "100", "--samples", "30", "--json"])
    assert code == 0
    checks = [json.loads(line)["check"] for line in out.splitlines()]
    assert checks[0] == "rewriting" and "heegaard" in checks


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncsphere", "normalize", "a' a"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "a a'"
