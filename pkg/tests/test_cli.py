import io
import json
import subprocess
import sys

from conftest import biased_points
import hexdrop.cli as cli
from hexdrop.cli import cli_main
from hexdrop.config import example_config_text


def run(*argv):
    out = io.StringIO()
    code = cli_main(list(argv), out=out)
    return code, out.getvalue()


def test_centers_two_rings():
    code, text = run("centers", "--rings", "2", "--L0", "1")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 19
    assert lines[0] == "0 0 0 0"
    m, n, x, y = lines[1].split()
    assert abs(float(x) ** 2 + float(y) ** 2 - 3.0) < 1e-7


def test_validate_passes():
    code, text = run("validate", "--shape", "hexagon", "--n", "96000", "--seed", "42", "--depth", "2")
    assert code == 0
    assert text.count("PASS") == 5


def test_validate_json():
    code, text = run("validate", "--shape", "triangle", "--n", "5000", "--seed", "1", "--json")
    assert code == 0
    reports = json.loads(text)
    assert {r["pass"] for r in reports} == {True}


def test_validate_failure_exits_one(monkeypatch):
    monkeypatch.setattr(cli, "sample_points", biased_points)
    code, text = run("validate", "--shape", "hexagon", "--n", "20000", "--seed", "1")
    assert code == 1
    assert "FAIL" in text


def test_validate_too_few_points_is_usage_error():
    code, _ = run("validate", "--shape", "hexagon", "--n", "50", "--seed", "1")
    assert code == 2


def test_usage_errors():
    assert run()[0] == 2
    assert run("gen")[0] == 2
    assert run("validate", "--shape", "circle", "--n", "10", "--seed", "1")[0] == 2
    assert run("validate", "--shape", "hexagon", "--n", "1000", "--seed", "-3")[0] == 2
    assert run("centers", "--rings", "-1", "--L0", "1")[0] == 2


def test_gen_parity_error(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("lattice L0=1\ncell m=2 n=1 sectors=1 nodes=3\n")
    code, _ = run("gen", "--config", str(cfg), "--seed", "1", "--out", str(tmp_path / "o.csv"))
    assert code == 2
    assert "ParityError" in capsys.readouterr().err


def test_gen_missing_config(tmp_path):
    code, _ = run("gen", "--config", str(tmp_path / "nope.cfg"), "--seed", "1", "--out", str(tmp_path / "o.csv"))
    assert code == 2


def test_gen_json_and_svg(tmp_path):
    cfg = tmp_path / "net.cfg"
    cfg.write_text(example_config_text())
    out, svg = tmp_path / "pts.json", tmp_path / "net.svg"
    code, _ = run("gen", "--config", str(cfg), "--seed", "0x2a", "--out", str(out), "--format", "json", "--svg", str(svg))
    assert code == 0
    assert len(json.loads(out.read_text())) == 3920
    assert svg.read_text().count("<circle") == 3920


def test_gen_stdout(tmp_path):
    cfg = tmp_path / "one.cfg"
    cfg.write_text("lattice L0=1\ncell m=0 n=0 sectors=1 nodes=4\n")
    code, text = run("gen", "--config", str(cfg), "--seed", "5", "--out", "-")
    assert code == 0
    assert len(text.splitlines()) == 5


def test_example_command():
    code, text = run("example")
    assert code == 0 and text == example_config_text()


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "hexdrop", "centers", "--rings", "1", "--L0", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 7
