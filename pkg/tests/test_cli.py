import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from charsum import cli
from charsum.sums import SigmaReport

CONFIGS = Path(__file__).resolve().parent.parent / "demos" / "configs"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_grouplike(capsys):
    code, out, _ = run(capsys, "eval", str(CONFIGS / "grouplike_cyclic.json"))
    doc = json.loads(out)
    assert code == 0
    assert doc["path"] == "P5.nontrivial" and doc["agree"] is True and doc["closed"] == "0"


def test_eval_skew_level(capsys):
    code, out, _ = run(capsys, "eval", str(CONFIGS / "skew_level.json"))
    doc = json.loads(out)
    assert code == 0 and doc["path"] == "T3.case2" and doc["brute"] == doc["closed"]


def test_eval_monomial_override(capsys):
    code, out, _ = run(capsys, "eval", str(CONFIGS / "grouplike_cyclic.json"),
                       "--monomial", "K1^4")
    doc = json.loads(out)
    assert code == 0 and doc["path"] == "P5.trivial" and doc["closed"] == doc["brute"]


def test_eval_without_brute_on_large_group(capsys):
    code, out, _ = run(capsys, "eval", str(CONFIGS / "elementary_char2.json"), "--no-brute")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 256 and doc["brute"] is None and doc["closed"] == "1"


def test_eval_text_format(capsys):
    code, out, _ = run(capsys, "eval", str(CONFIGS / "small_quantum_group.json"),
                       "--format", "text")
    assert code == 0 and "path:" in out and "agree:  True" in out


def test_eval_stdin(capsys, monkeypatch):
    text = (CONFIGS / "skew_product.json").read_text()
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, _ = run(capsys, "eval", "-")
    assert code == 0 and json.loads(out)["agree"] is True


def test_malformed_config_reports_position(capsys):
    code, _, err = run(capsys, "eval", str(CONFIGS / "malformed.json"))
    assert code == 1 and "malformed.json:5:3" in err


def test_semantic_error_has_location(capsys, tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text('{\n  "field": "Q(zeta_4)",\n  "builder": "hn",\n'
                   '  "group": {"generators": [{"g": "0", "h1": 0}]},\n  "monomial": "h1"\n}\n')
    code, _, err = run(capsys, "eval", str(cfg))
    assert code == 1 and "bad.json:" in err and "group.generators[0]" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "eval", "/nonexistent/config.json")
    assert code == 1 and err.startswith("error:")


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify"])
    assert exc.value.code == 1
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 1 and "unknown suite" in err


def test_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CHARSUM_MAX_GROUP", "100")
    code, _, err = run(capsys, "eval", str(CONFIGS / "elementary_char2.json"), "--no-brute")
    assert code == 1 and "error" in err


def test_disagreement_exits_two(capsys, monkeypatch):
    def broken(Pi, mono, brute=True):
        return SigmaReport(Pi.field.one if hasattr(Pi, "field") else 1, 0, "forced", order=len(Pi))
    monkeypatch.setattr(cli, "sigma_auto", broken)
    code, out, _ = run(capsys, "eval", str(CONFIGS / "grouplike_cyclic.json"))
    assert code == 2 and json.loads(out)["consistent"] is False


def test_verify_text_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "phi")
    assert code == 0 and out.startswith("phi: PASS") and "direct=closed" in out
    code, out, _ = run(capsys, "verify", "--suite", "T3", "--seed", "7", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["T3"]["counts"]["closed=brute"] == [200, 0]


def test_verify_constructions(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "Tcounter", "--seed", "3")
    assert code == 0 and "Tcounter: PASS" in out


@pytest.mark.parametrize("argv,order", [
    (["--kind", "lie", "--p", "3", "--n", "4", "--k", "2", "--target", "1"], 9),
    (["--kind", "cyclic", "--m", "4", "--n", "3", "--target", "2 - zeta"], 4),
    (["--kind", "abelian", "--chain", "2,4", "--n", "1", "--target", "5"], 8),
    (["--kind", "lie", "--p", "2", "--n", "2", "--k", "1", "--field", "F_2^2",
      "--target", "zeta"], 2),
])
def test_construct(capsys, argv, order):
    code, out, _ = run(capsys, "construct", *argv)
    doc = json.loads(out)
    assert code == 0 and doc["ok"] is True and doc["order"] == order
    assert doc["achieved"] == doc["target"] == doc["predicted"]
    assert len(doc["characters"]) == order


def test_construct_rejections(capsys):
    code, _, err = run(capsys, "construct", "--kind", "lie", "--p", "2", "--n", "2",
                       "--k", "2", "--target", "0")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "construct", "--kind", "cyclic", "--n", "2", "--target", "1")
    assert code == 1 and "--m" in err


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "charsum", "construct", "--kind", "abelian",
            "--chain", "2,2", "--n", "2", "--target", "1+zeta"]
    env = dict(os.environ, PYTHONHASHSEED="0")
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True,
                            env=dict(env, PYTHONHASHSEED="123"))
    assert first.stdout == second.stdout and first.stdout


def test_module_entry_point_eval():
    proc = subprocess.run([sys.executable, "-m", "charsum", "eval",
                           str(CONFIGS / "smash_char2.json"), "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "agree:  True" in proc.stdout
