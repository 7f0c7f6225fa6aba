import json
import subprocess
import sys

from g31.checks import CHECK_IDS

PY = [sys.executable, "-m", "g31.cli"]


def run(*args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        PY + list(args), capture_output=True, text=True, env=full_env
    )


def test_list_checks_covers_registry():
    r = run("list-checks")
    assert r.returncode == 0
    for cid in CHECK_IDS:
        assert cid in r.stdout


def test_unknown_check_id_is_usage_error():
    r = run("verify", "--check", "bogus-id")
    assert r.returncode == 2
    assert "unknown check id" in r.stderr


def test_verify_single_check_text(tmp_path):
    out = tmp_path / "report.txt"
    r = run("verify", "--check", "scholie-eng", "--out", str(out))
    assert r.returncode == 0
    text = out.read_text()
    assert "PASS" in text and "scholie-eng" in text


def test_verify_json_schema_and_env_overrides(tmp_path):
    out = tmp_path / "report.json"
    r = run(
        "verify",
        "--check",
        "remark-b2c2",
        "--format",
        "json",
        "--out",
        str(out),
        env={"G31_SEED": "5", "G31_TRIALS": "40"},
    )
    assert r.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["seed"] == 5 and doc["trials"] == 40
    (entry,) = doc["checks"]
    assert set(entry) == {"check_id", "paper_ref", "status", "witness", "timing_ms"}
    assert entry["status"] in ("pass", "fail", "inconclusive")


def test_verify_flag_beats_env():
    r = run(
        "verify", "--check", "remark-b2c2", "--seed", "9", "--format", "json",
        env={"G31_SEED": "5"},
    )
    doc = json.loads(r.stdout)
    assert doc["seed"] == 9


def test_emit_tau(tmp_path):
    out = tmp_path / "tau.json"
    r = run("emit", "--what", "tau", "--out", str(out))
    assert r.returncode == 0
    doc = json.loads(out.read_text())
    assert len(doc["entries"]) == 720
    # normalization: (1,2)(3,4)(5,6) in 0-based image form maps to (1,2)
    frm = [1, 0, 3, 2, 5, 4]
    (entry,) = [e for e in doc["entries"] if e["from"] == frm]
    assert entry["to"] == [1, 0, 2, 3, 4, 5]


def test_emit_generators(tmp_path):
    from g31.gaussian import GaussRat
    from g31.matrices import Mat

    out = tmp_path / "gens.json"
    r = run("emit", "--what", "generators", "--out", str(out))
    assert r.returncode == 0
    mats = [Mat.from_json(o) for o in json.loads(out.read_text())]
    assert len(mats) == 5
    assert all(m.trace() == GaussRat(2) for m in mats)


def test_emit_reflections(tmp_path):
    out = tmp_path / "refl.json"
    r = run("emit", "--what", "reflections", "--out", str(out))
    assert r.returncode == 0
    assert len(json.loads(out.read_text())) == 60
