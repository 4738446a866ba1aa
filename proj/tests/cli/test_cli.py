import json
import os
import shutil
import subprocess
from pathlib import Path

import pytest

ROOT = Path(os.environ.get("POSETDER_ROOT", Path(__file__).resolve().parents[2]))
CLI = os.environ.get("POSETDER_CLI") or shutil.which("posetder") or str(ROOT / "build/tools/posetder")
FIX = ROOT / "fixtures"

FIXTURE_NAMES = ["rp2", "crown:2", "crown:3", "chain:4", "antichain:3", "diamond", "s5", "fence:5"]


def run(*args, expect=0):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=600)
    assert proc.returncode == expect, proc.stdout + proc.stderr
    return json.loads(proc.stdout) if proc.stdout.strip() else None


def test_analyze_rp2():
    r = run("analyze", FIX / "rp2.json", "--ring", "q", "--ring", "gf:2")
    assert r["homology"] == {"dim": 1, "betti": 0, "torsion": [2]}
    outer = {x["ring"]: x["outer_exists"] for x in r["rings"]}
    assert outer == {"q": False, "gf:2": True}
    assert r["conclusiveness"]["conclusive_paper"] is False


def test_analyze_chain_is_soluble():
    assert run("analyze", FIX / "chain4.json")["conclusiveness"]["soluble"] is True


def test_analyze_witness():
    r = run("analyze", FIX / "rp2.json", "--witness", "2")
    assert r["witness"]["prime"] == 2
    assert r["witness"]["unique"] is False


def test_input_errors_exit_2():
    err = run("analyze", FIX / "broken.json", expect=2)
    assert "error" in err
    run("analyze", FIX / "missing.json", expect=2)
    run("analyze", FIX / "rp2.json", "--ring", "mod:4", expect=2)
    run("analyze", FIX / "rp2.json", "--ring", "gf:9", expect=2)
    run("fixture", "nope", expect=2)
    run("sweep", "--max-n", "9", expect=2)
    run("bogus-command", expect=2)


def test_path_limit_exit_3():
    err = run("--path-limit", "1", "analyze", FIX / "rp2.json", expect=3)
    assert err["kind"] == "path_limit"


def test_verify_table1():
    r = run("derivation", "verify", FIX / "rp2.json", FIX / "table1.json", "--ring", "mod:2")
    assert r == {"transitive": True, "potential": False, "phi": None}


def test_verify_inconsistent_diamond():
    r = run("derivation", "verify", FIX / "diamond.json", FIX / "inconsistent.json", "--ring", "mod:2")
    assert r["transitive"] is False


def test_verify_missing_cover_is_error(tmp_path):
    fn = json.loads((FIX / "table1.json").read_text())
    fn["cover_values"].pop()
    path = tmp_path / "short.json"
    path.write_text(json.dumps(fn))
    run("derivation", "verify", FIX / "rp2.json", path, expect=2)


def test_witness():
    assert run("derivation", "witness", FIX / "rp2.json", "--prime", "3") == {"prime": 3, "witness": None}
    w = run("derivation", "witness", FIX / "rp2.json", "--prime", "2")
    assert w["witness"]["ring"] == "mod:2"


def test_other_commands():
    h = run("homology", FIX / "crown2.json")
    assert h["homology"]["betti"] == 1
    assert run("core", FIX / "diamond.json")["removed"] == 3
    assert len(run("crowns", FIX / "crown2.json")["crowns"]) == 1
    c = run("criteria", FIX / "rp2.json")["criteria"]
    assert c["table2_case"] == 15
    assert c["table2_conflict"]["row"] == 15
    assert c["co18"]["satisfied"] is False


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_round_trip(name, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(run("fixture", name)))
    r = run("analyze", path)
    assert r["poset"]["stats"]["vertex_count"] > 0


def test_fixture_shapes():
    rp2 = run("fixture", "rp2")
    assert len(rp2["elements"]) == 13 and len(rp2["covers"]) == 24
    assert len(run("fixture", "table1")["cover_values"]) == 24
    c3 = run("fixture", "crown:3")
    assert len(c3["elements"]) == 6 and len(c3["covers"]) == 6


def test_sweep_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("sweep", "--max-n", "5", "--out", a)
    run("sweep", "--max-n", "5", "--jobs", "4", "--out", b)
    ra, rb = json.loads(a.read_text()), json.loads(b.read_text())
    assert [c["posets"] for c in ra["counts_by_n"]] == [1, 2, 5, 16, 63]
    assert ra["inconclusive_found"] == []
    ra.pop("elapsed_ms", None)
    rb.pop("elapsed_ms", None)
    assert ra == rb
