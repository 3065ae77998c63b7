import json
import subprocess
import sys
from pathlib import Path

import pytest

from qra import io as qio
from qra.bundled import bundled_frame, bundled_frames, bundled_lookup
from qra.cli import main
from qra.errors import StructuralError
from qra.frame import frame_iso
from qra.represent import RepBase
from qra.order import Poset

DATA = Path(__file__).parent / "data"


def test_bundled_files_reserialize_byte_identical():
    for path in sorted(DATA.glob("*.json")):
        raw = path.read_text()
        obj = qio.load(path)
        assert qio.canonical_dumps(qio.to_obj(obj)) == raw, path.name


def test_frame_file_roundtrip(tmp_path):
    frame = bundled_frame("W4_1_3")
    target = tmp_path / "frame.json"
    qio.save(frame, target)
    back = qio.load(target)
    assert frame_iso(back, frame) == list(range(frame.size))


def test_ragged_and_out_of_range_rejected(tmp_path):
    good = json.loads((DATA / "d2_1_1.algebra.json").read_text())
    bad = dict(good)
    bad["leq"] = [[1, 1], [0]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    with pytest.raises(StructuralError):
        qio.load(path)
    bad2 = dict(good)
    bad2["product"] = [[0, 5], [0, 1]]
    path.write_text(json.dumps(bad2))
    with pytest.raises(StructuralError):
        qio.load(path)
    path.write_text("{not json")
    with pytest.raises(StructuralError):
        qio.load(path)


def test_base_file_roundtrip(tmp_path):
    base = RepBase(Poset.chain(2), (3, 3), (0, 1), (1, 0))
    path = tmp_path / "base.json"
    qio.save(base, path)
    back = qio.load(path)
    assert isinstance(back, RepBase)
    assert back.alpha == base.alpha and back.beta == base.beta


def test_bundled_lookup():
    assert bundled_lookup("W4_1_3").size == 3
    assert bundled_lookup("RA13").index == 13
    assert bundled_lookup("D3_1_2").name == "D3_1_2"
    with pytest.raises(KeyError):
        bundled_lookup("nope")


def run_cli(*argv):
    return main(list(argv))


def test_cli_check_ok(capsys):
    assert run_cli("check", str(DATA / "w3_1_2.frame.json")) == 0
    assert "DqRA-frame: ok" in capsys.readouterr().out


def test_cli_check_law_failure(tmp_path, capsys):
    frame = bundled_frame("W3_1_2")
    obj = qio.frame_to_obj(frame)
    obj["comp"][0][0] = [0]  # not an upset: breaks the composition law
    path = tmp_path / "broken.frame.json"
    path.write_text(qio.canonical_dumps(obj))
    assert run_cli("check", str(path)) == 1
    out = capsys.readouterr().out
    assert "FAILED" in out and "witness" in out


def test_cli_check_structural_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"size": 2, "leq": [[1, 1], [0]]}')
    assert run_cli("check", str(path)) == 2


def test_cli_roundtrip_all_bundled(capsys):
    for name in bundled_frames():
        assert run_cli("roundtrip", name) == 0, name


def test_cli_count(capsys):
    assert run_cli("count", "--max-size", "4") == 0
    out = capsys.readouterr().out
    assert "DqRA" in out and "10" in out


def test_cli_count_json(capsys):
    assert run_cli("count", "--max-size", "3", "--format", "json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["by_size"]["3"] == [2, 2] or payload["by_size"][3] == [2, 2]


def test_cli_enumerate_and_emit(tmp_path, capsys):
    assert run_cli("enumerate", "--poset", "bowtie", "--signature", "dqra",
                   "--emit", str(tmp_path)) == 0
    out = capsys.readouterr().out
    assert "12 frames" in out
    emitted = sorted(tmp_path.glob("*.frame.json"))
    assert len(emitted) == 12
    assert run_cli("check", str(emitted[0])) == 0


def test_cli_catalog(capsys):
    assert run_cli("catalog", "--max-size", "3") == 0
    out = capsys.readouterr().out
    assert "D^3_{1,2}" in out
    assert run_cli("catalog", "--max-size", "4", "--format", "json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert sum(1 for e in payload if e["size"] == 4) == 9


def test_cli_priestley(capsys):
    assert run_cli("priestley", "--roundtrip", str(DATA / "d3_1_2.algebra.json")) == 0
    assert "round-trip ok" in capsys.readouterr().out


def test_cli_iso(capsys):
    assert run_cli("iso", "W4_2_1a", "W4_2_1b") == 1
    assert run_cli("iso", "W4_2_1a", "W4_2_1a") == 0


def test_cli_morphism_check(capsys):
    assert run_cli("morphism-check", str(DATA / "identity.morphism.json")) == 0


def test_cli_represent(capsys):
    assert run_cli("represent", str(DATA / "d2_1_1.algebra.json"),
                   "--max-points", "1") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["result"] == "certificate" and payload["verified"]


def test_cli_represent_filtered(capsys):
    assert run_cli("represent", str(DATA / "d3_1_1.algebra.json"),
                   "--max-points", "2") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["result"] == "exhausted"
    assert payload["filter_witness"] is not None


def test_cli_subreducts(capsys):
    assert run_cli("subreducts", "--index", "13") == 0
    out = capsys.readouterr().out
    assert "B8" in out and "1+3" in out
    assert run_cli("subreducts", "--all", "--format", "json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) == 37


def test_cli_unknown_input(capsys):
    assert run_cli("check", "definitely_not_here.json") == 2


def test_cli_budget_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QRA_BUDGET_MS", "0.0001")
    code = run_cli("enumerate", "--poset", "2x2", "--signature", "dqra")
    assert code == 3


def test_cli_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "qra.cli", "check", "W2_1_1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "ok" in proc.stdout
