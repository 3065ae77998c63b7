"""Cross-cutting structural invariants that tie the modules together."""

import json

from hypothesis import given, settings
from hypothesis import strategies as st

from qra import (
    algebra_iso,
    complex_algebra,
    join_irreducibles,
    validate_dinfl,
)
from qra.bundled import bundled_frames
from qra.catalog import build_catalog, catalog_lookup
from qra.cli import main
from qra.order import NAMED_POSETS, bits, mask_of


def test_complex_algebra_irreducibles_are_principal_upsets():
    for name, frame in bundled_frames().items():
        if frame.size == 0:
            continue
        alg = complex_algebra(frame)
        ups = frame.upsets
        principal = {ups.index(frame.poset.up[x]) for x in range(frame.size)}
        assert set(join_irreducibles(alg)) == principal, name


def test_algebra_iso_witness_inverts():
    a = catalog_lookup("D5_1_7").variants[0].algebra
    scrambled = a.relabel([3, 0, 4, 1, 2])
    forward = algebra_iso(a, scrambled)
    backward = algebra_iso(scrambled, a)
    assert forward is not None and backward is not None
    for x in range(a.size):
        assert backward[forward[x]] == x


def test_iso_respects_validation_status():
    # a relabelled valid algebra is valid, and the witness transports laws
    a = catalog_lookup("D4_2_3").base
    b = a.relabel([2, 0, 3, 1])
    assert validate_dinfl(b).ok
    assert algebra_iso(a, b) is not None


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=(1 << 5) - 1))
def test_upset_closure_is_a_closure_operator(mask):
    poset = NAMED_POSETS["X"]
    closed = poset.upset_closure(mask)
    assert closed & mask == mask
    assert poset.upset_closure(closed) == closed
    assert poset.is_upset(closed)
    # minimality: dropping any added point breaks upward closure
    for extra in bits(closed & ~mask):
        assert not poset.is_upset(closed ^ (1 << extra)) or poset.upset_closure(
            mask
        ) != closed ^ (1 << extra)


def test_enumerate_accepts_poset_files(tmp_path, capsys):
    poset = NAMED_POSETS["bowtie"]
    path = tmp_path / "bowtie.poset.json"
    path.write_text(json.dumps({"name": "bowtie", "leq": poset.matrix()}))
    assert main(["enumerate", "--poset", str(path), "--signature", "dinfl"]) == 0
    assert "11 frames" in capsys.readouterr().out


def test_catalog_size_cap(capsys):
    assert main(["catalog", "--max-size", "7"]) == 2


def test_every_catalog_variant_validates_and_is_distinct():
    for entry in build_catalog():
        if entry.neg_count == 2:
            first, second = entry.variants
            assert algebra_iso(first.algebra, second.algebra) is None, entry.name


def test_validation_report_ok_iff_no_failures():
    from qra import ValidationReport

    rep = ValidationReport(subject="x")
    assert rep.ok
    rep.add("law", (0,))
    assert not rep.ok and rep.laws_violated() == ["law"]
    assert "FAILED" in rep.summary()
