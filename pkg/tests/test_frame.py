import pytest

from qra import (
    algebra_iso,
    complex_algebra,
    dual_frame,
    empty_frame,
    frame_iso,
    roundtrip_algebra,
    roundtrip_frame,
    validate_dinfl_frame,
    validate_dqra_frame,
    validate_frame,
)
from qra.bundled import bundled_frame, bundled_frames
from qra.catalog import match_dqra
from qra.errors import SignatureError, StructuralError
from qra.frame import Frame


def test_all_bundled_frames_validate_and_roundtrip():
    for name, frame in bundled_frames().items():
        rep = validate_frame(frame)
        assert rep.ok, (name, rep.failures[:3])
        roundtrip_frame(frame)
        # tilde and minus coincide for these frames: checked, not assumed
        assert frame.tilde == frame.minus, name


def test_empty_frame_is_legal():
    frame = empty_frame()
    assert validate_dinfl_frame(frame).ok
    assert complex_algebra(frame).size == 1


def test_wrong_identity_fails_condition_one():
    w = bundled_frame("W3_1_2")
    # the identity upset in frame order is {e}; using the whole carrier
    # breaks the identity-composition law
    broken = Frame(w.poset, w.poset.carrier, w.comp, w.tilde, w.minus, neg=w.neg)
    rep = validate_dqra_frame(broken)
    assert not rep.ok
    assert any(law.startswith("identity_composition") for law in rep.laws_violated())
    # a non-upset identity set fails the upset condition
    broken2 = Frame(w.poset, 0b01, w.comp, w.tilde, w.minus, neg=w.neg)
    assert "identity_upset" in validate_dqra_frame(broken2).laws_violated()


def test_rotation_violation_detected():
    w = bundled_frame("W4_2_2")
    comp = [list(row) for row in w.comp]
    comp[1][1] = 0b10  # u.u was {e}
    broken = Frame(w.poset, w.identity, comp, w.tilde, w.minus, neg=w.neg)
    rep = validate_frame(broken)
    assert not rep.ok


def test_non_permutation_neg_is_structural():
    w = bundled_frame("W3_1_2")
    with pytest.raises(StructuralError):
        Frame(w.poset, w.identity, w.comp, w.tilde, w.minus, neg=[0, 0])


def test_complex_algebra_examples(bool2, lukasiewicz4, sugihara3, lukasiewicz3):
    assert algebra_iso(complex_algebra(bundled_frame("W2_1_1")), bool2) is not None
    assert algebra_iso(complex_algebra(bundled_frame("W4_1_2")), lukasiewicz4) is not None
    assert algebra_iso(complex_algebra(bundled_frame("W3_1_2")), sugihara3) is not None
    assert algebra_iso(complex_algebra(bundled_frame("W3_1_1")), lukasiewicz3) is not None


def test_dual_frame_examples(bool2, sugihara3, lukasiewicz3):
    assert frame_iso(dual_frame(bool2), bundled_frame("W2_1_1")) is not None
    w = dual_frame(lukasiewicz3)
    assert frame_iso(w, bundled_frame("W3_1_1")) is not None
    # the middle element's self-composition is empty in the dual frame
    top_of_frame = [x for x in range(w.size) if w.poset.up[x] == (1 << x)]
    assert any(w.comp[x][x] == 0 for x in range(w.size))
    assert frame_iso(dual_frame(sugihara3), bundled_frame("W3_1_2")) is not None


def test_complex_algebra_size_is_upset_count():
    for name, frame in bundled_frames().items():
        assert complex_algebra(frame).size == len(frame.upsets), name


def test_roundtrip_algebra_examples(lukasiewicz4):
    psi = roundtrip_algebra(lukasiewicz4)
    assert sorted(psi) == list(range(4))
    assert len(dual_frame(lukasiewicz4).carrier_elements) == 3


def test_frame_iso_examples():
    wa = bundled_frame("W4_2_1a")
    wb = bundled_frame("W4_2_1b")
    assert frame_iso(wa, wb) is None  # distinct as DqRA-frames
    assert frame_iso(wa.without_neg(), wb.without_neg()) is not None
    assert frame_iso(wa, wa) == [0, 1]
    with pytest.raises(SignatureError):
        frame_iso(wa, wb.without_neg())


def test_table_frames_match_named_algebras():
    # the complex algebra of each bundled frame lands on the catalog name
    # printed alongside it, with the 3,1/3,2 pair crossed as published
    expected = {
        "W1_1_1": ("D1_1_1", "~"),
        "W2_1_1": ("D2_1_1", "~"),
        "W3_1_1": ("D3_1_1", "~"),
        "W3_1_2": ("D3_1_2", "~"),
        "W4_1_1": ("D4_1_1", "~"),
        "W4_1_2": ("D4_1_2", "~"),
        "W4_1_3": ("D4_1_3", "~"),
        "W4_1_4": ("D4_1_4", "~"),
        "W4_2_1a": ("D4_2_1_2", "~"),
        "W4_2_1b": ("D4_2_1_2", "a=a"),
        "W4_2_2": ("D4_2_2", "~"),
        "W4_2_3": ("D4_2_3", "~"),
        "W4_3_1": ("D4_3_2", "~"),
        "W4_3_2": ("D4_3_1", "~"),
    }
    for name, frame in bundled_frames().items():
        alg = complex_algebra(frame)
        entry, variant, _ = match_dqra(alg)
        assert (entry.name, variant.neg_desc) == expected[name], name


def test_catalog_algebras_roundtrip():
    from qra.catalog import build_catalog

    for entry in build_catalog():
        roundtrip_algebra(entry.base)
        for variant in entry.variants:
            roundtrip_algebra(variant.algebra)


def test_dual_frames_of_catalog_validate():
    from qra.catalog import build_catalog

    for entry in build_catalog():
        for variant in entry.variants:
            frame = dual_frame(variant.algebra)
            assert validate_frame(frame).ok, entry.name
