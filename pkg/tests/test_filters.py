from qra import (
    FinAlgebra,
    dual_frame,
    filter_frame,
    filter_product,
    filter_unaries,
    frame_iso,
    gen_prime_filters,
    priestley_roundtrip,
    space_algebra,
    validate_pointed_frame,
)
from qra.catalog import build_catalog
from qra.filters import is_gen_prime_filter
from qra.frame import Frame
from qra.order import Poset, bits, mask_of


def brute_force_filters(alg):
    return [m for m in range(1 << alg.size) if is_gen_prime_filter(alg, m)]


def test_filter_counts_match_brute_force(bool2, sugihara3, lukasiewicz4):
    one = FinAlgebra([[1]], [[0]], 0, [0], [0], neg=[0])
    for alg, count in ((bool2, 3), (one, 2), (lukasiewicz4, 5)):
        filters = gen_prime_filters(alg)
        assert len(filters) == count
        assert sorted(filters) == sorted(brute_force_filters(alg))
    assert sorted(gen_prime_filters(sugihara3)) == sorted(brute_force_filters(sugihara3))


def test_filters_brute_force_on_catalog():
    for entry in build_catalog():
        if entry.size > 6:
            continue
        alg = entry.base
        assert sorted(gen_prime_filters(alg)) == sorted(brute_force_filters(alg))


def test_filter_unaries_examples(sugihara3):
    full = (1 << sugihara3.size) - 1
    assert filter_unaries(sugihara3, full)[0] == 0
    assert filter_unaries(sugihara3, 0)[0] == full
    # on the 3-chain the tilde image swaps the two principal filters
    up1 = sugihara3.up_masks[1]
    uptop = sugihara3.up_masks[2]
    assert filter_unaries(sugihara3, up1)[0] == uptop
    assert filter_unaries(sugihara3, uptop)[0] == up1


def test_filter_antitone_and_involutive(lukasiewicz4):
    filters = gen_prime_filters(lukasiewicz4)
    for f in filters:
        for g in filters:
            if f & ~g == 0:
                assert filter_unaries(lukasiewicz4, g)[0] & ~filter_unaries(lukasiewicz4, f)[0] == 0
        ft, fm, _ = filter_unaries(lukasiewicz4, f)
        assert filter_unaries(lukasiewicz4, ft)[1] == f  # (F^~)^- = F


def test_filter_product_examples(bool2, sugihara3):
    filters = gen_prime_filters(bool2)
    # empty filter times anything gives every filter
    assert filter_product(bool2, 0, filters[-1]) == filters
    f1 = bool2.up_masks[1]  # the prime filter at the top
    assert filter_product(bool2, f1, f1) == [f1, (1 << 2) - 1]
    full = (1 << sugihara3.size) - 1
    assert full in filter_product(sugihara3, full, full)


def test_filter_frame_shapes(bool2):
    one = FinAlgebra([[1]], [[0]], 0, [0], [0], neg=[0])
    pf = filter_frame(one)
    assert pf.frame.size == 2  # two-point chain
    assert pf.frame.poset.leq(pf.bottom, pf.top)
    pf2 = filter_frame(bool2)
    assert pf2.frame.size == 3
    assert validate_pointed_frame(pf2).ok
    rep = validate_pointed_frame(pf2)
    assert any("discrete topology" in note for note in rep.notes)


def test_space_algebra_roundtrip_examples(bool2, sugihara3):
    one = FinAlgebra([[1]], [[0]], 0, [0], [0], neg=[0])
    for alg in (one, bool2, sugihara3):
        witness = priestley_roundtrip(alg)
        assert sorted(witness) == list(range(alg.size))
        assert space_algebra(filter_frame(alg)).size == alg.size


def test_unbounded_fidelity_on_catalog():
    for entry in build_catalog():
        for variant in entry.variants:
            assert space_algebra(filter_frame(variant.algebra)).size == variant.algebra.size


def test_stripped_filter_frame_is_the_dual_frame():
    # dropping the two bounds recovers the dual frame: containment of
    # principal filters is already the reversed algebra order, so the
    # orientation carries over as-is
    for entry in build_catalog():
        if entry.size > 6:
            continue
        alg = entry.variants[0].algebra
        pf = filter_frame(alg)
        frame = pf.frame
        keep = [x for x in range(frame.size) if x not in (pf.bottom, pf.top)]
        pos = {x: i for i, x in enumerate(keep)}
        k = len(keep)
        up = [mask_of(pos[y] for y in keep if frame.poset.leq(x, y)) for x in keep]
        comp = [
            [mask_of(pos[z] for z in bits(frame.comp[x][y]) if z in pos)
             for y in keep] for x in keep
        ]
        tilde = [pos[frame.tilde[x]] for x in keep]
        minus = [pos[frame.minus[x]] for x in keep]
        neg = None if frame.neg is None else [pos[frame.neg[x]] for x in keep]
        identity = mask_of(pos[x] for x in bits(frame.identity) if x in pos)
        stripped = Frame(Poset(tuple(up)), identity, comp, tilde, minus, neg=neg)
        assert frame_iso(stripped, dual_frame(alg)) is not None, entry.name


def test_preimages_of_filters_under_homs():
    # inverse images of generalised prime filters along a homomorphism are
    # generalised prime filters again
    from qra import enumerate_homs

    algebras = [e.variants[0].algebra for e in build_catalog() if e.size <= 4]
    for a in algebras:
        for b in algebras:
            for h in enumerate_homs(a, b):
                for g in gen_prime_filters(b):
                    pre = mask_of(x for x in range(a.size) if (g >> h.map[x]) & 1)
                    assert is_gen_prime_filter(a, pre)
