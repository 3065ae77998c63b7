"""Plain generate-and-filter frame enumeration, for cross-checking.

This deliberately shares nothing with the production search kernel: no
rotation orbits, no monotone cones, no watched witnesses, no symmetry
breaking.  Cells are filled from the plain list of upsets, each frame
condition is evaluated directly on the filled part of the table, and the
final list is quotiented by pairwise isomorphism checks.  Identity rows
and columns go first because the identity law pins them almost
completely, which keeps the plain search feasible for the posets of size
up to three this oracle is meant for.
"""

from __future__ import annotations

from .frame import Frame, empty_frame, frame_iso
from .order import Poset, bits


def _plain_frames(poset: Poset, identity: int, tilde):
    n = poset.n
    ups = poset.upsets
    minus = tuple(tilde.index(i) for i in range(n))
    icells = [(i, x) for i in bits(identity) for x in range(n)]
    icells += [(x, i) for x in range(n) for i in bits(identity) if (x, i) not in icells]
    rest = [(x, y) for x in range(n) for y in range(n) if (x, y) not in icells]
    cells = icells + rest
    comp = {}
    out = []

    def identity_partial_ok(x, y):
        val = comp[(x, y)]
        if (identity >> x) & 1 and val & ~poset.up[y]:
            return False
        if (identity >> y) & 1 and val & ~poset.up[x]:
            return False
        # once a full identity row or column for a target is known, the
        # union must be the principal upset
        for target, pairs in (
            (y, [(i, y) for i in bits(identity)]),
            (x, [(x, i) for i in bits(identity)]),
        ):
            if all(p in comp for p in pairs):
                union = 0
                for p in pairs:
                    union |= comp[p]
                if union != poset.up[target]:
                    return False
        return True

    def rotation_partial_ok(x, y):
        for z in range(n):
            if (z, x) in comp:
                if ((comp[(x, y)] >> tilde[z]) & 1) != ((comp[(z, x)] >> minus[y]) & 1):
                    return False
            # the new cell also plays the (z, x) role for cells (y, w)
        a, b = x, y  # new cell as the second cell of an instance (b, w)
        for w in range(n):
            if (b, w) in comp:
                for z in [a]:
                    if ((comp[(b, w)] >> tilde[z]) & 1) != (
                        (comp[(z, b)] >> minus[w]) & 1
                    ):
                        return False
        return True

    def associativity_ok():
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    left = 0
                    for u in bits(comp[(x, y)]):
                        left |= comp[(u, z)]
                    right = 0
                    for v in bits(comp[(y, z)]):
                        right |= comp[(x, v)]
                    if left != right:
                        return False
        return True

    def fill(k):
        if k == len(cells):
            if associativity_ok():
                table = [[comp[(x, y)] for y in range(n)] for x in range(n)]
                out.append(Frame(poset, identity, table, tilde, minus))
            return
        cell = cells[k]
        for val in ups:
            comp[cell] = val
            if identity_partial_ok(*cell) and rotation_partial_ok(*cell):
                fill(k + 1)
            del comp[cell]

    fill(0)
    return out


def _neg_ok(frame: Frame, neg) -> bool:
    n = frame.size
    for x in range(n):
        if neg[neg[x]] != x:
            return False
        for y in bits(frame.poset.up[x]):
            if not frame.poset.leq(neg[y], neg[x]):
                return False
    for x in range(n):
        for y in range(n):
            cell = frame.comp[x][y]
            twisted = frame.comp[neg[frame.tilde[y]]][neg[frame.tilde[x]]]
            for z in range(n):
                if ((cell >> frame.minus[z]) & 1) != ((twisted >> neg[z]) & 1):
                    return False
    return True


def brute_force_frames(poset: Poset, signature: str) -> list[Frame]:
    """Every frame over the poset up to isomorphism, the slow plain way."""
    if poset.n == 0:
        frame = empty_frame()
        return [frame.with_neg(()) if signature == "dqra" else frame]
    all_frames = []
    for identity in poset.upsets:
        if not identity:
            continue
        for tilde in poset.order_reversing_bijections:
            found = _plain_frames(poset, identity, tuple(tilde))
            if signature == "dinfl":
                all_frames.extend(found)
            else:
                for frame in found:
                    for neg in poset.order_reversing_bijections:
                        if _neg_ok(frame, neg):
                            all_frames.append(frame.with_neg(list(neg)))
    unique: list[Frame] = []
    for frame in all_frames:
        if not any(frame_iso(frame, kept) is not None for kept in unique):
            unique.append(frame)
    return unique
