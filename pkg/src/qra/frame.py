"""Relational frames dual to DInFL-algebras and DqRAs.

A frame is a finite poset ``(W, leq)`` with an upward closed identity set
``I``, a composition ``comp[x][y]`` mapping each pair to an upset, and
order reversing maps ``tilde``/``minus`` (mutually inverse), optionally a
``neg``.  The complex algebra of a frame lives on the upsets of ``W``; the
dual frame of an algebra lives on its join-irreducible elements with the
order turned upside down.  At finite scale the two constructions are
mutually inverse, and ``roundtrip_algebra`` / ``roundtrip_frame`` verify
that constructively.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .algebra import (
    FinAlgebra,
    ValidationReport,
    join_irreducibles,
    kappa_map,
)
from .errors import InternalCheckError, SignatureError, StructuralError
from .order import Poset, bits, mask_of, popcount


class Frame:
    """A finite frame; the empty carrier (size 0) is legal."""

    def __init__(self, poset: Poset, identity: int, comp, tilde, minus,
                 neg=None, name: str | None = None):
        self.poset = poset
        self.size = poset.n
        self.identity = int(identity)
        self.comp = tuple(tuple(int(m) for m in row) for row in comp)
        self.tilde = tuple(int(v) for v in tilde)
        self.minus = tuple(int(v) for v in minus)
        self.neg = None if neg is None else tuple(int(v) for v in neg)
        self.name = name
        self._check_structure()

    def _check_structure(self):
        n = self.size
        carrier = self.poset.carrier
        if self.identity & ~carrier:
            raise StructuralError("identity set is not a subset of the carrier")
        if len(self.comp) != n or any(len(row) != n for row in self.comp):
            raise StructuralError("composition table must be n x n")
        for row in self.comp:
            for cell in row:
                if cell & ~carrier:
                    raise StructuralError("composition entry is not a subset of the carrier")
        for what, perm in (("tilde", self.tilde), ("minus", self.minus), ("neg", self.neg)):
            if perm is None:
                continue
            if len(perm) != n or sorted(perm) != list(range(n)):
                raise StructuralError(f"{what} is not a permutation of the carrier")

    def leq(self, x: int, y: int) -> bool:
        return self.poset.leq(x, y)

    def has_neg(self) -> bool:
        return self.neg is not None

    def signature(self) -> str:
        return "dqra" if self.neg is not None else "dinfl"

    def without_neg(self, name=None) -> "Frame":
        return Frame(self.poset, self.identity, self.comp, self.tilde, self.minus,
                     neg=None, name=name or self.name)

    def with_neg(self, neg, name=None) -> "Frame":
        return Frame(self.poset, self.identity, self.comp, self.tilde, self.minus,
                     neg=neg, name=name or self.name)

    def contains(self, x: int, y: int, z: int) -> bool:
        """The ternary relation view: z in x o y."""
        return bool((self.comp[x][y] >> z) & 1)

    def compose_sets(self, umask: int, vmask: int) -> int:
        out = 0
        for x in bits(umask):
            row = self.comp[x]
            for y in bits(vmask):
                out |= row[y]
        return out

    def encoding(self) -> tuple:
        return (self.identity, self.tilde, self.minus, self.neg,
                tuple(cell for row in self.comp for cell in row))

    def relabel(self, perm, name=None) -> "Frame":
        """Transport the frame along the poset automorphism i -> perm[i]."""
        n = self.size
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i

        def move(mask):
            return mask_of(perm[i] for i in bits(mask))

        comp = [[move(self.comp[inv[x]][inv[y]]) for y in range(n)] for x in range(n)]
        tilde = [perm[self.tilde[inv[x]]] for x in range(n)]
        minus = [perm[self.minus[inv[x]]] for x in range(n)]
        neg = None if self.neg is None else [perm[self.neg[inv[x]]] for x in range(n)]
        return Frame(self.poset.relabel(perm), move(self.identity), comp, tilde, minus,
                     neg=neg, name=name)

    @cached_property
    def upsets(self) -> tuple[int, ...]:
        return self.poset.upsets

    def __repr__(self):
        label = self.name or "frame"
        return f"Frame({label}, n={self.size}, {self.signature()})"


def empty_frame(name: str | None = None) -> Frame:
    return Frame(Poset(()), 0, (), (), (), name=name)


# -- validation -------------------------------------------------------------


def validate_dinfl_frame(frame: Frame) -> ValidationReport:
    """Check every defining frame condition, plus the derived monotonicity
    and inverse laws as redundancy."""
    rep = ValidationReport(subject=frame.name or "frame")
    n = frame.size
    poset = frame.poset
    poset.check_partial_order()
    up = poset.up
    comp = frame.comp
    identity = frame.identity
    tilde, minus = frame.tilde, frame.minus

    if not poset.is_upset(identity):
        xs = [x for x in bits(identity) if up[x] & ~identity]
        rep.add("identity_upset", (xs[0],) if xs else ())
    for x in range(n):
        left = 0
        right = 0
        for i in bits(identity):
            left |= comp[i][x]
            right |= comp[x][i]
        if left != up[x]:
            rep.add("identity_composition_left", (x, left, up[x]))
        if right != up[x]:
            rep.add("identity_composition_right", (x, right, up[x]))
    for x in range(n):
        for y in range(n):
            if not poset.is_upset(comp[x][y]):
                rep.add("composition_upset", (x, y))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = frame.compose_sets(comp[x][y], 1 << z)
                rhs = frame.compose_sets(1 << x, comp[y][z])
                if lhs != rhs:
                    rep.add("composition_associative", (x, y, z, lhs, rhs))
    for x in range(n):
        for y in range(n):
            cell = comp[x][y]
            for z in range(n):
                if ((cell >> tilde[z]) & 1) != ((comp[z][x] >> minus[y]) & 1):
                    rep.add("rotation", (x, y, z))
    for x in range(n):
        if not poset.leq(minus[tilde[x]], x):
            rep.add("linear_negation_collapse", (x, "tilde-minus"))
        if not poset.leq(tilde[minus[x]], x):
            rep.add("linear_negation_collapse", (x, "minus-tilde"))

    # Derived laws; failures here with the above all passing indicate a bug.
    for x in range(n):
        if minus[tilde[x]] != x or tilde[minus[x]] != x:
            rep.add("derived_negation_inverse", (x,))
        for y in bits(up[x]):
            if not poset.leq(tilde[y], tilde[x]) or not poset.leq(minus[y], minus[x]):
                rep.add("derived_negation_antitone", (x, y))
    for x in range(n):
        for w in range(n):
            target = comp[x][w]
            for y in bits(up[x] ^ (1 << x)):
                if comp[y][w] & ~target:
                    rep.add("derived_composition_antitone_left", (x, y, w))
                if comp[w][y] & ~comp[w][x]:
                    rep.add("derived_composition_antitone_right", (x, y, w))
    return rep


def validate_dqra_frame(frame: Frame) -> ValidationReport:
    if frame.neg is None:
        raise SignatureError("frame carries no neg map")
    rep = validate_dinfl_frame(frame)
    n = frame.size
    poset = frame.poset
    neg, tilde, minus = frame.neg, frame.tilde, frame.minus
    comp = frame.comp
    for x in range(n):
        if neg[neg[x]] != x:
            rep.add("neg_involution", (x,))
        for y in bits(poset.up[x]):
            if not poset.leq(neg[y], neg[x]):
                rep.add("neg_antitone", (x, y))
    for x in range(n):
        for y in range(n):
            cell = comp[x][y]
            twisted = comp[neg[tilde[y]]][neg[tilde[x]]]
            for z in range(n):
                if ((cell >> minus[z]) & 1) != ((twisted >> neg[z]) & 1):
                    rep.add("neg_rotation", (x, y, z))
    for x in range(n):
        if neg[tilde[x]] != minus[neg[x]]:
            rep.add("derived_neg_tilde_compat", (x,))
        if neg[minus[x]] != tilde[neg[x]]:
            rep.add("derived_neg_minus_compat", (x,))
    return rep


def validate_frame(frame: Frame) -> ValidationReport:
    return validate_dqra_frame(frame) if frame.has_neg() else validate_dinfl_frame(frame)


# -- the two dual constructions ----------------------------------------------


def complex_algebra(frame: Frame, name: str | None = None) -> FinAlgebra:
    """The algebra of all upsets of the frame.

    Product is the lifted composition, the unit is the identity set, and
    the negations send an upset U to the points whose image under the
    paired map falls outside U.
    """
    ups = frame.upsets
    index = {m: i for i, m in enumerate(ups)}
    n = len(ups)
    carrier = frame.poset.carrier
    leq = np.array([[ (u & ~v) == 0 for v in ups] for u in ups], dtype=bool)
    product = np.zeros((n, n), dtype=np.int32)
    for i, u in enumerate(ups):
        for j, v in enumerate(ups):
            product[i, j] = index[frame.compose_sets(u, v)]

    def unary_from(pointmap):
        out = []
        for u in ups:
            image = mask_of(w for w in range(frame.size)
                            if not (u >> pointmap[w]) & 1)
            if image & ~carrier or image not in index:
                raise InternalCheckError("negation image of an upset is not an upset")
            out.append(index[image])
        return out

    tilde = unary_from(frame.minus)   # ~U = {w | w^- not in U}
    minus = unary_from(frame.tilde)   # -U = {w | w^~ not in U}
    neg = None if frame.neg is None else unary_from(frame.neg)
    if name is None and frame.name:
        name = f"{frame.name}^+"
    return FinAlgebra(leq, product, index[frame.identity], tilde, minus, neg=neg, name=name)


def dual_frame(alg: FinAlgebra, name: str | None = None) -> Frame:
    """The frame on the join-irreducible elements with the order reversed."""
    jirr = join_irreducibles(alg)
    pos = {a: i for i, a in enumerate(jirr)}
    n = len(jirr)
    kmap = kappa_map(alg)
    up = [mask_of(pos[b] for b in jirr if alg.leq[b, a]) for a in jirr]
    poset = Poset(tuple(up))
    identity = mask_of(pos[a] for a in jirr if alg.leq[a, alg.one])
    comp = [[0] * n for _ in range(n)]
    for a in jirr:
        for b in jirr:
            p = int(alg.product[a, b])
            comp[pos[a]][pos[b]] = mask_of(pos[c] for c in jirr if alg.leq[c, p])

    def unary_from(op):
        out = []
        for a in jirr:
            v = int(op[kmap[a]])
            if v not in pos:
                raise InternalCheckError(
                    "negation of a kappa value left the join-irreducibles"
                )
            out.append(pos[v])
        return out

    tilde = unary_from(alg.tilde)
    minus = unary_from(alg.minus)
    neg = None if alg.neg is None else unary_from(alg.neg)
    if name is None and alg.name:
        name = f"{alg.name}_+"
    frame = Frame(poset, identity, comp, tilde, minus, neg=neg, name=name)
    frame.carrier_elements = tuple(jirr)
    return frame


def roundtrip_algebra(alg: FinAlgebra) -> list[int]:
    """Verify alg is isomorphic to the complex algebra of its dual frame.

    Returns the witness psi as a list: element a maps to the index of the
    upset of join-irreducibles below a.  Failure raises, because the
    round-trip holds for every valid finite input.
    """
    frame = dual_frame(alg)
    jirr = frame.carrier_elements
    back = complex_algebra(frame)
    if back.size != alg.size:
        raise InternalCheckError(
            f"round-trip changed the carrier size: {alg.size} -> {back.size}"
        )
    ups_index = {m: i for i, m in enumerate(frame.upsets)}
    psi = []
    for a in range(alg.size):
        image = mask_of(i for i, j in enumerate(jirr) if alg.leq[j, a])
        if image not in ups_index:
            raise InternalCheckError(f"psi({a}) is not an upset of the dual frame")
        psi.append(ups_index[image])
    _verify_algebra_iso(alg, back, psi)
    return psi


def _verify_algebra_iso(a: FinAlgebra, b: FinAlgebra, image):
    img = np.asarray(image)
    if sorted(image) != list(range(a.size)):
        raise InternalCheckError("round-trip witness is not a bijection")
    if not np.array_equal(a.leq, b.leq[np.ix_(img, img)]):
        raise InternalCheckError("round-trip witness does not preserve the order")
    if int(img[a.one]) != b.one:
        raise InternalCheckError("round-trip witness does not preserve the unit")
    if not np.array_equal(img[a.product], b.product[np.ix_(img, img)]):
        raise InternalCheckError("round-trip witness does not preserve the product")
    for what, ua, ub in (("tilde", a.tilde, b.tilde), ("minus", a.minus, b.minus)):
        if not np.array_equal(img[ua], ub[img]):
            raise InternalCheckError(f"round-trip witness does not preserve {what}")
    if (a.neg is None) != (b.neg is None):
        raise InternalCheckError("round-trip changed the signature")
    if a.neg is not None and not np.array_equal(img[a.neg], b.neg[img]):
        raise InternalCheckError("round-trip witness does not preserve neg")


def roundtrip_frame(frame: Frame) -> list[int]:
    """Verify the frame is isomorphic to the dual frame of its complex algebra.

    Returns the witness sending a point x to the position of the principal
    upset at x.
    """
    alg = complex_algebra(frame)
    back = dual_frame(alg)
    jirr = back.carrier_elements
    ups_index = {m: i for i, m in enumerate(frame.upsets)}
    image = []
    for x in range(frame.size):
        principal = frame.poset.up[x]
        a = ups_index[principal]
        if a not in jirr:
            raise InternalCheckError(f"principal upset at {x} is not join-irreducible")
        image.append(jirr.index(a))
    _verify_frame_iso(frame, back, image)
    return image


def _verify_frame_iso(f1: Frame, f2: Frame, image):
    n = f1.size
    if sorted(image) != list(range(n)) or f2.size != n:
        raise InternalCheckError("frame witness is not a bijection")

    def move(mask):
        return mask_of(image[i] for i in bits(mask))

    for x in range(n):
        if move(f1.poset.up[x]) != f2.poset.up[image[x]]:
            raise InternalCheckError("frame witness does not preserve the order")
        if f2.tilde[image[x]] != image[f1.tilde[x]]:
            raise InternalCheckError("frame witness does not preserve tilde")
        if f2.minus[image[x]] != image[f1.minus[x]]:
            raise InternalCheckError("frame witness does not preserve minus")
        if f1.neg is not None and f2.neg[image[x]] != image[f1.neg[x]]:
            raise InternalCheckError("frame witness does not preserve neg")
    if move(f1.identity) != f2.identity:
        raise InternalCheckError("frame witness does not preserve the identity set")
    if (f1.neg is None) != (f2.neg is None):
        raise InternalCheckError("frame witness changed the signature")
    for x in range(n):
        for y in range(n):
            if move(f1.comp[x][y]) != f2.comp[image[x]][image[y]]:
                raise InternalCheckError("frame witness does not preserve composition")


def _frame_profile(frame: Frame):
    poset_profile = frame.poset._profile()
    prof = []
    for x in range(frame.size):
        prof.append(
            (
                poset_profile[x],
                (frame.identity >> x) & 1,
                frame.tilde[x] == x,
                frame.minus[x] == x,
                -1 if frame.neg is None else int(frame.neg[x] == x),
                popcount(frame.comp[x][x]),
                (frame.comp[x][x] >> x) & 1,
            )
        )
    return prof


def frame_iso(f1: Frame, f2: Frame):
    """A structure-preserving bijection f1 -> f2, or None; deterministic."""
    if (f1.neg is None) != (f2.neg is None):
        raise SignatureError("cannot compare frames with different signatures")
    if f1.size != f2.size:
        return None
    n = f1.size
    p1, p2 = _frame_profile(f1), _frame_profile(f2)
    if sorted(p1) != sorted(p2):
        return None
    image = [-1] * n
    used = [False] * n

    def consistent(x, j):
        if p1[x] != p2[j]:
            return False
        if bool((f1.identity >> x) & 1) != bool((f2.identity >> j) & 1):
            return False
        for k in range(x):
            m = image[k]
            if f1.poset.leq(x, k) != f2.poset.leq(j, m):
                return False
            if f1.poset.leq(k, x) != f2.poset.leq(m, j):
                return False
        for u1, u2 in ((f1.tilde, f2.tilde), (f1.minus, f2.minus)) + (
            ((f1.neg, f2.neg),) if f1.neg is not None else ()
        ):
            t = u1[x]
            if image[t] != -1 and u2[j] != image[t]:
                return False
        return True

    def full_check(image):
        try:
            _verify_frame_iso(f1, f2, image)
            return True
        except InternalCheckError:
            return False

    def place(x):
        if x == n:
            return full_check(image)
        for j in range(n):
            if used[j] or not consistent(x, j):
                continue
            image[x] = j
            used[j] = True
            if place(x + 1):
                return True
            used[j] = False
            image[x] = -1
        return False

    if n == 0:
        return []
    if place(0):
        return list(image)
    return None
