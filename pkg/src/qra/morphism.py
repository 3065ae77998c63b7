"""Frame morphisms, algebra homomorphisms, and the contravariant duals.

A frame morphism is checked against the bounded-morphism style conditions
(order preservation, forward and back composition conditions, commuting
with the unary maps, identity preimage).  Its dual acts on upsets by
preimage.  An algebra homomorphism dualises to the map sending a
join-irreducible b to the meet of the preimage of its principal filter;
at finite scale complete preservation is ordinary preservation.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .algebra import FinAlgebra, ValidationReport, join_irreducibles
from .errors import BudgetExhausted, InternalCheckError, SignatureError, StructuralError
from .frame import Frame, complex_algebra, dual_frame
from .order import bits, mask_of


@dataclass
class FrameMap:
    source: Frame
    target: Frame
    map: tuple[int, ...]

    def __post_init__(self):
        self.map = tuple(int(v) for v in self.map)
        if len(self.map) != self.source.size:
            raise StructuralError("map length differs from the source carrier")
        if any(not 0 <= v < self.target.size for v in self.map):
            raise StructuralError("map image out of range")

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def is_order_embedding(self) -> bool:
        f = self.map
        return all(
            self.source.leq(x, y) == self.target.leq(f[x], f[y])
            for x in range(self.source.size)
            for y in range(self.source.size)
        )


@dataclass
class AlgHom:
    source: FinAlgebra
    target: FinAlgebra
    map: tuple[int, ...]

    def __post_init__(self):
        self.map = tuple(int(v) for v in self.map)
        if len(self.map) != self.source.size:
            raise StructuralError("map length differs from the source carrier")
        if any(not 0 <= v < self.target.size for v in self.map):
            raise StructuralError("map image out of range")

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.size

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def is_complete(self) -> bool:
        """Preserves empty meets and joins as well, i.e. both bounds.

        Nonempty meets and joins reduce to the binary ones on a finite
        carrier, so this is the only extra content of completeness here.
        """
        return (
            self.map[self.source.bottom] == self.target.bottom
            and self.map[self.source.top] == self.target.top
        )

    def is_order_embedding(self) -> bool:
        f = self.map
        return all(
            bool(self.source.leq[x, y]) == bool(self.target.leq[f[x], f[y]])
            for x in range(self.source.size)
            for y in range(self.source.size)
        )


def validate_frame_morphism(fm: FrameMap) -> ValidationReport:
    """Check all frame-morphism conditions, collecting each violation."""
    rep = ValidationReport(subject="frame morphism")
    w1, w2, f = fm.source, fm.target, fm.map
    if (w1.neg is None) != (w2.neg is None):
        raise SignatureError("source and target have different signatures")
    n1, n2 = w1.size, w2.size
    for x in range(n1):
        for y in range(n1):
            if w1.leq(x, y) and not w2.leq(f[x], f[y]):
                rep.add("order_preserving", (x, y))
    for x in range(n1):
        for y in range(n1):
            cell = w1.comp[x][y]
            target_cell = w2.comp[f[x]][f[y]]
            for z in bits(cell):
                if not (target_cell >> f[z]) & 1:
                    rep.add("forward_composition", (x, y, z))
    for u in range(n2):
        for v in range(n2):
            cell2 = w2.comp[u][v]
            for z in range(n1):
                if not (cell2 >> f[z]) & 1:
                    continue
                witnessed = any(
                    w2.leq(u, f[x]) and w2.leq(v, f[y]) and w1.contains(x, y, z)
                    for x in range(n1)
                    for y in range(n1)
                )
                if not witnessed:
                    rep.add("back_composition", (u, v, z))
    for x in range(n1):
        if f[w1.tilde[x]] != w2.tilde[f[x]]:
            rep.add("tilde_commutes", (x,))
        if f[w1.minus[x]] != w2.minus[f[x]]:
            rep.add("minus_commutes", (x,))
    preimage = mask_of(x for x in range(n1) if (w2.identity >> f[x]) & 1)
    if preimage != w1.identity:
        rep.add("identity_preimage", (w1.identity, preimage))
    if w1.neg is not None:
        for x in range(n1):
            if f[w1.neg[x]] != w2.neg[f[x]]:
                rep.add("neg_commutes", (x,))
    return rep


def frame_morphism_dual(fm: FrameMap) -> AlgHom:
    """The preimage map on upsets, from the target's complex algebra to the
    source's."""
    w1, w2, f = fm.source, fm.target, fm.map
    a2 = complex_algebra(w2)
    a1 = complex_algebra(w1)
    index1 = {m: i for i, m in enumerate(w1.upsets)}
    mapping = []
    for u2 in w2.upsets:
        pre = mask_of(x for x in range(w1.size) if (u2 >> f[x]) & 1)
        if pre not in index1:
            raise InternalCheckError("preimage of an upset is not an upset")
        mapping.append(index1[pre])
    hom = AlgHom(source=a2, target=a1, map=tuple(mapping))
    rep = validate_homomorphism(hom)
    if not rep.ok:
        raise InternalCheckError(f"dual of a frame morphism failed validation: {rep.summary()}")
    return hom


def validate_homomorphism(h: AlgHom) -> ValidationReport:
    """Preservation of meet, join, product, unit and all negations.

    Finite carriers make complete preservation the same as plain
    preservation, which the report notes."""
    rep = ValidationReport(subject="homomorphism")
    rep.notes.append("finite carrier: complete preservation equals preservation")
    a, b, f = h.source, h.target, np.asarray(h.map)
    if (a.neg is None) != (b.neg is None):
        raise SignatureError("source and target have different signatures")
    if int(f[a.one]) != b.one:
        rep.add("unit_preserved", (a.one,))
    pairs_meet = f[a.meet_table] != b.meet_table[np.ix_(f, f)]
    for x, y in np.argwhere(pairs_meet)[:5]:
        rep.add("meet_preserved", (int(x), int(y)))
    pairs_join = f[a.join_table] != b.join_table[np.ix_(f, f)]
    for x, y in np.argwhere(pairs_join)[:5]:
        rep.add("join_preserved", (int(x), int(y)))
    pairs_prod = f[a.product] != b.product[np.ix_(f, f)]
    for x, y in np.argwhere(pairs_prod)[:5]:
        rep.add("product_preserved", (int(x), int(y)))
    for what, ua, ub in (("tilde", a.tilde, b.tilde), ("minus", a.minus, b.minus)):
        bad = f[ua] != ub[f]
        for (x,) in np.argwhere(bad)[:5]:
            rep.add(f"{what}_preserved", (int(x),))
    if a.neg is not None:
        bad = f[a.neg] != b.neg[f]
        for (x,) in np.argwhere(bad)[:5]:
            rep.add("neg_preserved", (int(x),))
    return rep


def principal_preimage_meet(h: AlgHom, target_elt: int) -> int:
    """meet of h^{-1}[up target_elt]; the empty meet is the source's top."""
    a, b, f = h.source, h.target, h.map
    pre = mask_of(x for x in range(a.size) if b.leq[target_elt, f[x]])
    return a.meet_mask(pre)


def hom_dual(h: AlgHom) -> FrameMap:
    """The dual frame morphism J(B) -> J(A), b -> meet of h^{-1}[up b].

    The meet of an empty preimage is the top of the source lattice, which
    exists because finite lattices are bounded.  Requires a complete
    homomorphism: without bound preservation the meet can fall outside the
    join-irreducibles and the dual is not defined.
    """
    from .errors import PreconditionError

    if not h.is_complete():
        raise PreconditionError(
            "homomorphism does not preserve the lattice bounds; "
            "its dual on join-irreducibles is not defined"
        )
    a, b, f = h.source, h.target, h.map
    fa, fb = dual_frame(a), dual_frame(b)
    jirr_a, jirr_b = fa.carrier_elements, fb.carrier_elements
    pos_a = {v: i for i, v in enumerate(jirr_a)}
    mapping = []
    for jb in jirr_b:
        val = principal_preimage_meet(h, jb)
        if val not in pos_a:
            raise InternalCheckError(
                "meet of a principal-filter preimage is not join-irreducible"
            )
        mapping.append(pos_a[val])
    fm = FrameMap(source=fb, target=fa, map=tuple(mapping))
    rep = validate_frame_morphism(fm)
    if not rep.ok:
        raise InternalCheckError(f"dual of a homomorphism failed validation: {rep.summary()}")
    return fm


def enumerate_homs(a: FinAlgebra, b: FinAlgebra, budget: int = 10_000_000) -> list[AlgHom]:
    """All homomorphisms a -> b, in lexicographic order of the map tuple.

    Every element is the join of the bottom with the join-irreducibles
    below it, so images are assigned to bottom plus the join-irreducibles
    (monotonically, pruning on order violations) and extended by joins.
    The bottom needs its own image because homomorphisms in this
    signature do not have to preserve lattice bounds.
    """
    if (a.neg is None) != (b.neg is None):
        raise SignatureError("source and target have different signatures")
    gens = [a.bottom] + [j for j in join_irreducibles(a) if j != a.bottom]
    if b.size ** len(gens) > budget:
        raise BudgetExhausted(
            f"homomorphism search space {b.size}^{len(gens)} exceeds budget {budget}"
        )
    out = []
    assignment = {}

    def extend_and_check():
        f = []
        for x in range(a.size):
            acc = assignment[a.bottom]
            for j in gens[1:]:
                if a.leq[j, x]:
                    acc = int(b.join_table[acc, assignment[j]])
            f.append(acc)
        hom = AlgHom(source=a, target=b, map=tuple(f))
        if validate_homomorphism(hom).ok:
            out.append(hom)

    def place(k):
        if k == len(gens):
            extend_and_check()
            return
        j = gens[k]
        for v in range(b.size):
            ok = True
            for j2 in gens[:k]:
                if a.leq[j2, j] and not b.leq[assignment[j2], v]:
                    ok = False
                    break
                if a.leq[j, j2] and not b.leq[v, assignment[j2]]:
                    ok = False
                    break
            if ok:
                assignment[j] = v
                place(k + 1)
                del assignment[j]

    place(0)
    out.sort(key=lambda h: h.map)
    return out
