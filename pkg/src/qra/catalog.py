"""Reconstruction of the named algebra catalog from its Hasse-diagram data.

Each bundled entry pins a handful of products; the rest follow from the
unit law, idempotence, commutativity, annihilation by the lattice bottom
(the product preserves all joins, the empty one included), join
expansion, and monotone interpolation between equal products.  Any cell
still open is settled by demanding a unique completion that passes full
validation; more than one survivor would mean the diagram underdetermines
the algebra and raises instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import (
    FinAlgebra,
    algebra_iso,
    plus_table,
    validate_dinfl,
    validate_dqra,
)
from .catalog_data import (
    CATALOG_ENTRIES,
    ONLY_NEG,
    REPRESENTABILITY,
    SECOND_NEG,
)
from .errors import InternalCheckError, StructuralError
from .order import Poset, bits, mask_of


def _lattice_from_covers(n, covers):
    up = [1 << i for i in range(n)]
    changed = True
    while changed:
        changed = False
        for lo, hi in covers:
            new = up[lo] | up[hi]
            if new != up[lo]:
                up[lo] = new
                changed = True
    return Poset(tuple(up))


class _Tables:
    """Join/meet tables for a lattice given as a Poset."""

    def __init__(self, poset: Poset):
        self.poset = poset
        n = poset.n
        uppers = {poset.up[i]: i for i in range(n)}
        lowers = {poset.down[i]: i for i in range(n)}
        self.join = [[uppers[poset.up[i] & poset.up[j]] for j in range(n)] for i in range(n)]
        self.meet = [[lowers[poset.down[i] & poset.down[j]] for j in range(n)] for i in range(n)]
        self.bottom = uppers[poset.carrier]
        self.top = lowers[poset.carrier]


def _parse_entry(name, covers, labels, styles):
    n = len(labels)
    poset = _lattice_from_covers(n, covers)
    tables = _Tables(poset)
    names = {"T": tables.top}
    equations = []  # (xname, yname, node)
    for node, label in enumerate(labels):
        if not label:
            continue
        for token in label.split("="):
            if len(token) == 1:
                if token in names and names[token] != node:
                    raise StructuralError(f"{name}: symbol {token} named twice")
                names[token] = node
            elif len(token) == 2:
                x, y = token[0], (token[0] if token[1] == "2" else token[1])
                equations.append((x, y, node))
            else:
                raise StructuralError(f"{name}: bad token {token!r}")
    if "1" not in names:
        if n != 1:
            raise StructuralError(f"{name}: unit not named")
        names["1"] = 0
    names.setdefault("0", tables.bottom)
    return poset, tables, names, equations


def _deduce_products(name, poset, tables, names, equations, styles):
    """Fill the product table as far as the diagram rules go; -1 is open."""
    n = poset.n
    one, bottom = names["1"], tables.bottom
    join = tables.join
    commutative = all(s in "io" for s in styles)
    idempotent = [s in "iI" for s in styles]
    prod = [[-1] * n for _ in range(n)]

    def put(x, y, v):
        if prod[x][y] == -1:
            prod[x][y] = v
            return True
        if prod[x][y] != v:
            raise StructuralError(
                f"{name}: product conflict at ({x},{y}): {prod[x][y]} vs {v}"
            )
        return False

    for xn, yn, node in equations:
        if xn not in names or yn not in names:
            raise StructuralError(f"{name}: equation references unnamed {xn}{yn}")
        put(names[xn], names[yn], node)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            changed |= put(one, x, x)
            changed |= put(x, one, x)
            changed |= put(bottom, x, bottom)
            changed |= put(x, bottom, bottom)
            if idempotent[x]:
                changed |= put(x, x, x)
        if commutative:
            for x in range(n):
                for y in range(n):
                    if prod[x][y] != -1:
                        changed |= put(y, x, prod[x][y])
        # join expansion: (u or w).y = u.y or w.y
        for x in range(n):
            for y in range(n):
                if prod[x][y] != -1:
                    continue
                for u in bits(poset.down[x]):
                    if u == x:
                        continue
                    for w in bits(poset.down[x]):
                        if join[u][w] != x:
                            continue
                        if prod[u][y] != -1 and prod[w][y] != -1:
                            changed |= put(x, y, join[prod[u][y]][prod[w][y]])
                            break
                    if prod[x][y] != -1:
                        break
                if prod[x][y] != -1:
                    continue
                for u in bits(poset.down[y]):
                    if u == y:
                        continue
                    for w in bits(poset.down[y]):
                        if join[u][w] != y:
                            continue
                        if prod[x][u] != -1 and prod[x][w] != -1:
                            changed |= put(x, y, join[prod[x][u]][prod[x][w]])
                            break
                    if prod[x][y] != -1:
                        break
        # monotone interpolation between equal known products
        for x in range(n):
            for y in range(n):
                if prod[x][y] != -1:
                    continue
                lows = {
                    prod[u][v]
                    for u in bits(poset.down[x])
                    for v in bits(poset.down[y])
                    if prod[u][v] != -1
                }
                highs = {
                    prod[u][v]
                    for u in bits(poset.up[x])
                    for v in bits(poset.up[y])
                    if prod[u][v] != -1
                }
                pinch = lows & highs
                if len(pinch) > 1:
                    raise StructuralError(f"{name}: interpolation conflict at ({x},{y})")
                if pinch:
                    changed |= put(x, y, pinch.pop())
    return prod


def _negations_from_zero(poset, tables, prod, zero):
    """tilde/minus as the largest solutions of x.y <= zero; None if absent."""
    n = poset.n
    tilde, minus = [], []
    for a in range(n):
        for out, row in ((tilde, [prod[a][x] for x in range(n)]),
                         (minus, [prod[x][a] for x in range(n)])):
            sat = mask_of(x for x in range(n) if (poset.up[row[x]] >> zero) & 1)
            best = None
            for x in bits(sat):
                if sat & ~poset.down[x] == 0:
                    best = x
                    break
            if best is None:
                return None, None
            out.append(best)
    return tilde, minus


def _complete(name, poset, tables, names, prod, styles):
    """Search the open cells for the unique completion passing validation."""
    n = poset.n
    join, meet = tables.join, tables.meet
    zero = names["0"]
    open_cells = [(x, y) for x in range(n) for y in range(n) if prod[x][y] == -1]
    solutions = []

    def bounds(x, y):
        lo, hi = tables.bottom, tables.top
        for u in bits(poset.down[x]):
            for v in bits(poset.down[y]):
                if prod[u][v] != -1:
                    lo = join[lo][prod[u][v]]
        for u in bits(poset.up[x]):
            for v in bits(poset.up[y]):
                if prod[u][v] != -1:
                    hi = meet[hi][prod[u][v]]
        return lo, hi

    def attempt():
        tilde, minus = _negations_from_zero(poset, tables, prod, zero)
        if tilde is None:
            return
        alg = FinAlgebra(
            [[bool((poset.up[i] >> j) & 1) for j in range(n)] for i in range(n)],
            prod, names["1"], tilde, minus, name=name,
        )
        if validate_dinfl(alg).ok:
            solutions.append([row[:] for row in prod])

    def fill(k):
        if len(solutions) > 1:
            return
        if k == len(open_cells):
            attempt()
            return
        x, y = open_cells[k]
        lo, hi = bounds(x, y)
        for v in range(n):
            if not (poset.up[lo] >> v) & 1 or not (poset.down[hi] >> v) & 1:
                continue
            prod[x][y] = v
            fill(k + 1)
            prod[x][y] = -1

    fill(0)
    if not solutions:
        raise InternalCheckError(f"{name}: no valid completion of the product table")
    if len(solutions) > 1:
        raise InternalCheckError(f"{name}: product table underdetermined")
    return solutions[0]


@lru_cache(maxsize=None)
def _base_algebra(name) -> FinAlgebra:
    for entry_name, covers, labels, styles in CATALOG_ENTRIES:
        if entry_name == name:
            break
    else:
        raise KeyError(name)
    poset, tables, names, equations = _parse_entry(name, covers, labels, styles)
    prod = _deduce_products(name, poset, tables, names, equations, styles)
    prod = _complete(name, poset, tables, names, prod, styles)
    n = poset.n
    tilde, minus = _negations_from_zero(poset, tables, prod, names["0"])
    alg = FinAlgebra(
        [[bool((poset.up[i] >> j) & 1) for j in range(n)] for i in range(n)],
        prod, names["1"], tilde, minus, name=name,
    )
    rep = validate_dinfl(alg)
    if not rep.ok:
        raise InternalCheckError(f"{name}: reconstruction failed validation: {rep.summary()}")
    # The node decorations double as a transcription check.
    for x in range(n):
        idem = prod[x][x] == x
        central = all(prod[x][y] == prod[y][x] for y in range(n))
        want = styles[x]
        got = {(True, True): "i", (True, False): "o", (False, True): "I", (False, False): "O"}[
            (central, idem)
        ]
        if want != got:
            raise InternalCheckError(f"{name}: node {x} drawn {want} but computed {got}")
    alg.catalog_names = {v: k for k, v in names.items() if k not in ("T",)}
    return alg


def algebra_automorphisms(alg: FinAlgebra) -> list[tuple[int, ...]]:
    """All signature automorphisms; small carriers only."""
    out = []
    n = alg.size
    image = [-1] * n
    used = [False] * n

    def ok(i, j):
        for k in range(i):
            m = image[k]
            if bool(alg.leq[i, k]) != bool(alg.leq[j, m]):
                return False
            if bool(alg.leq[k, i]) != bool(alg.leq[m, j]):
                return False
        return True

    def place(i):
        if i == n:
            cand = list(image)
            img = np.asarray(cand)
            if int(img[alg.one]) != alg.one:
                return
            if not np.array_equal(img[alg.product], alg.product[np.ix_(img, img)]):
                return
            if not np.array_equal(img[alg.tilde], alg.tilde[img]):
                return
            if not np.array_equal(img[alg.minus], alg.minus[img]):
                return
            if alg.neg is not None and not np.array_equal(img[alg.neg], alg.neg[img]):
                return
            out.append(tuple(cand))
            return
        for j in range(n):
            if not used[j] and ok(i, j):
                image[i] = j
                used[j] = True
                place(i + 1)
                used[j] = False
                image[i] = -1

    place(0)
    return out


def dqra_negations(alg: FinAlgebra) -> list[tuple[int, ...]]:
    """All De Morgan negations of a DInFL-algebra, up to automorphism.

    Candidates are the order reversing involutions (these satisfy the
    De Morgan meet law automatically); the product law cuts them down,
    and conjugate survivors are identified.
    """
    base = alg.without_neg() if alg.neg is not None else alg
    plus = plus_table(base)
    n = base.size
    valid = []
    for g in base.order_poset.order_reversing_bijections:
        if any(g[g[x]] != x for x in range(n)):
            continue
        garr = np.asarray(g)
        if np.array_equal(garr[base.product], plus[np.ix_(garr, garr)]):
            valid.append(tuple(g))
    autos = algebra_automorphisms(base)
    reps: list[tuple[int, ...]] = []
    for g in sorted(valid):
        conj = {
            tuple(sigma[g[inv[x]]] for x in range(n))
            for sigma in autos
            for inv in [tuple(sigma.index(i) for i in range(n))]
        }
        if not any(r in conj for r in reps):
            reps.append(g)
    for g in reps:
        if not validate_dqra(base.with_neg(list(g))).ok:
            raise InternalCheckError("negation candidate failed full validation")
    return reps


@dataclass
class CatalogVariant:
    neg_desc: str  # "~" when neg is tilde, otherwise e.g. "a=b"
    algebra: FinAlgebra
    status: str
    note: str

    @property
    def display_neg(self) -> str:
        if self.neg_desc == "~":
            return "neg = ~"
        x, y = self.neg_desc.split("=")
        return f"neg {x} = {y}"


@dataclass
class CatalogEntry:
    name: str
    size: int
    group: int  # involutive-lattice class
    index: int  # position inside the class
    neg_count: int
    base: FinAlgebra  # DInFL signature, no neg
    variants: list[CatalogVariant]
    element_classes: str  # one of i/o/I/O per element

    @property
    def display_name(self) -> str:
        tail = f",{self.neg_count}" if self.neg_count > 1 else ""
        return f"D^{self.size}_{{{self.group},{self.index}{tail}}}"


def _name_parts(name: str):
    bits_ = name[1:].split("_")
    vals = [int(v) for v in bits_]
    if len(vals) == 3:
        return vals[0], vals[1], vals[2], 1
    return vals[0], vals[1], vals[2], vals[3]


def _variant_desc(entry_name, alg, neg) -> str:
    if tuple(neg) == tuple(int(v) for v in alg.tilde):
        return "~"
    spec = SECOND_NEG.get(entry_name) or ONLY_NEG.get(entry_name)
    node_of = {v: k for k, v in alg.catalog_names.items()}  # name -> node
    if spec is not None:
        x, y = spec
        if x in node_of and y in node_of and neg[node_of[x]] == node_of[y]:
            return f"{x}={y}"
    raise InternalCheckError(f"{entry_name}: cannot describe the extra negation")


@lru_cache(maxsize=None)
def build_catalog() -> tuple[CatalogEntry, ...]:
    """All named algebras up to size six, each with its De Morgan variants."""
    entries = []
    for name, covers, labels, styles in CATALOG_ENTRIES:
        base = _base_algebra(name)
        negs = dqra_negations(base)
        n, m, i, k = _name_parts(name)
        if name in ONLY_NEG:
            expected = 1
        else:
            expected = k
        if len(negs) != expected:
            raise InternalCheckError(
                f"{name}: expected {expected} negations, found {len(negs)}"
            )
        variants = []
        for neg in negs:
            desc = _variant_desc(name, base, neg)
            status, note = REPRESENTABILITY[(name, desc)]
            variants.append(
                CatalogVariant(
                    neg_desc=desc,
                    algebra=base.with_neg(list(neg), name=f"{name}" + ("" if desc == "~" else f"[{desc}]")),
                    status=status,
                    note=note,
                )
            )
        variants.sort(key=lambda v: (v.neg_desc != "~", v.neg_desc))
        entries.append(
            CatalogEntry(
                name=name,
                size=n,
                group=m,
                index=i,
                neg_count=len(variants),
                base=base,
                variants=variants,
                element_classes=styles,
            )
        )
    return tuple(entries)


def catalog(max_size: int = 6) -> list[CatalogEntry]:
    if max_size > 6:
        raise StructuralError("the named catalog stops at cardinality six")
    return [e for e in build_catalog() if e.size <= max_size]


def catalog_lookup(name: str) -> CatalogEntry:
    for e in build_catalog():
        if e.name == name:
            return e
    raise KeyError(name)


def match_dinfl(alg: FinAlgebra):
    """The unique catalog entry isomorphic to a DInFL-algebra, with witness."""
    stripped = alg.without_neg() if alg.neg is not None else alg
    hits = []
    for e in build_catalog():
        if e.size != alg.size:
            continue
        w = algebra_iso(stripped, e.base)
        if w is not None:
            hits.append((e, w))
    if len(hits) != 1:
        raise InternalCheckError(
            f"algebra matches {len(hits)} catalog entries instead of one"
        )
    return hits[0]


def match_dqra(alg: FinAlgebra):
    """The unique (entry, variant) pair isomorphic to a DqRA."""
    hits = []
    for e in build_catalog():
        if e.size != alg.size:
            continue
        for v in e.variants:
            w = algebra_iso(alg, v.algebra)
            if w is not None:
                hits.append((e, v, w))
    if len(hits) != 1:
        raise InternalCheckError(
            f"algebra matches {len(hits)} catalog variants instead of one"
        )
    return hits[0]
