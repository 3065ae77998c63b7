"""Censuses: posets, frames over them, and algebra counts by cardinality.

An algebra of cardinality n arises exactly from a frame whose poset has n
upsets, and only self-dual posets carry frames at all (an order reversing
tilde must exist).  Counting algebras of size n therefore sums the frame
counts over the self-dual posets with exactly n upsets; the empty poset
contributes the one-element algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .frame import complex_algebra
from .order import CENSUS_ORDER, NAMED_POSETS, Poset, all_posets, poset_display_name
from .search import Budget, enumerate_frames

MAX_POSET_SIZE = 7


@dataclass
class PosetShape:
    poset: Poset
    name: str
    self_dual: bool
    upset_count: int


def enumerate_posets(max_size: int) -> list[PosetShape]:
    """All nonisomorphic posets of size <= max_size, flagged self-dual."""
    if max_size > MAX_POSET_SIZE:
        raise PreconditionError(
            f"poset census capped at {MAX_POSET_SIZE} elements"
        )
    out = []
    for p in all_posets(max_size):
        out.append(
            PosetShape(
                poset=p,
                name=poset_display_name(p),
                self_dual=p.is_self_dual,
                upset_count=len(p.upsets),
            )
        )
    return out


def posets_with_upset_count(n: int) -> list[Poset]:
    """Self-dual posets whose upset lattice has exactly n elements."""
    if n == 1:
        return [Poset(())]
    out = []
    for shape in enumerate_posets(min(n - 1, MAX_POSET_SIZE)):
        if shape.upset_count == n and shape.self_dual:
            out.append(shape.poset)
    return out


def count_frames(poset: Poset, budget: Budget | None = None,
                 jobs: int = 1) -> tuple[int, int]:
    di = enumerate_frames(poset, "dinfl", budget=budget, jobs=jobs).count
    dq = enumerate_frames(poset, "dqra", budget=budget, jobs=jobs).count
    return di, dq


def count_algebras(n: int, budget: Budget | None = None,
                   jobs: int = 1) -> tuple[int, int]:
    """(number of DInFL-algebras, number of DqRAs) of cardinality n."""
    if n < 1:
        raise PreconditionError("cardinality must be at least 1")
    if n > MAX_POSET_SIZE + 1:
        # a poset of size k has at least k+1 upsets, so cardinality n
        # needs posets up to size n-1 and the census stops there
        raise PreconditionError(
            f"cardinality {n} needs posets beyond the supported census"
        )
    di = dq = 0
    for poset in posets_with_upset_count(n):
        a, b = count_frames(poset, budget=budget, jobs=jobs)
        di += a
        dq += b
    return di, dq


def enumerate_algebras(n: int, signature: str = "dqra", budget: Budget | None = None,
                       jobs: int = 1):
    """All algebras of cardinality n up to isomorphism, as complex algebras
    of the enumerated frames; deterministic order."""
    out = []
    for poset in posets_with_upset_count(n):
        result = enumerate_frames(poset, signature, budget=budget, jobs=jobs)
        for frame in result.frames:
            out.append(complex_algebra(frame))
    return out


def census_table(max_size: int, budget: Budget | None = None,
                 jobs: int = 1) -> dict:
    """Frame counts for the named census posets plus algebra counts by size."""
    per_poset = {}
    for name in CENSUS_ORDER:
        poset = NAMED_POSETS[name]
        if poset.n > max_size:
            continue
        per_poset[name] = count_frames(poset, budget=budget, jobs=jobs)
    by_size = {}
    for n in range(1, max_size + 1):
        by_size[n] = count_algebras(n, budget=budget, jobs=jobs)
    return {"per_poset": per_poset, "by_size": by_size}
