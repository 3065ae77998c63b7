"""Exhaustive, isomorphism-free enumeration of frames over a fixed poset.

The search fixes an identity upset and an order reversing bijection for
``tilde`` (its inverse is ``minus``), then fills the ternary relation
``z in x o y`` bit by bit.  Three families of facts propagate eagerly:

* monotonicity: the relation is downward closed in both arguments and
  upward closed in the value slot;
* the rotation law links each triple to an orbit of up to ``3k`` triples
  that must all agree, so one decision settles the whole orbit;
* the identity law pins every cell in an identity row or column to a
  subset of a principal upset and demands at least one witness per point,
  which unit-propagates like a clause.

Associativity is used as an interval prune while the table is partial and
becomes the exact check once it is complete.  Only poset automorphisms
can witness an isomorphism between two frames on the same poset, so a
candidate is kept exactly when its encoding is minimal in its
automorphism orbit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import BudgetExhausted
from .frame import Frame, empty_frame
from .order import Poset, bits


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    leaves: int = 0
    wall_s: float = 0.0


@dataclass
class Budget:
    max_nodes: int | None = None
    max_ms: float | None = None
    _deadline: float | None = field(default=None, repr=False)

    def start(self):
        if self.max_ms is not None:
            self._deadline = time.monotonic() + self.max_ms / 1000.0

    def exceeded(self, nodes: int) -> bool:
        if self.max_nodes is not None and nodes > self.max_nodes:
            return True
        if self._deadline is not None and time.monotonic() > self._deadline:
            return True
        return False


class _BranchSearch:
    """DFS over the undecided relation bits for one (identity, tilde) pair."""

    def __init__(self, poset: Poset, identity: int, tilde, stats: SearchStats,
                 budget: Budget | None):
        self.poset = poset
        self.n = poset.n
        self.carrier = poset.carrier
        self.identity = identity
        self.tilde = tuple(tilde)
        self.minus = tuple(self.tilde.index(i) for i in range(self.n))
        self.stats = stats
        self.budget = budget
        n = self.n
        self.up = poset.up
        self.down = poset.down
        self.up_list = [list(bits(poset.up[x])) for x in range(n)]
        self.down_list = [list(bits(poset.down[x])) for x in range(n)]
        self.t = [[0] * n for _ in range(n)]
        self.f = [[0] * n for _ in range(n)]
        self.solutions: list[tuple[tuple[int, ...], ...]] = []

    # -- propagation ---------------------------------------------------

    def _assign(self, x, y, z, value) -> bool:
        """Set one bit and close under rotation and monotonicity."""
        minus, up, down = self.minus, self.up, self.down
        t, f = self.t, self.f
        stack = [(x, y, z, value)]
        while stack:
            a, b, c, val = stack.pop()
            bit = 1 << c
            if val:
                if f[a][b] & bit:
                    return False
                if t[a][b] & bit:
                    continue
                t[a][b] |= bit
                stack.append((minus[c], a, minus[b], True))
                for a2 in self.down_list[a]:
                    for b2 in self.down_list[b]:
                        add = up[c] & ~t[a2][b2]
                        if add:
                            for c2 in bits(add):
                                stack.append((a2, b2, c2, True))
            else:
                if t[a][b] & bit:
                    return False
                if f[a][b] & bit:
                    continue
                f[a][b] |= bit
                stack.append((minus[c], a, minus[b], False))
                for a2 in self.up_list[a]:
                    for b2 in self.up_list[b]:
                        add = down[c] & ~f[a2][b2]
                        if add:
                            for c2 in bits(add):
                                stack.append((a2, b2, c2, False))
        return True

    def _force_identity_witnesses(self) -> bool:
        """Unit-propagate 'some identity point composes x back to x'."""
        t, f = self.t, self.f
        ibits = list(bits(self.identity))
        changed = True
        while changed:
            changed = False
            for x in range(self.n):
                for triples in (
                    [(i, x) for i in ibits],
                    [(x, i) for i in ibits],
                ):
                    if any((t[a][b] >> x) & 1 for a, b in triples):
                        continue
                    open_ = [(a, b) for a, b in triples if not (f[a][b] >> x) & 1]
                    if not open_:
                        return False
                    if len(open_) == 1:
                        a, b = open_[0]
                        if not self._assign(a, b, x, True):
                            return False
                        changed = True
        return True

    def _associativity_cut(self) -> bool:
        """Interval check of (x o y) o z = x o (y o z); exact when complete."""
        t, f, carrier, n = self.t, self.f, self.carrier, self.n
        for x in range(n):
            tx, fx = t[x], f[x]
            for y in range(n):
                ty, fy = t[y], f[y]
                poss_xy = carrier & ~fx[y]
                true_xy = tx[y]
                for z in range(n):
                    lo_l = 0
                    for u in bits(true_xy):
                        lo_l |= t[u][z]
                    hi_l = 0
                    for u in bits(poss_xy):
                        hi_l |= carrier & ~f[u][z]
                    lo_r = 0
                    for v in bits(ty[z]):
                        lo_r |= tx[v]
                    hi_r = 0
                    for v in bits(carrier & ~fy[z]):
                        hi_r |= carrier & ~fx[v]
                    if lo_l & ~hi_r or lo_r & ~hi_l:
                        return False
        return True

    def _snapshot(self):
        return [row[:] for row in self.t], [row[:] for row in self.f]

    def _restore(self, snap):
        ts, fs = snap
        self.t = [row[:] for row in ts]
        self.f = [row[:] for row in fs]

    def _next_undecided(self):
        for x in range(self.n):
            for y in range(self.n):
                open_ = self.carrier & ~(self.t[x][y] | self.f[x][y])
                if open_:
                    return x, y, (open_ & -open_).bit_length() - 1
        return None

    def run(self) -> list[tuple[tuple[int, ...], ...]]:
        if self.identity and not self.poset.is_upset(self.identity):
            return []
        ok = True
        for i in bits(self.identity):
            for x in range(self.n):
                blocked = self.carrier & ~self.up[x]
                for y in bits(blocked):
                    if not self._assign(i, x, y, False) or not self._assign(
                        x, i, y, False
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            ok = self._force_identity_witnesses() and self._associativity_cut()
        if ok:
            self._dfs()
        return self.solutions

    def _dfs(self):
        self.stats.nodes += 1
        if self.budget is not None and self.budget.exceeded(self.stats.nodes):
            raise BudgetExhausted("frame search budget exceeded")
        pick = self._next_undecided()
        if pick is None:
            self.stats.leaves += 1
            self.solutions.append(tuple(tuple(row) for row in self.t))
            return
        x, y, z = pick
        for value in (True, False):
            snap = self._snapshot()
            if (
                self._assign(x, y, z, value)
                and self._force_identity_witnesses()
                and self._associativity_cut()
            ):
                self._dfs()
            else:
                self.stats.prunes += 1
            self._restore(snap)


def _neg_candidates(poset: Poset):
    return [g for g in poset.order_reversing_bijections
            if all(g[g[x]] == x for x in range(poset.n))]


def _neg_compatible(comp, tilde, minus, neg, n) -> bool:
    for x in range(n):
        tx = neg[tilde[x]]
        for y in range(n):
            cell = comp[x][y]
            twisted = comp[neg[tilde[y]]][tx]
            for z in range(n):
                if ((cell >> minus[z]) & 1) != ((twisted >> neg[z]) & 1):
                    return False
    return True


def _relabel_encoding(poset, perm, identity, tilde, comp, neg):
    n = poset.n
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i

    def move(mask):
        out = 0
        for i in bits(mask):
            out |= 1 << perm[i]
        return out

    ident2 = move(identity)
    tilde2 = tuple(perm[tilde[inv[x]]] for x in range(n))
    comp2 = tuple(move(comp[inv[x]][inv[y]]) for x in range(n) for y in range(n))
    neg2 = None if neg is None else tuple(perm[neg[inv[x]]] for x in range(n))
    return (ident2, tilde2, neg2 if neg2 is not None else (), comp2)


def _is_orbit_minimal(poset, identity, tilde, comp, neg) -> bool:
    mine = _relabel_encoding(poset, tuple(range(poset.n)), identity, tilde, comp, neg)
    for g in poset.automorphisms:
        if _relabel_encoding(poset, g, identity, tilde, comp, neg) < mine:
            return False
    return True


@dataclass
class EnumerationResult:
    poset: Poset
    signature: str
    frames: list[Frame]
    stats: SearchStats
    checkpoint: dict | None = None  # populated when a budget ran out

    @property
    def count(self) -> int:
        return len(self.frames)


def search_branches(poset: Poset):
    """All (identity upset, tilde) pairs, in deterministic order."""
    if poset.n == 0:
        return []
    return [
        (identity, tilde)
        for identity in poset.upsets
        if identity
        for tilde in poset.order_reversing_bijections
    ]


def run_branch(poset: Poset, signature: str, identity: int, tilde,
               stats: SearchStats | None = None, budget: Budget | None = None):
    """All frames for one branch as encodings; used by the parallel driver."""
    stats = stats if stats is not None else SearchStats()
    searcher = _BranchSearch(poset, identity, tilde, stats, budget)
    minus = searcher.minus
    out = []
    for comp in searcher.run():
        if signature == "dinfl":
            if _is_orbit_minimal(poset, identity, tilde, comp, None):
                out.append((identity, tilde, comp, None))
        else:
            for neg in _neg_candidates(poset):
                if _neg_compatible(comp, tilde, minus, neg, poset.n):
                    if _is_orbit_minimal(poset, identity, tilde, comp, tuple(neg)):
                        out.append((identity, tilde, comp, tuple(neg)))
    return out


def _branch_worker(args):
    """Run one branch in a separate process; returns picklable encodings."""
    up, name, signature, identity, tilde, max_nodes, max_ms = args
    poset = Poset(up, name=name)
    budget = None
    if max_nodes is not None or max_ms is not None:
        budget = Budget(max_nodes=max_nodes, max_ms=max_ms)
        budget.start()
    stats = SearchStats()
    try:
        encs = run_branch(poset, signature, identity, tilde, stats, budget)
        return ("ok", encs, stats.nodes)
    except BudgetExhausted:
        return ("budget", [], stats.nodes)


def _frame_from_encoding(poset, signature, enc, index) -> Frame:
    identity, tilde, comp, neg = enc
    n = poset.n
    minus = tuple(tilde.index(i) for i in range(n))
    comp_rows = [list(row) for row in comp]
    return Frame(poset, identity, comp_rows, tilde, minus,
                 neg=list(neg) if neg is not None else None,
                 name=f"{poset.name or 'poset'}#{signature}{index}")


def enumerate_frames(poset: Poset, signature: str = "dqra",
                     budget: Budget | None = None,
                     resume: dict | None = None,
                     jobs: int = 1) -> EnumerationResult:
    """All frames over the poset up to isomorphism, deterministically ordered.

    A non-self-dual poset admits no order reversing tilde, so the result
    is empty.  When the budget runs out a ``BudgetExhausted`` is raised
    whose checkpoint carries the completed branches; pass it back through
    ``resume`` to continue.
    """
    if signature not in ("dinfl", "dqra"):
        raise ValueError(f"unknown signature {signature!r}")
    stats = SearchStats()
    start = time.monotonic()
    if budget is not None:
        budget.start()
    if poset.n == 0:
        frame = empty_frame(name=f"empty#{signature}")
        if signature == "dqra":
            frame = frame.with_neg(())
        return EnumerationResult(poset, signature, [frame], stats)

    branches = search_branches(poset)
    done_encodings: list = []
    first_branch = 0
    if resume is not None:
        if resume.get("poset_key") != poset.canonical_key or resume.get("signature") != signature:
            raise ValueError("resume checkpoint does not match this search")
        done_encodings = list(resume["encodings"])
        first_branch = resume["next_branch"]

    encodings = done_encodings

    def checkpointed_stop(idx):
        stats.wall_s = time.monotonic() - start
        checkpoint = {
            "poset_key": poset.canonical_key,
            "signature": signature,
            "encodings": encodings,
            "next_branch": idx,
        }
        raise BudgetExhausted(
            f"stopped before branch {idx + 1}/{len(branches)}",
            checkpoint=checkpoint,
        ) from None

    if jobs > 1 and len(branches) - first_branch > 1:
        # fork at the (identity, tilde) level; results merge in branch
        # order so the outcome matches the sequential run
        import concurrent.futures as cf

        args = [
            (poset.up, poset.name, signature, branches[idx][0], branches[idx][1],
             None if budget is None else budget.max_nodes,
             None if budget is None else budget.max_ms)
            for idx in range(first_branch, len(branches))
        ]
        with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_branch_worker, args))
        for offset, (status, encs, nodes) in enumerate(results):
            stats.nodes += nodes
            if status == "budget":
                checkpointed_stop(first_branch + offset)
            encodings.extend(encs)
    else:
        for idx in range(first_branch, len(branches)):
            identity, tilde = branches[idx]
            try:
                encodings.extend(run_branch(poset, signature, identity, tilde,
                                            stats, budget))
            except BudgetExhausted:
                checkpointed_stop(idx)
    encodings.sort(key=lambda e: (e[0], e[1], e[2], e[3] or ()))
    frames = [
        _frame_from_encoding(poset, signature, enc, i)
        for i, enc in enumerate(encodings)
    ]
    stats.wall_s = time.monotonic() - start
    return EnumerationResult(poset, signature, frames, stats)
