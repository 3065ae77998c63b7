"""Finite DInFL-algebras and distributive quasi relation algebras.

A ``FinAlgebra`` stores the full order matrix and operation tables of a
finite algebra ``(A, meet, join, prod, 1, tilde, minus[, neg])``.  The two
linear negations ``tilde`` and ``minus`` are mutually inverse order
reversing maps; ``neg`` (a De Morgan negation) is present exactly when the
algebra is presented as a DqRA.  Carriers are index based ``0..n-1`` and
all tables are immutable after construction.

Validation is exhaustive: every law is checked for all tuples and all
violations are collected, each with a witness tuple.  Checks are
vectorised with numpy so that carriers of a few hundred elements (the
relational algebras built in :mod:`qra.represent`) stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import (
    DomainError,
    InternalCheckError,
    PreconditionError,
    SignatureError,
    StructuralError,
)
from .order import Poset, bits

MAX_WITNESSES = 5


@dataclass
class ValidationReport:
    """Outcome of a validation pass: all violated laws with witnesses."""

    subject: str
    failures: list[tuple[str, tuple]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, law: str, witness: tuple):
        if sum(1 for name, _ in self.failures if name == law) < MAX_WITNESSES:
            self.failures.append((law, witness))

    def laws_violated(self) -> list[str]:
        seen = []
        for law, _ in self.failures:
            if law not in seen:
                seen.append(law)
        return seen

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        laws = ", ".join(self.laws_violated())
        return f"{self.subject}: FAILED ({laws})"


def _as_perm(values, n, what) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int32)
    if arr.shape != (n,):
        raise StructuralError(f"{what} must be a length-{n} array")
    if arr.min(initial=0) < 0 or arr.max(initial=-1) >= n or len(set(arr.tolist())) != n:
        raise StructuralError(f"{what} is not a permutation of 0..{n - 1}")
    arr.setflags(write=False)
    return arr


class FinAlgebra:
    """A finite algebra in the DInFL / DqRA signature, given by tables."""

    def __init__(self, leq, product, one, tilde, minus, neg=None, name=None):
        leq = np.asarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise StructuralError("order matrix must be square")
        n = leq.shape[0]
        if n < 1:
            raise StructuralError("carrier must be non-empty")
        product = np.asarray(product, dtype=np.int32)
        if product.shape != (n, n):
            raise StructuralError("product table must be n x n")
        if product.min() < 0 or product.max() >= n:
            raise StructuralError("product entry out of range")
        if not 0 <= int(one) < n:
            raise StructuralError("unit index out of range")
        self.size = n
        self.leq = leq
        self.product = product
        self.one = int(one)
        self.tilde = _as_perm(tilde, n, "tilde")
        self.minus = _as_perm(minus, n, "minus")
        self.neg = None if neg is None else _as_perm(neg, n, "neg")
        self.name = name
        leq.setflags(write=False)
        product.setflags(write=False)

    # -- derived structure ------------------------------------------------

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        # plain-int shifts: carriers can exceed the word size
        return tuple(
            sum(1 << int(j) for j in np.flatnonzero(self.leq[i]))
            for i in range(self.size)
        )

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        return tuple(
            sum(1 << int(j) for j in np.flatnonzero(self.leq[:, i]))
            for i in range(self.size)
        )

    @cached_property
    def _uppers_index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.up_masks)}

    @cached_property
    def _lowers_index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.down_masks)}

    def join_of(self, i: int, j: int):
        return self._uppers_index.get(self.up_masks[i] & self.up_masks[j])

    def meet_of(self, i: int, j: int):
        return self._lowers_index.get(self.down_masks[i] & self.down_masks[j])

    @cached_property
    def join_table(self) -> np.ndarray:
        return self._binary_table(self.join_of, "join")

    @cached_property
    def meet_table(self) -> np.ndarray:
        return self._binary_table(self.meet_of, "meet")

    def _binary_table(self, op, what) -> np.ndarray:
        n = self.size
        out = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            for j in range(i, n):
                v = op(i, j)
                if v is None:
                    raise PreconditionError(f"{what} of ({i},{j}) does not exist")
                out[i, j] = out[j, i] = v
        out.setflags(write=False)
        return out

    @cached_property
    def bottom(self) -> int:
        idx = self._uppers_index.get((1 << self.size) - 1)
        if idx is None:
            raise PreconditionError("lattice has no least element")
        return idx

    @cached_property
    def top(self) -> int:
        idx = self._lowers_index.get((1 << self.size) - 1)
        if idx is None:
            raise PreconditionError("lattice has no greatest element")
        return idx

    @cached_property
    def zero(self) -> int:
        """The element ``tilde(1)`` (equal to ``minus(1)`` in valid algebras)."""
        return int(self.tilde[self.one])

    def join_mask(self, mask: int) -> int:
        """Join of the subset encoded by ``mask`` (bottom for the empty set)."""
        acc = self.bottom
        for i in bits(mask):
            acc = int(self.join_table[acc, i])
        return acc

    def meet_mask(self, mask: int) -> int:
        acc = self.top
        for i in bits(mask):
            acc = int(self.meet_table[acc, i])
        return acc

    @cached_property
    def lower_covers(self) -> tuple[int, ...]:
        """lower_covers[i] = bitmask of elements covered by i."""
        out = []
        for i in range(self.size):
            strict = self.down_masks[i] ^ (1 << i)
            cov = 0
            for j in bits(strict):
                if (self.up_masks[j] & strict) == (1 << j):
                    cov |= 1 << j
            out.append(cov)
        return tuple(out)

    @cached_property
    def order_poset(self) -> Poset:
        return Poset(self.up_masks)

    def has_neg(self) -> bool:
        return self.neg is not None

    def with_neg(self, neg, name=None) -> "FinAlgebra":
        return FinAlgebra(
            self.leq, self.product, self.one, self.tilde, self.minus,
            neg=neg, name=name or self.name,
        )

    def without_neg(self, name=None) -> "FinAlgebra":
        return FinAlgebra(
            self.leq, self.product, self.one, self.tilde, self.minus,
            neg=None, name=name or self.name,
        )

    def relabel(self, perm, name=None) -> "FinAlgebra":
        """Transport all tables along the bijection i -> perm[i]."""
        n = self.size
        perm = list(perm)
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        leq = np.array([[self.leq[inv[i], inv[j]] for j in range(n)] for i in range(n)])
        product = np.array(
            [[perm[self.product[inv[i], inv[j]]] for j in range(n)] for i in range(n)]
        )
        tilde = [perm[self.tilde[inv[i]]] for i in range(n)]
        minus = [perm[self.minus[inv[i]]] for i in range(n)]
        neg = None if self.neg is None else [perm[self.neg[inv[i]]] for i in range(n)]
        return FinAlgebra(leq, product, perm[self.one], tilde, minus, neg=neg, name=name)

    def signature(self) -> str:
        return "dqra" if self.neg is not None else "dinfl"

    def __repr__(self):
        label = self.name or "algebra"
        return f"FinAlgebra({label}, n={self.size}, {self.signature()})"


# -- validation ------------------------------------------------------------


def _witnesses(mask: np.ndarray):
    if not mask.any():
        return []
    idx = np.argwhere(mask)
    return [tuple(int(v) for v in row) for row in idx[:MAX_WITNESSES]]


def _mismatches(lhs: np.ndarray, rhs: np.ndarray):
    if np.array_equal(lhs, rhs):
        return []
    return _witnesses(lhs != rhs)


#: carriers above this size switch to the equivalent O(n^2) law checks
DIRECT_CHECK_LIMIT = 64


def validate_dinfl(alg: FinAlgebra) -> ValidationReport:
    """Check every DInFL-algebra law; collect all violations with witnesses."""
    rep = ValidationReport(subject=alg.name or "algebra")
    rep.notes.append("finite carrier: complete and perfect hold automatically")
    n = alg.size
    leq = alg.leq
    prod = alg.product

    if not leq.diagonal().all():
        for (i,) in _witnesses(~leq.diagonal()):
            rep.add("order_reflexive", (i,))
    antisym = leq & leq.T & ~np.eye(n, dtype=bool)
    for i, j in _witnesses(antisym):
        rep.add("order_antisymmetric", (i, j))
    trans_closure = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
    for i, j in _witnesses(trans_closure & ~leq):
        rep.add("order_transitive", (i, j))
    if not rep.ok:
        return rep

    lattice_ok = True
    for i in range(n):
        for j in range(i + 1, n):
            if alg.join_of(i, j) is None:
                rep.add("lattice_join_exists", (i, j))
                lattice_ok = False
            if alg.meet_of(i, j) is None:
                rep.add("lattice_meet_exists", (i, j))
                lattice_ok = False
    if lattice_ok:
        meet, join = alg.meet_table, alg.join_table
        if n <= DIRECT_CHECK_LIMIT:
            for a in range(n):
                lhs = meet[a][join]
                rhs = join[np.ix_(meet[a], meet[a])]
                for b, c in _mismatches(lhs, rhs):
                    rep.add("lattice_distributive", (a, b, c))
        else:
            # equivalent for finite lattices: every join-irreducible is
            # join-prime; a failing (j, a, b) is itself a distributivity
            # counterexample since then j meet (a join b) = j properly
            # exceeds (j meet a) join (j meet b)
            for j in range(n):
                if int(alg.lower_covers[j]).bit_count() != 1:
                    continue
                lj = leq[j]
                bad = lj[join] & ~(lj[:, None] | lj[None, :])
                for a, b in _witnesses(bad):
                    rep.add("lattice_distributive", (j, a, b))

    for a in range(n):
        lhs = prod[prod[a]]
        rhs = prod[a][prod]
        for b, c in _mismatches(lhs, rhs):
            rep.add("monoid_associative", (a, b, c))
    ident = np.arange(n)
    for (a,) in _witnesses(prod[alg.one] != ident):
        rep.add("monoid_unit_left", (a,))
    for (a,) in _witnesses(prod[:, alg.one] != ident):
        rep.add("monoid_unit_right", (a,))

    tilde, minus = alg.tilde, alg.minus
    for (a,) in _witnesses(minus[tilde] != ident):
        rep.add("linear_negation_inverse", (a,))
    for (a,) in _witnesses(tilde[minus] != ident):
        rep.add("linear_negation_inverse", (a,))
    for a, b in _witnesses(leq != leq[np.ix_(tilde, tilde)].T):
        rep.add("linear_negation_antitone", (a, b))
    for a, b in _witnesses(leq != leq[np.ix_(minus, minus)].T):
        rep.add("linear_negation_antitone", (a, b))

    # Residuation biconditional: a.b <= c iff a <= -(b.~c) iff b <= ~(-c.a).
    rres = minus[prod[np.ix_(np.arange(n), tilde)]].T  # rres[c,b] = -(b.~c)
    lres_cb = tilde[prod[minus]]  # lres_cb[c,a] = ~(-c.a)
    if n <= DIRECT_CHECK_LIMIT:
        for a in range(n):
            base = leq[prod[a]]  # [b,c]: a.b <= c
            right = leq[a][rres].T  # [b,c]: a <= rres[c,b]
            for b, c in _mismatches(base, right):
                rep.add("residuation_right", (a, b, c))
            left = leq[:, lres_cb[:, a]]  # [b,c]: b <= lres[c,a]
            for b, c in _mismatches(base, left):
                rep.add("residuation_left", (a, b, c))
    else:
        _residuation_by_adjunction(rep, alg, rres, lres_cb)

    if lattice_ok:
        # Idempotent-semiring cross-check: a <= b iff a.~b <= 0 iff -b.a <= 0.
        if tilde[alg.one] == minus[alg.one]:
            z = int(tilde[alg.one])
            lz = leq[:, z]
            x1 = lz[prod[np.ix_(np.arange(n), tilde)]]
            x2 = lz[prod[minus]].T
            for a, b in _witnesses(leq != x1):
                rep.add("semiring_reformulation", (a, b))
            for a, b in _witnesses(leq != x2):
                rep.add("semiring_reformulation", (a, b))
            # De Morgan link between the lattice and the linear negations.
            mt = alg.meet_table
            jt = alg.join_table
            lhs = minus[jt[np.ix_(tilde, tilde)]]
            for a, b in _witnesses(mt != lhs):
                rep.add("meet_from_join_negation", (a, b))
        else:
            rep.add("zero_agreement", (int(tilde[alg.one]), int(minus[alg.one])))
    return rep


def _residuation_by_adjunction(rep, alg, rres, lres_cb):
    """Equivalent O(n^2) residuation check via the adjunction laws.

    For each fixed side argument the product and the residual must be
    monotone, with unit and counit inequalities; that is exactly the
    biconditional.  On failure a bounded direct scan recovers literal
    witnesses.
    """
    n = alg.size
    leq, prod = alg.leq, alg.product
    rows = np.arange(n)
    ok = True
    unit_r = leq[rows[:, None], rres[prod, rows[None, :]]]  # a <= rres[ab, b]
    counit_r = leq[prod[rres, rows[None, :]], rows[:, None]]  # rres[c,b].b <= c
    unit_l = leq[rows[None, :], lres_cb[prod, rows[:, None]]]  # b <= lres[ab, a]
    counit_l = leq[prod[rows[None, :], lres_cb], rows[:, None]]  # a.lres[c,a] <= c
    ok &= bool(unit_r.all()) and bool(counit_r.all())
    ok &= bool(unit_l.all()) and bool(counit_l.all())
    if ok:
        for a in range(n):
            cov = alg.lower_covers[a]
            for a0 in bits(cov):
                if not (
                    leq[prod[a0], prod[a]].all()
                    and leq[prod[:, a0], prod[:, a]].all()
                    and leq[rres[a0], rres[a]].all()
                    and leq[lres_cb[a0], lres_cb[a]].all()
                ):
                    ok = False
                    break
            if not ok:
                break
    if ok:
        return
    # bounded direct scan for genuine biconditional witnesses
    found_r = found_l = 0
    for a in range(n):
        base = leq[prod[a]]
        if found_r < MAX_WITNESSES:
            right = leq[a][rres].T
            for b, c in _mismatches(base, right):
                rep.add("residuation_right", (a, b, c))
                found_r += 1
        if found_l < MAX_WITNESSES:
            left = leq[:, lres_cb[:, a]]
            for b, c in _mismatches(base, left):
                rep.add("residuation_left", (a, b, c))
                found_l += 1
        if found_r >= MAX_WITNESSES and found_l >= MAX_WITNESSES:
            break
    if not (found_r or found_l):
        raise InternalCheckError("adjunction check failed but no witness found")


def validate_dqra(alg: FinAlgebra) -> ValidationReport:
    """DInFL validation plus the De Morgan negation laws."""
    if alg.neg is None:
        raise SignatureError("algebra carries no De Morgan negation")
    rep = validate_dinfl(alg)
    rep.subject = alg.name or "algebra"
    n = alg.size
    neg = alg.neg
    ident = np.arange(n)
    for (a,) in _witnesses(neg[neg] != ident):
        rep.add("neg_involution", (a,))
    try:
        meet, join = alg.meet_table, alg.join_table
    except PreconditionError:
        return rep
    lhs = neg[meet]
    rhs = join[np.ix_(neg, neg)]
    for a, b in _witnesses(lhs != rhs):
        rep.add("de_morgan_meet", (a, b))
    # (Dp): neg(a.b) = neg a + neg b with x + y = -(~y . ~x).
    plus = plus_table(alg)
    lhs = neg[alg.product]
    rhs = plus[np.ix_(neg, neg)]
    for a, b in _witnesses(lhs != rhs):
        rep.add("de_morgan_product", (a, b))
    return rep


def plus_table(alg: FinAlgebra) -> np.ndarray:
    """The dual monoid operation x + y = -(~y . ~x)."""
    q = alg.product[np.ix_(alg.tilde, alg.tilde)]
    return alg.minus[q.T]


@dataclass
class DerivedOps:
    zero: int
    plus: np.ndarray
    lres: np.ndarray  # lres[a, c] = a \ c
    rres: np.ndarray  # rres[c, b] = c / b


def derived_ops(alg: FinAlgebra) -> DerivedOps:
    """Zero, dual product and both residuals, cross-checked on the fly."""
    n = alg.size
    tilde, minus, prod, leq = alg.tilde, alg.minus, alg.product, alg.leq
    zero = int(tilde[alg.one])
    if zero != int(minus[alg.one]):
        raise PreconditionError("tilde(1) and minus(1) disagree; validate first")
    plus = plus_table(alg)
    plus_alt = tilde[prod[np.ix_(minus, minus)].T]
    if not np.array_equal(plus, plus_alt):
        raise InternalCheckError("the two dual-product expressions disagree")
    rres = minus[prod[np.ix_(np.arange(n), tilde)]].T  # rres[c,b]
    lres_cb = tilde[prod[minus]]  # [c,a] = ~(-c.a)
    lres = lres_cb.T  # lres[a,c]
    for a in range(n):
        base = leq[prod[a]]
        if not np.array_equal(base, leq[a][rres].T) or not np.array_equal(
            base, leq[:, lres[a]]
        ):
            raise InternalCheckError("residual adjunction failed; validate first")
    return DerivedOps(zero=zero, plus=plus, lres=lres, rres=rres)


def check_di(alg: FinAlgebra) -> ValidationReport:
    """The derived identities tilde(1)=neg(1)=minus(1) and neg~a = -neg a.

    These hold in every valid DqRA, so a failure here flags an internal
    inconsistency rather than a mere law violation of the input.
    """
    if alg.neg is None:
        raise SignatureError("algebra carries no De Morgan negation")
    rep = ValidationReport(subject=alg.name or "algebra")
    rep.notes.append("failures indicate an internally inconsistent algebra")
    one, tilde, minus, neg = alg.one, alg.tilde, alg.minus, alg.neg
    if not (tilde[one] == neg[one] == minus[one]):
        rep.add("derived_zero_agreement", (int(tilde[one]), int(neg[one]), int(minus[one])))
    for (a,) in _witnesses(neg[tilde] != minus[neg]):
        rep.add("derived_neg_linear_commute", (a,))
    return rep


@dataclass(frozen=True)
class AlgebraFlags:
    cyclic: bool
    commutative: bool
    symmetric: bool | None  # None when the algebra carries no neg
    odd: bool


def classify(alg: FinAlgebra) -> AlgebraFlags:
    cyclic = bool(np.array_equal(alg.tilde, alg.minus))
    commutative = bool(np.array_equal(alg.product, alg.product.T))
    if alg.neg is None:
        symmetric = None
    else:
        symmetric = cyclic and bool(np.array_equal(alg.neg, alg.tilde))
    odd = alg.one == int(alg.tilde[alg.one])
    return AlgebraFlags(cyclic, commutative, symmetric, odd)


def join_irreducibles(alg: FinAlgebra) -> list[int]:
    """Elements with exactly one lower cover, verified join-prime."""
    out = [i for i in range(alg.size) if int(alg.lower_covers[i]).bit_count() == 1]
    join = alg.join_table
    for j in out:
        for a in range(alg.size):
            for b in range(alg.size):
                if alg.leq[j, join[a, b]] and not (alg.leq[j, a] or alg.leq[j, b]):
                    raise PreconditionError(
                        f"element {j} is join-irreducible but not join-prime; "
                        "the lattice is not distributive"
                    )
    return out


def meet_irreducibles(alg: FinAlgebra) -> list[int]:
    out = []
    for i in range(alg.size):
        strict = alg.up_masks[i] ^ (1 << i)
        upper_covers = [j for j in bits(strict) if (alg.down_masks[j] & strict) == (1 << j)]
        if len(upper_covers) == 1:
            out.append(i)
    return out


def kappa(alg: FinAlgebra, j: int) -> int:
    """kappa(j) = join of every element not above j; defined for j join-irreducible."""
    if j not in join_irreducibles(alg):
        raise DomainError(f"element {j} is not join-irreducible")
    mask = sum(1 << a for a in range(alg.size) if not alg.leq[j, a])
    return alg.join_mask(mask)


def kappa_map(alg: FinAlgebra) -> dict[int, int]:
    """The order isomorphism J -> M of the irreducibles, verified as such."""
    jirr = join_irreducibles(alg)
    mirr = set(meet_irreducibles(alg))
    out = {}
    for j in jirr:
        mask = sum(1 << a for a in range(alg.size) if not alg.leq[j, a])
        k = alg.join_mask(mask)
        if k not in mirr:
            raise InternalCheckError(f"kappa({j}) = {k} is not meet-irreducible")
        out[j] = k
    if len(set(out.values())) != len(mirr):
        raise InternalCheckError("kappa is not a bijection onto the meet-irreducibles")
    for a in jirr:
        for b in jirr:
            if alg.leq[a, b] != alg.leq[out[a], out[b]]:
                raise InternalCheckError("kappa is not an order isomorphism")
    return out


def commutative_to_qra(alg: FinAlgebra) -> FinAlgebra:
    """Extend a commutative DInFL-algebra with neg := tilde."""
    if alg.neg is not None:
        raise SignatureError("algebra already carries a De Morgan negation")
    if not np.array_equal(alg.product, alg.product.T):
        raise PreconditionError("algebra is not commutative")
    return alg.with_neg(alg.tilde)


def _element_profile(alg: FinAlgebra):
    """Per-element isomorphism invariants used to prune the search."""
    n = alg.size
    prof = []
    diag = [int(alg.product[i, i]) for i in range(n)]
    for i in range(n):
        prof.append(
            (
                int(alg.leq[i].sum()),
                int(alg.leq[:, i].sum()),
                i == alg.one,
                diag[i] == i,
                int(alg.leq[i, diag[i]]),
                int(alg.leq[diag[i], i]),
                alg.tilde[i] == i,
                alg.minus[i] == i,
                -1 if alg.neg is None else int(alg.neg[i] == i),
            )
        )
    return prof


def algebra_iso(a: FinAlgebra, b: FinAlgebra):
    """A signature-preserving bijection a -> b, or None.

    Deterministic: images are assigned to 0,1,2,... in increasing order, so
    the returned witness has the lexicographically least image sequence.
    """
    if (a.neg is None) != (b.neg is None):
        raise SignatureError("cannot compare algebras with different signatures")
    if a.size != b.size:
        return None
    pa, pb = _element_profile(a), _element_profile(b)
    if sorted(pa) != sorted(pb):
        return None
    n = a.size
    image = [-1] * n
    used = [False] * n

    def consistent(i, j):
        if pa[i] != pb[j]:
            return False
        for k in range(i):
            m = image[k]
            if bool(a.leq[i, k]) != bool(b.leq[j, m]) or bool(a.leq[k, i]) != bool(b.leq[m, j]):
                return False
            # operation tables, where all participants already have images
            for x, y, fx, fy in ((i, k, j, m), (k, i, m, j)):
                p = int(a.product[x, y])
                if image[p] != -1 and int(b.product[fx, fy]) != image[p]:
                    return False
        for unary_a, unary_b in ((a.tilde, b.tilde), (a.minus, b.minus)) + (
            ((a.neg, b.neg),) if a.neg is not None else ()
        ):
            t = int(unary_a[i])
            if image[t] != -1 and int(unary_b[j]) != image[t]:
                return False
        return True

    def place(i):
        if i == n:
            return _verify_hom_tables(a, b, image)
        for j in range(n):
            if used[j] or not consistent(i, j):
                continue
            image[i] = j
            used[j] = True
            if place(i + 1):
                return True
            used[j] = False
            image[i] = -1
        return False

    if place(0):
        return list(image)
    return None


def _verify_hom_tables(a: FinAlgebra, b: FinAlgebra, image) -> bool:
    n = a.size
    img = np.asarray(image)
    if int(img[a.one]) != b.one:
        return False
    if not np.array_equal(a.leq, b.leq[np.ix_(img, img)]):
        return False
    if not np.array_equal(img[a.product], b.product[np.ix_(img, img)]):
        return False
    for ua, ub in ((a.tilde, b.tilde), (a.minus, b.minus)):
        if not np.array_equal(img[ua], ub[img]):
            return False
    if a.neg is not None and not np.array_equal(img[a.neg], b.neg[img]):
        return False
    return True
