"""Finite binary operation tables and the order structure of skew lattices.

Elements are the integers 0..n-1.  A binary operation is an n x n table in
row-major orientation: table[a][b] is the product of a (left operand) and b
(right operand).  A skew lattice is a pair of idempotent associative tables
(meet, join) satisfying the four absorption identities; its natural preorders
come in left/right flavours because neither operation is assumed commutative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .report import AxiomReport


def _as_table(table) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"operation table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise ValueError("empty operation table")
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("table entries must lie in 0..n-1")
    return arr


class OperationTable:
    """A total binary operation on {0..n-1}, stored row-major."""

    def __init__(self, table):
        self.array = _as_table(table)
        self.order = self.array.shape[0]

    def __call__(self, a: int, b: int) -> int:
        return int(self.array[a, b])

    def tolist(self) -> list[list[int]]:
        return self.array.tolist()

    def __eq__(self, other):
        return isinstance(other, OperationTable) and np.array_equal(self.array, other.array)

    def __hash__(self):
        return hash(self.array.tobytes())

    def __repr__(self):
        return f"OperationTable(order={self.order})"


class SkewLatticeTable:
    """A pair of operation tables (meet, join) on the same carrier."""

    def __init__(self, meet: OperationTable, join: OperationTable):
        if not isinstance(meet, OperationTable):
            meet = OperationTable(meet)
        if not isinstance(join, OperationTable):
            join = OperationTable(join)
        if meet.order != join.order:
            raise ValueError("meet and join must share a carrier")
        self.meet = meet
        self.join = join
        self.order = meet.order

    def __eq__(self, other):
        return (
            isinstance(other, SkewLatticeTable)
            and self.meet == other.meet
            and self.join == other.join
        )

    def __hash__(self):
        return hash((self.meet, self.join))

    def __repr__(self):
        return f"SkewLatticeTable(order={self.order})"


class GroupTable:
    """A finite group: one total operation with identity and inverses verified."""

    def __init__(self, table):
        self.table = table if isinstance(table, OperationTable) else OperationTable(table)
        self.order = self.table.order
        arr = self.table.array
        if not check_associative(self.table):
            raise ValueError("group table is not associative")
        identity = None
        for e in range(self.order):
            if np.array_equal(arr[e], np.arange(self.order)) and np.array_equal(
                arr[:, e], np.arange(self.order)
            ):
                identity = e
                break
        if identity is None:
            raise ValueError("group table has no identity")
        self.identity = identity
        inverse = np.full(self.order, -1, dtype=np.int64)
        for a in range(self.order):
            hits = np.nonzero(arr[a] == identity)[0]
            if len(hits) != 1 or arr[hits[0], a] != identity:
                raise ValueError(f"element {a} has no two-sided inverse")
            inverse[a] = hits[0]
        self.inverse = inverse

    def __call__(self, a: int, b: int) -> int:
        return int(self.table.array[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def __eq__(self, other):
        return isinstance(other, GroupTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"GroupTable(order={self.order})"


@dataclass(frozen=True)
class PreorderPair:
    """The four natural preorders of a skew lattice as boolean matrices.

    le_left[a, b]  <=>  a = a ∧ b        ge_left[a, b]  <=>  a = a ∨ b
    le_right[a, b] <=>  a = b ∧ a        ge_right[a, b] <=>  a = b ∨ a
    """

    le_left: np.ndarray
    le_right: np.ndarray
    ge_left: np.ndarray
    ge_right: np.ndarray


@dataclass(frozen=True)
class GreensPair:
    """Green's R- and L-classes of an associative table, as sorted partitions."""

    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    r_class_of: tuple[int, ...]
    l_class_of: tuple[int, ...]

    def same_r(self, a: int, b: int) -> bool:
        return self.r_class_of[a] == self.r_class_of[b]

    def same_l(self, a: int, b: int) -> bool:
        return self.l_class_of[a] == self.l_class_of[b]


def check_associative(t: OperationTable) -> bool:
    """True iff t(t(a,b),c) = t(a,t(b,c)) for all triples."""
    arr = t.array
    return bool(np.array_equal(arr[arr, :], arr[:, arr]))


def associativity_witness(t: OperationTable) -> tuple[int, int, int] | None:
    arr = t.array
    bad = np.argwhere(arr[arr, :] != arr[:, arr])
    if len(bad) == 0:
        return None
    a, b, c = bad[0]
    return int(a), int(b), int(c)


def check_idempotent(t: OperationTable) -> bool:
    """True iff t(a,a) = a for all a."""
    return bool(np.array_equal(np.diag(t.array), np.arange(t.order)))


def check_band(t: OperationTable) -> bool:
    """True iff t is an idempotent semigroup."""
    return check_idempotent(t) and check_associative(t)


def _first_bad(mask: np.ndarray) -> tuple | None:
    bad = np.argwhere(~mask)
    if len(bad) == 0:
        return None
    return tuple(int(x) for x in bad[0])


def check_skew_lattice(s: SkewLatticeTable) -> AxiomReport:
    """Check both band structures and the four absorption identities."""
    m, j = s.meet.array, s.join.array
    n = s.order
    idx = np.arange(n)
    col = idx[:, None]
    row = idx[None, :]
    report = AxiomReport("skew lattice")
    report.record("meet_idempotent", check_idempotent(s.meet), _first_bad(np.diag(m) == idx))
    report.record("meet_associative", check_associative(s.meet), associativity_witness(s.meet))
    report.record("join_idempotent", check_idempotent(s.join), _first_bad(np.diag(j) == idx))
    report.record("join_associative", check_associative(s.join), associativity_witness(s.join))
    # a ∨ (a ∧ b) = a
    mask = j[col, m] == col
    report.record("absorb_join_meet", mask.all(), _first_bad(mask))
    # a ∧ (a ∨ b) = a
    mask = m[col, j] == col
    report.record("absorb_meet_join", mask.all(), _first_bad(mask))
    # (a ∧ b) ∨ b = b
    mask = j[m, row] == row
    report.record("absorb_meet_then_join", mask.all(), _first_bad(mask))
    # (a ∨ b) ∧ b = b
    mask = m[j, row] == row
    report.record("absorb_join_then_meet", mask.all(), _first_bad(mask))
    return report


def natural_preorders(s: SkewLatticeTable) -> PreorderPair:
    """The four natural preorders; raises if the converse pairing fails.

    In a skew lattice le_left is the converse of ge_right and le_right the
    converse of ge_left; a violation signals the input is not a skew lattice.
    """
    m, j = s.meet.array, s.join.array
    idx = np.arange(s.order)
    le_left = m == idx[:, None]
    le_right = m.T == idx[:, None]
    ge_left = j == idx[:, None]
    ge_right = j.T == idx[:, None]
    if not np.array_equal(le_left, ge_right.T):
        witness = _first_bad(le_left == ge_right.T)
        raise ValueError(f"le_left is not the converse of ge_right at {witness}")
    if not np.array_equal(le_right, ge_left.T):
        witness = _first_bad(le_right == ge_left.T)
        raise ValueError(f"le_right is not the converse of ge_left at {witness}")
    return PreorderPair(le_left, le_right, ge_left, ge_right)


def greens_relations(t: OperationTable) -> GreensPair:
    """Green's R and L partitions via principal one-sided ideals (identity adjoined)."""
    if not check_associative(t):
        raise ValueError(f"greens_relations needs an associative table; witness {associativity_witness(t)}")
    arr = t.array
    n = t.order
    eye = np.eye(n, dtype=bool)
    # right ideal of a: {a} ∪ aS ; left ideal: {a} ∪ Sa
    right = eye.copy()
    left = eye.copy()
    for a in range(n):
        right[a, arr[a, :]] = True
        left[a, arr[:, a]] = True

    def partition(ideals):
        keys = {}
        class_of = [0] * n
        for a in range(n):
            key = ideals[a].tobytes()
            keys.setdefault(key, []).append(a)
        classes = sorted(tuple(v) for v in keys.values())
        for i, cls in enumerate(classes):
            for a in cls:
                class_of[a] = i
        return tuple(classes), tuple(class_of)

    r_classes, r_of = partition(right)
    l_classes, l_of = partition(left)
    return GreensPair(r_classes, l_classes, r_of, l_of)


def left_zero(n: int) -> OperationTable:
    """The left-zero band: a * b = a."""
    return OperationTable(np.repeat(np.arange(n)[:, None], n, axis=1))


def right_zero(n: int) -> OperationTable:
    """The right-zero band: a * b = b."""
    return OperationTable(np.repeat(np.arange(n)[None, :], n, axis=0))


def chain_meet(n: int) -> OperationTable:
    """min(a, b) on the chain 0 < 1 < ... < n-1."""
    idx = np.arange(n)
    return OperationTable(np.minimum(idx[:, None], idx[None, :]))


def chain_join(n: int) -> OperationTable:
    """max(a, b) on the chain 0 < 1 < ... < n-1."""
    idx = np.arange(n)
    return OperationTable(np.maximum(idx[:, None], idx[None, :]))


def chain_lattice(n: int) -> SkewLatticeTable:
    """The n-element chain as a (commutative) skew lattice."""
    return SkewLatticeTable(chain_meet(n), chain_join(n))


def rectangular_skew(n: int) -> SkewLatticeTable:
    """The flat skew lattice with left-zero meet and right-zero join."""
    return SkewLatticeTable(left_zero(n), right_zero(n))
