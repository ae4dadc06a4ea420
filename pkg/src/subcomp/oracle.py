"""Brute-force ground truth for the subgraph-complementation solvers.

Enumerates candidate sets in increasing size, ties broken lexicographically
on the sorted member list, so the returned witness is always the unique
minimum-cardinality, lexicographically-first one.  Deliberately free of any
pruning: this module is the oracle the clever solvers are validated
against, and must stay independent of them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from subcomp import _kernels
from subcomp.graph import Graph, members_of

DEFAULT_CAPACITY = 25


class TargetKind(enum.Enum):
    MAX_DEG_AT_MOST = "maxdeg"
    MIN_DEG_AT_LEAST = "mindeg"
    REGULAR = "regular"


_KERNEL_CODE = {
    TargetKind.MAX_DEG_AT_MOST: _kernels.MAXDEG_AT_MOST,
    TargetKind.MIN_DEG_AT_LEAST: _kernels.MINDEG_AT_LEAST,
    TargetKind.REGULAR: _kernels.REGULAR,
}


@dataclass(frozen=True)
class TargetPredicate:
    """Degree-based target class: max degree <= k, min degree >= k, or k-regular."""

    kind: TargetKind
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"target degree bound must be non-negative, got {self.k}")

    def holds_for_degree(self, d: int) -> bool:
        if self.kind is TargetKind.MAX_DEG_AT_MOST:
            return d <= self.k
        if self.kind is TargetKind.MIN_DEG_AT_LEAST:
            return d >= self.k
        return d == self.k


def max_deg_at_most(k: int) -> TargetPredicate:
    return TargetPredicate(TargetKind.MAX_DEG_AT_MOST, k)


def min_deg_at_least(k: int) -> TargetPredicate:
    return TargetPredicate(TargetKind.MIN_DEG_AT_LEAST, k)


def regular(k: int) -> TargetPredicate:
    return TargetPredicate(TargetKind.REGULAR, k)


@dataclass(frozen=True)
class SolveOutcome:
    """Decision plus witness; nodes_explored counts candidate sets evaluated."""

    answer: bool
    witness: tuple[int, ...] | None
    nodes_explored: int
    stats: "object | None" = None  # BranchStats when a branching solver ran

    def __post_init__(self):
        if self.answer and self.witness is None:
            raise ValueError("a yes outcome must carry a witness")
        if not self.answer and self.witness is not None:
            raise ValueError("a no outcome must not carry a witness")


class CapacityError(Exception):
    """Raised when an instance exceeds the brute-force capacity guard."""


def check(g: Graph, vertices, target: TargetPredicate) -> bool:
    """True iff complementing the given set lands the graph in the target class."""
    smask = g._subset_mask(vertices)
    ssize = smask.bit_count()
    return all(
        target.holds_for_degree(g._degree_after_mask(smask, ssize, v))
        for v in range(g.n)
    )


def brute_force_solve(g: Graph, target: TargetPredicate, cap: int = DEFAULT_CAPACITY) -> SolveOutcome:
    """Exhaustive decision over all 2^n candidate sets.

    Refuses graphs larger than `cap` vertices (default 25) rather than
    silently truncating; raise the cap explicitly if you can afford the
    2^n enumeration.
    """
    if g.n > cap:
        raise CapacityError(
            f"brute force over 2^{g.n} subsets exceeds the capacity guard "
            f"(n = {g.n} > cap = {cap}); pass a larger cap to override"
        )
    found, mask, checked = _kernels.brute_force_search(
        g._rows, g.n, _KERNEL_CODE[target.kind], target.k
    )
    return SolveOutcome(found, members_of(mask) if found else None, checked)


def brute_force_min_max_degree(g: Graph, cap: int = DEFAULT_CAPACITY) -> tuple[int, tuple[int, ...]]:
    """Exact optimum of min over all sets S of the post-complementation max
    degree, with the first optimal S in size-then-lex order.  Ground truth
    for the approximation guarantee."""
    if g.n > cap:
        raise CapacityError(
            f"brute force over 2^{g.n} subsets exceeds the capacity guard "
            f"(n = {g.n} > cap = {cap}); pass a larger cap to override"
        )
    best, mask = _kernels.min_max_degree(g._rows, g.n)
    return best, members_of(mask)
