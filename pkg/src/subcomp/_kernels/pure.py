"""Pure-Python subset-enumeration kernels.

Reference implementation of the hot loops; the Cython module _ckernels
mirrors these semantics exactly (same enumeration order, same counters) and
is preferred at import time when available.  Adjacency is a sequence of int
bitmasks, one row per vertex, row v never containing bit v.

Targets are encoded as: 0 = max degree <= k, 1 = min degree >= k,
2 = k-regular.
"""

from __future__ import annotations

from itertools import combinations
from collections.abc import Sequence

NAME = "pure"


def _satisfies(rows: Sequence[int], n: int, smask: int, ssize: int, kind: int, k: int) -> bool:
    for v in range(n):
        row = rows[v]
        if smask >> v & 1:
            d = row.bit_count() + ssize - 1 - 2 * (row & smask).bit_count()
        else:
            d = row.bit_count()
        if kind == 0:
            if d > k:
                return False
        elif kind == 1:
            if d < k:
                return False
        else:
            if d != k:
                return False
    return True


def brute_force_search(rows: Sequence[int], n: int, kind: int, k: int):
    """First subset S (by size, then lexicographic member order) whose
    complementation satisfies the target, as (found, mask, subsets_checked).

    Checks every subset with no pruning whatsoever so the result can serve
    as ground truth for the clever solvers.
    """
    checked = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            checked += 1
            if _satisfies(rows, n, smask, size, kind, k):
                return True, smask, checked
    return False, 0, checked


def min_max_degree(rows: Sequence[int], n: int):
    """Minimum over all subsets S of the post-complementation max degree.

    Returns (value, mask) where mask is the first optimal subset in the
    size-then-lex enumeration order.
    """
    best = n  # max degree is at most n - 1, so this is beaten immediately
    best_mask = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            worst = 0
            for v in range(n):
                row = rows[v]
                if smask >> v & 1:
                    d = row.bit_count() + size - 1 - 2 * (row & smask).bit_count()
                else:
                    d = row.bit_count()
                if d > worst:
                    worst = d
                    if worst >= best:
                        break
            if worst < best:
                best = worst
                best_mask = smask
    return best, best_mask
