# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-enumeration kernels.

Semantics are identical to subcomp._kernels.pure (same size-then-lex
enumeration order, same counters); only the representation differs:
adjacency rows arrive as a uint64 buffer, so this path is limited to
graphs on at most 64 vertices.  The dispatcher in __init__ enforces that.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _check_mask(const uint64_t[::1] rows, int n, uint64_t smask,
                            int ssize, int kind, int k) nogil:
    cdef int v, d
    cdef uint64_t row
    for v in range(n):
        row = rows[v]
        if smask >> v & 1:
            d = __builtin_popcountll(row) + ssize - 1 - 2 * __builtin_popcountll(row & smask)
        else:
            d = __builtin_popcountll(row)
        if kind == 0:
            if d > k:
                return 0
        elif kind == 1:
            if d < k:
                return 0
        else:
            if d != k:
                return 0
    return 1


cdef inline int _next_combination(int* idx, int size, int n) nogil:
    # Advance idx to the lexicographically next size-subset of range(n).
    cdef int i = size - 1
    cdef int j
    while i >= 0 and idx[i] == n - size + i:
        i -= 1
    if i < 0:
        return 0
    idx[i] += 1
    for j in range(i + 1, size):
        idx[j] = idx[j - 1] + 1
    return 1


def brute_force_search(const uint64_t[::1] rows, int n, int kind, int k):
    """Mirror of pure.brute_force_search for n <= 64."""
    cdef int idx[64]
    cdef int size, i
    cdef uint64_t smask
    cdef unsigned long long checked = 0

    for size in range(n + 1):
        for i in range(size):
            idx[i] = i
        while True:
            smask = 0
            for i in range(size):
                smask |= (<uint64_t>1) << idx[i]
            checked += 1
            if _check_mask(rows, n, smask, size, kind, k):
                return True, smask, checked
            if size == 0 or not _next_combination(idx, size, n):
                break
    return False, 0, checked


def min_max_degree(const uint64_t[::1] rows, int n):
    """Mirror of pure.min_max_degree for n <= 64."""
    cdef int idx[64]
    cdef int size, i, v, d, worst
    cdef int best = n
    cdef uint64_t smask
    cdef uint64_t best_mask = 0
    cdef uint64_t row

    for size in range(n + 1):
        for i in range(size):
            idx[i] = i
        while True:
            smask = 0
            for i in range(size):
                smask |= (<uint64_t>1) << idx[i]
            worst = 0
            for v in range(n):
                row = rows[v]
                if smask >> v & 1:
                    d = __builtin_popcountll(row) + size - 1 - 2 * __builtin_popcountll(row & smask)
                else:
                    d = __builtin_popcountll(row)
                if d > worst:
                    worst = d
                    if worst >= best:
                        break
            if worst < best:
                best = worst
                best_mask = smask
            if size == 0 or not _next_combination(idx, size, n):
                break
    return best, best_mask
