"""Exact and approximate solvers for single-complementation targets.

Everything here exploits two structural facts about a set S whose
complementation lands the graph in a bounded-degree class:

* a vertex outside S keeps its degree, so every vertex violating the
  target bound must be inside S (for max degree <= k this forces
  V_>k ⊆ S; for k-regular it forces V_!=k ⊆ S);
* if S contains any vertex of degree <= k and the result has max degree
  <= k, then |S| <= 2k+1 and the input max degree is at most 3k.

Together these give a bounded-depth branching search for the max-degree
target, a certified 3-approximation for minimizing the achievable max
degree, and a two-phase search (grow a seed set, then look for a detached
regular completion) for the k-regular target.  All searches use fixed
minimum-id orders so witnesses are deterministic and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from subcomp.graph import Graph, mask_of, members_of
from subcomp.oracle import SolveOutcome


@dataclass
class BranchStats:
    """Search instrumentation; carries no correctness weight.

    nodes counts candidate sets evaluated, max_depth counts vertices added
    beyond the starting set (bounded by 2k+1), pruned_by_size counts nodes
    cut at the |S| = 2k+1 cardinality bound, pruned_by_maxdeg counts dead
    nodes whose degree violation cannot be repaired by growing the set.
    """

    nodes: int = 0
    max_depth: int = 0
    pruned_by_size: int = 0
    pruned_by_maxdeg: int = 0


@dataclass(frozen=True)
class ApproxResult:
    """Outcome of the max-degree minimization approximation.

    achieved_max_degree is exactly the max degree after complementing
    `witness`.  When the witness equals V_>lower_bound_k the value is the
    true optimum; otherwise lower_bound_k certifies OPT >= lower_bound_k >=
    achieved_max_degree / 3, so the value is always within factor 3.
    """

    achieved_max_degree: int
    witness: tuple[int, ...]
    lower_bound_k: int


# -- trivial targets ---------------------------------------------------


def trivial_low_min_degree_witness(g: Graph, k: int) -> tuple[int, ...]:
    """Witness set making min degree <= k: complementing N[v] isolates v.

    Always returns N[0], which leaves vertex 0 isolated, so the answer for
    "min degree <= k" is yes for every k >= 0.
    """
    if g.n == 0:
        raise ValueError("no vertex to isolate in the empty graph")
    return g.closed_neighborhood(0)


def trivial_high_max_degree_witness(g: Graph, k: int) -> tuple[int, ...] | None:
    """Witness set making max degree >= k, or None when k > n-1.

    Complementing V minus N(v) makes v universal (degree n-1); no graph on
    n vertices can reach degree k beyond that.
    """
    if k > g.n - 1:
        return None
    return members_of(((1 << g.n) - 1) & ~g._rows[0])


# -- max degree at most k ----------------------------------------------


def _first_violator_over(g: Graph, smask: int, ssize: int, k: int) -> int:
    """Minimum-id vertex whose post-complementation degree exceeds k, or -1."""
    for v in range(g.n):
        row = g._rows[v]
        if smask >> v & 1:
            d = row.bit_count() + ssize - 1 - 2 * (row & smask).bit_count()
        else:
            d = row.bit_count()
        if d > k:
            return v
    return -1


def solve_max_deg_le(g: Graph, k: int) -> SolveOutcome:
    """Exact decision: can one complementation bring the max degree to <= k?

    Every solution must contain R = V_>k, so the search starts there.  If R
    itself fails, a solution would strictly contain R plus some low-degree
    vertex, which caps |S| at 2k+1 and the input max degree at 3k; both
    give immediate refutations.  Otherwise branch: the minimum-id vertex v
    still above the bound can only be fixed by pulling one of its original
    neighbors w into the set (that deletes the edge vw), so the children
    are S + {w} for each such w in increasing id.  Already-visited sets are
    skipped; the first compliant set in this DFS order is the witness.
    """
    stats = BranchStats()
    rmask = 0
    for v in range(g.n):
        if g._rows[v].bit_count() > k:
            rmask |= 1 << v
    rsize = rmask.bit_count()

    stats.nodes = 1
    viol = _first_violator_over(g, rmask, rsize, k)
    if viol < 0:
        return SolveOutcome(True, members_of(rmask), stats.nodes, stats)
    if g.max_degree() > 3 * k:
        return SolveOutcome(False, None, stats.nodes, stats)
    if rsize > 2 * k:
        # R failed, so a solution would be a strict superset of R containing
        # a degree-<= k vertex, forcing |S| <= 2k+1 and |R| <= 2k.
        return SolveOutcome(False, None, stats.nodes, stats)

    limit = 2 * k + 1
    visited = {rmask}

    def expand(smask: int, ssize: int, viol: int, depth: int) -> int | None:
        if ssize >= limit:
            stats.pruned_by_size += 1
            return None
        if not smask >> viol & 1:
            # A violator outside the set keeps its degree forever: dead end.
            # Unreachable from R (V_>k starts inside), kept for robustness.
            stats.pruned_by_maxdeg += 1
            return None
        candidates = g._rows[viol] & ~smask
        if not candidates:
            stats.pruned_by_maxdeg += 1
            return None
        for w in members_of(candidates):
            child = smask | 1 << w
            if child in visited:
                continue
            visited.add(child)
            stats.nodes += 1
            if depth + 1 > stats.max_depth:
                stats.max_depth = depth + 1
            cviol = _first_violator_over(g, child, ssize + 1, k)
            if cviol < 0:
                return child
            found = expand(child, ssize + 1, cviol, depth + 1)
            if found is not None:
                return found
        return None

    found = expand(rmask, rsize, viol, 0)
    if found is not None:
        return SolveOutcome(True, members_of(found), stats.nodes, stats)
    return SolveOutcome(False, None, stats.nodes, stats)


# -- min degree at least k ---------------------------------------------


def solve_min_deg_ge(g: Graph, k: int) -> SolveOutcome:
    """Exact decision: can one complementation bring the min degree to >= k?

    Complementing commutes with taking the whole-graph complement, and min
    degree k in a graph is max degree n-1-k in its complement, so the same
    witness set answers (complement(G), n-k-1) for the max-degree solver.
    The branching is therefore bounded by n-k-1, not by k: cheap when k is
    close to n, expensive when k is small.
    """
    n = g.n
    if n == 0 or k == 0:
        return SolveOutcome(True, (), 1)
    if k > n - 1:
        return SolveOutcome(False, None, 1)
    return solve_max_deg_le(g.complement(), n - k - 1)


# -- minimize the max degree (3-approximation) --------------------------


def approx_min_max_degree(g: Graph) -> ApproxResult:
    """Certified 3-approximation of min over S of the resulting max degree.

    Sweep k upward.  If complementing V_>k already achieves max degree
    <= k, no smaller k was achievable (the sweep would have stopped), so
    the value is exactly optimal.  Otherwise max degree > 3k rules k out
    entirely; once the input max degree falls within 3k the empty set
    achieves it, and the optimum is at least k, giving the factor 3.
    """
    if g.n == 0:
        raise ValueError("the empty graph has no achievable max degree")
    degs = g.degrees()
    delta = max(degs)
    for k in range(g.n):
        rmask = 0
        for v in range(g.n):
            if degs[v] > k:
                rmask |= 1 << v
        rsize = rmask.bit_count()
        achieved = max(
            g._degree_after_mask(rmask, rsize, v) for v in range(g.n)
        )
        if achieved <= k:
            return ApproxResult(achieved, members_of(rmask), k)
        if delta > 3 * k:
            continue
        return ApproxResult(delta, (), k)
    raise AssertionError("unreachable: the sweep always succeeds at k = n-1")


# -- k-regular ----------------------------------------------------------


def _is_regular_after(g: Graph, smask: int, ssize: int, k: int) -> bool:
    for v in range(g.n):
        row = g._rows[v]
        if smask >> v & 1:
            d = row.bit_count() + ssize - 1 - 2 * (row & smask).bit_count()
        else:
            d = row.bit_count()
        if d != k:
            return False
    return True


def find_regular_extension(g: Graph, base, k: int) -> tuple[int, ...] | None:
    """Detached completion of a seed set for the k-regular target.

    Looks for a non-empty C, disjoint from the seed and its neighborhood,
    with complementing seed + C making the graph k-regular.  After the
    complementation every member of C becomes adjacent to all of the seed,
    so |C| <= k; and a connected candidate component lies within distance
    k-1 of any of its vertices, so for each eligible start vertex v only
    subsets of the radius-(k-1) ball around v need checking.  Enumeration
    is by start vertex, then subset size, then lexicographic order, and the
    first verified completion wins.

    The caller must have established: seed size <= k, input max degree
    <= 3k, and every connected component of the seed's induced subgraph
    containing a vertex of degree != k.  Violations raise ValueError.
    """
    bmask = g._subset_mask(base)
    bsize = bmask.bit_count()
    if bsize > k:
        raise ValueError(f"seed set has {bsize} vertices, more than k = {k}")
    if g.max_degree() > 3 * k:
        raise ValueError(
            f"max degree {g.max_degree()} exceeds 3k = {3 * k}; no k-regular "
            "complement exists and the caller should have answered no"
        )
    degs = g.degrees()
    for comp in g.components_within(members_of(bmask)):
        if all(degs[v] == k for v in comp):
            raise ValueError(
                f"seed component {comp} contains only degree-{k} vertices"
            )
    if k == 0:
        return None

    reach = 0
    for v in members_of(bmask):
        reach |= g._rows[v]
    excluded = (reach | bmask) & ((1 << g.n) - 1)

    for v in range(g.n):
        if excluded >> v & 1:
            continue
        pool = [u for u in g.ball(v, k - 1) if u > v and not excluded >> u & 1]
        vbit = 1 << v
        for csize in range(1, k + 1):
            for tail in combinations(pool, csize - 1):
                cmask = vbit | mask_of(tail)
                smask = bmask | cmask
                if _is_regular_after(g, smask, bsize + csize, k):
                    return members_of(cmask)
    return None


def solve_k_regular(g: Graph, k: int) -> SolveOutcome:
    """Exact decision: can one complementation make the graph k-regular?

    Every solution contains V_!=k, and splits into a part S' whose induced
    components each touch V_!=k plus at most one detached component C that
    find_regular_extension can recover whenever |S'| <= k.  The search
    therefore grows S' from V_!=k one neighbor at a time; at each set it
    first tests the set itself, then tries the detached completion, prunes
    at the |S| <= 2k+1 cardinality bound, and otherwise branches on the
    neighbors of the current set in increasing id.  The direct test of
    V_!=k runs before the max-degree-3k refutation because that single
    candidate is the one solution shape the cardinality bound does not
    cover.
    """
    stats = BranchStats()
    if g.is_regular(k):
        stats.nodes = 1
        return SolveOutcome(True, (), stats.nodes, stats)
    if k >= g.n:
        stats.nodes = 1
        return SolveOutcome(False, None, stats.nodes, stats)

    s0mask = 0
    for v in range(g.n):
        if g._rows[v].bit_count() != k:
            s0mask |= 1 << v
    s0size = s0mask.bit_count()

    stats.nodes = 1
    if _is_regular_after(g, s0mask, s0size, k):
        return SolveOutcome(True, members_of(s0mask), stats.nodes, stats)
    if g.max_degree() > 3 * k:
        return SolveOutcome(False, None, stats.nodes, stats)

    limit = 2 * k + 1
    visited = {s0mask}

    def expand(smask: int, ssize: int, depth: int) -> int | None:
        if ssize <= k:
            completion = find_regular_extension(g, members_of(smask), k)
            if completion is not None:
                return smask | mask_of(completion)
        if ssize >= limit:
            stats.pruned_by_size += 1
            return None
        frontier = 0
        for u in members_of(smask):
            frontier |= g._rows[u]
        frontier &= ~smask
        for w in members_of(frontier):
            child = smask | 1 << w
            if child in visited:
                continue
            visited.add(child)
            stats.nodes += 1
            if depth + 1 > stats.max_depth:
                stats.max_depth = depth + 1
            if _is_regular_after(g, child, ssize + 1, k):
                return child
            found = expand(child, ssize + 1, depth + 1)
            if found is not None:
                return found
        return None

    found = expand(s0mask, s0size, 0)
    if found is not None:
        return SolveOutcome(True, members_of(found), stats.nodes, stats)
    return SolveOutcome(False, None, stats.nodes, stats)
