"""Small graph builders used by the CLI examples, tests and benchmarks."""

from __future__ import annotations

import random

from subcomp.graph import Graph


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """Star with center 0 and `leaves` leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def prism() -> Graph:
    """The triangular prism: two triangles 0,1,2 and 3,4,5 joined by a matching."""
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    return Graph(6, tri + [(i, i + 3) for i in range(3)])


def gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p) drawn from a seeded RNG for reproducibility."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)
