"""Shared graph builders and randomized generators for the test suite."""

from __future__ import annotations

import random

import pytest

from kempe import Colouring, Graph


def petersen() -> Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes i -- 5+i."""
    edges = []
    for x in range(5):
        edges.append((x, (x + 1) % 5))
        edges.append((x, 5 + x))
        edges.append((5 + x, 5 + (x + 2) % 5))
    return Graph(10, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_chordal(rng: random.Random, n: int, p: float = 0.7) -> Graph:
    """Grow a perfect elimination ordering: each vertex attaches to a subset
    of an existing clique."""
    edges = []
    cliques = [[0]] if n else []
    for v in range(1, n):
        base = rng.choice(cliques)
        sub = [u for u in base if rng.random() < p]
        edges.extend((u, v) for u in sub)
        cliques.append(sub + [v])
    return Graph(n, edges)


def random_bipartite(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    sides = [rng.randrange(2) for _ in range(n)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if sides[u] != sides[v] and rng.random() < p
    ]
    return Graph(n, edges)


def random_proper(rng: random.Random, g: Graph, k: int) -> Colouring:
    """Uniform-ish proper colouring by randomized backtracking; requires
    k >= chi(g)."""
    colours: list[int | None] = [None] * g.n

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        options = list(range(k))
        rng.shuffle(options)
        for c in options:
            if all(colours[u] != c for u in g.neighbours(v) if colours[u] is not None):
                colours[v] = c
                if rec(v + 1):
                    return True
                colours[v] = None
        return False

    if not rec(0):
        raise AssertionError(f"no proper {k}-colouring found")
    return Colouring(k, tuple(colours))  # type: ignore[arg-type]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
