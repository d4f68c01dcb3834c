"""Immutable simple undirected graphs with dense 0-based vertex ids.

Adjacency is stored as one int bitmask per vertex, which keeps the exact
searches (cliques, induced odd cycles) fast at desk scale.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

# Unbounded induced-odd-cycle search is exponential; warn past this size.
ODD_HOLE_WARN_THRESHOLD = 24


class Graph:
    """Simple undirected graph on vertices 0..n-1. Immutable once built."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    # -- basic queries -------------------------------------------------

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return _bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self._adj), default=0)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self._adj[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                out.append((u, v))
                m &= m - 1
        return out

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


@dataclass(frozen=True)
class HoleWitness:
    """An induced odd cycle of length >= 5, listed in cyclic order."""

    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def is_valid_in(self, g: Graph) -> bool:
        c = self.cycle
        ln = len(c)
        if ln < 5 or ln % 2 == 0 or len(set(c)) != ln:
            return False
        for i in range(ln):
            for j in range(i + 1, ln):
                adjacent = g.has_edge(c[i], c[j])
                consecutive = j - i == 1 or (i == 0 and j == ln - 1)
                if adjacent != consecutive:
                    return False
        return True


# -- set-degree helpers -----------------------------------------------


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def degree_into(g: Graph, v: int, members: Iterable[int]) -> int:
    """Number of neighbours of v inside the given vertex set."""
    return (g.adjacency_mask(v) & _mask_of(members)).bit_count()


def edges_between(g: Graph, first: Iterable[int], second: Iterable[int]) -> int:
    """Number of edges with one endpoint in each set (sets assumed disjoint)."""
    m2 = _mask_of(second)
    return sum((g.adjacency_mask(u) & m2).bit_count() for u in first)


def boundary_degree(g: Graph, members: Iterable[int]) -> int:
    """Number of edges leaving the vertex set."""
    inside = _mask_of(members)
    return sum((g.adjacency_mask(u) & ~inside).bit_count() for u in _bits(inside))


def induced_components(g: Graph, members: int | Iterable[int]) -> list[int]:
    """Connected components of the induced subgraph, as bitmasks."""
    remaining = members if isinstance(members, int) else _mask_of(members)
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            grow = g.adjacency_mask(v) & remaining & ~comp
            comp |= grow
            frontier |= grow
        comps.append(comp)
        remaining &= ~comp
    return comps


# -- vertex deletion ---------------------------------------------------


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[Optional[int], ...]]:
    """Remove v, renumbering the rest by the order-preserving map that skips it.

    Returns the new graph and the old-id -> new-id map (None at v).
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    mapping: list[Optional[int]] = [None] * g.n
    for u in range(g.n):
        if u != v:
            mapping[u] = u - (u > v)
    edges = [(mapping[a], mapping[b]) for a, b in g.edges() if a != v and b != v]
    return Graph(g.n - 1, edges), tuple(mapping)


# -- cliques -----------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Exact maximum clique size, branch and bound over bitmasks."""
    if g.n == 0:
        raise ValueError("clique number undefined for the empty graph")
    return _max_clique_masks(list(g._adj))


def _max_clique_masks(adj: list[int]) -> int:
    n = len(adj)
    if n == 0:
        return 0
    best = 0

    def branch_order(cand: int) -> list[tuple[int, int]]:
        # Greedy colouring of the candidate set; a vertex in colour class c
        # caps any clique through it at size + c, which prunes the branches.
        ordered = []
        rest = cand
        colour = 0
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                ordered.append((v, colour))
        return ordered

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if not cand or size + cand.bit_count() <= best:
            return
        for v, bound in reversed(branch_order(cand)):
            if size + bound <= best:
                return
            expand(cand & adj[v], size + 1)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def local_clique_number(g: Graph, v: int) -> int:
    """Largest clique size among cliques containing v (1 if v is isolated)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    nbrs = g.neighbours(v)
    if not nbrs:
        return 1
    index = {u: i for i, u in enumerate(nbrs)}
    sub = [0] * len(nbrs)
    for i, u in enumerate(nbrs):
        for w in g.neighbours(u):
            j = index.get(w)
            if j is not None:
                sub[i] |= 1 << j
    return 1 + _max_clique_masks(sub)


def recolouring_threshold(g: Graph) -> int:
    """max over vertices of ceil((local clique number + degree + 1) / 2).

    The planner requires strictly more colours than this value.
    """
    if g.n == 0:
        raise ValueError("threshold undefined for the empty graph")
    return max((local_clique_number(g, v) + g.degree(v) + 1 + 1) // 2 for v in g.vertices())


# -- triangles and odd holes -------------------------------------------


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adjacency_mask(u) & g.adjacency_mask(v):
            return False
    return True


def find_odd_hole(g: Graph, max_len: int | None = None) -> Optional[HoleWitness]:
    """First induced odd cycle of length in [5, max_len], or None.

    ``max_len=None`` searches exhaustively (exponential worst case; a
    warning is emitted past ODD_HOLE_WARN_THRESHOLD vertices).
    """
    for hole in iter_odd_holes(g, max_len):
        return hole
    return None


def iter_odd_holes(g: Graph, max_len: int | None = None) -> Iterator[HoleWitness]:
    """Yield every induced odd cycle of length >= 5 (each once, up to rotation
    and reflection)."""
    if max_len is not None and (max_len < 5 or max_len % 2 == 0):
        raise ValueError("max_len must be odd and at least 5")
    if max_len is None and g.n > ODD_HOLE_WARN_THRESHOLD:
        warnings.warn(
            f"unbounded induced-cycle search on {g.n} vertices is exponential",
            RuntimeWarning,
            stacklevel=3,
        )
    limit = max_len if max_len is not None else g.n
    if limit < 5:
        return
    adj = g._adj
    for s in range(g.n):
        # Cycles are rooted at their minimum vertex; the DFS below only ever
        # extends induced paths (no chords back to the path interior).
        higher = ~((1 << (s + 1)) - 1)
        start_nbrs = _bits(adj[s] & higher)
        for i, first in enumerate(start_nbrs):
            # Break reflection symmetry: the second vertex of the closing
            # edge must be larger than the first path vertex.
            path = [s, first]
            yield from _extend_hole(adj, s, path, (1 << s) | (1 << first), limit, first)


def _extend_hole(adj, s, path, path_mask, limit, first):
    last = path[-1]
    interior = path_mask & ~(1 << s) & ~(1 << last)
    candidates = adj[last] & ~path_mask & ~((1 << (s + 1)) - 1)
    for w in _bits(candidates):
        if adj[w] & interior:
            continue  # chord back into the path
        if adj[w] >> s & 1:
            ln = len(path) + 1
            if ln >= 5 and ln % 2 == 1 and w > first:
                yield HoleWitness(tuple(path) + (w,))
            # Any longer cycle through w would keep the w-s chord: stop here.
            continue
        if len(path) + 1 < limit:
            path.append(w)
            yield from _extend_hole(adj, s, path, path_mask | (1 << w), limit, first)
            path.pop()
