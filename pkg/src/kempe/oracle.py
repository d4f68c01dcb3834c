"""Brute-force ground truth for desk-scale graphs.

Enumerates proper colourings, groups them into Kempe-equivalence classes
(raw, and up to colour permutation), lists frozen colourings, enumerates the
possible class-pair adjacency patterns for four-vertex classes, and audits
the degree lower bounds that frozen colourings impose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Optional, Sequence

import numpy as np

from .colouring import Colouring, frozen_degree_bound, is_frozen
from .errors import BudgetExceededError
from .graph import Graph, is_triangle_free


@dataclass(frozen=True)
class Budget:
    """Caps for exhaustive enumeration; override per call or via the CLI."""

    max_colourings: int = 10_000_000
    max_vertices: int = 20

    def check_graph(self, g: Graph) -> None:
        if g.n > self.max_vertices:
            raise BudgetExceededError(
                f"{g.n} vertices exceeds the budget of {self.max_vertices}",
                estimate=f"n={g.n}",
            )


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class ReconfigurationSummary:
    """Census of the k-colouring space under single Kempe changes."""

    k: int
    num_colourings: int
    num_classes_raw: int
    num_classes_canonical: int
    class_sizes: tuple[int, ...]  # raw class sizes, descending

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "num_colourings": self.num_colourings,
            "num_classes_raw": self.num_classes_raw,
            "num_classes_canonical": self.num_classes_canonical,
            "class_sizes": list(self.class_sizes),
        }


# -- raw enumeration ------------------------------------------------------


def _iter_proper(g: Graph, k: int, canonical_only: bool) -> Iterator[tuple[int, ...]]:
    """Backtracking enumeration in vertex-id order. With canonical_only each
    vertex may use at most one colour beyond those already used, which
    yields exactly the least representative of every colour-permutation
    orbit."""
    n = g.n
    if n == 0:
        yield ()
        return
    colours = [0] * n
    masks = [g.adjacency_mask(v) & ((1 << v) - 1) for v in range(n)]  # earlier nbrs

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(colours)
            return
        forbidden = 0
        m = masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            forbidden |= 1 << colours[u]
        top = min(k, used + 1) if canonical_only else k
        for c in range(top):
            if forbidden >> c & 1:
                continue
            colours[v] = c
            yield from rec(v + 1, max(used, c + 1))

    yield from rec(0, 0)


def canonical_form(colours: Sequence[int]) -> tuple[int, ...]:
    """Least colour vector over colour permutations: relabel by first
    occurrence."""
    relabel: dict[int, int] = {}
    out = []
    for c in colours:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


def enumerate_colourings(
    g: Graph, k: int, quotient: str = "raw", budget: Budget = DEFAULT_BUDGET
) -> list[Colouring]:
    """All proper k-colourings, raw or one canonical representative per
    colour-permutation orbit."""
    if quotient not in ("raw", "up_to_colour_permutation"):
        raise ValueError(f"unknown quotient {quotient!r}")
    budget.check_graph(g)
    out = []
    for cs in _iter_proper(g, k, quotient == "up_to_colour_permutation"):
        out.append(Colouring(k, cs))
        if len(out) > budget.max_colourings:
            raise BudgetExceededError(
                "colouring enumeration exceeded the budget",
                estimate=f"> {budget.max_colourings} colourings",
            )
    return out


def count_colourings(
    g: Graph, k: int, cap: int
) -> Optional[int]:
    """Number of proper k-colourings, or None as soon as it exceeds cap."""
    count = 0
    for _ in _iter_proper(g, k, False):
        count += 1
        if count > cap:
            return None
    return count


# -- Kempe moves on raw colour vectors -------------------------------------


def _kempe_neighbours(g: Graph, k: int, colours: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All colourings one Kempe change away (components enumerated per
    colour pair; whole-pair swaps included, identity excluded)."""
    n = g.n
    class_masks = [0] * k
    for v, c in enumerate(colours):
        class_masks[c] |= 1 << v
    for a in range(k):
        for b in range(a + 1, k):
            union = class_masks[a] | class_masks[b]
            remaining = union
            while remaining:
                seed = remaining & -remaining
                comp = seed
                frontier = seed
                while frontier:
                    v = (frontier & -frontier).bit_length() - 1
                    frontier &= frontier - 1
                    grow = g.adjacency_mask(v) & union & ~comp
                    comp |= grow
                    frontier |= grow
                remaining &= ~comp
                swapped = list(colours)
                m = comp
                changed = False
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    swapped[v] = b if swapped[v] == a else a
                    changed = True
                if changed:
                    yield tuple(swapped)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


def reconfiguration_components(
    g: Graph, k: int, budget: Budget = DEFAULT_BUDGET
) -> ReconfigurationSummary:
    """Union-find over all proper k-colourings with single Kempe changes as
    edges; canonical classes additionally merge colour-permuted colourings."""
    budget.check_graph(g)
    index: dict[bytes, int] = {}
    order: list[bytes] = []
    for cs in _iter_proper(g, k, False):
        key = bytes(cs)
        index[key] = len(order)
        order.append(key)
        if len(order) > budget.max_colourings:
            raise BudgetExceededError(
                "colouring enumeration exceeded the budget",
                estimate=f"> {budget.max_colourings} colourings",
            )

    n = g.n
    adj = [g.adjacency_mask(v) for v in range(n)]
    raw = _UnionFind(len(order))
    find = raw.find
    union = raw.union
    pair_list = [(a, b) for a in range(k) for b in range(a + 1, k)]
    for i, key in enumerate(order):
        colours = key
        class_masks = [0] * k
        for v in range(n):
            class_masks[colours[v]] |= 1 << v
        swapped = bytearray(key)
        for a, b in pair_list:
            union_mask = class_masks[a] | class_masks[b]
            remaining = union_mask
            while remaining:
                seed = remaining & -remaining
                comp = seed
                frontier = seed
                while frontier:
                    v = (frontier & -frontier).bit_length() - 1
                    frontier &= frontier - 1
                    grow = adj[v] & union_mask & ~comp
                    comp |= grow
                    frontier |= grow
                remaining &= ~comp
                m = comp
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    swapped[v] = a + b - swapped[v]
                union(i, index[bytes(swapped)])
                m = comp  # restore for the next component
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    swapped[v] = a + b - swapped[v]
    num_raw = raw.count
    sizes: dict[int, int] = {}
    for i in range(len(order)):
        r = find(i)
        sizes[r] = sizes.get(r, 0) + 1

    canon = _UnionFind(len(order))
    for i in range(len(order)):
        canon.parent[i] = find(i)
    seen: dict[bytes, int] = {}
    for i, key in enumerate(order):
        ck = bytes(canonical_form(key))
        if ck in seen:
            canon.union(seen[ck], i)
        else:
            seen[ck] = i
    roots = {canon.find(i) for i in range(len(order))}

    return ReconfigurationSummary(
        k=k,
        num_colourings=len(order),
        num_classes_raw=num_raw,
        num_classes_canonical=len(roots),
        class_sizes=tuple(sorted(sizes.values(), reverse=True)),
    )


def is_k_recolourable(g: Graph, k: int, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True iff the k-colouring space forms one canonical Kempe class."""
    return reconfiguration_components(g, k, budget).num_classes_canonical == 1


def kempe_class_closure(
    g: Graph, c: Colouring, budget: Budget = DEFAULT_BUDGET
) -> set[tuple[int, ...]]:
    """All colour vectors reachable from c by Kempe changes (BFS). For a
    frozen colouring this is just its colour-permutation orbit."""
    c.validate(g)
    start = tuple(c.colours)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for nb in _kempe_neighbours(g, c.k, cur):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
                if len(seen) > budget.max_colourings:
                    raise BudgetExceededError(
                        "Kempe class closure exceeded the budget",
                        estimate=f"> {budget.max_colourings} colourings",
                    )
    return seen


def same_canonical_class(
    g: Graph, c1: Colouring, c2: Colouring, budget: Budget = DEFAULT_BUDGET
) -> bool:
    """True iff some colour permutation of c2 is Kempe-reachable from c1.
    Explores only c1's class, so this is cheap when c1 is frozen."""
    if c1.k != c2.k:
        raise ValueError("colour counts differ")
    target = canonical_form(c2.colours)
    closure = kempe_class_closure(g, c1, budget)
    return any(canonical_form(cs) == target for cs in closure)


def enumerate_frozen(
    g: Graph, k: int, budget: Budget = DEFAULT_BUDGET
) -> list[Colouring]:
    """Canonical proper k-colourings that are frozen (all colours used and
    every class pair spanning a connected subgraph)."""
    out = []
    for c in enumerate_colourings(g, k, "up_to_colour_permutation", budget):
        if len(c.used_colours()) == k and is_frozen(g, c):
            out.append(c)
    return out


# -- four-by-four class-pair patterns ---------------------------------------


@dataclass(frozen=True)
class BipartitePattern:
    """Adjacency between two size-4 colour classes: a spanning tree on 4+4
    vertices with no dominating vertex, stored as 4 row bitmasks."""

    rows: tuple[int, int, int, int]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(4) for j in range(4) if self.rows[i] >> j & 1]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def is_spanning_tree(self) -> bool:
        if self.edge_count() != 7:
            return False
        adj = {i: set() for i in range(8)}
        for i, j in self.edges():
            adj[i].add(4 + j)
            adj[4 + j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == 8

    def has_dominating_vertex(self) -> bool:
        full = 0b1111
        if any(r == full for r in self.rows):
            return True
        for j in range(4):
            if all(r >> j & 1 for r in self.rows):
                return True
        return False


def _transpose_rows(rows: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    return tuple(sum((rows[i] >> j & 1) << i for i in range(4)) for j in range(4))


def _orbit(rows: tuple[int, int, int, int]) -> set[tuple[int, int, int, int]]:
    """All variants under row permutations, column permutations, and side
    exchange."""
    out = set()
    for base in (rows, _transpose_rows(rows)):
        for rp in permutations(range(4)):
            permuted = [base[i] for i in rp]
            for cp in permutations(range(4)):
                out.add(tuple(sum((r >> cp[j] & 1) << j for j in range(4)) for r in permuted))
    return out


def _rows_key(rows: tuple[int, int, int, int]) -> int:
    return rows[0] << 12 | rows[1] << 8 | rows[2] << 4 | rows[3]


def _all_labelled_trees() -> list[tuple[int, int, int, int]]:
    """Every labelled spanning tree of the complete 4x4 bipartite graph with
    no degree-4 vertex."""
    out = []
    for mask in range(1 << 16):
        if mask.bit_count() != 7:
            continue
        rows = tuple((mask >> (4 * i)) & 0b1111 for i in range(4))
        p = BipartitePattern(rows)
        if p.is_spanning_tree() and not p.has_dominating_vertex():
            out.append(rows)
    return out


def _is_split_pair(rows: tuple[int, int, int, int]) -> bool:
    """True when some non-adjacent pair (left i, right j) covers everything
    else: left i adjacent to all right vertices but j, right j adjacent to
    all left vertices but i. Any third class would then split into vertices
    attached only to {i, j} and vertices attached only to the rest,
    disconnecting a class pair, so the pattern cannot occur between two
    classes of a frozen triangle-free colouring."""
    for i in range(4):
        for j in range(4):
            if rows[i] >> j & 1:
                continue
            if rows[i] == 0b1111 & ~(1 << j) and all(
                (rows[x] >> j & 1) == (x != i) for x in range(4)
            ):
                return True
    return False


def _pattern_classes() -> list[tuple[tuple[int, int, int, int], set[tuple[int, int, int, int]]]]:
    """(canonical representative, full labelled orbit) per realizable class,
    sorted by representative key. The transformation group preserves
    tree-ness, the degree cap, and splitness, so orbits stay inside the
    filtered set."""
    remaining = {rows for rows in _all_labelled_trees() if not _is_split_pair(rows)}
    classes = []
    while remaining:
        seed = min(remaining, key=_rows_key)
        orbit = _orbit(seed)
        if not orbit <= remaining:
            raise AssertionError("orbit left the filtered tree set")
        rep = min(orbit, key=_rows_key)
        classes.append((rep, orbit))
        remaining -= orbit
    classes.sort(key=lambda item: _rows_key(item[0]))
    return classes


def fig7_patterns() -> list[BipartitePattern]:
    """The realizable class-pair patterns, one canonical representative per
    isomorphism class, in a stable order."""
    return [BipartitePattern(rep) for rep, _ in _pattern_classes()]


# -- exhaustive search for a frozen triangle-free 4x4x4x4 configuration -----


@dataclass(frozen=True)
class SearchReport:
    """Outcome of the four-class pattern-assignment search."""

    triangle_free: bool
    configurations: int
    nodes_explored: int
    stopped_early: bool

    def to_dict(self) -> dict:
        return {
            "triangle_free": self.triangle_free,
            "configurations": self.configurations,
            "nodes_explored": self.nodes_explored,
            "stopped_early": self.stopped_early,
        }


# For a row bitmask r over columns x: _SPREAD[r] sets the whole 4-bit block
# of every x in r; _REPEAT[r] repeats r in all four blocks. A pair (X, Y)
# constrained by assigned pairs (W, X), (W, Y) then forbids exactly the
# (x, y) edges with a common W-neighbour:
#   forbidden = OR over w of _SPREAD[WX[w]] & _REPEAT[WY[w]]
# with bit 4x+y meaning edge (x, y).
_SPREAD = [sum(0b1111 << (4 * x) for x in range(4) if r >> x & 1) for r in range(16)]
_REPEAT = [r | r << 4 | r << 8 | r << 12 for r in range(16)]


def _forbidden(left: Sequence[int], right: Sequence[int]) -> int:
    return (
        _SPREAD[left[0]] & _REPEAT[right[0]]
        | _SPREAD[left[1]] & _REPEAT[right[1]]
        | _SPREAD[left[2]] & _REPEAT[right[2]]
        | _SPREAD[left[3]] & _REPEAT[right[3]]
    )


def _rows_of_mask(mask: int) -> tuple[int, int, int, int]:
    return (mask & 15, mask >> 4 & 15, mask >> 8 & 15, mask >> 12 & 15)


def frozen_4x4_search(
    triangle_free: bool = True, stop_after: Optional[int] = None
) -> SearchReport:
    """Try to build four size-4 colour classes whose six pairwise adjacencies
    are each (a labelled copy of) one of the realizable tree patterns, with
    every cross-class triangle forbidden when triangle_free is set.

    The first pair is fixed to the canonical labelling of each pattern: any
    complete configuration can be relabelled within its classes to match, so
    this only breaks symmetry. Returns the number of complete configurations
    (zero in the triangle-free search) and the number of partial assignments
    explored.
    """
    if not triangle_free and stop_after is None:
        raise ValueError("the relaxed search must be given a stop point")
    classes = _pattern_classes()
    labelled = sorted({rows for _, orbit in classes for rows in orbit}, key=_rows_key)
    masks = np.array(
        [rows[0] | rows[1] << 4 | rows[2] << 8 | rows[3] << 12 for rows in labelled],
        dtype=np.uint32,
    )
    first_choices = [rep for rep, _ in classes]

    configurations = 0
    nodes = 0

    if not triangle_free:
        # Without the triangle constraint every assignment completes; count
        # lazily until the stop point.
        for ab in first_choices:
            nodes += 1
            for second in labelled:
                for third in labelled:
                    nodes += 1
                    # ad, bd, cd are each free.
                    configurations += len(labelled) ** 3
                    if configurations >= stop_after:
                        return SearchReport(False, configurations, nodes, True)
        return SearchReport(False, configurations, nodes, False)

    # Assignment order AB, (AC, BC), (AD, BD), CD. A triple is prunable once
    # both of its earlier pairs are fixed: BC against (AB, AC), BD against
    # (AB, AD), CD against (AC, AD) and (BC, BD). All stored patterns keep
    # the lower class as rows, so the shared class indexes rows on both
    # sides of every check.
    for ab in first_choices:
        nodes += 1
        # Viable (second-pair, third-pair) combinations hanging off AB; the
        # ABC and ABD triples see identical constraints, so this list serves
        # both as (AC, BC) and as (AD, BD).
        wings: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        for second in labelled:
            nodes += 1
            survivors = masks[(masks & _forbidden(ab, second)) == 0]
            for third_m in survivors:
                wings.append((second, _rows_of_mask(int(third_m))))
        nodes += len(wings)
        for ac, bc in wings:
            for ad, bd in wings:
                nodes += 1
                forb_cd = _forbidden(ac, ad) | _forbidden(bc, bd)
                found = int(np.count_nonzero((masks & forb_cd) == 0))
                configurations += found
                if stop_after is not None and configurations >= stop_after:
                    return SearchReport(True, configurations, nodes, True)
    return SearchReport(True, configurations, nodes, False)


# -- degree-bound audit ------------------------------------------------------


@dataclass
class AuditEntry:
    graph_index: int
    k: int
    n: int
    max_degree: int
    frozen_count: int
    qualifying: int  # frozen, non-unique, all classes of size >= 2
    triangle_free: bool
    violations: list[str] = field(default_factory=list)


@dataclass
class AuditReport:
    entries: list[AuditEntry]
    graphs_scanned: int
    colourings_enumerated: int
    frozen_found: int
    qualifying_found: int
    violations: list[str]

    def to_dict(self) -> dict:
        return {
            "graphs_scanned": self.graphs_scanned,
            "colourings_enumerated": self.colourings_enumerated,
            "frozen_found": self.frozen_found,
            "qualifying_found": self.qualifying_found,
            "violations": list(self.violations),
            "entries": [
                {
                    "graph_index": e.graph_index,
                    "k": e.k,
                    "n": e.n,
                    "max_degree": e.max_degree,
                    "frozen_count": e.frozen_count,
                    "qualifying": e.qualifying,
                    "triangle_free": e.triangle_free,
                    "violations": list(e.violations),
                }
                for e in self.entries
            ],
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def threshold_audit(
    corpus: Sequence[Graph],
    k_range: Sequence[int],
    budget: Budget = DEFAULT_BUDGET,
) -> AuditReport:
    """For every frozen colouring found over the corpus, check the class
    degree bound; for the frozen, non-unique ones with all classes of size
    at least two, check the maximum-degree lower bounds (general and, on
    triangle-free graphs, the stronger triangle-free set: no class smaller
    than five except at most two of size three and three of size four, and
    max degree at least ceil(9(k-1)/5))."""
    entries: list[AuditEntry] = []
    total_colourings = 0
    total_frozen = 0
    total_qualifying = 0
    all_violations: list[str] = []

    for gi, g in enumerate(corpus):
        tf = is_triangle_free(g)
        for k in k_range:
            if k < 1 or k > g.n:
                continue
            canonical = enumerate_colourings(g, k, "up_to_colour_permutation", budget)
            total_colourings += len(canonical)
            non_unique = len(canonical) >= 2
            frozen = [
                c
                for c in canonical
                if len(c.used_colours()) == k and is_frozen(g, c)
            ]
            if not frozen:
                continue
            total_frozen += len(frozen)
            entry = AuditEntry(
                graph_index=gi,
                k=k,
                n=g.n,
                max_degree=g.max_degree(),
                frozen_count=len(frozen),
                qualifying=0,
                triangle_free=tf,
            )

            for c in frozen:
                # The class degree bound holds for every frozen colouring.
                for colour in range(k):
                    lhs, rhs, holds = frozen_degree_bound(g, c, colour)
                    if not holds:
                        entry.violations.append(
                            f"graph {gi} k={k}: class {colour} average degree "
                            f"{lhs} below bound {rhs}"
                        )
                sizes = [len(c.class_of(col)) for col in range(k)]
                if not non_unique or min(sizes) < 2:
                    continue
                entry.qualifying += 1
                total_qualifying += 1
                delta = g.max_degree()
                need = _ceil_div(3 * (k - 1), 2)
                if delta < need:
                    entry.violations.append(
                        f"graph {gi} k={k}: max degree {delta} below {need}"
                    )
                if tf:
                    small = sorted(sizes)
                    if small[0] <= 2:
                        entry.violations.append(
                            f"graph {gi} k={k}: triangle-free frozen class of size {small[0]}"
                        )
                    if sum(1 for s in sizes if s == 3) > 2:
                        entry.violations.append(
                            f"graph {gi} k={k}: more than two size-3 classes"
                        )
                    if small[0] < 5:
                        entry.violations.append(
                            f"graph {gi} k={k}: triangle-free frozen class of size {small[0]} < 5"
                        )
                    need_tf = _ceil_div(9 * (k - 1), 5)
                    if delta < need_tf:
                        entry.violations.append(
                            f"graph {gi} k={k}: triangle-free max degree {delta} below {need_tf}"
                        )
            all_violations.extend(entry.violations)
            entries.append(entry)

    return AuditReport(
        entries=entries,
        graphs_scanned=len(corpus),
        colourings_enumerated=total_colourings,
        frozen_found=total_frozen,
        qualifying_found=total_qualifying,
        violations=all_violations,
    )
