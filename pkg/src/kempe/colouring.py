"""Proper colourings, Kempe chains and changes, frozen-colouring checks.

A Kempe chain is a connected component of the subgraph induced by two colour
classes; a Kempe change swaps the two colours on one chain and preserves
properness. A colouring is frozen when every pair of colour classes spans a
connected subgraph, so Kempe changes can only permute whole classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidChainError
from .graph import Graph, induced_components


@dataclass(frozen=True)
class Colouring:
    """Total map vertex -> colour in [0, k). Colour range is checked here;
    properness needs a graph, so it is checked by validate() and by every
    operation that builds colourings."""

    k: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        for v, c in enumerate(self.colours):
            if not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has colour {c} outside [0, {self.k})")

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def validate(self, g: Graph) -> None:
        if len(self.colours) != g.n:
            raise ValueError(f"colouring covers {len(self.colours)} vertices, graph has {g.n}")
        for u, v in g.edges():
            if self.colours[u] == self.colours[v]:
                raise ValueError(f"edge ({u},{v}) is monochromatic (colour {self.colours[u]})")

    def is_proper(self, g: Graph) -> bool:
        try:
            self.validate(g)
        except ValueError:
            return False
        return True

    def class_of(self, colour: int) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.colours) if c == colour)

    def used_colours(self) -> set[int]:
        return set(self.colours)

    def with_colour(self, v: int, colour: int) -> "Colouring":
        cs = list(self.colours)
        cs[v] = colour
        return Colouring(self.k, tuple(cs))


@dataclass(frozen=True)
class KempeChain:
    """One bichromatic component: an unordered colour pair plus its vertices.

    The pair is stored normalized (a <= b). a == b is allowed only for the
    degenerate singleton chain that the same-colour query returns; applying
    it is the identity.
    """

    a: int
    b: int
    vertices: frozenset[int]

    def __post_init__(self):
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        if not isinstance(self.vertices, frozenset):
            object.__setattr__(self, "vertices", frozenset(self.vertices))
        if not self.vertices:
            raise ValueError("chain must be non-empty")
        if self.a == self.b and len(self.vertices) != 1:
            raise ValueError("a degenerate single-colour chain must be a singleton")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b


def _class_mask(c: Colouring, colour: int) -> int:
    m = 0
    for v, col in enumerate(c.colours):
        if col == colour:
            m |= 1 << v
    return m


def kempe_chain(g: Graph, c: Colouring, v: int, colour: int) -> KempeChain:
    """The chain on colours {c[v], colour} containing v.

    When colour == c[v] the chain is the singleton {v}: in a proper colouring
    a single colour class induces no edges.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not 0 <= colour < c.k:
        raise ValueError(f"colour {colour} out of range [0, {c.k})")
    own = c[v]
    if colour == own:
        # A single proper colour class induces no edges, so the component
        # containing v is {v}. Applying this degenerate chain is a no-op.
        return KempeChain(own, own, frozenset([v]))
    members = _class_mask(c, own) | _class_mask(c, colour)
    comp = 1 << v
    frontier = comp
    while frontier:
        u = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        grow = g.adjacency_mask(u) & members & ~comp
        comp |= grow
        frontier |= grow
    verts = frozenset(i for i in range(g.n) if comp >> i & 1)
    return KempeChain(own, colour, verts)


def chain_violation(g: Graph, c: Colouring, chain: KempeChain) -> str | None:
    """None if the chain is a maximal connected bichromatic component of c,
    else a diagnostic string."""
    a, b = chain.a, chain.b
    if not (0 <= a < c.k and 0 <= b < c.k):
        return f"colour pair ({a},{b}) outside [0, {c.k})"
    if chain.is_degenerate:
        (v,) = chain.vertices
        if not 0 <= v < g.n:
            return f"vertex {v} out of range"
        if c[v] != a:
            return f"vertex {v} coloured {c[v]}, not {a}"
        return None
    mask = 0
    for v in chain.vertices:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range"
        if c[v] not in (a, b):
            return f"vertex {v} coloured {c[v]}, not in pair ({a},{b})"
        mask |= 1 << v
    comps = induced_components(g, mask)
    if len(comps) != 1:
        return "not connected"
    for v in chain.vertices:
        outside = g.adjacency_mask(v) & ~mask
        while outside:
            u = (outside & -outside).bit_length() - 1
            outside &= outside - 1
            if c[u] in (a, b):
                return f"not a component: vertex {u} extends it"
    return None


def apply_change(g: Graph, c: Colouring, chain: KempeChain) -> Colouring:
    """Swap the chain's two colours on its vertices. Involution; properness
    is preserved and re-checked."""
    problem = chain_violation(g, c, chain)
    if problem is not None:
        raise InvalidChainError(problem)
    if chain.is_degenerate:
        return c
    a, b = chain.a, chain.b
    cs = list(c.colours)
    for v in chain.vertices:
        cs[v] = b if cs[v] == a else a
    out = Colouring(c.k, tuple(cs))
    out.validate(g)
    return out


def all_chains(g: Graph, c: Colouring) -> list[KempeChain]:
    """Every bichromatic component for every colour pair, each listed once.
    Empty components are not materialized."""
    if len(c.colours) != g.n:
        raise ValueError("colouring does not match graph")
    masks = [_class_mask(c, col) for col in range(c.k)]
    out = []
    for a in range(c.k):
        for b in range(a + 1, c.k):
            for comp in induced_components(g, masks[a] | masks[b]):
                verts = frozenset(i for i in range(g.n) if comp >> i & 1)
                out.append(KempeChain(a, b, verts))
    out.sort(key=lambda ch: (ch.a, ch.b, min(ch.vertices)))
    return out


def is_frozen(g: Graph, c: Colouring) -> bool:
    """True iff every pair of colour classes induces a connected subgraph.

    Requires every colour in [0, k) to be used; the notion is about k
    nonempty classes.
    """
    c.validate(g)
    masks = [_class_mask(c, col) for col in range(c.k)]
    for col, m in enumerate(masks):
        if not m:
            raise ValueError(f"colour {col} is unused; frozenness needs k nonempty classes")
    for a in range(c.k):
        for b in range(a + 1, c.k):
            if len(induced_components(g, masks[a] | masks[b])) != 1:
                return False
    return True


def missed_colours(g: Graph, c: Colouring, v: int) -> set[int]:
    """Colours absent from the closed neighbourhood of v. Never contains c[v]."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    present = {c[v]}
    for u in g.neighbours(v):
        present.add(c[u])
    return set(range(c.k)) - present


def frozen_degree_bound(
    g: Graph, c: Colouring, class_colour: int
) -> tuple[Fraction, Fraction, bool]:
    """Average-degree lower bound for one class of a frozen colouring.

    Returns (lhs, rhs, lhs >= rhs) as exact rationals, where lhs is the
    class's average degree deg(U)/|U| and rhs = (n - |U| + (k-1)(|U|-1))/|U|.
    Each of the k-1 other classes must span a connected (so spanning-tree-
    sized) subgraph together with U, which forces the bound.
    """
    if not is_frozen(g, c):
        raise ValueError("colouring is not frozen")
    members = c.class_of(class_colour)
    size = len(members)
    deg = sum(g.degree(v) for v in members)  # classes are independent sets
    lhs = Fraction(deg, size)
    rhs = Fraction(g.n - size + (c.k - 1) * (size - 1), size)
    return lhs, rhs, lhs >= rhs
