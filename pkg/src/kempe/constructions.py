"""Generators for graphs with frozen colourings plus a second colouring.

Two families are provided: the tensor product of a triangle with a clique
(perfect, 2(k-1)-regular, clique number three), and a triangle-free family
built from k stacked 5-vertex classes with modular shift edges, optionally
trimmed by one edge per class pair to lower the maximum degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .colouring import Colouring, is_frozen
from .graph import Graph


@dataclass(frozen=True)
class LabelledConstruction:
    """A generated graph with its frozen colouring, an alternate proper
    colouring inducing a different class partition (when defined), and the
    (class index, label) pair for each vertex, both 1-based."""

    graph: Graph
    frozen: Colouring
    alternate: Optional[Colouring]
    labels: dict[int, tuple[int, int]]

    def check(self) -> None:
        self.frozen.validate(self.graph)
        if not is_frozen(self.graph, self.frozen):
            raise AssertionError("construction lost its frozen colouring")
        if self.alternate is not None:
            self.alternate.validate(self.graph)
            frozen_classes = {self.frozen.class_of(c) for c in range(self.frozen.k)}
            alt_classes = {self.alternate.class_of(c) for c in self.alternate.used_colours()}
            if frozen_classes == alt_classes:
                raise AssertionError("alternate colouring induces the same partition")


def triangle_clique_tensor(k: int) -> LabelledConstruction:
    """Tensor product of a triangle with a k-clique, k >= 3.

    Vertices are (row, column) pairs with 3 rows and k columns, adjacent iff
    they differ in both coordinates; vertex id = 3*column + row. The column
    colouring is frozen; the row colouring is proper inside the same
    k-colour universe and induces a different partition.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    n = 3 * k
    edges = []
    for c1 in range(k):
        for r1 in range(3):
            for c2 in range(c1 + 1, k):
                for r2 in range(3):
                    if r1 != r2:
                        edges.append((3 * c1 + r1, 3 * c2 + r2))
    g = Graph(n, edges)
    frozen = Colouring(k, tuple(v // 3 for v in range(n)))
    alternate = Colouring(k, tuple(v % 3 for v in range(n)))
    labels = {v: (v // 3 + 1, v % 3 + 1) for v in range(n)}
    return LabelledConstruction(g, frozen, alternate, labels)


def _wrap5(x: int) -> int:
    """1-based mod 5: 6 -> 1, 0 -> 5. Example: label 4 shifted by +3 is 2."""
    return (x - 1) % 5 + 1


def _layer_vertex(i: int, x: int) -> int:
    """Vertex id for label x (1..5) in class i (1..k)."""
    return 5 * (i - 1) + (x - 1)


def _pentagon_edges(k: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            for x in range(1, 6):
                for shift in (2, 3):
                    y = _wrap5(x + shift)
                    edges.append((_layer_vertex(i, x), _layer_vertex(j, y)))
    return edges


def _pentagon_alternate(k: int) -> Optional[Colouring]:
    # On the first three classes, recolour by label: {2,3} -> 0, {1} -> 1,
    # {4,5} -> 2; later classes keep their class colour. Shift edges go from
    # label x to labels x+2 and x+3, which never connects two vertices of the
    # same relabelled group, so the result stays proper.
    if k < 3:
        return None
    colours = []
    for i in range(1, k + 1):
        for x in range(1, 6):
            if i <= 3:
                colours.append(0 if x in (2, 3) else 1 if x == 1 else 2)
            else:
                colours.append(i - 1)
    return Colouring(k, tuple(colours))


def pentagon_layers(k: int) -> LabelledConstruction:
    """k classes of five vertices labelled 1..5; label x in a lower class is
    joined to labels x+2 and x+3 (mod 5) in every higher class.

    The result is (2k-2)-regular and triangle-free, and the class partition
    is a frozen k-colouring. The alternate colouring exists for k >= 3.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    g = Graph(5 * k, _pentagon_edges(k))
    frozen = Colouring(k, tuple(v // 5 for v in range(5 * k)))
    labels = {v: (v // 5 + 1, v % 5 + 1) for v in range(5 * k)}
    return LabelledConstruction(g, frozen, _pentagon_alternate(k), labels)


def pentagon_layers_reduced(k: int) -> LabelledConstruction:
    """pentagon_layers(k) with one edge removed per class pair, chosen so
    that every pair of classes still spans a path on ten vertices.

    For classes i < j the removed edge joins label (j - i) mod 5 in class i
    to that label +2 in class j. Max degree drops to at most (9k-1)/5.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    removed = set()
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            x = _wrap5(j - i)
            y = _wrap5(x + 2)
            removed.add((_layer_vertex(i, x), _layer_vertex(j, y)))
    edges = [e for e in _pentagon_edges(k) if e not in removed]
    if len(edges) != 5 * k * (k - 1) - len(removed):
        raise AssertionError("edge deletion bookkeeping failed")
    g = Graph(5 * k, edges)
    frozen = Colouring(k, tuple(v // 5 for v in range(5 * k)))
    labels = {v: (v // 5 + 1, v % 5 + 1) for v in range(5 * k)}
    alternate = _pentagon_alternate(k)
    if alternate is not None:
        # Deletions only remove constraints, but verify rather than assume.
        alternate.validate(g)
    return LabelledConstruction(g, frozen, alternate, labels)
