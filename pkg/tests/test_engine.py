"""Kempe chains, changes, frozen colourings, and the class degree bound."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from kempe import (
    Colouring,
    Graph,
    InvalidChainError,
    KempeChain,
    all_chains,
    apply_change,
    chain_violation,
    frozen_degree_bound,
    is_frozen,
    kempe_chain,
    missed_colours,
    pentagon_layers_reduced,
    triangle_clique_tensor,
)

from conftest import petersen, random_graph, random_proper


# A 3-colouring of the Petersen graph (ids as in conftest.petersen) whose
# {1,2}-chain through vertex 1 has six vertices; swapping it yields the
# companion colouring below.
PETERSEN_COLOURING = Colouring(3, (0, 1, 2, 1, 2, 1, 2, 0, 0, 1))
PETERSEN_CHAIN = frozenset({1, 2, 3, 4, 6, 9})
PETERSEN_AFTER = Colouring(3, (0, 2, 1, 2, 1, 1, 1, 0, 0, 2))


def test_colouring_rejects_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        Colouring(2, (0, 2))


def test_validate_properness():
    g = Graph(2, [(0, 1)])
    Colouring(2, (0, 1)).validate(g)
    with pytest.raises(ValueError, match="monochromatic"):
        Colouring(2, (1, 1)).validate(g)


def test_chain_pair_normalized():
    ch = KempeChain(3, 1, frozenset([0]))
    assert ch.pair == (1, 3)
    with pytest.raises(ValueError, match="non-empty"):
        KempeChain(0, 1, frozenset())


# -- kempe_chain ---------------------------------------------------------------


def test_six_vertex_chain_in_petersen():
    g = petersen()
    PETERSEN_COLOURING.validate(g)
    ch = kempe_chain(g, PETERSEN_COLOURING, 1, 2)
    assert ch.pair == (1, 2)
    assert ch.vertices == PETERSEN_CHAIN


def test_same_colour_chain_is_singleton():
    g = petersen()
    ch = kempe_chain(g, PETERSEN_COLOURING, 4, PETERSEN_COLOURING[4])
    assert ch.vertices == frozenset([4]) and ch.is_degenerate
    # Applying the degenerate chain changes nothing.
    assert apply_change(g, PETERSEN_COLOURING, ch) == PETERSEN_COLOURING


def test_k2_whole_chain():
    g = Graph(2, [(0, 1)])
    c = Colouring(2, (0, 1))
    assert kempe_chain(g, c, 0, 1).vertices == frozenset([0, 1])


def test_kempe_chain_range_errors():
    g = Graph(2, [(0, 1)])
    c = Colouring(2, (0, 1))
    with pytest.raises(ValueError):
        kempe_chain(g, c, 2, 0)
    with pytest.raises(ValueError):
        kempe_chain(g, c, 0, 5)


# -- apply_change ---------------------------------------------------------------


def test_apply_change_reaches_companion_colouring():
    g = petersen()
    ch = kempe_chain(g, PETERSEN_COLOURING, 1, 2)
    assert apply_change(g, PETERSEN_COLOURING, ch) == PETERSEN_AFTER


def test_apply_change_is_involution():
    g = petersen()
    ch = kempe_chain(g, PETERSEN_COLOURING, 1, 2)
    once = apply_change(g, PETERSEN_COLOURING, ch)
    back = apply_change(g, once, KempeChain(ch.a, ch.b, ch.vertices))
    assert back == PETERSEN_COLOURING


def test_singleton_recolour_when_colour_missed():
    g = Graph(3, [(0, 1), (0, 2)])
    c = Colouring(4, (0, 1, 2))
    out = apply_change(g, c, KempeChain(0, 3, frozenset([0])))
    assert out.colours == (3, 1, 2)


def test_apply_change_rejects_non_maximal_chain():
    g = petersen()
    ch = kempe_chain(g, PETERSEN_COLOURING, 1, 2)
    short = KempeChain(ch.a, ch.b, ch.vertices - {9})
    with pytest.raises(InvalidChainError, match="not a component|not connected"):
        apply_change(g, PETERSEN_COLOURING, short)


def test_apply_change_rejects_wrong_colours():
    g = Graph(2, [(0, 1)])
    c = Colouring(3, (0, 1))
    with pytest.raises(InvalidChainError, match="not in pair"):
        apply_change(g, c, KempeChain(1, 2, frozenset([0, 1])))


def test_chain_violation_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    c = Colouring(2, (0, 1, 0, 1))
    assert chain_violation(g, c, KempeChain(0, 1, frozenset(range(4)))) == "not connected"


# -- all_chains -----------------------------------------------------------------


def test_all_chains_k2():
    g = Graph(2, [(0, 1)])
    chains = all_chains(g, Colouring(2, (0, 1)))
    assert len(chains) == 1 and chains[0].vertices == frozenset([0, 1])


def test_all_chains_three_isolated_vertices():
    g = Graph(3)
    chains = all_chains(g, Colouring(3, (0, 1, 2)))
    # Each vertex forms a singleton chain with each of the two other colours.
    assert len(chains) == 6
    assert all(len(ch.vertices) == 1 for ch in chains)


def test_all_chains_contains_petersen_chain():
    g = petersen()
    chains = all_chains(g, PETERSEN_COLOURING)
    assert any(ch.vertices == PETERSEN_CHAIN for ch in chains)


def test_all_chains_matches_naive_enumeration():
    rng = random.Random(23)

    def naive(g: Graph, c: Colouring):
        found = set()
        for v in range(g.n):
            for colour in range(c.k):
                if colour == c[v]:
                    continue
                ch = kempe_chain(g, c, v, colour)
                found.add((ch.a, ch.b, ch.vertices))
        return found

    for _ in range(40):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, 0.4)
        k = max(2, g.max_degree() + 1 + rng.randint(0, 1))
        c = random_proper(rng, g, k)
        assert {(ch.a, ch.b, ch.vertices) for ch in all_chains(g, c)} == naive(g, c)


# -- frozen colourings ------------------------------------------------------------


def test_tensor_column_colouring_is_frozen():
    con = triangle_clique_tensor(5)
    assert is_frozen(con.graph, con.frozen)


def test_path_colouring_not_frozen():
    g = Graph(3, [(0, 1), (1, 2)])
    assert not is_frozen(g, Colouring(3, (0, 1, 2)))


def test_reduced_pentagon_family_stays_frozen():
    con = pentagon_layers_reduced(5)
    assert is_frozen(con.graph, con.frozen)


def test_is_frozen_requires_all_colours_used():
    g = Graph(2, [(0, 1)])
    with pytest.raises(ValueError, match="unused"):
        is_frozen(g, Colouring(3, (0, 1)))


# -- missed colours ----------------------------------------------------------------


def test_missed_colours_isolated_vertex():
    assert missed_colours(Graph(1), Colouring(3, (0,)), 0) == {1, 2}


def test_missed_colours_full_clique():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert missed_colours(g, Colouring(3, (0, 1, 2)), 0) == set()


def test_missed_colours_star_centre():
    g = Graph(3, [(0, 1), (0, 2)])
    assert missed_colours(g, Colouring(4, (0, 1, 2)), 0) == {3}


# -- class degree bound ---------------------------------------------------------------


def test_degree_bound_tensor_column():
    con = triangle_clique_tensor(5)
    lhs, rhs, holds = frozen_degree_bound(con.graph, con.frozen, 0)
    assert lhs == Fraction(8)
    assert rhs == Fraction(20, 3)
    assert holds
    # Cross-check lhs by direct counting: a column has 3 vertices, each of
    # degree 8, and no internal edges.
    members = con.frozen.class_of(0)
    assert sum(con.graph.degree(v) for v in members) == 24


def test_degree_bound_k2_equality():
    g = Graph(2, [(0, 1)])
    lhs, rhs, holds = frozen_degree_bound(g, Colouring(2, (0, 1)), 0)
    assert lhs == rhs == Fraction(1) and holds


def test_degree_bound_every_class_of_reduced_pentagon():
    con = pentagon_layers_reduced(7)
    for colour in range(7):
        _, _, holds = frozen_degree_bound(con.graph, con.frozen, colour)
        assert holds


def test_degree_bound_requires_frozen_input():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="not frozen"):
        frozen_degree_bound(g, Colouring(3, (0, 1, 2)), 0)
