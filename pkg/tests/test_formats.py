"""Serialization round-trips and parse-error reporting."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from kempe import Graph, GraphParseError, emit_graph, parse_graph

from conftest import random_graph


def test_edge_list_path():
    g = parse_graph("3; 0-1 1-2", "edge-list")
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]


def test_edge_list_no_edges():
    g = parse_graph("3;", "edge-list")
    assert g.n == 3 and g.num_edges() == 0


def test_dimacs_k2():
    g = parse_graph("p edge 2 1\ne 1 2\n", "dimacs")
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_dimacs_emit_k2():
    g = Graph(2, [(0, 1)])
    assert emit_graph(g, "dimacs") == "p edge 2 1\ne 1 2\n"


def test_dimacs_comments_ignored():
    g = parse_graph("c header\np edge 3 2\nc mid\ne 1 2\ne 2 3\n", "dimacs")
    assert g.edges() == [(0, 1), (1, 2)]


def test_graph6_c5():
    # "Dhc" is the reference graph6 encoding of the 5-cycle.
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert emit_graph(c5, "graph6") == "Dhc"
    assert parse_graph("Dhc", "graph6") == c5


def test_graph6_empty_graph():
    g = Graph(0)
    assert emit_graph(g, "graph6") == "?"
    assert parse_graph("?", "graph6").n == 0


def test_graph6_header_accepted():
    assert parse_graph(">>graph6<<Dhc", "graph6").n == 5


def test_graph6_matches_reference_encoder():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(0, 14)
        g = random_graph(rng, n, rng.random())
        nx_g = nx.Graph()
        nx_g.add_nodes_from(range(n))  # fix the vertex order before the edges
        nx_g.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(nx_g, header=False).decode().strip()
        assert emit_graph(g, "graph6") == expected


def test_graph6_large_n_round_trip():
    rng = random.Random(8)
    g = random_graph(rng, 70, 0.1)  # needs the multi-byte size field
    assert parse_graph(emit_graph(g, "graph6"), "graph6") == g


@pytest.mark.parametrize("fmt", ["graph6", "dimacs", "edge-list"])
def test_round_trip_random_corpus(fmt):
    rng = random.Random(31337)
    for _ in range(40):
        n = rng.randint(0, 12)
        g = random_graph(rng, n, rng.random())
        assert parse_graph(emit_graph(g, fmt), fmt) == g


def test_dimacs_malformed_header():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("p edge x 1\ne 1 2\n", "dimacs")
    assert exc.value.line == 1


def test_dimacs_out_of_range_endpoint():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("p edge 2 1\ne 1 3\n", "dimacs")
    assert exc.value.line == 2
    assert "out of range" in str(exc.value)


def test_dimacs_self_loop():
    with pytest.raises(GraphParseError, match="self-loop"):
        parse_graph("p edge 2 1\ne 2 2\n", "dimacs")


def test_dimacs_edge_count_mismatch():
    with pytest.raises(GraphParseError, match="declares 2"):
        parse_graph("p edge 3 2\ne 1 2\n", "dimacs")


def test_edge_list_errors_carry_offsets():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("3; 0-1 0-9", "edge-list")
    assert exc.value.offset == 7
    with pytest.raises(GraphParseError, match="self-loop"):
        parse_graph("3; 1-1", "edge-list")
    with pytest.raises(GraphParseError, match="';'"):
        parse_graph("3 0-1", "edge-list")


def test_graph6_bad_character():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("D\x19c", "graph6")
    assert exc.value.offset == 1


def test_graph6_truncated_body():
    with pytest.raises(GraphParseError, match="expected"):
        parse_graph("D", "graph6")


def test_unknown_format_rejected():
    with pytest.raises(ValueError, match="unknown format"):
        parse_graph("3;", "adjacency")
