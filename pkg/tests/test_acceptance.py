"""Acceptance suite: every claim the toolkit is built to reproduce, each with
its runtime budget. Run with ``pytest tests/test_acceptance.py -v -s`` to see
one pass/fail line per criterion."""

from __future__ import annotations

import random
import time

import networkx as nx
import pytest

from kempe import (
    Budget,
    BudgetExceededError,
    Colouring,
    KempeChain,
    OpenCaseError,
    all_chains,
    apply_change,
    clique_number,
    find_odd_hole,
    is_frozen,
    is_triangle_free,
    kempe_chain,
    pentagon_layers_reduced,
    plan_recolouring,
    recolouring_threshold,
    reconfiguration_components,
    same_canonical_class,
    threshold_audit,
    triangle_clique_tensor,
    verify_plan,
)
from kempe.graph import Graph
from kempe.oracle import fig7_patterns, frozen_4x4_search

from conftest import random_bipartite, random_chordal, random_graph, random_proper


def _report(name: str, elapsed: float, limit: float) -> None:
    status = "PASS" if elapsed < limit else "SLOW"
    print(f"acceptance {name}: {status} ({elapsed:.1f}s, budget {limit:.0f}s)")
    assert elapsed < limit, f"{name} exceeded its runtime budget"


def test_criterion_1_tensor_family():
    t0 = time.monotonic()
    for k in (3, 4, 5):
        con = triangle_clique_tensor(k)
        g = con.graph
        assert all(g.degree(v) == 2 * (k - 1) for v in g.vertices())
        omega = clique_number(g)
        assert omega == 3
        assert find_odd_hole(g) is None
        delta = g.max_degree()
        assert k == -(-(omega + delta + 1) // 2) - 1
        assert is_frozen(g, con.frozen)
    _report("1 (tensor family)", time.monotonic() - t0, 10.0)


def test_criterion_2_non_recolourability_witness():
    t0 = time.monotonic()
    con = triangle_clique_tensor(3)
    summary = reconfiguration_components(con.graph, 3)
    assert summary.num_classes_canonical >= 2
    assert not same_canonical_class(con.graph, con.frozen, con.alternate)
    _report("2 (non-recolourability witness)", time.monotonic() - t0, 60.0)


def test_criterion_3_triangle_free_family():
    t0 = time.monotonic()
    for k in range(3, 11):
        con = pentagon_layers_reduced(k)
        g = con.graph
        assert is_triangle_free(g)
        assert is_frozen(g, con.frozen)
        assert g.max_degree() <= (9 * k - 1) // 5
        for i in range(k):
            for j in range(i + 1, k):
                inside = set(range(5 * i, 5 * i + 5)) | set(range(5 * j, 5 * j + 5))
                degs = sorted(
                    sum(1 for u in g.neighbours(v) if u in inside) for v in inside
                )
                assert degs == [1, 1] + [2] * 8
                seen = {min(inside)}
                stack = [min(inside)]
                while stack:
                    x = stack.pop()
                    for y in g.neighbours(x):
                        if y in inside and y not in seen:
                            seen.add(y)
                            stack.append(y)
                assert len(seen) == 10
    con3 = pentagon_layers_reduced(3)
    alt = Colouring(3, con3.alternate.colours)
    assert not same_canonical_class(con3.graph, con3.frozen, alt)
    _report("3 (triangle-free family)", time.monotonic() - t0, 300.0)


def test_criterion_4_planner_corpus():
    t0 = time.monotonic()
    rng = random.Random(0xACCE97)
    oracle_budget = Budget(max_colourings=1_000_000, max_vertices=20)
    oracle_checked = 0
    for trial in range(200):
        n = rng.randint(1, 10)
        g = random_chordal(rng, n) if trial < 100 else random_bipartite(rng, n)
        k = recolouring_threshold(g) + 1
        alpha = random_proper(rng, g, k)
        beta = random_proper(rng, g, k)
        plan = plan_recolouring(g, alpha, beta)
        assert verify_plan(g, plan)
        # Every instance whose raw colouring space fits the cap gets the
        # independent full check.
        try:
            summary = reconfiguration_components(g, k, oracle_budget)
        except BudgetExceededError:
            continue
        assert summary.num_classes_canonical == 1
        oracle_checked += 1
    assert oracle_checked >= 150
    _report("4 (planner corpus)", time.monotonic() - t0, 600.0)


def test_criterion_5_pattern_search():
    t0 = time.monotonic()
    patterns = fig7_patterns()
    assert len(patterns) == 5
    report = frozen_4x4_search(triangle_free=True)
    assert report.configurations == 0
    relaxed = frozen_4x4_search(triangle_free=False, stop_after=1)
    assert relaxed.configurations >= 1
    _report("5 (pattern search)", time.monotonic() - t0, 300.0)


def _census_upto_7() -> list[Graph]:
    out = []
    for nx_g in nx.graph_atlas_g():
        n = nx_g.number_of_nodes()
        if n < 1 or not nx.is_connected(nx_g):
            continue
        relabel = {u: i for i, u in enumerate(nx_g.nodes())}
        out.append(Graph(n, [(relabel[u], relabel[v]) for u, v in nx_g.edges()]))
    return out


def _sample_connected_8(count: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng, 8, rng.choice([0.25, 0.4, 0.55, 0.7]))
        nx_g = nx.Graph(g.edges())
        nx_g.add_nodes_from(range(8))
        if nx.is_connected(nx_g):
            out.append(g)
    return out


def test_criterion_6_inequality_audit():
    t0 = time.monotonic()
    corpus = _census_upto_7()
    assert len(corpus) >= 990  # 1 + 1 + 2 + 6 + 21 + 112 + 853 connected graphs
    corpus += _sample_connected_8(250, seed=88)
    report = threshold_audit(corpus, [2, 3, 4])
    assert report.violations == []
    assert report.frozen_found > 0
    assert report.qualifying_found > 0  # e.g. the prism shows up in the census
    _report("6 (inequality audit)", time.monotonic() - t0, 1800.0)


def test_criterion_7_engine_properties():
    t0 = time.monotonic()
    rng = random.Random(0x391931)
    cases = 0
    for _ in range(300):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        k = max(2, g.max_degree() + 1 + rng.randint(0, 1))
        c = random_proper(rng, g, k)
        # involution
        v = rng.randrange(n)
        chain = kempe_chain(g, c, v, rng.randrange(k))
        once = apply_change(g, c, chain)
        assert apply_change(g, once, KempeChain(chain.a, chain.b, chain.vertices)) == c
        cases += 1
        # properness preserved along a short random walk
        current = c
        for _ in range(2):
            current = apply_change(
                g, current, kempe_chain(g, current, rng.randrange(n), rng.randrange(k))
            )
            current.validate(g)
            cases += 1
        # chain partition per colour pair
        by_pair: dict[tuple[int, int], set[int]] = {}
        sizes: dict[tuple[int, int], int] = {}
        for ch in all_chains(g, c):
            by_pair.setdefault(ch.pair, set()).update(ch.vertices)
            sizes[ch.pair] = sizes.get(ch.pair, 0) + len(ch.vertices)
        for (a, b), union in by_pair.items():
            expected = {u for u in range(n) if c[u] in (a, b)}
            assert union == expected and sizes[(a, b)] == len(expected)
            cases += 1
    # frozen-partition invariance across the construction families
    for k in range(3, 8):
        for con in (triangle_clique_tensor(k), pentagon_layers_reduced(k)):
            chains = all_chains(con.graph, con.frozen)
            assert len(chains) == k * (k - 1) // 2
            before = {frozenset(con.frozen.class_of(c)) for c in range(k)}
            for chain in chains:
                after_col = apply_change(con.graph, con.frozen, chain)
                after = {frozenset(after_col.class_of(c)) for c in range(k)}
                assert before == after
                cases += 1
    assert cases >= 1000, f"only {cases} randomized cases"
    _report(f"7 (engine properties, {cases} cases)", time.monotonic() - t0, 60.0)


def test_criterion_8_open_case_refused():
    for k in (3, 4, 5):
        con = triangle_clique_tensor(k)
        threshold = recolouring_threshold(con.graph)
        assert threshold == k + 1
        alpha = Colouring(threshold, con.frozen.colours)
        beta = Colouring(threshold, con.alternate.colours)
        with pytest.raises(OpenCaseError) as exc:
            plan_recolouring(con.graph, alpha, beta)
        assert exc.value.code == "open-case-k-equals-threshold"
    print("acceptance 8 (open case refused): PASS")
