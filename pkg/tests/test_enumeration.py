from __future__ import annotations

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorcrit import (
    Graph,
    Graph6Error,
    GraphError,
    all_graphs,
    bits,
    canonical_form,
    canonical_graph,
    complete_graph,
    cycle_graph,
    delete_edge,
    graph_from_edges,
    parse_graph6,
    random_graph,
    read_graph6_stream,
    to_graph6,
)
from factorcrit.enumeration import _canonical_bytes


def dedupe_oracle(n: int) -> int:
    """Count isomorphism classes by canonical-form dedupe of all labeled graphs."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
        seen.add(_canonical_bytes(n, tuple(rows)))
    return len(seen)


def permute(g: Graph, perm: list[int]) -> Graph:
    rows = [0] * g.n
    for u in range(g.n):
        for v in bits(g.adj[u]):
            rows[perm[u]] |= 1 << perm[v]
    return Graph(g.n, tuple(rows))


class TestCanonicalForm:
    def test_invariance_small(self):
        g = cycle_graph(5)
        base = canonical_form(g).encoding
        for perm in ([1, 2, 3, 4, 0], [4, 2, 0, 3, 1], [2, 0, 3, 1, 4]):
            assert canonical_form(permute(g, perm)).encoding == base

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10_000), st.permutations(list(range(8))))
    def test_invariance_random(self, seed, perm):
        g = random_graph(8, 0.5, seed)
        assert canonical_form(permute(g, perm)).encoding == canonical_form(g).encoding

    def test_distinguishes(self):
        k4 = complete_graph(4)
        assert canonical_form(k4).encoding != canonical_form(delete_edge(k4, (0, 1))).encoding

    def test_encoding_is_valid_graph6(self):
        g = random_graph(9, 0.4, 17)
        cg = canonical_graph(g)
        assert canonical_form(cg).encoding == canonical_form(g).encoding
        assert parse_graph6(canonical_form(g).encoding).n == 9

    def test_rejects_large(self):
        with pytest.raises(GraphError):
            canonical_form(graph_from_edges(11, []))


class TestAllGraphs:
    def test_counts(self):
        assert [len(list(all_graphs(n))) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]

    def test_matches_dedupe_oracle(self):
        for n in (4, 5):
            assert len(list(all_graphs(n))) == dedupe_oracle(n)

    def test_no_duplicate_forms(self, graphs_by_order):
        for n in (5, 6, 7):
            forms = [canonical_form(g).encoding for g in graphs_by_order[n]]
            assert len(forms) == len(set(forms))

    def test_deterministic_order(self):
        first = [to_graph6(g) for g in all_graphs(5)]
        second = [to_graph6(g) for g in all_graphs(5)]
        assert first == second

    def test_rejects_large(self):
        with pytest.raises(GraphError):
            next(all_graphs(9))


class TestRandomGraph:
    def test_extreme_probabilities(self):
        assert random_graph(8, 0.0, 3).edge_count() == 0
        assert random_graph(8, 1.0, 3) == complete_graph(8)

    def test_deterministic(self):
        assert random_graph(12, 0.37, 99) == random_graph(12, 0.37, 99)
        assert random_graph(12, 0.37, 99) != random_graph(12, 0.37, 100)

    def test_edge_concentration(self):
        n, p = 24, 0.35
        trials = 40
        pair_count = n * (n - 1) // 2
        total = sum(random_graph(n, p, 5000 + i).edge_count() for i in range(trials))
        mean = pair_count * p
        sigma = math.sqrt(pair_count * p * (1 - p) / trials)
        assert abs(total / trials - mean) < 5 * sigma

    def test_rejects_bad_probability(self):
        with pytest.raises(GraphError):
            random_graph(5, 1.5, 0)


class TestStream:
    def test_basic(self):
        got = list(read_graph6_stream(["D??\n", "C~\n"]))
        assert got[0].n == 5 and got[0].edge_count() == 0
        assert got[1] == complete_graph(4)

    def test_empty_input(self):
        assert list(read_graph6_stream([])) == []

    def test_blank_lines_skipped(self):
        assert len(list(read_graph6_stream(["\n", "C~\n", "  \n"]))) == 1

    def test_strict_raises_with_line_number(self):
        with pytest.raises(Graph6Error, match="line 1"):
            list(read_graph6_stream(["!\n"]))
        with pytest.raises(Graph6Error, match="line 2"):
            list(read_graph6_stream(["C~\n", "!\n"]))

    def test_lenient_reports_and_continues(self):
        seen = []
        got = list(
            read_graph6_stream(
                ["C~\n", "!\n", "D??\n"],
                strict=False,
                on_error=lambda lineno, err: seen.append(lineno),
            )
        )
        assert len(got) == 2 and seen == [2]
