"""Unit tests for the brute-force oracle: generation, exact Turán numbers and NIM numbers."""

from itertools import combinations

import networkx as nx
import pytest

from blowup.common import Graph, GraphFamily, ParameterError, ResourceLimitError
from blowup.constructions import (
    complete_graph,
    cycle_graph,
    disjoint_cliques,
    lemma_family,
    path_graph,
    turan_graph,
)
from blowup.formulas import g_diag, h_prime_edges, t_p_edges
from blowup.oracle import (
    MemoryResultStore,
    OracleResult,
    SearchStats,
    exact_ex,
    exact_nim_g,
    ex_cache_key,
    generate_graphs,
    greedy_free_graph,
    level_thresholds,
    nim_cache_key,
    stabilize_p_st,
    verify_free,
)


def _isomorphism_classes(n: int) -> int:
    """Count graphs on *n* vertices up to isomorphism with networkx alone."""
    pairs = list(combinations(range(n), 2))
    classes = []
    for mask in range(1 << len(pairs)):
        graph = nx.empty_graph(n)
        graph.add_edges_from(pair for i, pair in enumerate(pairs) if mask >> i & 1)
        if not any(
            graph.number_of_edges() == other.number_of_edges() and nx.is_isomorphic(graph, other)
            for other in classes
        ):
            classes.append(graph)
    return len(classes)


@pytest.mark.parametrize(
    "n, expected", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)]
)
def test_generation_counts(n, expected):
    """Number of graphs on n vertices up to isomorphism."""
    assert len(generate_graphs(n)) == expected


@pytest.mark.slow
def test_generation_count_seven():
    """1044 graphs on seven vertices."""
    assert len(generate_graphs(7)) == 1044


@pytest.mark.parametrize("n", [3, 4, 5])
def test_generation_matches_networkx_enumeration(n):
    """Cross-check against a plain enumeration deduplicated by networkx."""
    assert len(generate_graphs(n)) == _isomorphism_classes(n)


@pytest.mark.parametrize("n, expected", [(4, 7), (5, 14), (6, 38)])
def test_generation_of_triangle_free_graphs(n, expected):
    """Triangle-free graphs on n vertices up to isomorphism."""
    graphs = generate_graphs(n, [complete_graph(3)])
    assert len(graphs) == expected
    assert all(verify_free(graph, [complete_graph(3)]) for graph in graphs)


def test_generation_threshold_and_stats():
    """min_edges keeps only the dense end; stats record every level."""
    stats = SearchStats()
    graphs = generate_graphs(5, min_edges=9, stats=stats)
    assert sorted(graph.num_edges for graph in graphs) == [9, 10]
    assert len(stats.per_level) == 6
    assert stats.lower_bound == 9
    assert stats.explored > 0
    assert level_thresholds(5, 6) == [0, 0, 1, 2, 4, 6]


def test_greedy_free_graph():
    """The greedy lower bound is free and has n vertices."""
    graph = greedy_free_graph(7, [complete_graph(3)], seed=3)
    assert graph.order == 7
    assert verify_free(graph, [complete_graph(3)])


@pytest.mark.parametrize("n", range(2, 8))
def test_exact_ex_triangle(n):
    """Mantel: ex(n, K_3) = t_2(n), with the Turán graph as unique extremal graph."""
    result = exact_ex(n, [complete_graph(3)])
    assert result.value == t_p_edges(n, 2)
    assert len(result.witnesses) == 1
    assert nx.is_isomorphic(result.witnesses[0].to_networkx(), turan_graph(n, 2).to_networkx())
    assert result.replay([complete_graph(3)])


@pytest.mark.parametrize(
    "n, forbidden, expected",
    [
        (5, cycle_graph(4), 6),
        (6, cycle_graph(4), 7),
        (7, cycle_graph(4), 9),
        (5, path_graph(3), 2),
        (7, path_graph(3), 3),
        (5, disjoint_cliques(2, 2), 4),
    ],
)
def test_exact_ex_examples(n, forbidden, expected):
    """Small Turán numbers of C_4, P_3 and M_4."""
    assert exact_ex(n, [forbidden]).value == expected


def test_exact_ex_hints_and_cache():
    """A free hint seeds the threshold; a second call is answered from the store."""
    store = MemoryResultStore()
    family = [complete_graph(3)]
    first = exact_ex(7, family, store=store, hints=[turan_graph(7, 2), complete_graph(7)])
    assert first.value == 12
    assert ex_cache_key(7, GraphFamily(family)) in store
    assert first.family_key == GraphFamily(family).key()
    second = exact_ex(7, family, store=store)
    assert second == first


def test_exact_ex_paranoid_recomputes_bad_cache():
    """A tampered cached record fails replay and is recomputed."""
    store = MemoryResultStore()
    family = [complete_graph(3)]
    good = exact_ex(5, family, store=store)
    key = next(iter(store.keys()))
    store.put(key, dict(good.to_dict(), value=99))
    assert exact_ex(5, family, store=store).value == 99
    assert exact_ex(5, family, store=store, paranoid=True).value == 6


def test_oracle_result_round_trip():
    """from_dict rebuilds what to_dict stored."""
    result = exact_ex(6, [cycle_graph(4)])
    assert OracleResult.from_dict(result.to_dict()) == result


def test_exact_ex_guards():
    """Out-of-range orders and edgeless forbidden graphs are refused."""
    with pytest.raises(ResourceLimitError):
        exact_ex(11, [complete_graph(3)])
    with pytest.raises(ParameterError):
        exact_ex(5, [Graph.empty(2)])
    with pytest.raises(ParameterError):
        exact_ex(-1, [complete_graph(3)])


def test_verify_free_reports_a_member():
    """A failed check names the member and an embedding."""
    assert verify_free(cycle_graph(5), [complete_graph(3)])
    check = verify_free(complete_graph(4), [complete_graph(3), cycle_graph(4)])
    assert not check
    assert check.embedding.verify(complete_graph(4), check.member)


@pytest.mark.slow
def test_exact_ex_two_triangles():
    """ex(9, 2K_3) = 24."""
    assert exact_ex(9, [disjoint_cliques(2, 3)]).value == 24


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9, 10])
def test_exact_ex_lemma_family(n):
    """ex(n, {S_4, M_6, K_(2,2)(0,i)}) = g(2,2) = 4."""
    assert exact_ex(n, lemma_family(3)).value == g_diag(3)


@pytest.mark.parametrize("n, expected", [(0, 0), (3, 3), (4, 6), (5, 10)])
def test_nim_triangle_below_ramsey(n, expected):
    """Below R(3,3) = 6 a colouring without monochromatic triangles exists."""
    result = exact_nim_g(n, complete_graph(3))
    assert result.value == expected
    assert result.replay()


def test_nim_triangle_six():
    """At n = 6 the optimum still beats t_2(6); the lower bound g >= ex holds."""
    result = exact_nim_g(6, complete_graph(3))
    assert result.value >= 10 > t_p_edges(6, 2)
    assert result.replay()


def test_nim_trivial_patterns():
    """Every edge is a copy of K_2; no copy of K_4 fits in K_3."""
    assert exact_nim_g(4, path_graph(2)).value == 0
    assert exact_nim_g(3, complete_graph(4)).value == 3


@pytest.mark.parametrize("pattern", [path_graph(3), cycle_graph(4), complete_graph(3)])
@pytest.mark.parametrize("n", [4, 5])
def test_nim_at_least_ex(n, pattern):
    """g(n,H) >= ex(n,H) on every computed pair."""
    assert exact_nim_g(n, pattern).value >= exact_ex(n, [pattern]).value


def test_nim_cache_and_guards():
    """Cached NIM results come back unchanged; guards hold."""
    store = MemoryResultStore()
    first = exact_nim_g(5, complete_graph(3), store=store)
    assert nim_cache_key(5, complete_graph(3)) in store
    assert exact_nim_g(5, complete_graph(3), store=store) == first
    with pytest.raises(ResourceLimitError):
        exact_nim_g(8, complete_graph(3))
    with pytest.raises(ResourceLimitError):
        exact_nim_g(7, complete_graph(7))


def test_stabilize_p_st():
    """Rows carry h'(n,1,2), the difference and the conjectured difference."""
    result = stabilize_p_st(2, 2, 3, [6, 7])
    assert [row.n for row in result.rows] == [6, 7]
    for row in result.rows:
        assert row.h_prime == h_prime_edges(row.n, 1, 2)
        assert row.difference == row.ex - row.h_prime
        assert row.conjectured == 1
        assert row.ex >= row.n
    assert result.to_dict()["rows"][0]["n"] == 6
    with pytest.raises(ParameterError):
        stabilize_p_st(3, 2, 3, [6])
    with pytest.raises(ParameterError):
        stabilize_p_st(2, 2, 2, [6])


def test_nim_paranoid_recomputes_bad_cache():
    """A tampered NIM record is trusted by default and recomputed under replay."""
    store = MemoryResultStore()
    good = exact_nim_g(5, complete_graph(3), store=store)
    key = nim_cache_key(5, complete_graph(3))
    store.put(key, dict(good.to_dict(), value=999))
    assert exact_nim_g(5, complete_graph(3), store=store).value == 999
    assert exact_nim_g(5, complete_graph(3), store=store, paranoid=True).value == 10
    assert store.get(key)["value"] == 10
