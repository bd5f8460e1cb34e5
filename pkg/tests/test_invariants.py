"""Unit tests for colouring, matching and covering invariants."""

import random
from itertools import combinations, product

import networkx as nx
import pytest

from blowup.common import Graph
from blowup.constructions import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    double_star,
    h_odd_gadget,
    matching_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from blowup.invariants import (
    bipartition,
    chromatic_number,
    covering_number,
    coverings_up_to,
    gallai_condition,
    independent_covering_number,
    invariant_summary,
    is_edge_critical,
    is_factor_critical,
    matching_number,
    maximum_matching,
    minimum_independent_coverings,
    optimal_coloring,
    subchromatic_number,
)
from blowup.oracle import generate_graphs


def _random_graph(order: int, density: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        order, [pair for pair in combinations(range(order), 2) if rng.random() < density]
    )


def _colourable(graph: Graph, k: int) -> bool:
    return any(
        all(colours[u] != colours[v] for u, v in graph.edges())
        for colours in product(range(k), repeat=graph.order)
    )


@pytest.mark.parametrize(
    "graph, expected",
    [
        (Graph.empty(0), 0),
        (Graph.empty(4), 1),
        (cycle_graph(6), 2),
        (cycle_graph(5), 3),
        (petersen_graph(), 3),
        (complete_graph(5), 5),
    ],
)
def test_chromatic_number_examples(graph, expected):
    """Known chromatic numbers."""
    assert chromatic_number(graph) == expected


@pytest.mark.parametrize("seed", range(8))
def test_optimal_coloring_is_optimal(seed):
    """The colouring is proper and one colour fewer is impossible."""
    graph = _random_graph(7, 0.5, seed)
    colours = optimal_coloring(graph)
    assert all(colours[u] != colours[v] for u, v in graph.edges())
    chi = max(colours) + 1
    assert chi == chromatic_number(graph)
    assert not _colourable(graph, chi - 1)


def test_edge_criticality_and_subchromatic():
    """Odd cycles and cliques are edge-critical; C_4 and Petersen are not."""
    assert is_edge_critical(complete_graph(3))
    assert is_edge_critical(cycle_graph(5))
    assert not is_edge_critical(cycle_graph(4))
    assert not is_edge_critical(petersen_graph())
    assert subchromatic_number([complete_graph(3), complete_graph(4)]) == 2
    with pytest.raises(ValueError):
        subchromatic_number([])


@pytest.mark.parametrize("seed", range(10))
def test_matching_matches_networkx(seed):
    """Blossom matching agrees with networkx maximum cardinality matching."""
    graph = _random_graph(9, 0.35, seed)
    matching = maximum_matching(graph)
    assert all(graph.has_edge(u, v) for u, v in matching)
    assert len({v for edge in matching for v in edge}) == 2 * len(matching)
    expected = nx.max_weight_matching(graph.to_networkx(), maxcardinality=True)
    assert len(matching) == len(expected)


def test_matching_examples():
    """ν of named graphs and of the gadget H_7."""
    assert matching_number(petersen_graph()) == 5
    assert matching_number(star_graph(6)) == 1
    assert matching_number(cycle_graph(7)) == 3
    assert matching_number(h_odd_gadget(4)) == 3


def test_factor_critical_examples():
    """Odd cliques and odd cycles are factor-critical; paths are not."""
    assert is_factor_critical(complete_graph(5))
    assert is_factor_critical(cycle_graph(7))
    assert not is_factor_critical(path_graph(5))
    assert not is_factor_critical(complete_graph(4))


@pytest.mark.parametrize("order", [3, 4, 5, 6])
def test_gallai_implies_factor_critical(order):
    """Every graph meeting Gallai's condition is factor-critical."""
    for graph in generate_graphs(order):
        if gallai_condition(graph):
            assert is_factor_critical(graph)


def test_coverings():
    """Vertex coverings of paths and stars."""
    assert list(coverings_up_to(path_graph(3), 1)) == [frozenset({1})]
    assert covering_number(petersen_graph()) == 6
    assert covering_number(star_graph(5)) == 1


@pytest.mark.parametrize(
    "graph, expected",
    [
        (path_graph(2), 1),
        (path_graph(5), 2),
        (path_graph(8), 4),
        (cycle_graph(4), 2),
        (matching_graph(6), 3),
        (star_graph(5), 1),
        (double_star(3), 3),
        (complete_bipartite_graph(2, 3), 2),
        (cycle_graph(5), None),
    ],
)
def test_independent_covering_number(graph, expected):
    """q(G) is the sum of smaller colour classes, None when not bipartite."""
    assert independent_covering_number(graph) == expected


def test_minimum_independent_coverings():
    """Both colour classes of P_4 are minimum independent coverings."""
    coverings = minimum_independent_coverings(path_graph(4))
    assert coverings == [frozenset({0, 2}), frozenset({1, 3})]
    assert minimum_independent_coverings(complete_graph(3)) == []


def test_bipartition():
    """Smaller class first; odd cycles have none."""
    split = bipartition(complete_bipartite_graph(2, 3))
    assert split is not None
    assert split.side_a == frozenset({0, 1})
    assert bipartition(cycle_graph(5)) is None


def test_invariant_summary():
    """The summary of C_5 gathers every invariant."""
    summary = invariant_summary(cycle_graph(5))
    assert summary["order"] == 5
    assert summary["edges"] == 5
    assert summary["matching_number"] == 2
    assert summary["chromatic_number"] == 3
    assert summary["covering_number"] == 3
    assert summary["bipartite"] is False
    assert summary["independent_covering_number"] is None
    assert summary["factor_critical"] is True
