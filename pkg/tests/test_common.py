"""Unit tests for the graph kernel: Graph, canonical labels, embeddings, families and graph6."""

import random
from itertools import combinations, permutations

import networkx as nx
import pytest
from networkx.algorithms import isomorphism

from blowup.common import (
    MAX_ORDER,
    ComposeMode,
    Graph,
    Graph6ParseError,
    GraphFamily,
    GraphSizeError,
    canonical_form,
    canonical_graph,
    compose,
    contains_subgraph,
    disjoint_union,
    first_member_embedding,
    from_graph6,
    is_isomorphic,
    iter_embeddings,
    join,
    read_graph6_lines,
    to_graph6,
)
from blowup.constructions import (
    complete_graph,
    cycle_graph,
    matching_graph,
    path_graph,
    petersen_graph,
    star_graph,
)


def _random_graph(order: int, density: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        order, [pair for pair in combinations(range(order), 2) if rng.random() < density]
    )


def _shuffled(graph: Graph, seed: int) -> Graph:
    permutation = list(range(graph.order))
    random.Random(seed).shuffle(permutation)
    return graph.relabel(permutation)


def test_graph_rejects_loops_and_asymmetry():
    """Rows must be symmetric and loop-free."""
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_order_cap():
    """Orders above the kernel cap raise a size error."""
    Graph.empty(MAX_ORDER)
    with pytest.raises(GraphSizeError):
        Graph.empty(MAX_ORDER + 1)


def test_basic_accessors():
    """Edges, degrees and components of a small graph."""
    graph = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert list(graph.edges()) == [(0, 1), (1, 2), (3, 4)]
    assert graph.num_edges == 3
    assert graph.degrees() == [1, 2, 1, 1, 1]
    assert graph.max_degree == 2
    assert graph.min_degree == 1
    assert graph.components() == [[0, 1, 2], [3, 4]]
    assert not graph.is_connected()
    assert graph.add_vertex(0b00001).degrees() == [2, 2, 1, 1, 1, 1]


def test_null_graph():
    """The order-0 graph has no edges and counts as connected."""
    null = Graph.empty(0)
    assert null.num_edges == 0
    assert null.max_degree == 0
    assert null.is_connected()
    assert to_graph6(null) == "?"


def test_networkx_and_matrix_interop():
    """Conversion to networkx and numpy keeps the edge set."""
    graph = petersen_graph()
    converted = graph.to_networkx()
    assert nx.is_isomorphic(converted, nx.petersen_graph())
    assert Graph.from_networkx(converted) == graph
    matrix = graph.adjacency_matrix()
    assert (matrix == matrix.T).all()
    assert int(matrix.sum()) == 2 * graph.num_edges


def test_compose_modes():
    """Disjoint union, join and complement sizes."""
    a, b = complete_graph(3), path_graph(3)
    assert compose(a, b, ComposeMode.DISJOINT_UNION).num_edges == 5
    assert compose(a, b, "join").num_edges == 3 + 2 + 9
    assert compose(a, None, "complement").num_edges == 0
    assert join(Graph.empty(2), Graph.empty(3)).num_edges == 6
    assert disjoint_union(a, a, a).order == 9
    with pytest.raises(ValueError):
        compose(a, None, "join")


def test_canonical_relabelling_invariance():
    """Relabelled copies of P_3 share a label."""
    first = Graph.from_edges(3, [(0, 1), (1, 2)])
    second = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(first) == canonical_form(second)


@pytest.mark.parametrize(
    "first, second",
    [
        (complete_graph(3), path_graph(3)),
        (cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))),
        (path_graph(4), star_graph(4)),
    ],
)
def test_canonical_distinguishes(first, second):
    """Non-isomorphic graphs get distinct labels."""
    assert canonical_form(first) != canonical_form(second)


@pytest.mark.parametrize("seed", range(12))
def test_canonical_form_matches_networkx(seed):
    """Labels agree with networkx isomorphism on random pairs."""
    order = 7
    first = _random_graph(order, 0.45, seed)
    second = _random_graph(order, 0.45, seed + 100)
    assert canonical_form(first) == canonical_form(_shuffled(first, seed))
    expected = nx.is_isomorphic(first.to_networkx(), second.to_networkx())
    assert (canonical_form(first) == canonical_form(second)) == expected
    assert is_isomorphic(first, second) == expected


def test_canonical_graph_is_representative():
    """The canonical graph is isomorphic to the input and independent of labelling."""
    graph = petersen_graph()
    canon = canonical_graph(graph)
    assert is_isomorphic(canon, graph)
    assert canonical_graph(_shuffled(graph, 3)) == canon


def test_contains_subgraph_examples():
    """Containment is non-induced and returns a replayable embedding."""
    embedding = contains_subgraph(complete_graph(4), cycle_graph(4))
    assert embedding is not None
    assert embedding.verify(complete_graph(4), cycle_graph(4))
    assert contains_subgraph(cycle_graph(5), complete_graph(3)) is None
    assert contains_subgraph(complete_graph(6), matching_graph(6)) is not None
    assert contains_subgraph(Graph.empty(3), Graph.empty(0)) is not None


def _brute_embeddings(host: Graph, pattern: Graph) -> set:
    """Every injective edge-preserving map, by trying all of them."""
    edges = list(pattern.edges())
    return {
        mapping
        for mapping in permutations(range(host.order), pattern.order)
        if all(host.has_edge(mapping[u], mapping[v]) for u, v in edges)
    }


SMALL_PATTERNS = [
    Graph.from_networkx(graph) for graph in nx.graph_atlas_g() if graph.number_of_nodes() <= 5
]

CONTAINMENT_HOSTS = [
    Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)]),
    disjoint_union(cycle_graph(5), Graph.empty(3)),
    disjoint_union(complete_graph(4), Graph.empty(4)),
    disjoint_union(_random_graph(6, 0.6, 1), Graph.empty(2)),
    disjoint_union(complete_graph(5), path_graph(3)),
    _random_graph(8, 0.3, 2),
    _random_graph(8, 0.5, 3),
    _random_graph(8, 0.7, 4),
]


def test_contains_subgraph_triangle_before_isolated_vertex():
    """A triangle followed by an isolated vertex still contains K_3."""
    host = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])
    embedding = contains_subgraph(host, complete_graph(3))
    assert embedding is not None
    assert embedding.verify(host, complete_graph(3))


@pytest.mark.parametrize("host", CONTAINMENT_HOSTS)
def test_embeddings_match_brute_force(host):
    """All 53 patterns on at most five vertices: the same embeddings as brute force."""
    assert len(SMALL_PATTERNS) == 53
    for pattern in SMALL_PATTERNS:
        found = [embedding.mapping for embedding in iter_embeddings(host, pattern)]
        expected = _brute_embeddings(host, pattern)
        assert len(found) == len(set(found))
        assert set(found) == expected, to_graph6(pattern)
        assert (contains_subgraph(host, pattern) is not None) == bool(expected)


@pytest.mark.parametrize("seed", range(10))
def test_contains_subgraph_matches_vf2(seed):
    """Agreement with networkx monomorphism on random pairs."""
    host = _random_graph(8, 0.5, seed)
    pattern = _random_graph(5, 0.4, seed + 50).without_isolated()
    if pattern.order == 0:
        pattern = path_graph(2)
    matcher = isomorphism.GraphMatcher(host.to_networkx(), pattern.to_networkx())
    found = contains_subgraph(host, pattern)
    assert (found is not None) == matcher.subgraph_is_monomorphic()
    if found is not None:
        assert found.verify(host, pattern)


def test_anchored_embeddings_use_anchor():
    """Anchored search only returns copies through the anchor."""
    host = disjoint_union(complete_graph(3), path_graph(3))
    assert contains_subgraph(host, complete_graph(3), anchor=4) is None
    for embedding in iter_embeddings(host, path_graph(3), anchor=4):
        assert 4 in embedding.mapping


def test_first_member_embedding():
    """The first embeddable member is reported with its embedding."""
    found = first_member_embedding(cycle_graph(5), [complete_graph(3), path_graph(4)])
    assert found is not None
    member, embedding = found
    assert member == path_graph(4)
    assert embedding.verify(cycle_graph(5), member)
    assert first_member_embedding(path_graph(3), [complete_graph(3)]) is None


def test_family_deduplicates_and_keys():
    """Isomorphic members collapse; the key ignores input order."""
    family = GraphFamily([path_graph(3), star_graph(3), complete_graph(3)])
    assert len(family) == 2
    assert path_graph(3) in family
    other = GraphFamily([complete_graph(3), star_graph(3)])
    assert family == other
    assert family.key() == other.key()
    assert family.union([cycle_graph(4)]).key() != family.key()


def test_family_minimal():
    """Members containing another member are dropped."""
    family = GraphFamily([matching_graph(4), path_graph(4), complete_graph(4), complete_graph(3)])
    minimal = family.minimal()
    assert set(minimal.labels()) == {
        canonical_form(matching_graph(4)),
        canonical_form(complete_graph(3)),
    }


def test_graph6_known_strings():
    """Reference encodings."""
    assert to_graph6(complete_graph(3)) == "Bw"
    assert from_graph6("Bw") == complete_graph(3)
    assert to_graph6(Graph.empty(1)) == "@"
    assert from_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("seed", range(8))
def test_graph6_agrees_with_networkx(seed):
    """Our encoding decodes to the same graph in networkx."""
    graph = _random_graph(9, 0.5, seed)
    decoded = nx.from_graph6_bytes(to_graph6(graph).encode())
    assert Graph.from_networkx(decoded) == graph


@pytest.mark.parametrize("order", [0, 1, 62, 63, MAX_ORDER])
def test_graph6_matches_networkx_encoding(order):
    """Byte-for-byte the networkx encoding, and decoded back unchanged."""
    graph = _random_graph(order, 0.3, order)
    expected = nx.to_graph6_bytes(graph.to_networkx(), header=False).decode().strip()
    assert to_graph6(graph) == expected
    assert from_graph6(expected) == graph


def test_graph6_parse_error_offsets():
    """Offsets point at the offending byte."""
    with pytest.raises(Graph6ParseError) as info:
        from_graph6("B!")
    assert info.value.offset == 1
    with pytest.raises(Graph6ParseError) as info:
        from_graph6("Bx")
    assert info.value.offset == 1


def test_graph6_large_order_header():
    """Orders 63 and 64 use the long header."""
    graph = Graph.from_edges(63, [(0, 62)])
    text = to_graph6(graph)
    assert text.startswith("~")
    assert from_graph6(text) == graph


@pytest.mark.parametrize("text", ["", "B!", "Bww", "Bx", "~~??????"])
def test_graph6_parse_errors(text):
    """Malformed input reports an offset."""
    with pytest.raises(Graph6ParseError) as info:
        from_graph6(text)
    assert info.value.offset >= 0


def test_read_graph6_lines():
    """Blank lines are skipped."""
    graphs = read_graph6_lines("Bw\n\nA_\n")
    assert [graph.num_edges for graph in graphs] == [3, 1]
