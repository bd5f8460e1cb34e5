"""Unit tests for named graphs, blow-ups, splits, gadgets and Turán-type constructions."""

import pytest

from blowup.common import (
    Graph,
    Graph6ParseError,
    GraphFamily,
    ParameterError,
    ResourceLimitError,
    contains_subgraph,
    disjoint_union,
    is_isomorphic,
)
from blowup.constructions import (
    BlowupSpec,
    HFamilySpec,
    all_linear_forests,
    complete_bipartite_graph,
    complete_graph,
    complete_minus_cover,
    cycle_graph,
    disjoint_cliques,
    double_star,
    e_nu_delta_witness,
    edge_blowup,
    f_tt_graph,
    graph_from_spec,
    h_construction,
    h_family_member,
    h_odd_gadget,
    k_family,
    k_st_split,
    kst_lemma_witness,
    kst_lower_bound_graph,
    lemma_family,
    matching_graph,
    named_graph,
    partite_embedding,
    path_graph,
    petersen_graph,
    split_family,
    star_graph,
    turan_class_sizes,
    turan_graph,
    vertex_split,
)
from blowup.formulas import (
    f_chvatal_hanson,
    g_diag,
    h_edges,
    h_prime_edges,
    kst_lower_bound,
    t_p_edges,
)
from blowup.invariants import matching_number
from blowup.oracle import generate_graphs, verify_free


def test_catalogue_sizes():
    """Orders and sizes of the named graphs."""
    assert (path_graph(5).order, path_graph(5).num_edges) == (5, 4)
    assert cycle_graph(5).num_edges == 5
    assert star_graph(4).num_edges == 3
    assert matching_graph(6).num_edges == 3
    assert complete_bipartite_graph(2, 3).num_edges == 6
    assert petersen_graph().num_edges == 15
    assert petersen_graph().degrees() == [3] * 10
    assert double_star(3).num_edges == 5
    assert f_tt_graph(3).num_edges == 5
    assert disjoint_cliques(2, 3).num_edges == 6
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        matching_graph(3)


def test_complete_minus_cover():
    """Removing a minimum edge cover drops every degree by one except the S_3 centre."""
    even = complete_minus_cover(6)
    assert even.num_edges == 15 - 3
    assert even.degrees() == [4] * 6
    odd = complete_minus_cover(5)
    assert odd.num_edges == 10 - 3
    assert sorted(odd.degrees()) == [2, 3, 3, 3, 3]


def test_named_graph_and_specs():
    """Catalogue specs parse; unknown names fall back to graph6."""
    assert named_graph("kst", 2, 3) == complete_bipartite_graph(2, 3)
    assert graph_from_spec("kst:2,3") == complete_bipartite_graph(2, 3)
    assert graph_from_spec("petersen") == petersen_graph()
    assert graph_from_spec("cliques:2,3") == disjoint_cliques(2, 3)
    assert graph_from_spec("Bw") == complete_graph(3)
    with pytest.raises(ValueError):
        named_graph("nope")
    with pytest.raises(Graph6ParseError):
        graph_from_spec("nope:3")


def test_edge_blowup_examples():
    """M_4^3 is two disjoint triangles; K_2^(p+1) is K_(p+1)."""
    assert is_isomorphic(edge_blowup(matching_graph(4), 2), disjoint_cliques(2, 3))
    assert edge_blowup(path_graph(2), 4) == complete_graph(5)
    with pytest.raises(ParameterError):
        edge_blowup(path_graph(3), 1)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_edge_blowup_identities(p):
    """Order n + (p-1)e(G) and size e(G)p(p+1)/2 for every base graph of order <= 6."""
    for order in range(1, 7):
        for base in generate_graphs(order):
            blown = edge_blowup(base, p)
            spec = BlowupSpec(base, p)
            assert blown.order == base.order + (p - 1) * base.num_edges == spec.order
            assert blown.num_edges == base.num_edges * p * (p + 1) // 2 == spec.size


def test_blowup_spec():
    """The chromatic hypothesis p >= χ(G) + 1."""
    assert BlowupSpec(cycle_graph(5), 4).chromatic_ok
    assert not BlowupSpec(cycle_graph(5), 3).chromatic_ok
    assert BlowupSpec(cycle_graph(4), 3).build() == edge_blowup(cycle_graph(4), 3)
    with pytest.raises(ParameterError):
        BlowupSpec(cycle_graph(4), 1)


def test_vertex_split():
    """Splits keep the edge count; splitting everything leaves a matching."""
    assert is_isomorphic(vertex_split(cycle_graph(4), [0]), path_graph(5))
    assert is_isomorphic(vertex_split(star_graph(4), [0]), matching_graph(6))
    every = vertex_split(petersen_graph(), range(10))
    assert is_isomorphic(every, matching_graph(30))
    with pytest.raises(ValueError):
        vertex_split(path_graph(3), [5])


def test_split_family_examples():
    """Split families of S_3, P_4 and C_4."""
    assert split_family(star_graph(3)) == GraphFamily([path_graph(3), matching_graph(4)])
    assert split_family(path_graph(4)) == GraphFamily(all_linear_forests(3))
    assert split_family(cycle_graph(4)) == GraphFamily(all_linear_forests(4) + [cycle_graph(4)])


@pytest.mark.parametrize("k", range(1, 6))
def test_split_family_of_paths_is_linear_forests(k):
    """Every split of P_(k+1) is a linear forest with k edges, and all of them occur."""
    family = split_family(path_graph(k + 1))
    assert all(member.num_edges == k for member in family)
    assert family == GraphFamily(all_linear_forests(k))


def test_split_family_guard():
    """Bases beyond the split cap are refused."""
    with pytest.raises(ResourceLimitError):
        split_family(path_graph(13))


def test_k_st_split():
    """No split is K_{s,t}; splitting everything is a matching."""
    assert k_st_split(2, 3, 0, 0) == complete_bipartite_graph(2, 3)
    assert is_isomorphic(k_st_split(2, 3, 2, 3), matching_graph(12))
    with pytest.raises(ParameterError):
        k_st_split(2, 3, 3, 0)


def test_turan_graph():
    """Class sizes and edge counts of T_p(n)."""
    assert turan_class_sizes(10, 3) == [4, 3, 3]
    assert turan_graph(10, 3).num_edges == t_p_edges(10, 3)
    assert turan_graph(4, 6) == complete_graph(4)


def test_h_construction_reference_values():
    """H(10,2,2) has 29 edges, H'(10,3,3) has 37."""
    assert h_construction(10, 2, 2, "clique").num_edges == 29
    assert h_construction(10, 3, 3, "independent").num_edges == 37
    with pytest.raises(ParameterError):
        h_construction(2, 2, 5)


def test_h_family_member():
    """Members of H(n,p,s,ν,Δ,B) have h'(n,p,s) + e(E) + e(Q) edges."""
    member = h_family_member(HFamilySpec(20, 2, 1, nu=2, delta=2))
    assert member.num_edges == t_p_edges(20, 2) + 6
    with_apex = h_family_member(HFamilySpec(20, 2, 3, apex_graph=matching_graph(2)))
    assert with_apex.num_edges == h_prime_edges(20, 2, 3) + 1
    clique_apex = h_family_member(HFamilySpec(12, 3, 3, apex_graph=complete_graph(2)))
    assert clique_apex.num_edges == h_edges(12, 3, 3)
    with pytest.raises(ParameterError):
        HFamilySpec(20, 2, 3, apex_graph=complete_graph(3))
    with pytest.raises(ParameterError):
        HFamilySpec(20, 1, 1)


def test_partite_embedding():
    """The inner graph goes into the first class; it must fit."""
    host = partite_embedding([4, 3], path_graph(3))
    assert host.num_edges == 12 + 2
    with pytest.raises(ParameterError):
        partite_embedding([2, 2], path_graph(3))


@pytest.mark.parametrize("t, edges", [(4, 10), (6, 27), (8, 52)])
def test_h_odd_gadget_shape(t, edges):
    """H_(2t-1): order 2t-1, Δ = ν = t-1 and f(t-1,t-1) edges."""
    gadget = h_odd_gadget(t)
    assert gadget.order == 2 * t - 1
    assert gadget.num_edges == edges == f_chvatal_hanson(t - 1, t - 1)
    assert gadget.max_degree == t - 1
    assert matching_number(gadget) == t - 1


def test_h_odd_gadget_small_is_k_family_free():
    """H_7 contains no member of K(4)."""
    assert verify_free(h_odd_gadget(4), k_family(4))


def test_h_odd_gadget_contains_k34_split():
    """H_11 contains K_(3,4)(0,1), a member of K(6)."""
    gadget, member = h_odd_gadget(6), k_st_split(3, 4, 0, 1)
    assert member in k_family(6)
    embedding = contains_subgraph(gadget, member)
    assert embedding is not None
    assert embedding.verify(gadget, member)
    assert not verify_free(gadget, k_family(6))


@pytest.mark.slow
def test_h_odd_gadget_contains_k72_split():
    """H_15 contains K_(7,2)(0,1), a member of K(8) on all 15 vertices."""
    gadget, member = h_odd_gadget(8), k_st_split(7, 2, 0, 1)
    assert member.order == gadget.order == 15
    assert member in k_family(8)
    embedding = contains_subgraph(gadget, member)
    assert embedding is not None
    assert embedding.verify(gadget, member)


@pytest.mark.parametrize("t", [3, 5, 7])
def test_h_odd_gadget_rejects_odd(t):
    """Odd t is outside the construction."""
    with pytest.raises(ParameterError):
        h_odd_gadget(t)


@pytest.mark.parametrize("nu", range(0, 6))
@pytest.mark.parametrize("delta", range(0, 6))
def test_e_nu_delta_witness(nu, delta):
    """The witness respects both bounds and attains f(ν,Δ)."""
    witness = e_nu_delta_witness(nu, delta)
    assert witness.num_edges == f_chvatal_hanson(nu, delta)
    assert witness.max_degree <= delta
    assert matching_number(witness) <= nu


@pytest.mark.parametrize("t", [3, 4, 5])
def test_kst_lemma_witness(t):
    """The witness has g(t-1,t-1) edges and avoids the lemma family."""
    witness = kst_lemma_witness(t)
    assert witness.num_edges == g_diag(t)
    assert verify_free(witness, lemma_family(t))


def test_lemma_family_members():
    """{S_4, M_6, K_{2,2}(0,0), K_{2,2}(0,1), K_{2,2}(0,2)} at t = 3."""
    family = lemma_family(3)
    assert len(family) == 5
    assert star_graph(4) in family
    assert matching_graph(6) in family
    assert cycle_graph(4) in family
    assert path_graph(5) in family
    assert disjoint_union(path_graph(3), path_graph(3)) in family


def test_kst_lower_bound_graphs():
    """Both host variants reach the explicit lower bound edge count."""
    first = kst_lower_bound_graph(30, 3, 3, 4, "F1")
    assert first.num_edges == kst_lower_bound(30, 3, 3, 4)
    second = kst_lower_bound_graph(30, 3, 2, 3, "F2")
    assert second.num_edges == h_edges(30, 3, 2) + g_diag(3)


def test_linear_forests():
    """Linear forests with three edges: P_4, P_3 ∪ P_2 and M_6."""
    forests = all_linear_forests(3)
    assert len(forests) == 3
    assert all(forest.num_edges == 3 and not forest.isolated_vertices() for forest in forests)
    assert isinstance(forests[0], Graph)
