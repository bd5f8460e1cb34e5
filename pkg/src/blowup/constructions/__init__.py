"""Named graphs, edge blow-ups, vertex splits and extremal constructions."""

from .blowups import (
    MAX_SPLIT_ORDER,
    BlowupSpec,
    edge_blowup,
    k_family,
    k_st_split,
    lemma_family,
    split_family,
    vertex_split,
)
from .gadgets import e_nu_delta_witness, h_odd_gadget, kst_lemma_witness
from .named import (
    CATALOGUE,
    all_linear_forests,
    complete_bipartite_graph,
    complete_graph,
    complete_minus_cover,
    complete_multipartite_graph,
    cycle_graph,
    disjoint_cliques,
    disjoint_copies,
    double_star,
    empty_graph,
    f_tt_graph,
    graph_from_spec,
    matching_graph,
    named_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from .turan_type import (
    Apex,
    HFamilySpec,
    KstVariant,
    h_construction,
    h_family_member,
    kst_lower_bound_graph,
    partite_embedding,
    turan_class_sizes,
    turan_graph,
)
