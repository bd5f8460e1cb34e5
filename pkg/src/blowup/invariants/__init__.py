"""Exact graph parameters: colouring, matching, covering and bipartition data."""

from ..common import Graph
from ._coloring import (
    MAX_COLORING_ORDER,
    chromatic_number,
    is_edge_critical,
    optimal_coloring,
    subchromatic_number,
)
from ._covering import (
    MAX_COVERING_ORDER,
    Bipartition,
    bipartition,
    component_sides,
    covering_number,
    coverings_up_to,
    independent_covering_number,
    is_covering,
    minimum_covering,
    minimum_independent_coverings,
)
from ._matching import (
    gallai_condition,
    is_factor_critical,
    matching_number,
    maximum_matching,
)


def invariant_summary(graph: Graph) -> dict:
    """Collect every invariant of *graph* into a JSON-ready mapping.

    Parameters with exact-search budgets are reported as ``None`` when the
    graph is too large for them.
    """
    split = bipartition(graph)
    summary = {
        "order": graph.order,
        "edges": graph.num_edges,
        "max_degree": graph.max_degree,
        "min_degree": graph.min_degree,
        "matching_number": matching_number(graph),
        "matching": [list(pair) for pair in maximum_matching(graph)],
        "bipartite": split is not None,
        "bipartition": (
            None if split is None else [sorted(split.side_a), sorted(split.side_b)]
        ),
        "independent_covering_number": independent_covering_number(graph),
        "factor_critical": is_factor_critical(graph),
        "connected": graph.is_connected(),
    }
    summary["chromatic_number"] = (
        chromatic_number(graph) if graph.order <= MAX_COLORING_ORDER else None
    )
    if graph.order <= MAX_COVERING_ORDER:
        cover = minimum_covering(graph)
        summary["covering_number"] = len(cover)
        summary["covering"] = cover
    else:
        summary["covering_number"] = None
        summary["covering"] = None
    return summary
