"""Exact vertex colouring by branch and bound."""

import logging
from typing import Iterable, List, Optional

from ..common import Graph, ResourceLimitError, iter_bits

logger = logging.getLogger(__name__)

MAX_COLORING_ORDER = 20


def _greedy_clique(graph: Graph) -> int:
    """Size of a greedily grown clique; a lower bound for the chromatic number."""
    best = 1 if graph.order else 0
    for start in range(graph.order):
        clique, candidates = 1, graph.rows[start]
        while candidates:
            v = max(iter_bits(candidates), key=lambda u: (graph.rows[u] & candidates).bit_count())
            clique += 1
            candidates &= graph.rows[v]
        best = max(best, clique)
    return best


def _dsatur(graph: Graph) -> List[int]:
    """Greedy DSATUR colouring; an upper bound and a usable witness."""
    colors = [-1] * graph.order
    for _ in range(graph.order):
        v = max(
            (u for u in range(graph.order) if colors[u] < 0),
            key=lambda u: (
                len({colors[w] for w in iter_bits(graph.rows[u]) if colors[w] >= 0}),
                graph.degree(u),
                -u,
            ),
        )
        used = {colors[w] for w in iter_bits(graph.rows[v])}
        colors[v] = next(c for c in range(graph.order) if c not in used)
    return colors


def _color_with(graph: Graph, k: int) -> Optional[List[int]]:
    """Try to colour *graph* with *k* colours; new colours are opened in order."""
    colors = [-1] * graph.order
    # forbidden[v] is a bitset of colours used by coloured neighbours of v
    forbidden = [0] * graph.order

    def pick() -> int:
        return max(
            (u for u in range(graph.order) if colors[u] < 0),
            key=lambda u: (forbidden[u].bit_count(), graph.degree(u), -u),
        )

    def extend(coloured: int, opened: int) -> bool:
        if coloured == graph.order:
            return True
        v = pick()
        for c in range(min(opened + 1, k)):
            if forbidden[v] >> c & 1:
                continue
            colors[v] = c
            touched = [w for w in iter_bits(graph.rows[v]) if not forbidden[w] >> c & 1]
            for w in touched:
                forbidden[w] |= 1 << c
            if extend(coloured + 1, max(opened, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            colors[v] = -1
        return False

    return colors if extend(0, 0) else None


def optimal_coloring(graph: Graph) -> List[int]:
    """Return a proper colouring with the minimum number of colours.

    :param graph: graph of order at most ``MAX_COLORING_ORDER``
    :returns: ``colors[v]`` in ``0..χ-1``
    :raises ResourceLimitError: if the order exceeds the exact-search budget

    """
    if graph.order > MAX_COLORING_ORDER:
        raise ResourceLimitError(
            f"Exact colouring is limited to {MAX_COLORING_ORDER} vertices, "
            f"got {graph.order}.",
            estimate=graph.order ** graph.order,
        )
    if graph.num_edges == 0:
        return [0] * graph.order
    best = _dsatur(graph)
    upper = max(best) + 1
    lower = _greedy_clique(graph)
    logger.debug("Colouring bounds for order %s: [%s, %s]", graph.order, lower, upper)
    for k in range(lower, upper):
        coloring = _color_with(graph, k)
        if coloring is not None:
            return coloring
    return best


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number χ(G); 0 for the null graph."""
    if graph.order == 0:
        return 0
    return max(optimal_coloring(graph)) + 1


def subchromatic_number(family: Iterable[Graph]) -> int:
    """Return ``p(F) = min χ(F) - 1`` over the family."""
    values = [chromatic_number(graph) for graph in family]
    if not values:
        raise ValueError("Subchromatic number of an empty family is undefined.")
    return min(values) - 1


def is_edge_critical(graph: Graph) -> bool:
    """Return whether deleting some edge lowers the chromatic number."""
    chi = chromatic_number(graph)
    return any(
        chromatic_number(graph.remove_edges([edge])) < chi for edge in graph.edges()
    )
