"""Catalogue of named small graphs.

Orders follow the usual subscripts: ``P_k``, ``C_k``, ``S_k`` and ``M_k`` all
have ``k`` vertices, so ``S_{t+1}`` has ``t`` edges and ``M_{2t}`` is a
matching of ``t`` edges.
"""

from typing import Callable, Dict, List, Sequence

from ..common import Graph, disjoint_union, from_graph6, join


def complete_graph(order: int) -> Graph:
    """``K_order``."""
    return Graph.complete(order)


def empty_graph(order: int) -> Graph:
    """Edgeless graph on *order* vertices."""
    return Graph.empty(order)


def path_graph(order: int) -> Graph:
    """Path ``P_order`` on vertices ``0-1-...-(order-1)``."""
    return Graph.from_edges(order, ((v, v + 1) for v in range(order - 1)))


def cycle_graph(order: int) -> Graph:
    """Cycle ``C_order``, ``order >= 3``."""
    if order < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {order}.")
    return Graph.from_edges(order, ((v, (v + 1) % order) for v in range(order)))


def star_graph(order: int) -> Graph:
    """Star ``S_order`` with centre 0 and ``order - 1`` leaves."""
    return Graph.from_edges(order, ((0, v) for v in range(1, order)))


def matching_graph(order: int) -> Graph:
    """Perfect matching ``M_order`` on an even number of vertices."""
    if order % 2:
        raise ValueError(f"A perfect matching needs an even order, got {order}.")
    return Graph.from_edges(order, ((v, v + 1) for v in range(0, order, 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """``K_{a,b}`` with the ``a``-side on vertices ``0..a-1``."""
    return join(Graph.empty(a), Graph.empty(b))


def complete_multipartite_graph(sizes: Sequence[int]) -> Graph:
    """``K_{n_1,...,n_p}`` with classes laid out consecutively."""
    return join(*(Graph.empty(size) for size in sizes))


def disjoint_copies(graph: Graph, copies: int) -> Graph:
    """``k·G``, the disjoint union of *copies* copies of *graph*."""
    return disjoint_union(*([graph] * copies))


def disjoint_cliques(copies: int, order: int) -> Graph:
    """``copies·K_order``."""
    return disjoint_copies(Graph.complete(order), copies)


def petersen_graph() -> Graph:
    """Petersen graph: outer 5-cycle ``0..4``, inner pentagram ``5..9``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def double_star(k: int) -> Graph:
    """``S_{k,k}``: two copies of ``S_k`` with centres ``0`` and ``k`` joined."""
    star = star_graph(k)
    return disjoint_union(star, star).add_edges([(0, k)])


def f_tt_graph(t: int) -> Graph:
    """``F_{t,t}``: two copies of ``S_t`` with one leaf of each joined.

    Bipartite with ``|A| = t`` whereas its blow-up family has ``q = 3``.
    """
    if t < 2:
        raise ValueError(f"F_(t,t) needs t >= 2, got {t}.")
    star = star_graph(t)
    return disjoint_union(star, star).add_edges([(1, t + 1)])


def complete_minus_cover(order: int) -> Graph:
    """``K_order`` minus a smallest edge set touching every vertex.

    The removed edges form a perfect matching for even orders and
    ``S_3 ∪ M_{order-3}`` for odd orders, so every degree drops by exactly
    one except the centre of the ``S_3``.
    """
    if order < 2:
        return Graph.empty(order)
    removed: List[tuple] = []
    start = 0
    if order % 2:
        removed += [(0, 1), (0, 2)]
        start = 3
    removed += [(v, v + 1) for v in range(start, order, 2)]
    return Graph.complete(order).remove_edges(removed)


def all_linear_forests(edges: int) -> List[Graph]:
    """Every linear forest with exactly *edges* edges and no isolated vertices.

    Forests correspond to integer partitions of *edges* into path lengths.
    """

    def partitions(total: int, largest: int):
        if total == 0:
            yield []
            return
        for part in range(min(total, largest), 0, -1):
            for rest in partitions(total - part, part):
                yield [part] + rest

    return [
        disjoint_union(*(path_graph(length + 1) for length in parts))
        for parts in partitions(edges, edges)
    ]


CATALOGUE: Dict[str, Callable[..., Graph]] = {
    "complete": complete_graph,
    "empty": empty_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "matching": matching_graph,
    "kst": complete_bipartite_graph,
    "petersen": petersen_graph,
    "cliques": disjoint_cliques,
    "double_star": double_star,
    "f_tt": f_tt_graph,
}


def named_graph(name: str, *sizes: int) -> Graph:
    """Build a catalogue graph by name, e.g. ``named_graph("kst", 2, 3)``.

    :raises ValueError: for an unknown name
    """
    try:
        factory = CATALOGUE[name]
    except KeyError as err:
        raise ValueError(
            f"Unknown graph name {name!r}; known: {', '.join(sorted(CATALOGUE))}."
        ) from err
    return factory(*sizes)


def graph_from_spec(spec: str) -> Graph:
    """Parse ``name[:a[,b]]`` from the catalogue, or fall back to graph6.

    ``"path:4"``, ``"kst:2,3"`` and ``"petersen"`` are catalogue specs;
    anything else is decoded as graph6.
    """
    name, _, args = spec.partition(":")
    if name in CATALOGUE:
        sizes = [int(part) for part in args.split(",") if part]
        return named_graph(name, *sizes)
    return from_graph6(spec)
