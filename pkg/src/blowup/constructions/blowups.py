"""Edge blow-ups, vertex splits and split families."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List

from ..common import Graph, GraphFamily, ParameterError, ResourceLimitError, bits_to_mask
from ..invariants import chromatic_number
from .named import complete_bipartite_graph, matching_graph, star_graph

logger = logging.getLogger(__name__)

MAX_SPLIT_ORDER = 12


def edge_blowup(graph: Graph, p: int) -> Graph:
    """Replace every edge of *graph* by its own ``K_{p+1}``.

    The original vertices keep labels ``0..n-1``; the ``p - 1`` new vertices
    of each clique follow, edge by edge in lexicographic edge order.

    :param graph: base graph ``G``
    :param p: clique parameter, at least 2
    :returns: ``G^{p+1}`` of order ``n + (p-1)e(G)``
    :raises ParameterError: if ``p < 2``
    :raises GraphSizeError: if the blow-up exceeds the order cap

    """
    if p < 2:
        raise ParameterError(f"Edge blow-up needs p >= 2, got p={p}.")
    order = graph.order + (p - 1) * graph.num_edges
    edges = []
    fresh = graph.order
    for u, v in graph.edges():
        clique = [u, v, *range(fresh, fresh + p - 1)]
        fresh += p - 1
        edges.extend(
            (clique[i], clique[j]) for i in range(len(clique)) for j in range(i + 1, len(clique))
        )
    return Graph.from_edges(order, edges)


@dataclass(frozen=True)
class BlowupSpec:
    """A base graph together with the clique parameter of its blow-up.

    :param base: graph ``G`` being blown up
    :param p: every edge becomes a ``K_{p+1}``

    """

    base: Graph
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise ParameterError(f"Edge blow-up needs p >= 2, got p={self.p}.")

    @property
    def order(self) -> int:
        """``|V(G)| + (p-1)e(G)``."""
        return self.base.order + (self.p - 1) * self.base.num_edges

    @property
    def size(self) -> int:
        """``e(G)·p(p+1)/2``."""
        return self.base.num_edges * self.p * (self.p + 1) // 2

    @cached_property
    def chromatic_ok(self) -> bool:
        """Whether ``p >= χ(G) + 1``, the standing hypothesis on blow-ups."""
        return self.p >= chromatic_number(self.base) + 1

    def build(self) -> Graph:
        """Construct ``G^{p+1}``."""
        return edge_blowup(self.base, self.p)


def vertex_split(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Split every vertex of *vertices* simultaneously.

    A split vertex ``v`` becomes ``d(v)`` independent vertices, each adjacent
    to exactly one former neighbour. Unsplit vertices keep their relative
    order at the front; replacements follow, ordered by ``(v, neighbour)``.

    :param graph: graph to split
    :param vertices: the set ``U``
    :returns: a graph with the same number of edges

    """
    split = bits_to_mask(vertices)
    if split & ~graph.vertex_mask:
        raise ValueError("Split set contains vertices outside the graph.")
    index = {}
    for v in range(graph.order):
        if not split >> v & 1:
            index[v] = len(index)
    copies = {}
    for v in range(graph.order):
        if split >> v & 1:
            for u in graph.neighbors(v):
                copies[(v, u)] = len(index) + len(copies)

    def endpoint(v: int, other: int) -> int:
        return copies[(v, other)] if split >> v & 1 else index[v]

    edges = [(endpoint(u, v), endpoint(v, u)) for u, v in graph.edges()]
    return Graph.from_edges(len(index) + len(copies), edges)


def split_family(graph: Graph) -> GraphFamily:
    """All graphs obtainable from *graph* by splitting some vertex set, up to isomorphism.

    :raises ResourceLimitError: if *graph* has more than ``MAX_SPLIT_ORDER`` vertices

    """
    if graph.order > MAX_SPLIT_ORDER:
        raise ResourceLimitError(
            f"Split families are enumerated for at most {MAX_SPLIT_ORDER} vertices, "
            f"got {graph.order}.",
            estimate=2 ** graph.order,
        )
    members = []
    for subset in range(1 << graph.order):
        members.append(vertex_split(graph, [v for v in range(graph.order) if subset >> v & 1]))
    family = GraphFamily(members)
    logger.debug("Split family of order-%s graph has %s members", graph.order, len(family))
    return family


def k_st_split(s: int, t: int, a: int, b: int) -> Graph:
    """``K_{s,t}(a,b)``: split ``a`` vertices of the ``s``-side and ``b`` of the ``t``-side."""
    if not (0 <= a <= s and 0 <= b <= t):
        raise ParameterError(f"Need 0 <= a <= s and 0 <= b <= t, got a={a}, b={b}, s={s}, t={t}.")
    return vertex_split(complete_bipartite_graph(s, t), [*range(a), *range(s, s + b)])


def k_family(t: int) -> GraphFamily:
    """The family ``{K_{a,b}(0,c) : a + b = t + 1, a >= 3 or c = 0}``."""
    members: List[Graph] = []
    for a in range(1, t + 1):
        b = t + 1 - a
        for c in range(b + 1 if a >= 3 else 1):
            members.append(k_st_split(a, b, 0, c))
    return GraphFamily(members)


def lemma_family(t: int) -> GraphFamily:
    """``{S_{t+1}, M_{2t}} ∪ {K_{2,t-1}(0,i) : 0 <= i <= t-1}``.

    Its extremal number is ``g(t-1,t-1)``.
    """
    members = [star_graph(t + 1), matching_graph(2 * t)]
    members += [k_st_split(2, t - 1, 0, i) for i in range(t)]
    return GraphFamily(members)
