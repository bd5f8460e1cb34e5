"""Vertex coverings, bipartitions and independent coverings."""

from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterator, List, Optional

from ..common import Graph, ResourceLimitError, bits_to_mask, iter_bits

MAX_COVERING_ORDER = 32


def is_covering(graph: Graph, vertices: int) -> bool:
    """Return whether the bitset *vertices* meets every edge."""
    outside = graph.vertex_mask & ~vertices
    return all(not graph.rows[v] & outside for v in iter_bits(outside))


def _min_cover(rows, candidates: int, budget: int) -> Optional[int]:
    """Smallest cover of the edges inside *candidates* using at most *budget* vertices."""
    best_v, best_deg = -1, 0
    for v in iter_bits(candidates):
        degree = (rows[v] & candidates).bit_count()
        if degree > best_deg:
            best_v, best_deg = v, degree
    if best_deg == 0:
        return 0
    if budget <= 0:
        return None
    if best_deg == 1:
        # remaining edges form a matching: one vertex per edge
        cover, rest = 0, candidates
        for v in iter_bits(candidates):
            if rest >> v & 1 and rows[v] & rest:
                cover |= 1 << v
                rest &= ~(1 << v) & ~rows[v]
        return cover if cover.bit_count() <= budget else None
    with_v = _min_cover(rows, candidates & ~(1 << best_v), budget - 1)
    if with_v is not None:
        with_v |= 1 << best_v
        budget = with_v.bit_count() - 1
    neighbours = rows[best_v] & candidates
    without_v = None
    if best_deg <= budget:
        without_v = _min_cover(
            rows, candidates & ~neighbours & ~(1 << best_v), budget - best_deg
        )
        if without_v is not None:
            without_v |= neighbours
    if without_v is not None:
        return without_v
    return with_v


def minimum_covering(graph: Graph) -> List[int]:
    """Return a minimum vertex covering as a sorted vertex list.

    :raises ResourceLimitError: if the order exceeds ``MAX_COVERING_ORDER``

    """
    if graph.order > MAX_COVERING_ORDER:
        raise ResourceLimitError(
            f"Exact covering is limited to {MAX_COVERING_ORDER} vertices, got {graph.order}.",
            estimate=2 ** graph.order,
        )
    cover = _min_cover(graph.rows, graph.vertex_mask, graph.order)
    return list(iter_bits(cover))


def covering_number(graph: Graph) -> int:
    """Covering number β(G)."""
    return len(minimum_covering(graph))


def coverings_up_to(graph: Graph, size: int) -> Iterator[FrozenSet[int]]:
    """Yield every covering of *graph* with at most *size* vertices, smallest first."""
    for k in range(min(size, graph.order) + 1):
        for vertices in combinations(range(graph.order), k):
            if is_covering(graph, bits_to_mask(vertices)):
                yield frozenset(vertices)


@dataclass(frozen=True)
class Bipartition:
    """Colour classes of a bipartite graph, ``|side_a| <= |side_b|``.

    Each component contributes its smaller side to ``side_a`` (the side holding
    the lowest vertex on ties); isolated vertices go to ``side_b``. This makes
    ``|side_a|`` as small as possible over all proper 2-colourings.
    """

    side_a: FrozenSet[int]
    side_b: FrozenSet[int]


def _two_colour(graph: Graph, component: List[int]) -> Optional[List[FrozenSet[int]]]:
    colour = {component[0]: 0}
    queue = [component[0]]
    while queue:
        v = queue.pop()
        for u in iter_bits(graph.rows[v]):
            if u not in colour:
                colour[u] = 1 - colour[v]
                queue.append(u)
            elif colour[u] == colour[v]:
                return None
    return [frozenset(v for v in component if colour[v] == c) for c in (0, 1)]


def component_sides(graph: Graph) -> Optional[List[List[FrozenSet[int]]]]:
    """Both colour classes of every edge-bearing component, or ``None`` if not bipartite."""
    sides = []
    for component in graph.components():
        if len(component) == 1:
            continue
        coloured = _two_colour(graph, component)
        if coloured is None:
            return None
        sides.append(coloured)
    return sides


def bipartition(graph: Graph) -> Optional[Bipartition]:
    """Return the bipartition with smallest ``side_a``, or ``None`` if not bipartite."""
    sides = component_sides(graph)
    if sides is None:
        return None
    side_a = set()
    for first, second in sides:
        side_a |= first if len(first) <= len(second) else second
    return Bipartition(
        side_a=frozenset(side_a),
        side_b=frozenset(range(graph.order)) - side_a,
    )


def independent_covering_number(graph: Graph) -> Optional[int]:
    """Independent covering number q(G), or ``None`` for non-bipartite graphs.

    Every independent covering of a connected bipartite graph holds one whole
    colour class, so q is the sum of the smaller class sizes over components.
    """
    sides = component_sides(graph)
    if sides is None:
        return None
    return sum(min(len(first), len(second)) for first, second in sides)


def minimum_independent_coverings(graph: Graph) -> List[FrozenSet[int]]:
    """All independent coverings of order q(G), sorted; empty for non-bipartite graphs."""
    sides = component_sides(graph)
    if sides is None:
        return []
    options = []
    for first, second in sides:
        smallest = min(len(first), len(second))
        options.append([side for side in (first, second) if len(side) == smallest])
    coverings = {frozenset().union(*choice) for choice in product(*options)}
    return sorted(coverings, key=sorted)
