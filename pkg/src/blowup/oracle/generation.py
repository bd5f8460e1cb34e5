"""Orderly generation of family-free graphs up to isomorphism.

Graphs are grown one vertex at a time. A graph on ``k`` vertices is produced
from the graph obtained by deleting one of its minimum-degree vertices, so the
new vertex is always added with a degree no larger than any other. Deleting a
minimum-degree vertex from a graph with ``e`` edges leaves at least
``e - ⌊2e/k⌋`` edges, which turns a target edge count at the top level into
edge thresholds for every level below it. Forbidden-family freeness is closed
under vertex deletion, so children are only tested for copies through the new
vertex.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..common import (
    CanonicalLabel,
    Graph,
    GraphFamily,
    bits_to_mask,
    canonical_form,
    canonical_graph,
    contains_subgraph,
)

logger = logging.getLogger(__name__)


@dataclass
class SearchStats:
    """Counters collected during a generation run.

    :param explored: children examined over all levels
    :param per_level: graphs kept at each order ``0..n``
    :param elapsed_s: wall-clock seconds
    :param lower_bound: edge threshold the top level started from

    """

    explored: int = 0
    per_level: List[int] = field(default_factory=list)
    elapsed_s: float = 0.0
    lower_bound: int = 0

    def to_dict(self) -> dict:
        """JSON-ready mapping."""
        return {
            "explored": self.explored,
            "per_level": list(self.per_level),
            "elapsed_s": round(self.elapsed_s, 3),
            "lower_bound": self.lower_bound,
        }


def level_thresholds(n: int, min_edges: int) -> List[int]:
    """Edge thresholds ``T_0..T_n`` with ``T_n = min_edges``."""
    thresholds = [0] * (n + 1)
    if n == 0:
        thresholds[0] = max(min_edges, 0)
        return thresholds
    thresholds[n] = max(min_edges, 0)
    for k in range(n, 1, -1):
        thresholds[k - 1] = max(thresholds[k] - (2 * thresholds[k]) // k, 0)
    return thresholds


def _is_free_through(graph: Graph, family: Sequence[Graph], vertex: int) -> bool:
    return all(contains_subgraph(graph, member, anchor=vertex) is None for member in family)


def _augment(
    parents: Sequence[Graph], family: Sequence[Graph], threshold: int
) -> Tuple[Dict[CanonicalLabel, Graph], int]:
    """Children of *parents* meeting *threshold*, keyed by canonical label."""
    children: Dict[CanonicalLabel, Graph] = {}
    explored = 0
    for parent in parents:
        k = parent.order
        degrees = parent.degrees()
        lowest = min(degrees, default=k)
        need = max(threshold - parent.num_edges, 0)
        for size in range(need, min(lowest + 1, k) + 1):
            for chosen in combinations(range(k), size):
                chosen_mask = bits_to_mask(chosen)
                # the new vertex must stay a minimum-degree vertex
                if any(degrees[v] + (chosen_mask >> v & 1) < size for v in range(k)):
                    continue
                explored += 1
                child = parent.add_vertex(chosen_mask)
                if not _is_free_through(child, family, k):
                    continue
                label = canonical_form(child)
                if label not in children:
                    children[label] = child
    return children, explored


def _split(items: List[Graph], parts: int) -> List[List[Graph]]:
    return [items[i::parts] for i in range(parts) if items[i::parts]]


def generate_graphs(
    n: int,
    family: Iterable[Graph] = (),
    min_edges: int = 0,
    workers: int = 1,
    stats: SearchStats | None = None,
) -> List[Graph]:
    """All family-free graphs on *n* vertices with at least *min_edges* edges.

    :param n: order, isolated vertices included
    :param family: forbidden subgraphs; empty for plain enumeration
    :param min_edges: keep only graphs with this many edges or more
    :param workers: processes used to augment a level
    :param stats: filled in when given
    :returns: canonical representatives sorted by edge count then label

    """
    members = list(GraphFamily(family))
    thresholds = level_thresholds(n, min_edges)
    stats = stats if stats is not None else SearchStats()
    stats.lower_bound = thresholds[n]
    stats.per_level = [1]
    started = time.perf_counter()

    level = [Graph.empty(0)]
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for k in range(1, n + 1):
            if executor is None or len(level) < 2 * workers:
                children, explored = _augment(level, members, thresholds[k])
            else:
                children, explored = {}, 0
                chunks = _split(level, workers)
                results = executor.map(
                    _augment, chunks, [members] * len(chunks), [thresholds[k]] * len(chunks)
                )
                for part, count in results:
                    explored += count
                    for label, child in part.items():
                        children.setdefault(label, child)
            stats.explored += explored
            level = [canonical_graph(children[label]) for label in sorted(children)]
            stats.per_level.append(len(level))
            logger.debug(
                "Order %s: %s graphs (threshold %s, %s explored)",
                k,
                len(level),
                thresholds[k],
                explored,
            )
    finally:
        if executor is not None:
            executor.shutdown()
    stats.elapsed_s = time.perf_counter() - started
    result = [graph for graph in level if graph.num_edges >= min_edges]
    result.sort(key=lambda graph: graph.num_edges)
    return result


def greedy_free_graph(
    n: int, family: Iterable[Graph], trials: int = 8, seed: int = 0
) -> Graph:
    """Best of several random greedy family-free graphs on *n* vertices.

    Edges are offered in a random order and kept when no member appears
    through them. The result is a lower bound witness for ``ex(n, family)``.
    """
    members = list(GraphFamily(family))
    pairs = list(combinations(range(n), 2))
    rng = np.random.default_rng(seed)
    best = Graph.empty(n)
    for _ in range(trials):
        graph = Graph.empty(n)
        for index in rng.permutation(len(pairs)):
            u, v = pairs[int(index)]
            candidate = graph.add_edges([(u, v)])
            if _is_free_through(candidate, members, u):
                graph = candidate
        if graph.num_edges > best.num_edges:
            best = graph
    logger.debug("Greedy lower bound for n=%s: %s edges", n, best.num_edges)
    return best
