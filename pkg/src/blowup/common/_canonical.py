"""Canonical labelling of small graphs.

Colour refinement to an equitable ordered partition, then individualisation
of the first non-singleton cell, searching the tree of discrete partitions for
the lexicographically largest relabelled adjacency. Automorphisms found at
equal leaves, plus transpositions of twin vertices, prune sibling branches that
lie in one orbit of the pointwise stabiliser of the current prefix.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ._base import Graph, bits_to_mask, iter_bits

Partition = List[List[int]]


@dataclass(frozen=True, order=True, slots=True)
class CanonicalLabel:
    """Total-order key of an isomorphism class.

    Two graphs have equal labels iff they are isomorphic.
    """

    data: bytes

    def hex(self) -> str:
        """Hex digest of the label, handy for logs and cache keys."""
        return self.data.hex()


def _refine(rows: Sequence[int], cells: Partition) -> Partition:
    """Refine an ordered partition until it is equitable.

    Split keys are neighbour counts into every current cell, so the result
    depends only on the graph and the input partition, not on vertex names.
    """
    while True:
        masks = [bits_to_mask(cell) for cell in cells]
        refined: Partition = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {
                v: tuple((rows[v] & mask).bit_count() for mask in masks) for v in cell
            }
            keys = sorted(set(signature.values()))
            if len(keys) == 1:
                refined.append(cell)
                continue
            changed = True
            for key in keys:
                refined.append([v for v in cell if signature[v] == key])
        cells = refined
        if not changed:
            return cells


def _twin_generators(rows: Sequence[int]) -> List[Tuple[int, ...]]:
    """Transpositions of true/false twins; each one is an automorphism."""
    n = len(rows)
    generators = []
    for u in range(n):
        for w in range(u + 1, n):
            if rows[u] & ~(1 << w) == rows[w] & ~(1 << u):
                perm = list(range(n))
                perm[u], perm[w] = w, u
                generators.append(tuple(perm))
                break
    return generators


def _orbit_root(parent: List[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


class _CanonSearch:  # pylint: disable=too-few-public-methods
    """One canonical-labelling search over a fixed graph."""

    def __init__(self, graph: Graph):
        self._rows = graph.rows
        self._n = graph.order
        self._automorphisms: List[Tuple[int, ...]] = _twin_generators(graph.rows)
        self._best_key: Optional[Tuple[int, ...]] = None
        self._best_perm: Optional[List[int]] = None
        self.nodes = 0

    def run(self) -> Tuple[Tuple[int, ...], List[int]]:
        """Return the best relabelled rows and the vertex order producing them."""
        self._search([], [list(range(self._n))])
        return self._best_key, self._best_perm

    def _leaf(self, order: List[int]) -> None:
        position = [0] * self._n
        for i, v in enumerate(order):
            position[v] = i
        key = tuple(
            bits_to_mask(position[u] for u in iter_bits(self._rows[v])) for v in order
        )
        if self._best_key is None or key > self._best_key:
            self._best_key, self._best_perm = key, order
        elif key == self._best_key:
            # best_perm[i] and order[i] play the same role: an automorphism
            automorphism = list(range(self._n))
            for a, b in zip(self._best_perm, order):
                automorphism[a] = b
            self._automorphisms.append(tuple(automorphism))

    def _stabiliser_orbits(self, prefix: List[int]) -> List[int]:
        parent = list(range(self._n))
        for perm in self._automorphisms:
            if any(perm[x] != x for x in prefix):
                continue
            for v, image in enumerate(perm):
                a, b = _orbit_root(parent, v), _orbit_root(parent, image)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return parent

    def _search(self, prefix: List[int], cells: Partition) -> None:
        self.nodes += 1
        cells = _refine(self._rows, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            self._leaf([cell[0] for cell in cells])
            return
        cell = cells[target]
        explored: List[int] = []
        for v in cell:
            if explored:
                parent = self._stabiliser_orbits(prefix)
                root = _orbit_root(parent, v)
                if any(_orbit_root(parent, w) == root for w in explored):
                    continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            self._search(
                prefix + [v], cells[:target] + [[v], rest] + cells[target + 1:]
            )


@lru_cache(maxsize=65536)
def _canonical_rows(graph: Graph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if graph.order == 0:
        return (), ()
    key, order = _CanonSearch(graph).run()
    return key, tuple(order)


def canonical_form(graph: Graph) -> CanonicalLabel:
    """Return the canonical label of *graph*.

    :param graph: graph of order at most 64
    :returns: label equal for exactly the graphs isomorphic to *graph*

    """
    key, _ = _canonical_rows(graph)
    data = bytes([graph.order]) + b"".join(row.to_bytes(8, "big") for row in key)
    return CanonicalLabel(data)


def canonical_order(graph: Graph) -> Tuple[int, ...]:
    """Vertex order whose relabelling yields the canonical graph.

    ``canonical_order(g)[i]`` is the vertex of *g* that becomes vertex ``i``.
    """
    return _canonical_rows(graph)[1]


def canonical_graph(graph: Graph) -> Graph:
    """Return the canonical representative of the isomorphism class of *graph*."""
    key, _ = _canonical_rows(graph)
    return Graph.from_rows(graph.order, key, check=False)


def is_isomorphic(first: Graph, second: Graph) -> bool:
    """Return whether the two graphs are isomorphic."""
    if first.order != second.order or first.num_edges != second.num_edges:
        return False
    if sorted(first.degrees()) != sorted(second.degrees()):
        return False
    return canonical_form(first) == canonical_form(second)
