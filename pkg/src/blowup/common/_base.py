"""Provide the immutable small-graph value type and composition operators."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .exceptions import GraphSizeError

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of *mask* in ascending order.

    :param mask: non-negative integer bitset
    :returns: iterator over bit positions

    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(indices: Iterable[int]) -> int:
    """Pack vertex indices into a bitset."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"Graph order must be non-negative, got {order}.")
    if order > MAX_ORDER:
        raise GraphSizeError(
            f"Graph order {order} exceeds the supported maximum of {MAX_ORDER}."
        )


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    Adjacency is stored as one bitset row per vertex. Instances are immutable;
    every operation returns a new graph.

    :param order: number of vertices
    :param rows: adjacency bitsets, ``rows[v]`` has bit ``u`` set iff ``uv`` is an edge

    """

    order: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        _check_order(self.order)
        if len(self.rows) != self.order:
            raise ValueError(
                f"Expected {self.order} adjacency rows, got {len(self.rows)}."
            )
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"Row {v} references a vertex outside the graph.")
            if row >> v & 1:
                raise ValueError(f"Self-loop at vertex {v}.")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"Asymmetric adjacency between {v} and {u}.")

    @classmethod
    def from_rows(cls, order: int, rows: Tuple[int, ...], check: bool = True) -> "Graph":
        """Build a graph from adjacency bitsets.

        :param order: number of vertices
        :param rows: adjacency bitsets
        :param check: validate symmetry and loops; hot search loops that derive
            rows from an already valid graph pass ``False``
        :returns: the graph

        """
        if check:
            return cls(order, tuple(rows))
        graph = object.__new__(cls)
        object.__setattr__(graph, "order", order)
        object.__setattr__(graph, "rows", tuple(rows))
        return graph

    @classmethod
    def empty(cls, order: int) -> "Graph":
        """Return the edgeless graph on *order* vertices."""
        _check_order(order)
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        """Return the complete graph on *order* vertices."""
        _check_order(order)
        full = (1 << order) - 1
        return cls(order, tuple(full & ~(1 << v) for v in range(order)))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list.

        :param order: number of vertices
        :param edges: pairs ``(u, v)``; duplicates are merged
        :returns: the graph
        :raises ValueError: on self-loops or out-of-range endpoints

        """
        _check_order(order)
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}.")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"Edge ({u}, {v}) is outside a graph of order {order}.")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph; nodes are relabelled in sorted order."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes), ((index[u], index[v]) for u, v in graph.edges() if u != v)
        )

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph with integer nodes."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        return graph

    def adjacency_matrix(self) -> np.ndarray:
        """Return the 0/1 adjacency matrix as ``uint8`` array."""
        matrix = np.zeros((self.order, self.order), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def __str__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges())})"

    @property
    def num_edges(self) -> int:
        """Number of edges, e(G)."""
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        """Bitset of all vertices."""
        return (1 << self.order) - 1

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def has_edge(self, u: int, v: int) -> bool:
        """Return whether ``uv`` is an edge."""
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        """Degree of vertex *v*."""
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        """Degree of every vertex, indexed by vertex."""
        return [row.bit_count() for row in self.rows]

    @property
    def max_degree(self) -> int:
        """Maximum degree (0 for the null graph)."""
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        """Minimum degree (0 for the null graph)."""
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> List[int]:
        """Sorted neighbours of *v*."""
        return list(iter_bits(self.rows[v]))

    def isolated_vertices(self) -> List[int]:
        """Vertices of degree zero."""
        return [v for v, row in enumerate(self.rows) if not row]

    def add_edges(self, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Return a copy with *edges* added."""
        return Graph.from_edges(self.order, [*self.edges(), *edges])

    def remove_edges(self, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Return a copy with *edges* removed; absent edges are ignored."""
        rows = list(self.rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph.from_rows(self.order, tuple(rows), check=False)

    def add_vertex(self, neighbourhood: int) -> "Graph":
        """Return a copy with one new vertex adjacent to the bitset *neighbourhood*."""
        new = self.order
        _check_order(new + 1)
        rows = [row | (1 << new) if neighbourhood >> v & 1 else row
                for v, row in enumerate(self.rows)]
        rows.append(neighbourhood)
        return Graph.from_rows(new + 1, tuple(rows), check=False)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Return the subgraph induced by *vertices*, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(bits_to_mask(index[u] for u in iter_bits(self.rows[v]) if u in index))
        return Graph.from_rows(len(vertices), tuple(rows), check=False)

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        """Return the graph with *vertices* deleted, remaining vertices kept in order."""
        drop = set(vertices)
        return self.induced([v for v in range(self.order) if v not in drop])

    def without_isolated(self) -> "Graph":
        """Return the graph with isolated vertices removed."""
        return self.induced([v for v, row in enumerate(self.rows) if row])

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``permutation[v]``."""
        if sorted(permutation) != list(range(self.order)):
            raise ValueError("Relabelling must be a permutation of the vertices.")
        rows = [0] * self.order
        for v, row in enumerate(self.rows):
            rows[permutation[v]] = bits_to_mask(permutation[u] for u in iter_bits(row))
        return Graph.from_rows(self.order, tuple(rows), check=False)

    def complement(self) -> "Graph":
        """Return the complement graph."""
        full = self.vertex_mask
        return Graph(
            self.order,
            tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)),
        )

    def components(self) -> List[List[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = 0
        result = []
        for start in range(self.order):
            if seen >> start & 1:
                continue
            component = frontier = 1 << start
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.rows[v]
                frontier = reach & ~component
                component |= frontier
            seen |= component
            result.append(list(iter_bits(component)))
        return result

    def is_connected(self) -> bool:
        """Return whether the graph is connected (the null graph counts as connected)."""
        return len(self.components()) <= 1


class ComposeMode(Enum):
    """Binary graph operations supported by :func:`compose`."""

    DISJOINT_UNION = "disjoint_union"
    JOIN = "join"
    COMPLEMENT = "complement"


def compose(a: Graph, b: Optional[Graph], mode: ComposeMode | str) -> Graph:
    """Combine two graphs.

    ``disjoint_union`` places *b* after *a*; ``join`` additionally connects every
    vertex of *a* to every vertex of *b* (``a + b``); ``complement`` negates the
    edge relation of *a* alone and ignores *b*.

    :param a: first operand, occupies vertices ``0..|a|-1``
    :param b: second operand, occupies the following vertices
    :param mode: operation to apply
    :returns: the composed graph
    :raises GraphSizeError: if the combined order exceeds the kernel cap

    """
    mode = ComposeMode(mode)
    if mode is ComposeMode.COMPLEMENT:
        return a.complement()
    if b is None:
        raise ValueError(f"Mode {mode.value} needs a second graph.")
    _check_order(a.order + b.order)
    shift = a.order
    b_mask = ((1 << b.order) - 1) << shift
    a_mask = a.vertex_mask
    join = mode is ComposeMode.JOIN
    rows = [row | b_mask if join else row for row in a.rows]
    rows.extend((row << shift) | (a_mask if join else 0) for row in b.rows)
    return Graph.from_rows(a.order + b.order, tuple(rows), check=False)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union of any number of graphs, placed in argument order."""
    result = Graph.empty(0)
    for graph in graphs:
        result = compose(result, graph, ComposeMode.DISJOINT_UNION)
    return result


def join(*graphs: Graph) -> Graph:
    """Join of any number of graphs, ``G_1 + G_2 + ...``."""
    result = Graph.empty(0)
    for graph in graphs:
        result = compose(result, graph, ComposeMode.JOIN)
    return result
