"""Maximum matchings in general graphs (Edmonds' blossom contraction)."""

from collections import deque
from typing import List, Tuple

from ..common import Graph, iter_bits


class _BlossomSearch:
    """Augmenting-path search from one exposed root, contracting odd cycles."""

    def __init__(self, graph: Graph, match: List[int]):
        self._rows = graph.rows
        self._n = graph.order
        self._match = match
        self._parent = [-1] * self._n
        self._base = list(range(self._n))
        self._used = [False] * self._n
        self._queue: deque = deque()

    def _lowest_common_base(self, a: int, b: int) -> int:
        seen = [False] * self._n
        while True:
            a = self._base[a]
            seen[a] = True
            if self._match[a] == -1:
                break
            a = self._parent[self._match[a]]
        while True:
            b = self._base[b]
            if seen[b]:
                return b
            b = self._parent[self._match[b]]

    def _mark_path(self, v: int, base: int, child: int, blossom: List[bool]) -> None:
        while self._base[v] != base:
            blossom[self._base[v]] = blossom[self._base[self._match[v]]] = True
            self._parent[v] = child
            child = self._match[v]
            v = self._parent[self._match[v]]

    def _contract(self, v: int, to: int) -> None:
        base = self._lowest_common_base(v, to)
        blossom = [False] * self._n
        self._mark_path(v, base, to, blossom)
        self._mark_path(to, base, v, blossom)
        for u in range(self._n):
            if blossom[self._base[u]]:
                self._base[u] = base
                if not self._used[u]:
                    self._used[u] = True
                    self._queue.append(u)

    def _augment(self, end: int) -> None:
        while end != -1:
            previous = self._parent[end]
            after = self._match[previous]
            self._match[end] = previous
            self._match[previous] = end
            end = after

    def run(self, root: int) -> bool:
        """Augment the matching along a path from *root*; return whether one was found."""
        self._used[root] = True
        self._queue.append(root)
        while self._queue:
            v = self._queue.popleft()
            for to in iter_bits(self._rows[v]):
                if self._base[v] == self._base[to] or self._match[v] == to:
                    continue
                if to == root or (
                    self._match[to] != -1 and self._parent[self._match[to]] != -1
                ):
                    self._contract(v, to)
                elif self._parent[to] == -1:
                    self._parent[to] = v
                    if self._match[to] == -1:
                        self._augment(to)
                        return True
                    self._used[self._match[to]] = True
                    self._queue.append(self._match[to])
        return False


def maximum_matching(graph: Graph) -> List[Tuple[int, int]]:
    """Return a maximum matching as sorted pairs ``(u, v)`` with ``u < v``."""
    match = [-1] * graph.order
    for u in range(graph.order):
        if match[u] == -1:
            for v in iter_bits(graph.rows[u]):
                if match[v] == -1:
                    match[u], match[v] = v, u
                    break
    for root in range(graph.order):
        if match[root] == -1:
            _BlossomSearch(graph, match).run(root)
    return [(u, match[u]) for u in range(graph.order) if u < match[u]]


def matching_number(graph: Graph) -> int:
    """Matching number ν(G)."""
    return len(maximum_matching(graph))


def is_factor_critical(graph: Graph) -> bool:
    """Return whether ``ν(G) = ν(G - v) = ⌊|V(G)|/2⌋`` for every vertex ``v``.

    Graphs of even order never qualify; the null graph does not either.
    """
    if graph.order % 2 == 0:
        return False
    half = graph.order // 2
    if matching_number(graph) != half:
        return False
    return all(matching_number(graph.remove_vertices([v])) == half for v in range(graph.order))


def gallai_condition(graph: Graph) -> bool:
    """Return whether *graph* is connected and no vertex is covered by every maximum matching.

    Gallai's lemma states that such a graph is factor-critical.
    """
    if graph.order == 0 or not graph.is_connected():
        return False
    nu = matching_number(graph)
    return all(matching_number(graph.remove_vertices([v])) == nu for v in range(graph.order))
