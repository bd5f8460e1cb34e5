"""Non-induced subgraph containment by bitset backtracking."""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from ._base import Graph, iter_bits


@dataclass(frozen=True, slots=True)
class Embedding:
    """Injective vertex map witnessing ``pattern ⊆ host``.

    :param mapping: ``mapping[u]`` is the host vertex assigned to pattern vertex ``u``

    """

    mapping: Tuple[int, ...]

    def verify(self, host: Graph, pattern: Graph) -> bool:
        """Replay the embedding: injective, in range, and edge preserving."""
        if len(self.mapping) != pattern.order:
            return False
        if len(set(self.mapping)) != len(self.mapping):
            return False
        if any(not 0 <= v < host.order for v in self.mapping):
            return False
        return all(host.has_edge(self.mapping[u], self.mapping[v]) for u, v in pattern.edges())


def _pattern_order(pattern: Graph, first: Optional[int] = None) -> List[int]:
    """Greedy search order: highest degree first, then most-connected to placed vertices."""
    degrees = pattern.degrees()
    remaining = set(range(pattern.order))
    if first is None:
        first = min(remaining, key=lambda v: (-degrees[v], v)) if remaining else None
    order: List[int] = []
    placed = 0
    if first is not None:
        order.append(first)
        remaining.discard(first)
        placed |= 1 << first
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (-(pattern.rows[v] & placed).bit_count(), -degrees[v], v),
        )
        order.append(nxt)
        remaining.discard(nxt)
        placed |= 1 << nxt
    return order


class _Matcher:  # pylint: disable=too-few-public-methods
    """Backtracking state for one (host, pattern) query."""

    def __init__(self, host: Graph, pattern: Graph, order: List[int]):
        self._host = host
        self._pattern = pattern
        self._order = order
        position = {u: i for i, u in enumerate(order)}
        # pattern neighbours that are placed before u
        self._back = [
            [w for w in iter_bits(pattern.rows[u]) if position[w] < i]
            for i, u in enumerate(order)
        ]
        host_degrees = host.degrees()
        self._admissible = []
        for u in order:
            need = pattern.degree(u)
            mask = 0
            for v, d in enumerate(host_degrees):
                if d >= need:
                    mask |= 1 << v
            self._admissible.append(mask)
        self._forward = [
            [position[w] for w in iter_bits(pattern.rows[u]) if position[w] > i]
            for i, u in enumerate(order)
        ]
        self.mapping = [-1] * pattern.order
        self.nodes = 0

    def _candidates(self, i: int, used: int) -> int:
        mask = self._admissible[i] & ~used
        for w in self._back[i]:
            if self.mapping[w] >= 0:
                mask &= self._host.rows[self.mapping[w]]
        return mask

    def solutions(self, i: int, used: int, restrict: int = -1) -> Iterator[None]:
        """Yield once for every complete assignment extending the current one."""
        if i == len(self._order):
            yield None
            return
        u = self._order[i]
        candidates = self._candidates(i, used)
        if i == 0:
            candidates &= restrict
        for v in iter_bits(candidates):
            self.nodes += 1
            self.mapping[u] = v
            now_used = used | (1 << v)
            if all(self._candidates(j, now_used) for j in self._forward[i]):
                yield from self.solutions(i + 1, now_used)
            self.mapping[u] = -1


def iter_embeddings(
    host: Graph, pattern: Graph, anchor: Optional[int] = None
) -> Iterator[Embedding]:
    """Yield every embedding of *pattern* into *host* in deterministic order.

    :param host: host graph
    :param pattern: pattern graph (non-induced containment)
    :param anchor: if given, only embeddings whose image contains this host vertex
    :returns: iterator over embeddings

    """
    if pattern.order > host.order or pattern.num_edges > host.num_edges:
        return
    if pattern.order == 0:
        if anchor is None:
            yield Embedding(())
        return
    if anchor is None:
        matcher = _Matcher(host, pattern, _pattern_order(pattern))
        for _ in matcher.solutions(0, 0):
            yield Embedding(tuple(matcher.mapping))
        return
    seen = set()
    for first in range(pattern.order):
        matcher = _Matcher(host, pattern, _pattern_order(pattern, first))
        for _ in matcher.solutions(0, 0, restrict=1 << anchor):
            mapping = tuple(matcher.mapping)
            if mapping not in seen:
                seen.add(mapping)
                yield Embedding(mapping)


def contains_subgraph(
    host: Graph, pattern: Graph, anchor: Optional[int] = None
) -> Optional[Embedding]:
    """Return the first embedding of *pattern* into *host*, or ``None``.

    The search places pattern vertices by descending degree with forward
    checking and tries host vertices in ascending order, so the returned
    embedding is reproducible.

    :param host: host graph
    :param pattern: pattern graph; an empty pattern embeds trivially
    :param anchor: restrict to embeddings using this host vertex
    :returns: an :class:`Embedding` or ``None``

    """
    return next(iter_embeddings(host, pattern, anchor), None)
