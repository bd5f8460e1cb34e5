"""Finite graph families deduplicated up to isomorphism."""

import hashlib
from typing import Dict, Iterable, Iterator, List, Tuple

from ._base import Graph
from ._canonical import CanonicalLabel, canonical_form, canonical_graph
from ._embedding import contains_subgraph


class GraphFamily:
    """Immutable set of graphs keyed by canonical label.

    Members are stored as canonical representatives and iterated in a
    deterministic order: by order, then edge count, then label.

    :param graphs: any iterable of graphs; isomorphic duplicates collapse

    """

    __slots__ = ("_members",)

    def __init__(self, graphs: Iterable[Graph] = ()):
        members: Dict[CanonicalLabel, Graph] = {}
        for graph in graphs:
            label = canonical_form(graph)
            if label not in members:
                members[label] = canonical_graph(graph)
        self._members: Tuple[Tuple[CanonicalLabel, Graph], ...] = tuple(
            sorted(members.items(), key=lambda item: (item[1].order, item[1].num_edges, item[0]))
        )

    def __iter__(self) -> Iterator[Graph]:
        return (graph for _, graph in self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, graph: object) -> bool:
        if not isinstance(graph, Graph):
            return False
        return canonical_form(graph) in self.labels()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return self.labels() == other.labels()

    def __hash__(self) -> int:
        return hash(self.labels())

    def __repr__(self) -> str:
        return f"GraphFamily({len(self)} members, key={self.key()[:12]})"

    def labels(self) -> Tuple[CanonicalLabel, ...]:
        """Canonical labels of the members, in iteration order."""
        return tuple(label for label, _ in self._members)

    @property
    def members(self) -> List[Graph]:
        """Members as a list, in iteration order."""
        return list(self)

    def key(self) -> str:
        """Stable hex identifier of the family, independent of input order."""
        digest = hashlib.sha256()
        for label in sorted(self.labels()):
            digest.update(len(label.data).to_bytes(2, "big"))
            digest.update(label.data)
        return digest.hexdigest()

    def union(self, other: Iterable[Graph]) -> "GraphFamily":
        """Return a family holding the members of both."""
        return GraphFamily([*self, *other])

    def minimal(self) -> "GraphFamily":
        """Drop every member that contains another member as a proper subgraph.

        Forbidding the minimal members is equivalent to forbidding the whole
        family, so Turán numbers are unchanged.
        """
        members = list(self)
        kept = []
        for i, graph in enumerate(members):
            dominated = any(
                j != i and contains_subgraph(graph, other) is not None
                for j, other in enumerate(members)
            )
            if not dominated:
                kept.append(graph)
        return GraphFamily(kept)
