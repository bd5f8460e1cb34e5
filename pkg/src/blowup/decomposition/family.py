"""Decomposition families, from the split shortcut or from the definition.

A graph ``M`` belongs to the decomposition family of ``F`` (for a given ``p``)
when ``F`` embeds into ``(M ∪ K̄_t) + T_{p-1}((p-1)t)`` for a large ``t``; the
family keeps only the minimal such ``M``.

.. code-block:: python

    from blowup.constructions import edge_blowup, star_graph
    from blowup.decomposition import (
        decomposition_family_blowup,
        decomposition_family_direct,
    )

    shortcut = decomposition_family_blowup(star_graph(3), 3)
    direct = decomposition_family_direct(edge_blowup(star_graph(3), 3), 3)
    assert shortcut.members == direct.members

"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from ..common import (
    MAX_ORDER,
    Embedding,
    FamilyInvariantError,
    Graph,
    GraphFamily,
    ParameterError,
    ResourceLimitError,
    bits_to_mask,
    canonical_form,
    canonical_graph,
    contains_subgraph,
    disjoint_union,
    iter_bits,
    join,
)
from ..constructions import split_family, turan_graph
from ..invariants import chromatic_number, optimal_coloring

logger = logging.getLogger(__name__)

MAX_DIRECT_ORDER = 12


class Provenance(Enum):
    """How a decomposition family was obtained."""

    DEFINITION_SEARCH = "definition-search"
    SPLIT_SHORTCUT = "split-shortcut"


@dataclass(frozen=True)
class DecompositionFamily:
    """Minimal graphs ``M`` of a decomposition family.

    :param members: the family, isolated vertices stripped
    :param provenance: shortcut or definition search
    :param p: the partiteness parameter
    :param base: blown-up base graph ``G`` when the family is ``M(G^{p+1})``

    """

    members: GraphFamily
    provenance: Provenance
    p: int
    base: Optional[Graph] = None

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def admits(self, graph: Graph) -> bool:
        """Return whether some member embeds into *graph*.

        Any graph admitted this way, placed in one class of a large
        ``T_p``-type host, completes a forbidden graph.
        """
        return any(contains_subgraph(graph, member) is not None for member in self.members)


def decomposition_family_blowup(graph: Graph, p: int) -> DecompositionFamily:
    """``M(G^{p+1})`` via the split shortcut.

    For ``2 <= χ(G) <= p - 1`` the decomposition family of the blow-up is
    exactly the family of vertex splits of ``G``.

    :param graph: base graph ``G``
    :param p: blow-up parameter
    :raises ParameterError: if the chromatic hypothesis fails
    :raises ResourceLimitError: if ``G`` is too large to split exhaustively

    """
    chi = chromatic_number(graph)
    if not 2 <= chi <= p - 1:
        raise ParameterError(
            f"Split shortcut needs 2 <= χ(G) <= p - 1, got χ(G)={chi} and p={p}."
        )
    members = GraphFamily(member.without_isolated() for member in split_family(graph))
    logger.info("Split shortcut: %s members for p=%s", len(members), p)
    return DecompositionFamily(members, Provenance.SPLIT_SHORTCUT, p, base=graph)


def definition_host(member: Graph, t: int, p: int) -> Graph:
    """``(M ∪ K̄_t) + T_{p-1}((p-1)t)``: *member* first, then ``t`` isolated, then the classes."""
    order = member.order + t + (p - 1) * t
    if order > MAX_ORDER:
        raise ResourceLimitError(
            f"Definition host needs {order} vertices, the kernel holds {MAX_ORDER}.",
            estimate=order,
        )
    return join(disjoint_union(member, Graph.empty(t)), turan_graph((p - 1) * t, p - 1))


def _complement_colourable(graph: Graph, masks: Sequence[int], colours: int) -> List[bool]:
    """For each mask, whether ``graph`` minus the mask is *colours*-colourable."""
    result = []
    for mask in masks:
        rest = graph.remove_vertices(iter_bits(mask))
        result.append(rest.order == 0 or chromatic_number(rest) <= colours)
    return result


def _chunks(items: List[int], count: int) -> List[List[int]]:
    size = max(1, -(-len(items) // count))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _minimal_class_sets(graph: Graph, p: int, workers: int) -> List[int]:
    """Inclusion-minimal ``V_0`` with ``χ(F - V_0) <= p - 1``, as bitmasks."""
    found: List[int] = []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for size in range(graph.order + 1):
            candidates = [
                mask
                for mask in (bits_to_mask(c) for c in combinations(range(graph.order), size))
                if not any(mask & f == f for f in found)
            ]
            if not candidates:
                continue
            if executor is None:
                flags = _complement_colourable(graph, candidates, p - 1)
            else:
                chunks = _chunks(candidates, workers)
                flags = [
                    flag
                    for part in executor.map(
                        _complement_colourable, [graph] * len(chunks), chunks, [p - 1] * len(chunks)
                    )
                    for flag in part
                ]
            found += [mask for mask, ok in zip(candidates, flags) if ok]
            logger.debug("Class sets of size %s: %s found so far", size, len(found))
    finally:
        if executor is not None:
            executor.shutdown()
    return found


def _replay_embedding(
    graph: Graph, mask: int, member: Graph, t: int, p: int
) -> Tuple[Graph, Embedding]:
    """Build and check the embedding of *graph* into the definition host of *member*."""
    inside = list(iter_bits(mask))
    residue_vertices = [v for v in inside if graph.rows[v] & mask]
    residue = graph.induced(residue_vertices)
    into_member = contains_subgraph(member, residue)
    if into_member is None:
        raise FamilyInvariantError("Residue does not embed into its own family member.")
    mapping = [0] * graph.order
    for i, v in enumerate(residue_vertices):
        mapping[v] = into_member.mapping[i]
    loose = [v for v in inside if not graph.rows[v] & mask]
    for i, v in enumerate(loose):
        mapping[v] = member.order + i
    outside = [v for v in range(graph.order) if not mask >> v & 1]
    colours = optimal_coloring(graph.induced(outside)) if outside else []
    used = [0] * max(p - 1, 1)
    for v, colour in zip(outside, colours):
        mapping[v] = member.order + t + colour * t + used[colour]
        used[colour] += 1
    host = definition_host(member, t, p)
    embedding = Embedding(tuple(mapping))
    if not embedding.verify(host, graph):
        raise FamilyInvariantError("Replayed definition embedding is not a subgraph map.")
    return host, embedding


def decomposition_family_direct(
    forbidden: Graph | Iterable[Graph],
    p: int,
    t_max: Optional[int] = None,
    base: Optional[Graph] = None,
    workers: int = 1,
) -> DecompositionFamily:
    """Decomposition family straight from the definition.

    ``F`` embeds into ``(M ∪ K̄_t) + T_{p-1}((p-1)t)`` exactly when some vertex
    set ``V_0`` goes to the first part with ``F[V_0]`` inside ``M ∪ K̄_t`` and
    ``F - V_0`` is ``(p-1)``-colourable. The candidate graphs are therefore
    the residues ``F[V_0]`` without isolated vertices, and the family is the
    set of subgraph-minimal residues. Every member is certified by replaying
    an explicit embedding into its host.

    :param forbidden: a graph ``F`` or a family of them
    :param p: number of parts, at least 2
    :param t_max: padding ``t`` of the host; defaults to the largest ``|V(F)|``
    :param base: recorded on the result, e.g. the ``G`` of ``F = G^{p+1}``
    :param workers: processes used to scan vertex sets
    :returns: family tagged ``definition-search``
    :raises ParameterError: if ``p < 2`` or some ``F`` is ``(p-1)``-colourable
    :raises ResourceLimitError: if some ``F`` has more than ``MAX_DIRECT_ORDER``
        vertices or a host exceeds the kernel cap

    """
    graphs = [forbidden] if isinstance(forbidden, Graph) else list(forbidden)
    if p < 2:
        raise ParameterError(f"Decomposition families need p >= 2, got p={p}.")
    largest = max(graph.order for graph in graphs)
    if largest > MAX_DIRECT_ORDER:
        raise ResourceLimitError(
            f"Definition search handles at most {MAX_DIRECT_ORDER} vertices, got {largest}.",
            estimate=2**largest,
        )
    t = largest if t_max is None else t_max

    residues = {}
    for graph in graphs:
        if chromatic_number(graph) <= p - 1:
            raise ParameterError(
                f"A ({p - 1})-colourable graph fits the Turán part alone; no decomposition family."
            )
        for mask in _minimal_class_sets(graph, p, workers):
            residue = graph.induced(list(iter_bits(mask))).without_isolated()
            residues.setdefault(canonical_form(residue), (residue, graph, mask))
    candidates = GraphFamily(residue for residue, _, _ in residues.values())
    if t < largest:
        candidates = GraphFamily(
            member
            for member in candidates
            if any(
                contains_subgraph(definition_host(member, t, p), graph) is not None
                for graph in graphs
            )
        )
    members = candidates.minimal()

    if t >= largest:
        kept = set(members.labels())
        for label, (residue, graph, mask) in residues.items():
            if label in kept:
                _replay_embedding(graph, mask, canonical_graph(residue), t, p)
    logger.info(
        "Definition search for p=%s: %s residues, %s minimal members",
        p,
        len(candidates),
        len(members),
    )
    return DecompositionFamily(members, Provenance.DEFINITION_SEARCH, p, base=base)

