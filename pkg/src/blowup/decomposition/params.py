"""Parameters ``q``, ``S``, ``B`` and ``k`` of a decomposition family."""

import logging
from dataclasses import dataclass
from math import comb
from typing import FrozenSet, List, Tuple

from ..common import FamilyInvariantError, Graph, GraphFamily, to_graph6
from ..invariants import (
    coverings_up_to,
    independent_covering_number,
    minimum_independent_coverings,
)
from .family import DecompositionFamily

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParamRecord:  # pylint: disable=too-many-instance-attributes
    """Derived parameters of a decomposition family.

    :param q: smallest independent covering number over bipartite members
    :param s_witnesses: every ``(H_S, S)`` with ``S`` an independent covering
        of ``H_S`` of order ``q``
    :param b: subgraph-minimal members of the covering family; empty when :attr:`sentinel`
    :param b_all: every graph induced by a covering of order at most ``q - 1``
    :param sentinel: ``True`` when no such covering exists and ``B`` stands for ``{K_q}``
    :param k: smallest degree of a witness vertex in its member

    """

    q: int
    s_witnesses: Tuple[Tuple[Graph, FrozenSet[int]], ...]
    b: GraphFamily
    b_all: GraphFamily
    sentinel: bool
    k: int

    @property
    def sentinel_ex(self) -> int:
        """``ex(q-1, {K_q}) = C(q-1, 2)``: the complete graph on ``q - 1`` vertices."""
        return comb(self.q - 1, 2)

    def to_dict(self) -> dict:
        """JSON-ready mapping; graphs as graph6."""
        return {
            "q": self.q,
            "k": self.k,
            "B": "sentinel" if self.sentinel else [to_graph6(graph) for graph in self.b],
            "B_all": [to_graph6(graph) for graph in self.b_all],
            "S_witnesses": [
                {"member": to_graph6(member), "covering": sorted(cover)}
                for member, cover in self.s_witnesses
            ],
        }


def derive_params(family: DecompositionFamily | GraphFamily) -> ParamRecord:
    """Derive ``q``, the witnesses ``S``, the covering family ``B`` and ``k``.

    ``B`` collects the subgraphs induced by coverings of order at most
    ``q - 1`` over all members, isolated vertices ignored.

    :param family: a decomposition family or plain graph family
    :returns: the parameter record
    :raises FamilyInvariantError: if the family has no bipartite member

    """
    members: List[Graph] = list(family)
    bipartite = [
        (member, value)
        for member in members
        if (value := independent_covering_number(member)) is not None
    ]
    if not bipartite:
        raise FamilyInvariantError("Decomposition family has no bipartite member.")
    q = min(value for _, value in bipartite)
    if q == 0:
        raise FamilyInvariantError("Decomposition family contains an edgeless member.")

    witnesses = []
    for member, value in bipartite:
        if value == q:
            witnesses += [(member, cover) for cover in minimum_independent_coverings(member)]
    k = min(min(member.degree(v) for v in cover) for member, cover in witnesses)

    covered = []
    for member in members:
        for cover in coverings_up_to(member, q - 1):
            subgraph = member.induced(sorted(cover)).without_isolated()
            if subgraph.num_edges == 0:
                raise FamilyInvariantError(
                    "A covering of order below q is independent; q is not minimal."
                )
            covered.append(subgraph)
    b_all = GraphFamily(covered)
    sentinel = len(b_all) == 0
    record = ParamRecord(
        q=q,
        s_witnesses=tuple(witnesses),
        b=b_all.minimal(),
        b_all=b_all,
        sentinel=sentinel,
        k=k,
    )
    logger.debug(
        "Parameters: q=%s k=%s |B|=%s sentinel=%s", q, k, len(record.b), sentinel
    )
    return record
