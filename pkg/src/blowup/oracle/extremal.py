"""Exact Turán numbers, freeness certificates and stabilisation experiments."""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from ..common import (
    Embedding,
    Graph,
    GraphFamily,
    ParameterError,
    ResourceLimitError,
    first_member_embedding,
    from_graph6,
    to_graph6,
)
from ..constructions import complete_bipartite_graph, split_family
from ..formulas import conjectured_decomposition_ex, h_prime_edges
from .generation import SearchStats, generate_graphs, greedy_free_graph
from .store import ResultStore

logger = logging.getLogger(__name__)

MAX_EX_ORDER = 10


@dataclass(frozen=True)
class FreenessCheck:
    """Outcome of :func:`verify_free`.

    Truthy exactly when the host is free; otherwise carries the member that
    was found and its embedding.
    """

    free: bool
    member: Optional[Graph] = None
    embedding: Optional[Embedding] = None

    def __bool__(self) -> bool:
        return self.free

    def to_dict(self) -> dict:
        """JSON-ready mapping."""
        return {
            "free": self.free,
            "member": None if self.member is None else to_graph6(self.member),
            "embedding": None if self.embedding is None else list(self.embedding.mapping),
        }


def verify_free(graph: Graph, family: Iterable[Graph]) -> FreenessCheck:
    """Check that no member of *family* is a subgraph of *graph*.

    :param graph: host graph
    :param family: forbidden graphs
    :returns: a certificate; on failure the embedding replays against *graph*

    """
    found = first_member_embedding(graph, GraphFamily(family))
    if found is None:
        return FreenessCheck(True)
    member, embedding = found
    return FreenessCheck(False, member, embedding)


@dataclass(frozen=True)
class OracleResult:
    """Exact ``ex(n, family)`` with every extremal graph up to isomorphism.

    :param value: the Turán number
    :param witnesses: extremal graphs, canonical representatives
    :param explored: children examined by the generator
    :param n: host order
    :param family_key: :meth:`GraphFamily.key` of the query
    :param stats: full generator statistics

    """

    value: int
    witnesses: Tuple[Graph, ...]
    explored: int
    n: int
    family_key: str
    stats: SearchStats = field(default_factory=SearchStats, compare=False)

    def to_dict(self) -> dict:
        """JSON-ready mapping; witnesses as graph6."""
        return {
            "value": self.value,
            "witnesses": [to_graph6(graph) for graph in self.witnesses],
            "explored": self.explored,
            "n": self.n,
            "family_key": self.family_key,
            "stats": self.stats.to_dict(),
        }

    @classmethod
    def from_dict(cls, record: dict) -> "OracleResult":
        """Rebuild a result stored with :meth:`to_dict`."""
        stats = record.get("stats", {})
        return cls(
            value=record["value"],
            witnesses=tuple(from_graph6(text) for text in record["witnesses"]),
            explored=record["explored"],
            n=record["n"],
            family_key=record["family_key"],
            stats=SearchStats(
                explored=stats.get("explored", record["explored"]),
                per_level=list(stats.get("per_level", [])),
                elapsed_s=stats.get("elapsed_s", 0.0),
                lower_bound=stats.get("lower_bound", 0),
            ),
        )

    def replay(self, family: GraphFamily) -> bool:
        """Re-verify every witness: order, edge count and freeness."""
        return bool(self.witnesses) and all(
            graph.order == self.n and graph.num_edges == self.value and verify_free(graph, family)
            for graph in self.witnesses
        )


def ex_cache_key(n: int, family: GraphFamily) -> str:
    """Store key of an ``exact_ex`` query."""
    return f"ex:{n}:{family.key()}"


def _check_guard(n: int, family: GraphFamily) -> None:
    if n < 0:
        raise ParameterError(f"Order must be non-negative, got n={n}.")
    if any(member.num_edges == 0 for member in family):
        raise ParameterError("Every forbidden graph needs at least one edge.")
    if n > MAX_EX_ORDER:
        raise ResourceLimitError(
            f"Exact extremal search is limited to n <= {MAX_EX_ORDER}, got n={n}.",
            estimate=2 ** (n * (n - 1) // 2),
        )


def exact_ex(  # pylint: disable=too-many-arguments
    n: int,
    family: Iterable[Graph],
    store: Optional[ResultStore] = None,
    paranoid: bool = False,
    workers: int = 1,
    hints: Sequence[Graph] = (),
    seed: int = 0,
) -> OracleResult:
    """Compute ``ex(n, family)`` and all extremal graphs.

    A random greedy free graph and any free *hints* seed the edge threshold;
    the orderly generator then lists every free graph at or above it.

    :param n: host order, at most ``MAX_EX_ORDER``
    :param family: forbidden graphs, each with at least one edge
    :param store: result cache; consulted first and updated afterwards
    :param paranoid: replay cached witnesses before trusting them
    :param workers: processes for the generator
    :param hints: candidate free graphs on *n* vertices, e.g. known constructions
    :param seed: seed of the greedy lower bound
    :raises ParameterError: for an edgeless forbidden graph
    :raises ResourceLimitError: if *n* exceeds the guard

    """
    forbidden = GraphFamily(family)
    _check_guard(n, forbidden)
    key = ex_cache_key(n, forbidden)
    if store is not None:
        cached = store.get(key)
        if cached is not None:
            result = OracleResult.from_dict(cached)
            if not paranoid or result.replay(forbidden):
                logger.info("Cache hit for %s", key)
                return result
            logger.warning("Cached result for %s failed replay; recomputing", key)

    start = greedy_free_graph(n, forbidden, seed=seed)
    lower = start.num_edges
    for hint in hints:
        if hint.order == n and hint.num_edges > lower and verify_free(hint, forbidden):
            lower = hint.num_edges
    stats = SearchStats()
    graphs = generate_graphs(n, forbidden, min_edges=lower, workers=workers, stats=stats)
    value = max(graph.num_edges for graph in graphs)
    witnesses = tuple(graph for graph in graphs if graph.num_edges == value)
    result = OracleResult(value, witnesses, stats.explored, n, forbidden.key(), stats)
    logger.info(
        "ex(%s, family %s) = %s with %s extremal graphs (%s explored)",
        n,
        forbidden.key()[:12],
        value,
        len(witnesses),
        stats.explored,
    )
    if store is not None:
        store.put(key, result.to_dict())
    return result


@dataclass(frozen=True)
class StabilizationRow:
    """One order of a ``p(s,t)`` experiment."""

    n: int
    ex: int
    h_prime: int
    difference: int
    conjectured: int

    def to_dict(self) -> dict:
        """JSON-ready mapping."""
        return {
            "n": self.n,
            "ex": self.ex,
            "h_prime": self.h_prime,
            "difference": self.difference,
            "conjectured": self.conjectured,
        }


@dataclass(frozen=True)
class StabilizationResult:
    """Sequence ``ex(n, M(K_{s,t}^{p+1})) - h'(n,1,s)`` over a range of ``n``."""

    s: int
    t: int
    p: int
    rows: Tuple[StabilizationRow, ...]

    @property
    def stabilized(self) -> bool:
        """Whether the last two differences agree."""
        return len(self.rows) >= 2 and self.rows[-1].difference == self.rows[-2].difference

    @property
    def constant(self) -> Optional[int]:
        """The stabilised difference, if any."""
        return self.rows[-1].difference if self.stabilized else None

    def to_dict(self) -> dict:
        """JSON-ready mapping."""
        return {
            "s": self.s,
            "t": self.t,
            "p": self.p,
            "rows": [row.to_dict() for row in self.rows],
            "stabilized": self.stabilized,
            "constant": self.constant,
        }


def kst_decomposition_family(s: int, t: int) -> GraphFamily:
    """``M(K_{s,t}^{p+1}) = {K_{s,t}(i,j)}``, isolated vertices stripped."""
    return GraphFamily(
        member.without_isolated() for member in split_family(complete_bipartite_graph(s, t))
    )


def stabilize_p_st(
    s: int, t: int, p: int, n_range: Iterable[int], **oracle_options
) -> StabilizationResult:
    """Track ``ex(n, M(K_{s,t}^{p+1})) - h'(n,1,s)`` to watch ``p(s,t)`` settle.

    Each row also carries the conjectured difference
    ``h(n,1,s) + f(t-1,t-1) - ⌈(s-1)/2⌉ + i - h'(n,1,s)``; it is recorded,
    never asserted.

    :param s: smaller side, at least 1
    :param t: larger side, at least *s*
    :param p: blow-up parameter, at least 3
    :param n_range: orders to evaluate, each within the oracle guard
    :param oracle_options: forwarded to :func:`exact_ex`
    :raises ParameterError: on invalid ``s``, ``t`` or ``p``

    """
    if not 1 <= s <= t:
        raise ParameterError(f"Need 1 <= s <= t, got s={s}, t={t}.")
    if p < 3:
        raise ParameterError(f"K_(s,t) blow-ups need p >= 3, got p={p}.")
    family = kst_decomposition_family(s, t)
    rows: List[StabilizationRow] = []
    for n in n_range:
        value = exact_ex(n, family, **oracle_options).value
        base = h_prime_edges(n, 1, s)
        rows.append(
            StabilizationRow(
                n=n,
                ex=value,
                h_prime=base,
                difference=value - base,
                conjectured=conjectured_decomposition_ex(n, s, t) - base,
            )
        )
        logger.debug("p(%s,%s) experiment at n=%s: difference %s", s, t, n, value - base)
    return StabilizationResult(s, t, p, tuple(rows))
