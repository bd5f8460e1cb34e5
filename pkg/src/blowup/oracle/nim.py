"""Exact ``g(n, H)``: edges outside every monochromatic copy of ``H``.

Edges of ``K_n`` are indexed ``0..C(n,2)-1`` in lexicographic order and a
2-colouring is the bitmask of its red edges. Edge 0 is always red, since
swapping colours preserves the NIM edge set.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Tuple

import numpy as np

from ..common import Graph, ParameterError, ResourceLimitError, canonical_form, to_graph6
from .store import ResultStore

logger = logging.getLogger(__name__)

MAX_NIM_ORDER = 7
MAX_NIM_PATTERN_ORDER = 6
_BATCH_CELLS = 1 << 22


def _edge_index(n: int) -> Dict[Tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(n), 2))}


def copy_masks(n: int, pattern: Graph) -> List[int]:
    """Edge masks of all copies of *pattern* in ``K_n``, sorted."""
    if pattern.order > n:
        return []
    index = _edge_index(n)
    masks = set()
    for image in permutations(range(n), pattern.order):
        mask = 0
        for u, v in pattern.edges():
            a, b = sorted((image[u], image[v]))
            mask |= 1 << index[(a, b)]
        masks.add(mask)
    return sorted(masks)


def nim_mask(red: int, full: int, copies: List[int]) -> int:
    """NIM edges of the colouring *red* as a mask."""
    blue = full & ~red
    covered = 0
    for mask in copies:
        if mask & red == mask or mask & blue == mask:
            covered |= mask
    return full & ~covered


@dataclass(frozen=True)
class NimResult:
    """Exact ``g(n, H)`` with one optimal colouring.

    :param value: maximum number of NIM edges
    :param red_edges: red edges of an optimal colouring; the rest are blue
    :param nim_edges: NIM edges of that colouring
    :param n: order of the complete graph
    :param pattern: the graph ``H``

    """

    value: int
    red_edges: Tuple[Tuple[int, int], ...]
    nim_edges: Tuple[Tuple[int, int], ...]
    n: int
    pattern: Graph

    def replay(self) -> bool:
        """Recount the NIM edges of the stored colouring."""
        index = _edge_index(self.n)
        full = (1 << len(index)) - 1
        red = sum(1 << index[edge] for edge in self.red_edges)
        nim = nim_mask(red, full, copy_masks(self.n, self.pattern))
        pairs = [pair for pair, i in index.items() if nim >> i & 1]
        return nim.bit_count() == self.value and tuple(pairs) == self.nim_edges

    def to_dict(self) -> dict:
        """JSON-ready mapping."""
        return {
            "value": self.value,
            "n": self.n,
            "pattern": to_graph6(self.pattern),
            "red_edges": [list(edge) for edge in self.red_edges],
            "nim_edges": [list(edge) for edge in self.nim_edges],
        }

    @classmethod
    def from_dict(cls, record: dict, pattern: Graph) -> "NimResult":
        """Rebuild a result stored with :meth:`to_dict`."""
        return cls(
            value=record["value"],
            red_edges=tuple(tuple(edge) for edge in record["red_edges"]),
            nim_edges=tuple(tuple(edge) for edge in record["nim_edges"]),
            n=record["n"],
            pattern=pattern,
        )


def _best_colouring(m: int, copies: List[int]) -> Tuple[int, int]:
    """Sweep all colourings with edge 0 red; return ``(value, red mask)``."""
    full = np.uint64((1 << m) - 1)
    if not copies:
        return m, 1
    table = np.array(copies, dtype=np.uint64)
    batch = max(1, _BATCH_CELLS // len(copies))
    total = 1 << (m - 1)
    best_value, best_red = -1, 1
    for start in range(0, total, batch):
        free = np.arange(start, min(start + batch, total), dtype=np.uint64)
        red = (free << np.uint64(1)) | np.uint64(1)
        blue = full & ~red
        red_in = (red[:, None] & table[None, :]) == table[None, :]
        blue_in = (blue[:, None] & table[None, :]) == table[None, :]
        mono = np.where(red_in | blue_in, table[None, :], np.uint64(0))
        covered = np.bitwise_or.reduce(mono, axis=1)
        counts = np.bitwise_count(full & ~covered)
        top = int(np.argmax(counts))
        if int(counts[top]) > best_value:
            best_value, best_red = int(counts[top]), int(red[top])
    return best_value, best_red


def nim_cache_key(n: int, pattern: Graph) -> str:
    """Store key of an ``exact_nim_g`` query."""
    return f"nim:{n}:{canonical_form(pattern).hex()}"


def exact_nim_g(
    n: int, pattern: Graph, store: ResultStore | None = None, paranoid: bool = False
) -> NimResult:
    """Compute ``g(n, H)`` by sweeping every 2-colouring of ``K_n``.

    :param n: order of the complete graph, at most ``MAX_NIM_ORDER``
    :param pattern: ``H``, at most ``MAX_NIM_PATTERN_ORDER`` vertices
    :param store: result cache
    :param paranoid: replay a cached colouring before trusting it
    :raises ResourceLimitError: if a guard is exceeded

    """
    if n < 0:
        raise ParameterError(f"Order must be non-negative, got n={n}.")
    if n > MAX_NIM_ORDER or MAX_NIM_PATTERN_ORDER < pattern.order <= n:
        raise ResourceLimitError(
            f"NIM sweep is limited to n <= {MAX_NIM_ORDER} and |V(H)| <= "
            f"{MAX_NIM_PATTERN_ORDER}, got n={n}, |V(H)|={pattern.order}.",
            estimate=2 ** (n * (n - 1) // 2),
        )
    key = nim_cache_key(n, pattern)
    if store is not None and (cached := store.get(key)) is not None:
        result = NimResult.from_dict(cached, pattern)
        if not paranoid or result.replay():
            logger.info("Cache hit for %s", key)
            return result
        logger.warning("Cached result for %s failed replay; recomputing", key)

    pairs = list(combinations(range(n), 2))
    copies = copy_masks(n, pattern)
    if pairs:
        value, red = _best_colouring(len(pairs), copies)
    else:
        value, red = 0, 0
    nim = nim_mask(red, (1 << len(pairs)) - 1, copies)
    result = NimResult(
        value=value,
        red_edges=tuple(pair for i, pair in enumerate(pairs) if red >> i & 1),
        nim_edges=tuple(pair for i, pair in enumerate(pairs) if nim >> i & 1),
        n=n,
        pattern=pattern,
    )
    logger.info("g(%s, H) = %s over %s copies of H", n, value, len(copies))
    if store is not None:
        store.put(key, result.to_dict())
    return result
