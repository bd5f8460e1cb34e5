"""Extremal gadgets for bounded matching number and maximum degree."""

from typing import List, Tuple

from ..common import Graph, ParameterError, disjoint_union
from .named import complete_minus_cover, star_graph


def h_odd_gadget(t: int) -> Graph:
    """Build ``H_{2t-1}`` for even ``t >= 4``.

    The graph has ``2t - 1`` vertices, ``Δ = ν = t - 1`` and ``f(t-1,t-1)``
    edges. At ``t = 4`` it is ``K(t)``-free. From ``t = 6`` on it is not: ``H_11``
    contains ``K_{3,4}(0,1)`` and ``H_15`` contains ``K_{7,2}(0,1)``.

    For ``t = 4`` it is ``K_4 - ab`` plus a disjoint ``K_3`` with ``a`` and ``b``
    joined to two distinct triangle vertices. For ``t >= 6`` it starts from
    two ``K_{t-1}`` on ``X = x_1..x_{t-1}`` and ``Y = y_1..y_{t-1}``:

    * ``X_1 = x_1..x_{t/2-1}`` is matched to ``Y_1``;
    * ``X_2 = x_{t/2}..x_{t-2}`` and ``Y_2`` carry an alternating cycle of length ``t - 2``;
    * ``x_{t-1} y_{t-1}`` is an edge;
    * a new vertex ``z`` is joined to ``X_1 ∪ Y_1``;
    * the matchings ``x_i x_{t/2-1+i}`` and ``y_i y_{t/2-1+i}`` are deleted.

    Vertex ``x_i`` is ``i - 1``, ``y_i`` is ``t + i - 2`` and ``z`` is ``2t - 2``.

    :param t: even parameter, at least 4
    :raises ParameterError: for odd or too small ``t``

    """
    if t % 2 or t < 4:
        raise ParameterError(f"H_(2t-1) is defined for even t >= 4, got t={t}.")
    if t == 4:
        # a=0, b=1, c=2, d=3 on the K_4 side; triangle 4, 5, 6
        edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (0, 4), (1, 5)]
        return Graph.from_edges(7, edges)
    half = t // 2

    def x(i: int) -> int:
        return i - 1

    def y(i: int) -> int:
        return t + i - 2

    z = 2 * t - 2
    edges: List[Tuple[int, int]] = []
    for side in (x, y):
        edges += [(side(i), side(j)) for i in range(1, t) for j in range(i + 1, t)]
    edges += [(x(i), y(i)) for i in range(1, half)]
    ring = [half + k for k in range(half - 1)]
    # x_{r0} y_{r0} x_{r1} y_{r1} ... closes back at x_{r0}
    for k, r in enumerate(ring):
        edges.append((x(r), y(r)))
        edges.append((y(r), x(ring[(k + 1) % len(ring)])))
    edges.append((x(t - 1), y(t - 1)))
    edges += [(z, x(i)) for i in range(1, half)] + [(z, y(i)) for i in range(1, half)]
    graph = Graph.from_edges(2 * t - 1, edges)
    removed = [(side(i), side(half - 1 + i)) for side in (x, y) for i in range(1, half)]
    return graph.remove_edges(removed)


def _dense_block(delta: int) -> Graph:
    """Factor-critical block with ``ν = ⌈Δ/2⌉``, max degree ``Δ`` and ``f(⌈Δ/2⌉, Δ)`` edges."""
    if delta % 2 == 0:
        return Graph.complete(delta + 1)
    return complete_minus_cover(delta + 2)


def e_nu_delta_witness(nu: int, delta: int) -> Graph:
    """A graph with ``ν <= nu``, ``Δ <= delta`` and exactly ``f(nu, delta)`` edges.

    Diagonal cases with odd ``nu = delta >= 3`` return the gadget
    ``H_{2t-1}`` with ``t = delta + 1``; everything else uses
    ``⌊ν/⌈Δ/2⌉⌋`` dense factor-critical blocks (``K_{Δ+1}`` for even ``Δ``,
    ``K_{Δ+2}`` minus an edge cover for odd ``Δ``) plus stars ``S_{Δ+1}``
    for the remaining matching budget. Isolated vertices are not included.

    :param nu: matching-number bound
    :param delta: maximum-degree bound
    :returns: one extremal graph of the Chvátal–Hanson problem

    """
    if nu < 0 or delta < 0:
        raise ParameterError(f"Need nu, delta >= 0, got nu={nu}, delta={delta}.")
    if nu == 0 or delta == 0:
        return Graph.empty(0)
    if nu == delta and delta % 2 and delta >= 3:
        return h_odd_gadget(delta + 1)
    block_nu = -(-delta // 2)
    blocks, remainder = divmod(nu, block_nu)
    parts = [_dense_block(delta)] * blocks + [star_graph(delta + 1)] * remainder
    return disjoint_union(*parts).without_isolated()


def kst_lemma_witness(t: int) -> Graph:
    """Graph with ``g(t-1,t-1)`` edges free of ``S_{t+1}``, ``M_{2t}`` and every ``K_{2,t-1}(0,i)``.

    ``K_t ∪ K_{t-1}`` for even ``t``; ``K_t ∪ (K_t - E(S_3 ∪ M_{t-3}))`` for odd ``t``.
    """
    if t < 3:
        raise ParameterError(f"The witness is defined for t >= 3, got t={t}.")
    second = Graph.complete(t - 1) if t % 2 == 0 else complete_minus_cover(t)
    return disjoint_union(Graph.complete(t), second)
