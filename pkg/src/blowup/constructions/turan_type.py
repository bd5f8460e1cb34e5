"""Turán graphs and the ``H(n,p,s)`` extremal-construction family.

.. code-block:: python

    from blowup.constructions import HFamilySpec, h_construction, h_family_member

    apex_clique = h_construction(10, 2, 2, "clique")
    print(apex_clique.num_edges)  # 29

    member = h_family_member(HFamilySpec(n=20, p=2, s=1, nu=2, delta=2))
    print(member.num_edges)  # t_2(20) + 6 = 106

"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from ..common import Graph, ParameterError, join
from .gadgets import e_nu_delta_witness, h_odd_gadget, kst_lemma_witness
from .named import complete_minus_cover, complete_multipartite_graph, disjoint_copies


def turan_class_sizes(n: int, p: int) -> list:
    """Class sizes of ``T_p(n)``, larger classes first."""
    if n < 0 or p < 1:
        raise ValueError(f"Turán graph needs n >= 0 and p >= 1, got n={n}, p={p}.")
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def turan_graph(n: int, p: int) -> Graph:
    """Balanced complete ``p``-partite graph ``T_p(n)``; complete when ``p >= n``."""
    return complete_multipartite_graph([size for size in turan_class_sizes(n, p) if size])


class Apex(Enum):
    """Edges inside the ``s - 1`` apex vertices of ``H``-type constructions."""

    CLIQUE = "clique"
    INDEPENDENT = "independent"


def h_construction(n: int, p: int, s: int, apex: Apex | str = Apex.CLIQUE) -> Graph:
    """``H(n,p,s) = K_{s-1} + T_p(n-s+1)`` or ``H'(n,p,s)`` with an independent apex.

    Apex vertices are ``0..s-2``; the Turán part follows.
    """
    apex = Apex(apex)
    if s < 1 or n < s - 1:
        raise ParameterError(f"Need n >= s - 1 >= 0, got n={n}, s={s}.")
    top = Graph.complete(s - 1) if apex is Apex.CLIQUE else Graph.empty(s - 1)
    return join(top, turan_graph(n - s + 1, p))


def partite_embedding(sizes: Sequence[int], inner: Graph) -> Graph:
    """``K_{n_1,...,n_p}(n, F)``: *inner* placed on the first vertices of the first class.

    :raises ParameterError: if *inner* does not fit into the first class

    """
    if not sizes or inner.order > sizes[0]:
        raise ParameterError(
            f"Graph of order {inner.order} does not fit a class of size "
            f"{sizes[0] if sizes else 0}."
        )
    host = complete_multipartite_graph(sizes)
    return host.add_edges((u, v) for u, v in inner.edges())


@dataclass(frozen=True)
class HFamilySpec:  # pylint: disable=too-many-instance-attributes
    """Parameters of a member of ``H(n,p,s,ν,Δ,B)``.

    :param n: total order
    :param p: number of Turán classes
    :param s: apex size plus one
    :param nu: matching bound of the in-class witness
    :param delta: degree bound of the in-class witness
    :param apex_graph: ``Q_{s-1}`` placed on the apex; edgeless if omitted
    :param class_graph: replaces the ``E_{ν,Δ}`` witness when given

    """

    n: int
    p: int
    s: int
    nu: int = 0
    delta: int = 0
    apex_graph: Optional[Graph] = None
    class_graph: Optional[Graph] = None

    def __post_init__(self):
        if self.p < 2:
            raise ParameterError(f"H-family members need p >= 2, got p={self.p}.")
        if self.s < 1 or self.n < self.s - 1:
            raise ParameterError(f"Need n >= s - 1 >= 0, got n={self.n}, s={self.s}.")
        if self.apex_graph is not None and self.apex_graph.order != self.s - 1:
            raise ParameterError(
                f"Apex graph must have s - 1 = {self.s - 1} vertices, "
                f"got {self.apex_graph.order}."
            )

    def in_class_graph(self) -> Graph:
        """The graph placed inside the first Turán class."""
        if self.class_graph is not None:
            return self.class_graph
        return e_nu_delta_witness(self.nu, self.delta)


def h_family_member(spec: HFamilySpec) -> Graph:
    """Assemble a member of ``H(n,p,s,ν,Δ,B)``.

    Take ``H'(n,p,s)``, put the in-class graph into the first (largest)
    class of ``T_p(n-s+1)`` and ``Q_{s-1}`` onto the apex.

    :param spec: member parameters
    :returns: graph with ``h'(n,p,s) + e(E) + e(Q)`` edges
    :raises ParameterError: if the in-class graph does not fit the class

    """
    inner = spec.in_class_graph()
    sizes = [size for size in turan_class_sizes(spec.n - spec.s + 1, spec.p) if size]
    body = partite_embedding(sizes or [0], inner)
    apex = spec.apex_graph if spec.apex_graph is not None else Graph.empty(spec.s - 1)
    return join(apex, body)


class KstVariant(Enum):
    """Lower-bound hosts for ``K_{s,t}`` blow-ups."""

    F1 = "F1"
    F2 = "F2"


def kst_lower_bound_graph(n: int, p: int, s: int, t: int, variant: KstVariant | str) -> Graph:
    """Lower-bound hosts for ``K_{s,t}^{p+1}`` with the explicit edge count.

    ``F1``: ``H'(n,p,s)`` with ``H_{2t-1}`` (``t`` even) or ``2·K_t`` (``t`` odd)
    in a class and a max-degree ``s-3`` graph on the apex. The host is only as
    free as its class graph: ``H_{2t-1}`` is ``K(t)``-free at ``t = 4`` but not
    for even ``t >= 6``, so there ``F1`` attains the edge count without a
    freeness guarantee.
    ``F2``: ``H(n,p,s)`` with the ``g(t-1,t-1)`` witness in a class.

    """
    variant = KstVariant(variant)
    if variant is KstVariant.F1:
        inner = h_odd_gadget(t) if t % 2 == 0 else disjoint_copies(Graph.complete(t), 2)
        spec = HFamilySpec(n, p, s, apex_graph=complete_minus_cover(s - 1), class_graph=inner)
    else:
        spec = HFamilySpec(
            n, p, s, apex_graph=Graph.complete(s - 1), class_graph=kst_lemma_witness(t)
        )
    return h_family_member(spec)
