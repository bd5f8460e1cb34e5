"""Closed-form Turán and NIM numbers for edge blow-ups of catalogue graphs.

.. code-block:: python

    from blowup.formulas import BlowupKind, ex_blowup_formula, nim_formula

    result = ex_blowup_formula(BlowupKind.MATCHING, n=13, p=3, t=2)
    print(result.value)  # 60

    nim = nim_formula(BlowupKind.CLIQUE, n=30, p=5, t=4)
    print(nim.value - ex_blowup_formula(BlowupKind.CLIQUE, 30, 5, 4).value)  # 3

"""

from dataclasses import asdict, dataclass, field
from enum import Enum
from math import comb
from typing import Dict, Optional

from ..common import ParameterError
from .turan import f_chvatal_hanson, h_edges, h_prime_edges, t_p_edges

LARGE_N = "asserted only for sufficiently large n"


class BlowupKind(Enum):
    """Base graphs whose blow-ups have a closed-form Turán number."""

    MATCHING = "matching"
    STAR = "star"
    PATH = "path"
    CYCLE = "cycle"
    CLIQUE = "clique"
    COMPLETE_BIPARTITE = "complete_bipartite"


@dataclass(frozen=True)
class FormulaResult:
    """Value of a closed-form formula with its provenance.

    :param value: edge count; for symbolic results the known part only
    :param source: registry-style key of the result the formula comes from
    :param validity: range of ``n`` for which the formula is asserted
    :param unresolved: name of an additive constant not yet resolved, if any
    :param params: parameters the formula was evaluated at

    """

    value: int
    source: str
    validity: str = LARGE_N
    unresolved: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)

    @property
    def is_symbolic(self) -> bool:
        """Whether an unresolved constant still has to be added."""
        return self.unresolved is not None

    def resolve(self, constant: int) -> "FormulaResult":
        """Add the value of the unresolved constant."""
        if self.unresolved is None:
            raise ValueError("Formula result has no unresolved constant.")
        return FormulaResult(
            self.value + constant, self.source, self.validity, None, dict(self.params)
        )

    def to_dict(self) -> dict:
        """JSON-ready representation."""
        return asdict(self)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def ex_blowup_formula(
    kind: BlowupKind | str, n: int, p: int, t: int, s: Optional[int] = None
) -> FormulaResult:
    """Evaluate ``ex(n, G^{p+1})`` for a catalogue base graph.

    :param kind: base family
    :param n: host order
    :param p: blow-up parameter; each edge becomes ``K_{p+1}``
    :param t: size parameter: matching ``M_{2t}``, star ``S_{t+1}``, path ``P_t``,
        cycle ``C_t``, clique ``K_t``, or the larger side of ``K_{s,t}``
    :param s: smaller side of ``K_{s,t}`` (complete bipartite only)
    :returns: the formula value; complete bipartite results carry the
        unresolved constant ``p(s,t)``
    :raises ParameterError: if ``p`` or the size parameters violate the
        hypothesis of the corresponding result

    """
    kind = BlowupKind(kind)
    params = {"n": n, "p": p, "t": t}
    if kind is BlowupKind.MATCHING:
        _require(p >= 2, f"matching blow-ups need p >= 2, got p={p}")
        _require(t >= 1, f"matching size t must be positive, got t={t}")
        return FormulaResult(h_edges(n, p, t), "cor-matching", params=params)
    if kind is BlowupKind.STAR:
        _require(p >= 2, f"star blow-ups need p >= 2, got p={p}")
        _require(t >= 1, f"star S_(t+1) needs t >= 1, got t={t}")
        value = h_edges(n, p, 1) + f_chvatal_hanson(t - 1, t - 1)
        return FormulaResult(value, "cor-star", params=params)
    if kind is BlowupKind.PATH:
        _require(p >= 3, f"path blow-ups need p >= 3, got p={p}")
        _require(t >= 2, f"path P_t needs t >= 2, got t={t}")
        return FormulaResult(h_edges(n, p, t // 2) + t % 2, "cor-path", params=params)
    if kind is BlowupKind.CYCLE:
        _require(t >= 3, f"cycle C_t needs t >= 3, got t={t}")
        if t % 2 == 0:
            _require(p >= 3, f"even cycle blow-ups need p >= 3, got p={p}")
            return FormulaResult(h_edges(n, p, t // 2) + 1, "cor-cycle", params=params)
        _require(p >= 4, f"odd cycle blow-ups need p >= 4, got p={p}")
        return FormulaResult(h_edges(n, p, (t + 1) // 2), "cor-cycle", params=params)
    if kind is BlowupKind.CLIQUE:
        _require(t >= 2, f"clique K_t needs t >= 2, got t={t}")
        _require(p >= t + 1, f"clique blow-ups need p >= t + 1, got p={p}, t={t}")
        apex = comb(t - 1, 2)
        _require(n >= apex, f"need n >= C(t-1,2) = {apex}, got n={n}")
        value = apex * (n - apex) + t_p_edges(n - apex, p)
        return FormulaResult(value, "thm-clique", params=params)
    _require(s is not None, "complete bipartite blow-ups need the side size s")
    _require(1 <= s <= t, f"need 1 <= s <= t, got s={s}, t={t}")
    _require(p >= 3, f"complete bipartite blow-ups need p >= 3, got p={p}")
    params["s"] = s
    return FormulaResult(
        h_prime_edges(n, p, s), "thm-kst-experiment", unresolved=f"p({s},{t})", params=params
    )


def kst_lower_bound(n: int, p: int, s: int, t: int) -> int:
    """Explicit lower bound ``h(n,p,s) + f(t-1,t-1) - ⌈(s-1)/2⌉ + i`` for ``K_{s,t}`` blow-ups.

    ``i = 1`` when ``s = t`` is even and ``0`` otherwise.
    """
    i = 1 if s == t and s % 2 == 0 else 0
    return h_edges(n, p, s) + f_chvatal_hanson(t - 1, t - 1) - (s // 2) + i


def conjectured_decomposition_ex(n: int, s: int, t: int) -> int:
    """Conjectured ``ex(n, M(K_{s,t}^{p+1}))``, valid in the conjecture for ``n >= s + 2t``."""
    return kst_lower_bound(n, 1, s, t)


def nim_offset(q: int, sentinel: bool, ex_small: Optional[int] = None) -> int:
    """Return ``g - ex`` for a blow-up with parameters ``q`` and ``B``.

    :param q: independent covering number of the decomposition family
    :param sentinel: whether ``B`` is the sentinel ``{K_q}``
    :param ex_small: ``ex(q-1, B)``, required unless *sentinel*
    :returns: 0 in the sentinel case, else ``C(q-1,2) - ex(q-1,B)``

    """
    if sentinel:
        return 0
    if ex_small is None:
        raise ValueError("ex(q-1, B) is required when B is not the sentinel.")
    return comb(q - 1, 2) - ex_small


def nim_formula(
    kind: BlowupKind | str,
    n: int,
    p: int,
    t: int,
    q: Optional[int] = None,
    sentinel: Optional[bool] = None,
    ex_small: Optional[int] = None,
) -> FormulaResult:
    """Evaluate ``g(n, G^{p+1})`` for catalogue bases the NIM result covers.

    The result applies to non-bipartite bases with ``χ(G) <= p - 1`` and to
    bipartite bases with ``q < |A|``; in the catalogue that is odd cycles and
    cliques. Decomposition parameters default to their closed forms and may
    be passed explicitly (as derived by the decomposition module) instead.

    :param kind: base family
    :param n: host order
    :param p: blow-up parameter
    :param t: size parameter of the base
    :param q: independent covering number of ``M(G^{p+1})``
    :param sentinel: whether ``B(M)`` is the sentinel ``{K_q}``
    :param ex_small: ``ex(q-1, B)`` when ``B`` is not the sentinel
    :returns: formula result sourced ``thm-nim``
    :raises ParameterError: if the base is outside the result's hypothesis

    """
    kind = BlowupKind(kind)
    if kind is BlowupKind.CYCLE:
        _require(t % 2 == 1, f"NIM formula needs a non-bipartite base; C_{t} is bipartite")
        default_q, default_sentinel, default_small = (t + 1) // 2, True, None
    elif kind is BlowupKind.CLIQUE:
        _require(t >= 3, f"NIM formula needs a non-bipartite base; K_{t} is bipartite")
        default_q, default_sentinel, default_small = comb(t - 1, 2) + 1, False, 0
    else:
        raise ParameterError(
            f"NIM formula needs a non-bipartite base or a bipartite base with q < |A|; "
            f"{kind.value} bases have q = |A|"
        )
    ex_value = ex_blowup_formula(kind, n, p, t)
    q = default_q if q is None else q
    sentinel = default_sentinel if sentinel is None else sentinel
    if ex_small is None and not sentinel:
        ex_small = default_small
    offset = nim_offset(q, sentinel, ex_small)
    params = dict(ex_value.params, q=q)
    return FormulaResult(ex_value.value + offset, "thm-nim", params=params)
