"""Lower and upper Turán bounds assembled from decomposition parameters."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..formulas import f_chvatal_hanson, h_edges, h_prime_edges
from ..invariants import independent_covering_number
from ..oracle import exact_ex
from .family import DecompositionFamily
from .params import ParamRecord, derive_params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExBounds:
    """``h'(n,p,q) + ex(q-1,B) <= ex(n, ·) <= h(n,p,q) + f(k-1,k-1)``.

    :param p: number of Turán classes; 1 for the decomposition family itself
    :param q: independent covering number of the family
    :param k: minimum witness degree
    :param ex_small: ``ex(q-1, B)``
    :param collapsed: lower and upper bound coincide

    """

    p: int
    q: int
    k: int
    ex_small: int
    collapsed: bool

    def lower(self, n: int) -> int:
        """Lower bound at order *n*."""
        return h_prime_edges(n, self.p, self.q) + self.ex_small

    def upper(self, n: int) -> int:
        """Upper bound at order *n*; equals :meth:`lower` when collapsed."""
        if self.collapsed:
            return self.lower(n)
        return h_edges(n, self.p, self.q) + f_chvatal_hanson(self.k - 1, self.k - 1)

    def at(self, n: int) -> Tuple[int, int]:
        """``(lower, upper)`` at order *n*."""
        return self.lower(n), self.upper(n)

    def to_dict(self) -> dict:
        """JSON-ready mapping of the constants."""
        return {
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "ex_small": self.ex_small,
            "collapsed": self.collapsed,
        }


def small_extremal_number(params: ParamRecord, **oracle_options) -> int:
    """``ex(q-1, B)``: ``C(q-1,2)`` for the sentinel, otherwise from the oracle."""
    if params.sentinel:
        return params.sentinel_ex
    return exact_ex(params.q - 1, params.b, **oracle_options).value


def _collapses(family: DecompositionFamily, params: ParamRecord) -> bool:
    """Whether the stored base is non-bipartite or has ``q < |A|``."""
    if family.base is None:
        return False
    side = independent_covering_number(family.base)
    return side is None or params.q < side


def blowup_ex_bounds(
    family: DecompositionFamily,
    p: Optional[int] = None,
    params: Optional[ParamRecord] = None,
    ex_small: Optional[int] = None,
    **oracle_options,
) -> ExBounds:
    """Bounds on ``ex(n, G^{p+1})`` from the decomposition family of the blow-up.

    :param family: ``M(G^{p+1})``, ideally carrying its base ``G``
    :param p: number of Turán classes; defaults to ``family.p``
    :param params: precomputed parameters
    :param ex_small: precomputed ``ex(q-1, B)``
    :param oracle_options: forwarded to :func:`blowup.oracle.exact_ex`
    :raises ResourceLimitError: if ``ex(q-1, B)`` is beyond the oracle's reach

    """
    params = params if params is not None else derive_params(family)
    if ex_small is None:
        ex_small = small_extremal_number(params, **oracle_options)
    bounds = ExBounds(
        p=family.p if p is None else p,
        q=params.q,
        k=params.k,
        ex_small=ex_small,
        collapsed=_collapses(family, params),
    )
    logger.info("Blow-up bounds: %s", bounds)
    return bounds


def decomposition_ex_bounds(
    family: DecompositionFamily,
    params: Optional[ParamRecord] = None,
    ex_small: Optional[int] = None,
    **oracle_options,
) -> ExBounds:
    """Bounds on ``ex(n, M)`` for the decomposition family itself (``p = 1``)."""
    return blowup_ex_bounds(family, 1, params, ex_small, **oracle_options)
