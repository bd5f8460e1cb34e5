"""Decomposition families ``M(F)`` and the parameters derived from them."""

from .bounds import (
    ExBounds,
    blowup_ex_bounds,
    decomposition_ex_bounds,
    small_extremal_number,
)
from .family import (
    MAX_DIRECT_ORDER,
    DecompositionFamily,
    Provenance,
    decomposition_family_blowup,
    decomposition_family_direct,
    definition_host,
)
from .params import ParamRecord, derive_params
