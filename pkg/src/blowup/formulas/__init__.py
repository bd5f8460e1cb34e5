"""Closed-form evaluators for Turán-type and NIM numbers."""

from .blowup_formulas import (
    LARGE_N,
    BlowupKind,
    FormulaResult,
    conjectured_decomposition_ex,
    ex_blowup_formula,
    kst_lower_bound,
    nim_formula,
    nim_offset,
)
from .turan import (
    f_chvatal_hanson,
    f_diag,
    g_diag,
    h_edges,
    h_prime_edges,
    t_p_edges,
)
