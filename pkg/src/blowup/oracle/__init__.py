"""Brute-force ground truth: exact Turán numbers, NIM numbers and freeness checks."""

from .extremal import (
    MAX_EX_ORDER,
    FreenessCheck,
    OracleResult,
    StabilizationResult,
    StabilizationRow,
    ex_cache_key,
    exact_ex,
    kst_decomposition_family,
    stabilize_p_st,
    verify_free,
)
from .generation import SearchStats, generate_graphs, greedy_free_graph, level_thresholds
from .nim import (
    MAX_NIM_ORDER,
    MAX_NIM_PATTERN_ORDER,
    NimResult,
    copy_masks,
    exact_nim_g,
    nim_cache_key,
    nim_mask,
)
from .store import JsonlResultStore, MemoryResultStore, ResultStore, open_store
