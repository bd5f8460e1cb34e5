"""Theorem registry and the verification runner."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..common import Graph, ParameterError, ResourceLimitError, UnknownTheoremError
from ..oracle import NimResult, OracleResult, ResultStore, exact_ex, exact_nim_g
from .report import Mode, Row, VerificationReport

logger = logging.getLogger(__name__)

Cell = Tuple[dict, Callable[[], Row]]


@dataclass(frozen=True)
class OracleContext:
    """Oracle options shared by every cell of a run.

    :param store: result cache
    :param workers: processes for the generator and the definition search
    :param paranoid: replay cached results before trusting them

    """

    store: Optional[ResultStore] = None
    workers: int = 1
    paranoid: bool = False

    def options(self) -> dict:
        """Keyword arguments for :func:`blowup.oracle.exact_ex`."""
        return {"store": self.store, "workers": self.workers, "paranoid": self.paranoid}

    def ex(self, n: int, family: Iterable[Graph], hints: Sequence[Graph] = ()) -> OracleResult:
        """``exact_ex`` with this context's options."""
        return exact_ex(n, family, hints=hints, **self.options())

    def nim(self, n: int, pattern: Graph) -> NimResult:
        """``exact_nim_g`` with this context's store and replay setting."""
        return exact_nim_g(n, pattern, store=self.store, paranoid=self.paranoid)


@dataclass(frozen=True)
class Theorem:
    """A registered claim and how to check it.

    :param key: registry key
    :param description: one-line statement
    :param mode: comparison mode
    :param cells: expands a parameter grid into ``(params, evaluate)`` cells
    :param defaults: default grid parameters

    """

    key: str
    description: str
    mode: Mode
    cells: Callable[[dict, OracleContext], Iterator[Cell]]
    defaults: Dict[str, object] = field(default_factory=dict)


REGISTRY: Dict[str, Theorem] = {}


def theorem(key: str, mode: Mode, description: str, **defaults):
    """Register the decorated cell generator under *key*."""

    def register(cells: Callable[[dict, OracleContext], Iterator[Cell]]):
        REGISTRY[key] = Theorem(key, description, mode, cells, defaults)
        return cells

    return register


def get_theorem(key: str) -> Theorem:
    """Look up *key*.

    :raises UnknownTheoremError: if nothing is registered under *key*
    """
    try:
        return REGISTRY[key]
    except KeyError as err:
        raise UnknownTheoremError(
            f"Unknown theorem key {key!r}; known keys: {', '.join(sorted(REGISTRY))}"
        ) from err


def merge_params(defaults: Dict[str, object], overrides: Optional[Dict[str, object]]) -> dict:
    """Apply *overrides* to *defaults*; scalars given for list parameters become lists.

    :raises ParameterError: for a parameter the theorem does not take
    """
    merged = dict(defaults)
    for name, value in (overrides or {}).items():
        if name not in defaults:
            raise ParameterError(
                f"Unknown parameter {name!r}; expected one of {', '.join(sorted(defaults))}."
            )
        if isinstance(defaults[name], list) and not isinstance(value, list):
            value = [value]
        merged[name] = value
    return merged


def run_verification(
    key: str,
    params: Optional[Dict[str, object]] = None,
    context: Optional[OracleContext] = None,
) -> VerificationReport:
    """Evaluate every cell of a registered theorem.

    Cells whose oracle guard is exceeded, or whose parameters fall outside
    the claim's hypothesis, become skipped rows with the reason attached.

    :param key: registry key
    :param params: overrides of the theorem's default grid
    :param context: oracle options; an uncached single-process context by default
    :raises UnknownTheoremError: for an unknown key
    :raises ParameterError: for an unknown grid parameter

    """
    entry = get_theorem(key)
    grid = merge_params(entry.defaults, params)
    context = context if context is not None else OracleContext()
    report = VerificationReport(entry.key, entry.description, entry.mode, grid)
    logger.info("Verifying %s over %s", key, grid)
    for cell_params, evaluate in entry.cells(grid, context):
        try:
            row = evaluate()
        except (ResourceLimitError, ParameterError) as err:
            logger.warning("Skipping %s cell %s: %s", key, cell_params, err)
            row = Row.skip(cell_params, str(err))
        report.rows.append(row)
    logger.info("%s: %s", key, report.summary()["status"])
    return report


def registered_keys() -> List[str]:
    """Registry keys in sorted order."""
    return sorted(REGISTRY)
