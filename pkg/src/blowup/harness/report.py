"""Verification reports and their JSON and text renderings.

The JSON layout is versioned by ``SCHEMA_VERSION``::

    {
      "schema_version": 1,
      "theorem": "<registry key>",
      "description": "...",
      "mode": "equality | lower-bound-only | threshold-observed | experiment",
      "grid": {...},
      "rows": [
        {"params": {...}, "basis": "...", "formula": ..., "observed": ...,
         "bounds": [lo, hi] | null, "match": true | false | null,
         "skipped": "<reason>" | null, "note": "...", "explored": 0,
         "witnesses": ["<graph6>", ...]}
      ],
      "summary": {"status": "...", "passed": 0, "failed": 0, "skipped": 0,
                  "evaluated": 0, "threshold": n | null, "message": "..."},
      "stats": {"cells": 0, "explored": 0}
    }

Rendering never includes wall-clock times, so a warm-cache rerun yields
byte-identical JSON.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

SCHEMA_VERSION = 1
NO_CELLS = "no cells evaluated"

Value = Union[int, str, None]


class Mode(Enum):
    """How formula and observation are compared."""

    EQUALITY = "equality"
    LOWER_BOUND_ONLY = "lower-bound-only"
    THRESHOLD_OBSERVED = "threshold-observed"
    EXPERIMENT = "experiment"


class Status(Enum):
    """Overall outcome of a report."""

    PASS = "pass"
    FAIL = "fail"
    THRESHOLD_OBSERVED = "threshold-observed"
    EXPERIMENT = "experiment"
    SKIPPED = "skipped"
    EMPTY = "empty"


@dataclass
class Row:  # pylint: disable=too-many-instance-attributes
    """One evaluated (or skipped) grid cell."""

    params: Dict[str, Value]
    formula: Value = None
    observed: Value = None
    match: Optional[bool] = None
    basis: str = "oracle"
    bounds: Optional[Tuple[int, int]] = None
    witnesses: List[str] = field(default_factory=list)
    note: str = ""
    skipped: Optional[str] = None
    explored: int = 0

    @classmethod
    def skip(cls, params: Dict[str, Value], reason: str) -> "Row":
        """A row for a cell that could not be evaluated."""
        return cls(params=params, skipped=reason, basis="skipped")

    def to_dict(self) -> dict:
        """JSON-ready mapping."""
        return {
            "params": dict(self.params),
            "basis": self.basis,
            "formula": self.formula,
            "observed": self.observed,
            "bounds": None if self.bounds is None else list(self.bounds),
            "match": self.match,
            "skipped": self.skipped,
            "note": self.note,
            "explored": self.explored,
            "witnesses": list(self.witnesses),
        }


def _group_key(params: Dict[str, Value]) -> str:
    return json.dumps({k: v for k, v in params.items() if k != "n"}, sort_keys=True)


@dataclass
class VerificationReport:
    """Rows of one registry theorem plus their summary."""

    theorem: str
    description: str
    mode: Mode
    grid: Dict[str, object]
    rows: List[Row] = field(default_factory=list)

    @property
    def evaluated(self) -> List[Row]:
        """Rows that were not skipped."""
        return [row for row in self.rows if row.skipped is None]

    def threshold(self) -> Optional[int]:
        """Smallest ``n`` from which every evaluated row agrees, over all groups.

        ``None`` when the top ``n`` of some group disagrees, when a row without
        ``n`` disagrees, or when no row carries ``n``.
        """
        if any(
            row.match is False and not isinstance(row.params.get("n"), int)
            for row in self.evaluated
        ):
            return None
        groups: Dict[str, List[Row]] = {}
        for row in self.evaluated:
            if isinstance(row.params.get("n"), int):
                groups.setdefault(_group_key(row.params), []).append(row)
        if not groups:
            return None
        worst = None
        for rows in groups.values():
            rows.sort(key=lambda row: row.params["n"])
            if not rows[-1].match:
                return None
            start = rows[-1].params["n"]
            for row in reversed(rows):
                if not row.match:
                    break
                start = row.params["n"]
            worst = start if worst is None else max(worst, start)
        return worst

    def summary(self) -> dict:
        """Counts, status and (for threshold-observed theorems) the threshold."""
        evaluated = self.evaluated
        passed = sum(1 for row in evaluated if row.match is True)
        failed = sum(1 for row in evaluated if row.match is False)
        skipped = len(self.rows) - len(evaluated)
        threshold = None
        message = ""
        if not self.rows:
            status, message = Status.EMPTY, NO_CELLS
        elif not evaluated:
            status, message = Status.SKIPPED, NO_CELLS
        elif self.mode is Mode.EXPERIMENT:
            status = Status.EXPERIMENT
        elif self.mode is Mode.THRESHOLD_OBSERVED:
            threshold = self.threshold()
            if failed == 0:
                status = Status.PASS
            elif threshold is not None:
                status = Status.THRESHOLD_OBSERVED
                message = f"agreement observed from n={threshold}"
            else:
                status = Status.FAIL
                message = "disagreement at the top of the range"
        else:
            status = Status.FAIL if failed else Status.PASS
        return {
            "status": status.value,
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
            "evaluated": len(evaluated),
            "threshold": threshold,
            "message": message,
        }

    @property
    def exit_code(self) -> int:
        """0 all evaluated cells fine, 1 genuine mismatch, 2 resource skips only."""
        summary = self.summary()
        if summary["status"] == Status.FAIL.value:
            return 1
        if summary["skipped"]:
            return 2
        return 0

    def to_dict(self) -> dict:
        """JSON-ready mapping following the documented schema."""
        return {
            "schema_version": SCHEMA_VERSION,
            "theorem": self.theorem,
            "description": self.description,
            "mode": self.mode.value,
            "grid": self.grid,
            "rows": [row.to_dict() for row in self.rows],
            "summary": self.summary(),
            "stats": {
                "cells": len(self.rows),
                "explored": sum(row.explored for row in self.rows),
            },
        }


def _cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "NO"
    return str(value)


def _text_table(report: dict) -> str:
    lines = [
        f"{report['theorem']}: {report['description']}",
        f"mode: {report['mode']}",
    ]
    if not report["rows"]:
        lines.append(NO_CELLS)
    else:
        headers = ["params", "basis", "formula", "observed", "match", "witnesses / reason"]
        table = []
        for row in report["rows"]:
            params = " ".join(f"{k}={v}" for k, v in row["params"].items())
            last = row["skipped"] if row["skipped"] else " ".join(row["witnesses"]) or row["note"]
            observed = row["observed"]
            if row["bounds"] is not None:
                observed = f"{_cell(observed)} in [{row['bounds'][0]}, {row['bounds'][1]}]"
            table.append(
                [
                    params,
                    row["basis"],
                    _cell(row["formula"]),
                    _cell(observed),
                    _cell(row["match"]),
                    last,
                ]
            )
        widths = [max(len(h), *(len(r[i]) for r in table)) for i, h in enumerate(headers[:-1])]
        lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)) + "  " + headers[-1])
        for r in table:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[-1])
    summary = report["summary"]
    status = (
        f"status: {summary['status']} (passed {summary['passed']}, "
        f"failed {summary['failed']}, skipped {summary['skipped']})"
    )
    if summary["threshold"] is not None:
        status += f", threshold n={summary['threshold']}"
    lines.append(status)
    if summary["message"] and report["rows"]:
        lines.append(summary["message"])
    return "\n".join(lines) + "\n"


def report_render(report: VerificationReport | dict, fmt: str = "json") -> str:
    """Render *report* as ``json`` or ``text``.

    :param report: a report or its :meth:`VerificationReport.to_dict` mapping
    :param fmt: ``json`` (sorted keys, two-space indent) or ``text``
    :raises ValueError: for an unknown format

    """
    data = report.to_dict() if isinstance(report, VerificationReport) else report
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    if fmt == "text":
        return _text_table(data)
    raise ValueError(f"Unknown report format {fmt!r}; use 'json' or 'text'.")
