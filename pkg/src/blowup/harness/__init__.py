"""Theorem registry, verification runner and report rendering.

.. code-block:: python

    from blowup.harness import OracleContext, report_render, run_verification

    report = run_verification("chvatal-diag", {"k_max": 50})
    print(report_render(report, "text"))

"""

from . import theorems  # noqa: F401  # pylint: disable=unused-import
from .registry import (
    REGISTRY,
    OracleContext,
    Theorem,
    get_theorem,
    merge_params,
    registered_keys,
    run_verification,
)
from .report import (
    NO_CELLS,
    SCHEMA_VERSION,
    Mode,
    Row,
    Status,
    VerificationReport,
    report_render,
)
