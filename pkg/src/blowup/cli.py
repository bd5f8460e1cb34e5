"""Command-line surface of the package.

Graphs cross the boundary as graph6 strings or catalogue specs such as
``cycle:5``, ``kst:2,3`` or ``petersen``. Every command prints JSON except
``construct`` (one graph6 line) and ``verify``/``report`` with
``--format text``.

.. code-block:: console

    $ blowup construct graph matching:4 --blowup 2
    $ blowup construct h --n 10 --p 2 --s 2
    $ blowup decompose cycle:4 --p 3
    $ blowup formula clique --n 30 --p 5 --t 4 --nim
    $ blowup oracle ex 9 matching:4 --blowup 2
    $ blowup verify cor-matching --param n_max=8 --format text
    $ blowup cache list

Exit codes of ``verify``: 0 every evaluated cell passed, 1 a genuine
mismatch, 2 some cells were skipped. Other commands return 2 for rejected
input or an exceeded guard and 1 for a broken invariant.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .common import (
    BlowupError,
    FamilyInvariantError,
    Graph,
    read_graph6_lines,
    to_graph6,
)
from .config import Settings
from .constructions import (
    HFamilySpec,
    edge_blowup,
    graph_from_spec,
    h_construction,
    h_family_member,
    h_odd_gadget,
    kst_lemma_witness,
    kst_lower_bound_graph,
    turan_graph,
)
from .decomposition import (
    blowup_ex_bounds,
    decomposition_family_blowup,
    decomposition_family_direct,
    derive_params,
)
from .formulas import ex_blowup_formula, nim_formula
from .harness import OracleContext, registered_keys, report_render, run_verification
from .harness.registry import get_theorem
from .invariants import invariant_summary
from .oracle import exact_ex, exact_nim_g, stabilize_p_st

logger = logging.getLogger(__name__)

CONSTRUCTIONS = (
    "graph",
    "turan",
    "h",
    "h-prime",
    "h-family",
    "gadget",
    "lemma-witness",
    "kst-host",
)


def _dump(data: object) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _read_graph(spec: str, blowup: Optional[int] = None) -> Graph:
    graph = graph_from_spec(spec)
    return edge_blowup(graph, blowup) if blowup else graph


def parse_param(text: str) -> tuple:
    """Split ``name=value``; integers and comma-separated integer lists are converted.

    :raises argparse.ArgumentTypeError: without ``=``
    """
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"Expected name=value, got {text!r}.")
    pieces = value.split(",")
    try:
        numbers = [int(piece) for piece in pieces]
    except ValueError:
        return name, value
    return name, numbers[0] if len(numbers) == 1 else numbers


def collect_params(pairs: Sequence[tuple]) -> Dict[str, object]:
    """Merge ``--param`` pairs; a repeated name accumulates into a list."""
    params: Dict[str, object] = {}
    for name, value in pairs:
        if name not in params:
            params[name] = value
            continue
        current = params[name]
        current = current if isinstance(current, list) else [current]
        params[name] = current + (value if isinstance(value, list) else [value])
    return params


def _cmd_construct(args, _settings: Settings) -> int:
    kind = args.kind
    if kind == "graph":
        if not args.graph:
            raise ValueError("construct graph needs a graph spec.")
        graph = _read_graph(args.graph, args.blowup)
    elif kind == "turan":
        graph = turan_graph(args.n, args.p)
    elif kind in ("h", "h-prime"):
        graph = h_construction(args.n, args.p, args.s, "clique" if kind == "h" else "independent")
    elif kind == "h-family":
        apex = graph_from_spec(args.apex_graph) if args.apex_graph else None
        graph = h_family_member(
            HFamilySpec(args.n, args.p, args.s, args.nu, args.delta, apex_graph=apex)
        )
    elif kind == "gadget":
        graph = h_odd_gadget(args.t)
    elif kind == "lemma-witness":
        graph = kst_lemma_witness(args.t)
    else:
        graph = kst_lower_bound_graph(args.n, args.p, args.s, args.t, args.variant)
    logger.info("Constructed %s with %s vertices and %s edges", kind, graph.order, graph.num_edges)
    sys.stdout.write(to_graph6(graph) + "\n")
    return 0


def _cmd_params(args, _settings: Settings) -> int:
    if args.graph:
        graphs: List[Graph] = [_read_graph(args.graph)]
    else:
        graphs = read_graph6_lines(sys.stdin.read())
    summaries = [dict(invariant_summary(graph), graph6=to_graph6(graph)) for graph in graphs]
    sys.stdout.write(_dump(summaries[0] if len(summaries) == 1 else summaries))
    return 0


def _cmd_decompose(args, settings: Settings) -> int:
    graph = _read_graph(args.graph)
    options = {"store": settings.open_store(), "workers": settings.workers}
    if args.direct:
        family = decomposition_family_direct(graph, args.p, workers=settings.workers)
    else:
        family = decomposition_family_blowup(graph, args.p)
    record = derive_params(family)
    data = dict(record.to_dict(), members=[to_graph6(m) for m in family])
    data["provenance"] = family.provenance.value
    if args.n is not None:
        bounds = blowup_ex_bounds(family, family.p, params=record, **options)
        data["bounds"] = dict(bounds.to_dict(), n=args.n, at=list(bounds.at(args.n)))
    sys.stdout.write(_dump(data))
    return 0


def _cmd_formula(args, _settings: Settings) -> int:
    if args.nim:
        result = nim_formula(args.kind, args.n, args.p, args.t)
    else:
        result = ex_blowup_formula(args.kind, args.n, args.p, args.t, s=args.s)
    sys.stdout.write(_dump(result.to_dict()))
    return 0


def _cmd_oracle(args, settings: Settings) -> int:
    store = settings.open_store()
    if args.target == "ex":
        family = [_read_graph(spec, args.blowup) for spec in args.family]
        result = exact_ex(
            args.n, family, store=store, paranoid=settings.paranoid, workers=settings.workers
        )
        data = result.to_dict()
    elif args.target == "nim":
        pattern = _read_graph(args.pattern)
        data = exact_nim_g(args.n, pattern, store=store, paranoid=settings.paranoid).to_dict()
    else:
        data = stabilize_p_st(
            args.s,
            args.t,
            args.p,
            range(args.n_min, args.n_max + 1),
            store=store,
            paranoid=settings.paranoid,
            workers=settings.workers,
        ).to_dict()
    sys.stdout.write(_dump(data))
    return 0


def _cmd_verify(args, settings: Settings) -> int:
    if args.list or not args.theorem:
        for key in registered_keys():
            sys.stdout.write(f"{key}: {get_theorem(key).description}\n")
        return 0
    context = OracleContext(settings.open_store(), settings.workers, settings.paranoid)
    report = run_verification(args.theorem, collect_params(args.param), context)
    rendered = report_render(report, args.format)
    if args.output:
        Path(args.output).write_text(rendered, encoding="utf-8")
        logger.info("Report written to %s", args.output)
    else:
        sys.stdout.write(rendered)
    return report.exit_code


def _cmd_report(args, _settings: Settings) -> int:
    data = json.loads(Path(args.path).read_text(encoding="utf-8"))
    sys.stdout.write(report_render(data, args.format))
    return 0


def _cmd_cache(args, settings: Settings) -> int:
    store = settings.open_store()
    if args.action == "clear":
        removed = store.clear()
        sys.stdout.write(_dump({"cache_dir": str(settings.cache_dir), "removed": removed}))
    else:
        keys = sorted(set(store.keys()))
        sys.stdout.write(_dump({"cache_dir": str(settings.cache_dir), "keys": keys}))
    return 0


def _add_construct(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="build a graph and print it as graph6")
    parser.add_argument("kind", choices=CONSTRUCTIONS)
    parser.add_argument("graph", nargs="?", help="catalogue spec or graph6 (kind 'graph')")
    parser.add_argument("--blowup", type=int, metavar="P", help="replace every edge by K_(P+1)")
    parser.add_argument("--n", type=int)
    parser.add_argument("--p", type=int)
    parser.add_argument("--s", type=int, default=1)
    parser.add_argument("--t", type=int)
    parser.add_argument("--nu", type=int, default=0)
    parser.add_argument("--delta", type=int, default=0)
    parser.add_argument("--apex-graph", help="graph on the s-1 apex vertices (h-family)")
    parser.add_argument("--variant", choices=("F1", "F2"), default="F1")
    parser.set_defaults(handler=_cmd_construct)


def _add_oracle(subparsers) -> None:
    parser = subparsers.add_parser("oracle", help="exact ex, g and p(s,t) experiments")
    targets = parser.add_subparsers(dest="target", required=True)
    ex = targets.add_parser("ex", help="exact ex(n, F)")
    ex.add_argument("n", type=int)
    ex.add_argument("family", nargs="+", help="forbidden graphs")
    ex.add_argument("--blowup", type=int, metavar="P", help="blow up every forbidden graph")
    nim = targets.add_parser("nim", help="exact g(n, H)")
    nim.add_argument("n", type=int)
    nim.add_argument("pattern")
    stabilize = targets.add_parser("stabilize", help="ex(n, M(K_st^(p+1))) - h'(n,1,s)")
    stabilize.add_argument("s", type=int)
    stabilize.add_argument("t", type=int)
    stabilize.add_argument("--p", type=int, default=3)
    stabilize.add_argument("--n-min", type=int, default=6)
    stabilize.add_argument("--n-max", type=int, default=9)
    parser.set_defaults(handler=_cmd_oracle)


def build_parser() -> argparse.ArgumentParser:
    """The ``blowup`` argument parser."""
    parser = argparse.ArgumentParser(
        prog="blowup", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("--cache-dir", type=Path, help="oracle cache directory")
    parser.add_argument("--no-cache", action="store_true", help="keep oracle results in memory")
    parser.add_argument("--workers", type=int, help="worker processes")
    parser.add_argument("--paranoid", action="store_true", help="replay cached results")
    parser.add_argument(
        "--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR")
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    _add_construct(subparsers)

    params = subparsers.add_parser("params", help="invariants of a graph as JSON")
    params.add_argument("graph", nargs="?", help="graph spec; graph6 lines on stdin otherwise")
    params.set_defaults(handler=_cmd_params)

    decompose = subparsers.add_parser("decompose", help="decomposition family and parameters")
    decompose.add_argument("graph", help="base graph G, or F itself with --direct")
    decompose.add_argument("--p", type=int, required=True)
    decompose.add_argument("--direct", action="store_true", help="search from the definition")
    decompose.add_argument("--n", type=int, help="also evaluate the ex bounds at this order")
    decompose.set_defaults(handler=_cmd_decompose)

    formula = subparsers.add_parser("formula", help="closed-form ex or g of a blow-up")
    formula.add_argument(
        "kind", choices=("matching", "star", "path", "cycle", "clique", "complete_bipartite")
    )
    formula.add_argument("--n", type=int, required=True)
    formula.add_argument("--p", type=int, required=True)
    formula.add_argument("--t", type=int, required=True)
    formula.add_argument("--s", type=int)
    formula.add_argument("--nim", action="store_true", help="evaluate g instead of ex")
    formula.set_defaults(handler=_cmd_formula)

    _add_oracle(subparsers)

    verify = subparsers.add_parser("verify", help="run a registered theorem")
    verify.add_argument("theorem", nargs="?")
    verify.add_argument("--list", action="store_true", help="list registered theorems")
    verify.add_argument(
        "--param", type=parse_param, action="append", default=[], metavar="NAME=VALUE"
    )
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.add_argument("--output", help="write the report here instead of stdout")
    verify.set_defaults(handler=_cmd_verify)

    report = subparsers.add_parser("report", help="render a saved JSON report")
    report.add_argument("path")
    report.add_argument("--format", choices=("json", "text"), default="text")
    report.set_defaults(handler=_cmd_report)

    cache = subparsers.add_parser("cache", help="inspect or clear the oracle cache")
    cache.add_argument("action", choices=("list", "clear"))
    cache.set_defaults(handler=_cmd_cache)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``blowup`` console script."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        settings = Settings.from_env(
            cache_dir=args.cache_dir, workers=args.workers, paranoid=args.paranoid or None
        )
        if args.no_cache:
            settings = Settings(None, settings.workers, settings.paranoid)
        return args.handler(args, settings)
    except FamilyInvariantError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except (BlowupError, ValueError, KeyError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
