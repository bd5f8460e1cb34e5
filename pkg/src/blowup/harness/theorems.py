"""Registered claims: formulas checked against the oracle, constructions and derived parameters."""

from functools import lru_cache
from typing import Iterator, List

from ..common import Graph, ParameterError, disjoint_union, to_graph6
from ..constructions import (
    HFamilySpec,
    complete_graph,
    cycle_graph,
    edge_blowup,
    graph_from_spec,
    h_family_member,
    h_odd_gadget,
    k_family,
    kst_lemma_witness,
    lemma_family,
    matching_graph,
    path_graph,
    star_graph,
)
from ..decomposition import (
    blowup_ex_bounds,
    decomposition_ex_bounds,
    decomposition_family_blowup,
    decomposition_family_direct,
    derive_params,
    small_extremal_number,
)
from ..formulas import (
    BlowupKind,
    conjectured_decomposition_ex,
    ex_blowup_formula,
    f_chvatal_hanson,
    f_diag,
    g_diag,
    h_edges,
    nim_formula,
    t_p_edges,
)
from ..invariants import chromatic_number, matching_number
from ..oracle import stabilize_p_st, verify_free
from .registry import Cell, OracleContext, theorem
from .report import Mode, Row


def _n_range(params: dict) -> range:
    return range(params["n_min"], params["n_max"] + 1)


def _h_hint(n: int, p: int, s: int, nu: int = 0, delta: int = 0) -> Graph:
    """``H(n,p,s)`` with an ``E_{ν,Δ}`` witness in the largest class."""
    return h_family_member(
        HFamilySpec(n, p, s, nu=nu, delta=delta, apex_graph=complete_graph(max(s - 1, 0)))
    )


def _padded(graph: Graph, n: int) -> Graph:
    return disjoint_union(graph, Graph.empty(max(n - graph.order, 0)))


def _oracle_row(
    cell: dict, formula: int, forbidden: List[Graph], context: OracleContext, hints=()
) -> Row:
    result = context.ex(cell["n"], forbidden, hints=hints)
    return Row(
        params=cell,
        formula=formula,
        observed=result.value,
        match=result.value == formula,
        witnesses=[to_graph6(graph) for graph in result.witnesses],
        explored=result.explored,
    )


@theorem(
    "chvatal-diag",
    Mode.EQUALITY,
    "piecewise diagonal f(k-1,k-1) agrees with the Chvátal–Hanson product formula",
    k_max=200,
)
def _chvatal_diag(params: dict, _context: OracleContext) -> Iterator[Cell]:
    for k in range(2, params["k_max"] + 1):
        cell = {"k": k}

        def evaluate(k=k, cell=cell) -> Row:
            expected, actual = f_diag(k), f_chvatal_hanson(k - 1, k - 1)
            return Row(cell, expected, actual, expected == actual, basis="arithmetic")

        yield cell, evaluate


@theorem(
    "cor-matching",
    Mode.THRESHOLD_OBSERVED,
    "ex(n, M_2t^(p+1)) = h(n,p,t) for large n",
    t=2,
    p=2,
    n_min=6,
    n_max=9,
)
def _cor_matching(params: dict, context: OracleContext) -> Iterator[Cell]:
    t, p = params["t"], params["p"]
    for n in _n_range(params):
        cell = {"t": t, "p": p, "n": n}

        def evaluate(n=n, cell=cell) -> Row:
            formula = ex_blowup_formula(BlowupKind.MATCHING, n, p, t).value
            forbidden = edge_blowup(matching_graph(2 * t), p)
            return _oracle_row(cell, formula, [forbidden], context, [_h_hint(n, p, t)])

        yield cell, evaluate


@theorem(
    "cor-star",
    Mode.THRESHOLD_OBSERVED,
    "ex(n, S_(t+1)^(p+1)) = h(n,p,1) + f(t-1,t-1) for large n",
    t=2,
    p=2,
    n_min=8,
    n_max=10,
)
def _cor_star(params: dict, context: OracleContext) -> Iterator[Cell]:
    t, p = params["t"], params["p"]
    for n in _n_range(params):
        cell = {"t": t, "p": p, "n": n}

        def evaluate(n=n, cell=cell) -> Row:
            formula = ex_blowup_formula(BlowupKind.STAR, n, p, t).value
            forbidden = edge_blowup(star_graph(t + 1), p)
            hint = _h_hint(n, p, 1, nu=t - 1, delta=t - 1)
            return _oracle_row(cell, formula, [forbidden], context, [hint])

        yield cell, evaluate


@theorem(
    "cor-path",
    Mode.THRESHOLD_OBSERVED,
    "ex(n, P_t^(p+1)) = h(n,p,⌊t/2⌋) + i, i = 1 for odd t, for large n",
    t=3,
    p=3,
    n_min=7,
    n_max=9,
)
def _cor_path(params: dict, context: OracleContext) -> Iterator[Cell]:
    t, p = params["t"], params["p"]
    for n in _n_range(params):
        cell = {"t": t, "p": p, "n": n}

        def evaluate(n=n, cell=cell) -> Row:
            formula = ex_blowup_formula(BlowupKind.PATH, n, p, t).value
            forbidden = edge_blowup(path_graph(t), p)
            hint = _h_hint(n, p, t // 2, nu=t % 2, delta=t % 2)
            return _oracle_row(cell, formula, [forbidden], context, [hint])

        yield cell, evaluate


def _bounds_row(cell: dict, formula: int, bounds, n: int, note: str) -> Row:
    lower, upper = bounds.at(n)
    return Row(
        params=cell,
        formula=formula,
        observed=upper,
        match=lower <= formula == upper,
        basis="decomposition-bounds",
        bounds=(lower, upper),
        note=note,
    )


@theorem(
    "cor-cycle",
    Mode.EQUALITY,
    "ex(n, C_t^(p+1)) from q, k and B of the split family of C_t",
    t=[4, 5],
    p=4,
    n=[10, 20, 30],
)
def _cor_cycle(params: dict, context: OracleContext) -> Iterator[Cell]:
    p = params["p"]

    @lru_cache(maxsize=None)
    def bounds_for(t: int):
        family = decomposition_family_blowup(cycle_graph(t), p)
        return blowup_ex_bounds(family, p, **context.options())

    for t in params["t"]:
        for n in params["n"]:
            cell = {"t": t, "p": p, "n": n}

            def evaluate(t=t, n=n, cell=cell) -> Row:
                formula = ex_blowup_formula(BlowupKind.CYCLE, n, p, t).value
                bounds = bounds_for(t)
                note = f"q={bounds.q} k={bounds.k} ex(q-1,B)={bounds.ex_small}"
                return _bounds_row(cell, formula, bounds, n, note)

            yield cell, evaluate


@theorem(
    "thm-clique",
    Mode.EQUALITY,
    "ex(n, K_t^(p+1)) = C(t-1,2)(n - C(t-1,2)) + t_p(n - C(t-1,2)) from derived q and B",
    t=[3, 4],
    p=5,
    n=[10, 20, 30],
)
def _thm_clique(params: dict, context: OracleContext) -> Iterator[Cell]:
    p = params["p"]

    @lru_cache(maxsize=None)
    def bounds_for(t: int):
        family = decomposition_family_blowup(complete_graph(t), p)
        return blowup_ex_bounds(family, p, **context.options())

    for t in params["t"]:
        for n in params["n"]:
            cell = {"t": t, "p": p, "n": n}

            def evaluate(t=t, n=n, cell=cell) -> Row:
                formula = ex_blowup_formula(BlowupKind.CLIQUE, n, p, t).value
                bounds = bounds_for(t)
                note = f"q={bounds.q} ex(q-1,B)={bounds.ex_small}"
                return _bounds_row(cell, formula, bounds, n, note)

            yield cell, evaluate


@theorem(
    "thm-kst-experiment",
    Mode.EXPERIMENT,
    "ex(n, K_st^(p+1)) = h'(n,p,s) + p(s,t); p(s,t) estimated from the decomposition family",
    s=2,
    t=2,
    p=3,
    n_min=6,
    n_max=9,
)
def _thm_kst(params: dict, context: OracleContext) -> Iterator[Cell]:
    s, t, p = params["s"], params["t"], params["p"]
    for n in _n_range(params):
        cell = {"s": s, "t": t, "p": p, "n": n}

        def evaluate(n=n, cell=cell) -> Row:
            known = ex_blowup_formula(BlowupKind.COMPLETE_BIPARTITE, n, p, t, s=s)
            row = stabilize_p_st(s, t, p, [n], **context.options()).rows[0]
            resolved = known.resolve(row.difference)
            return Row(
                params=cell,
                formula=known.value,
                observed=row.difference,
                basis="oracle",
                note=f"{known.unresolved} estimate {row.difference}; "
                f"ex(n, K_st^(p+1)) ~ {resolved.value}",
            )

        yield cell, evaluate


@theorem(
    "lem-decomp-bounds",
    Mode.THRESHOLD_OBSERVED,
    "h'(n,1,q) + ex(q-1,B) <= ex(n, M) <= h(n,1,q) + f(k-1,k-1)",
    bases=["matching:4", "star:4", "path:4", "cycle:4"],
    p=3,
    n_min=6,
    n_max=9,
)
def _lem_decomp_bounds(params: dict, context: OracleContext) -> Iterator[Cell]:
    p = params["p"]

    @lru_cache(maxsize=None)
    def setup(spec: str):
        family = decomposition_family_blowup(graph_from_spec(spec), p)
        return family, decomposition_ex_bounds(family, **context.options())

    for spec in params["bases"]:
        for n in _n_range(params):
            cell = {"base": spec, "p": p, "n": n}

            def evaluate(spec=spec, n=n, cell=cell) -> Row:
                family, bounds = setup(spec)
                lower, upper = bounds.at(n)
                result = context.ex(n, family.members)
                return Row(
                    params=cell,
                    formula=lower,
                    observed=result.value,
                    match=lower <= result.value <= upper,
                    bounds=(lower, upper),
                    witnesses=[to_graph6(graph) for graph in result.witnesses],
                    explored=result.explored,
                    note=f"q={bounds.q} k={bounds.k}",
                )

            yield cell, evaluate


@theorem(
    "lem-6.1",
    Mode.THRESHOLD_OBSERVED,
    "ex(n, {S_(t+1), M_2t, K_(2,t-1)(0,i)}) = g(t-1,t-1)",
    t=3,
    n_min=8,
    n_max=10,
)
def _lem_61(params: dict, context: OracleContext) -> Iterator[Cell]:
    t = params["t"]
    for n in _n_range(params):
        cell = {"t": t, "n": n}

        def evaluate(n=n, cell=cell) -> Row:
            hint = _padded(kst_lemma_witness(t), n)
            return _oracle_row(cell, g_diag(t), list(lemma_family(t)), context, [hint])

        yield cell, evaluate


@theorem(
    "prop-6.2",
    Mode.EQUALITY,
    "H_(2t-1) has Δ = ν = t-1, f(t-1,t-1) edges and is K(t)-free",
    t=[4, 6, 8],
)
def _prop_62(params: dict, _context: OracleContext) -> Iterator[Cell]:
    for t in params["t"]:
        cell = {"t": t}

        def evaluate(t=t, cell=cell) -> Row:
            gadget = h_odd_gadget(t)
            check = verify_free(gadget, k_family(t))
            shape = (
                gadget.order == 2 * t - 1
                and gadget.max_degree == t - 1
                and matching_number(gadget) == t - 1
            )
            formula = f_chvatal_hanson(t - 1, t - 1)
            witnesses = [to_graph6(gadget)]
            note = "free"
            if not check:
                witnesses.append(to_graph6(check.member))
                note = f"contains {to_graph6(check.member)} at {list(check.embedding.mapping)}"
            return Row(
                params=cell,
                formula=formula,
                observed=gadget.num_edges,
                match=bool(shape and check and gadget.num_edges == formula),
                basis="construction",
                witnesses=witnesses,
                note=note,
            )

        yield cell, evaluate


@theorem(
    "lem-3.1-consistency",
    Mode.EQUALITY,
    "definition search of M(G^(p+1)) equals the split family of G when χ(G) <= p-1",
    bases=["matching:4", "path:3", "path:4", "star:4", "complete:3", "cycle:4"],
    p_offset=1,
)
def _lem_31(params: dict, context: OracleContext) -> Iterator[Cell]:
    for spec in params["bases"]:
        cell = {"base": spec, "p_offset": params["p_offset"]}

        def evaluate(spec=spec, cell=cell) -> Row:
            base = graph_from_spec(spec)
            p = chromatic_number(base) + params["p_offset"]
            shortcut = decomposition_family_blowup(base, p)
            direct = decomposition_family_direct(
                edge_blowup(base, p), p, base=base, workers=context.workers
            )
            return Row(
                params=dict(cell, p=p),
                formula=len(shortcut),
                observed=len(direct),
                match=shortcut.members == direct.members,
                basis="definition-search",
                witnesses=[to_graph6(graph) for graph in direct],
            )

        yield cell, evaluate


_NIM_KINDS = {"complete": BlowupKind.CLIQUE, "cycle": BlowupKind.CYCLE}


@theorem(
    "thm-nim",
    Mode.EQUALITY,
    "g(n, G^(p+1)) = ex(n, G^(p+1)) + C(q-1,2) - ex(q-1,B); g(n,K_3) >= t_2(n)",
    n=[5, 6],
    bases=["complete:3", "complete:4", "cycle:5"],
    p=5,
    host_n=30,
)
def _thm_nim(params: dict, context: OracleContext) -> Iterator[Cell]:
    triangle = complete_graph(3)
    for n in params["n"]:
        cell = {"H": "complete:3", "n": n}

        def evaluate(n=n, cell=cell) -> Row:
            nim = context.nim(n, triangle)
            ex = context.ex(n, [triangle])
            formula = t_p_edges(n, 2)
            return Row(
                params=cell,
                formula=formula,
                observed=nim.value,
                match=ex.value == formula and nim.value >= formula and nim.replay(),
                note=f"offset {nim.value - formula}",
                witnesses=[to_graph6(graph) for graph in ex.witnesses],
                explored=ex.explored,
            )

        yield cell, evaluate

    p, host_n = params["p"], params["host_n"]
    for spec in params["bases"]:
        cell = {"base": spec, "p": p, "n": host_n}

        def evaluate_derived(spec=spec, cell=cell) -> Row:
            name, _, size = spec.partition(":")
            if name not in _NIM_KINDS:
                raise ParameterError(f"NIM rows support complete and cycle bases, got {spec!r}.")
            kind, t = _NIM_KINDS[name], int(size)
            closed = nim_formula(kind, host_n, p, t)
            params_ = derive_params(decomposition_family_blowup(graph_from_spec(spec), p))
            ex_small = small_extremal_number(params_, **context.options())
            derived = nim_formula(
                kind, host_n, p, t, q=params_.q, sentinel=params_.sentinel, ex_small=ex_small
            )
            return Row(
                params=cell,
                formula=closed.value,
                observed=derived.value,
                match=closed.value == derived.value,
                basis="decomposition-params",
                note=f"q={params_.q} sentinel={params_.sentinel} ex(q-1,B)={ex_small}",
            )

        yield cell, evaluate_derived


@theorem(
    "conj-7.1",
    Mode.EXPERIMENT,
    "ex(n, M(K_st^(p+1))) = h(n,1,s) + f(t-1,t-1) - ⌈(s-1)/2⌉ + i for n >= s + 2t",
    s=2,
    t=2,
    p=3,
    n_min=6,
    n_max=9,
)
def _conj_71(params: dict, context: OracleContext) -> Iterator[Cell]:
    s, t, p = params["s"], params["t"], params["p"]
    for n in _n_range(params):
        cell = {"s": s, "t": t, "n": n}

        def evaluate(n=n, cell=cell) -> Row:
            row = stabilize_p_st(s, t, p, [n], **context.options()).rows[0]
            return Row(
                params=cell,
                formula=conjectured_decomposition_ex(n, s, t),
                observed=row.ex,
                note="inside the conjectured range" if n >= s + 2 * t else "below s + 2t",
            )

        yield cell, evaluate


@theorem(
    "cor-7.1",
    Mode.THRESHOLD_OBSERVED,
    "if M(F) = {M_2s} then ex(n, F) = h(n, χ(F)-1, s) for large n",
    graphs=["petersen", "cliques:2,3", "cliques:2,4"],
    ex_graphs=["cliques:2,3"],
    n_min=6,
    n_max=8,
)
def _cor_71(params: dict, context: OracleContext) -> Iterator[Cell]:
    @lru_cache(maxsize=None)
    def single_matching(spec: str):
        graph = graph_from_spec(spec)
        p = chromatic_number(graph) - 1
        members = list(decomposition_family_direct(graph, p, workers=context.workers))
        single = members[0] if len(members) == 1 else None
        is_matching = (
            single is not None
            and single.order % 2 == 0
            and single.max_degree == 1
            and single.num_edges * 2 == single.order
        )
        return graph, p, members, single.num_edges if is_matching else None

    for spec in params["graphs"]:
        cell = {"graph": spec}

        def evaluate(spec=spec, cell=cell) -> Row:
            _graph, p, members, s = single_matching(spec)
            observed = f"M_{2 * s}" if s is not None else " ".join(to_graph6(m) for m in members)
            return Row(
                params=dict(cell, p=p),
                formula="M_2s",
                observed=observed,
                match=s is not None,
                basis="definition-search",
                witnesses=[to_graph6(m) for m in members],
            )

        yield cell, evaluate

    for spec in params["ex_graphs"]:
        for n in _n_range(params):
            cell = {"graph": spec, "n": n}

            def evaluate_ex(spec=spec, n=n, cell=cell) -> Row:
                graph, p, _members, s = single_matching(spec)
                if s is None:
                    raise ParameterError(f"M({spec}) is not a single matching.")
                hint = _h_hint(n, p, s)
                row = _oracle_row(cell, h_edges(n, p, s), [graph], context, [hint])
                row.note = f"p={p} s={s}"
                return row

            yield cell, evaluate_ex


@theorem(
    "conj-nim-offset",
    Mode.EXPERIMENT,
    "records g(n,H) - ex(n,H) over a small grid",
    n=[4, 5, 6],
    patterns=["complete:3", "path:3", "cycle:4"],
)
def _conj_nim_offset(params: dict, context: OracleContext) -> Iterator[Cell]:
    for spec in params["patterns"]:
        for n in params["n"]:
            cell = {"H": spec, "n": n}

            def evaluate(spec=spec, n=n, cell=cell) -> Row:
                pattern = graph_from_spec(spec)
                nim = context.nim(n, pattern)
                ex = context.ex(n, [pattern])
                return Row(
                    params=cell,
                    formula=ex.value,
                    observed=nim.value,
                    note=f"offset {nim.value - ex.value}",
                    explored=ex.explored,
                )

            yield cell, evaluate
