"""Unit tests for Turán-type edge counts and the blow-up formulas."""

from math import comb

import pytest

from blowup.common import ParameterError
from blowup.constructions import h_construction, turan_graph
from blowup.formulas import (
    BlowupKind,
    conjectured_decomposition_ex,
    ex_blowup_formula,
    f_chvatal_hanson,
    f_diag,
    g_diag,
    h_edges,
    h_prime_edges,
    kst_lower_bound,
    nim_formula,
    nim_offset,
    t_p_edges,
)


@pytest.mark.parametrize(
    "n, p, expected",
    [(0, 2, 0), (9, 2, 20), (20, 2, 100), (10, 3, 33), (5, 10, 10), (7, 1, 0)],
)
def test_t_p_edges(n, p, expected):
    """Turán numbers of small balanced multipartite graphs."""
    assert t_p_edges(n, p) == expected


def test_t_p_edges_matches_construction():
    """Closed form agrees with the constructed Turán graph."""
    for n in range(0, 25):
        for p in range(1, 6):
            assert t_p_edges(n, p) == turan_graph(n, p).num_edges


def test_h_examples():
    """Reference values of h and h'."""
    assert h_edges(10, 2, 2) == 29
    assert h_prime_edges(10, 3, 3) == 37
    assert h_edges(9, 2, 2) == 24
    assert h_edges(7, 2, 1) == t_p_edges(7, 2)


def test_h_matches_constructions():
    """e(H(n,p,s)) = h(n,p,s) and e(H'(n,p,s)) = h'(n,p,s) over the whole grid."""
    for n in range(0, 41):
        for p in range(1, 5):
            for s in range(1, 6):
                if n < s - 1:
                    continue
                assert h_construction(n, p, s, "clique").num_edges == h_edges(n, p, s)
                assert h_construction(n, p, s, "independent").num_edges == h_prime_edges(n, p, s)


def test_h_rejects_bad_apex():
    """The apex cannot exceed the host."""
    with pytest.raises(ValueError):
        h_edges(2, 2, 5)
    with pytest.raises(ValueError):
        h_prime_edges(5, 2, 0)


@pytest.mark.parametrize(
    "nu, delta, expected",
    [
        (0, 5, 0),
        (4, 0, 0),
        (1, 1, 1),
        (2, 2, 6),
        (3, 3, 10),
        (5, 5, 27),
        (2, 5, 10),
        (4, 3, 14),
    ],
)
def test_f_chvatal_hanson(nu, delta, expected):
    """Values of the Chvátal–Hanson product formula."""
    assert f_chvatal_hanson(nu, delta) == expected


def test_f_diag_agrees_with_product_formula():
    """The piecewise diagonal equals f(k-1,k-1) for 2 <= k <= 200."""
    for k in range(2, 201):
        assert f_diag(k) == f_chvatal_hanson(k - 1, k - 1)
    with pytest.raises(ValueError):
        f_diag(1)


@pytest.mark.parametrize("k, expected", [(2, 1), (3, 4), (4, 9), (5, 17)])
def test_g_diag(k, expected):
    """Values of g(k-1,k-1)."""
    assert g_diag(k) == expected


@pytest.mark.parametrize(
    "kind, n, p, t, expected",
    [
        (BlowupKind.MATCHING, 13, 3, 2, 60),
        (BlowupKind.MATCHING, 9, 2, 2, 24),
        (BlowupKind.STAR, 10, 2, 2, 26),
        (BlowupKind.STAR, 20, 2, 3, 106),
        (BlowupKind.PATH, 10, 3, 3, 34),
        (BlowupKind.PATH, 10, 3, 4, h_edges(10, 3, 2)),
        (BlowupKind.CYCLE, 20, 4, 4, h_edges(20, 4, 2) + 1),
        (BlowupKind.CYCLE, 20, 4, 5, h_edges(20, 4, 3)),
        (BlowupKind.CLIQUE, 30, 5, 4, 3 * 27 + t_p_edges(27, 5)),
    ],
)
def test_ex_blowup_formula(kind, n, p, t, expected):
    """Closed forms of the catalogue corollaries."""
    result = ex_blowup_formula(kind, n, p, t)
    assert result.value == expected
    assert not result.is_symbolic


@pytest.mark.parametrize(
    "kind, p, t",
    [
        ("matching", 1, 2),
        ("star", 1, 2),
        ("path", 2, 3),
        ("cycle", 2, 4),
        ("cycle", 3, 5),
        ("clique", 4, 4),
    ],
)
def test_ex_blowup_formula_hypotheses(kind, p, t):
    """Parameters outside a corollary's hypothesis are rejected."""
    with pytest.raises(ParameterError):
        ex_blowup_formula(kind, 30, p, t)


def test_complete_bipartite_formula_is_symbolic():
    """K_{s,t} blow-ups carry the unresolved constant p(s,t)."""
    result = ex_blowup_formula("complete_bipartite", 20, 3, 3, s=2)
    assert result.is_symbolic
    assert result.unresolved == "p(2,3)"
    assert result.value == h_prime_edges(20, 3, 2)
    assert result.resolve(5).value == result.value + 5
    with pytest.raises(ParameterError):
        ex_blowup_formula("complete_bipartite", 20, 3, 2, s=3)


def test_kst_lower_bound_and_conjecture():
    """Explicit K_{s,t} lower bound and the conjectured decomposition value."""
    assert kst_lower_bound(20, 3, 2, 2) == h_edges(20, 3, 2) + 1 - 1 + 1
    assert kst_lower_bound(20, 3, 3, 4) == h_edges(20, 3, 3) + 10 - 1
    for n in range(6, 10):
        assert conjectured_decomposition_ex(n, 2, 2) - h_prime_edges(n, 1, 2) == 1


def test_nim_offset():
    """Sentinel B gives no offset; otherwise C(q-1,2) - ex(q-1,B)."""
    assert nim_offset(3, True) == 0
    assert nim_offset(4, False, 0) == 3
    with pytest.raises(ValueError):
        nim_offset(4, False)


def test_nim_formula():
    """g for cliques and odd cycles; bipartite bases are rejected."""
    clique = nim_formula(BlowupKind.CLIQUE, 30, 5, 4)
    assert clique.value - ex_blowup_formula(BlowupKind.CLIQUE, 30, 5, 4).value == comb(3, 2)
    cycle = nim_formula(BlowupKind.CYCLE, 30, 5, 5)
    assert cycle.value == ex_blowup_formula(BlowupKind.CYCLE, 30, 5, 5).value
    assert nim_formula("clique", 30, 5, 3, q=2, sentinel=False, ex_small=0).value == (
        ex_blowup_formula("clique", 30, 5, 3).value
    )
    with pytest.raises(ParameterError):
        nim_formula("cycle", 30, 5, 4)
    with pytest.raises(ParameterError):
        nim_formula("path", 30, 5, 4)
