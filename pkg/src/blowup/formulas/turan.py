"""Edge counts of Turán-type extremal constructions."""

from math import comb


def _check_non_negative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}.")


def t_p_edges(n: int, p: int) -> int:
    """Edges of the Turán graph ``T_p(n)``.

    :param n: number of vertices
    :param p: number of classes, at least 1
    :returns: ``t_p(n)``

    """
    _check_non_negative(n=n)
    if p < 1:
        raise ValueError(f"Turán graph needs at least one class, got p={p}.")
    q, r = divmod(n, p)
    sizes = [q + 1] * r + [q] * (p - r)
    return (n * n - sum(size * size for size in sizes)) // 2


def _check_apex(n: int, s: int) -> None:
    if s < 1:
        raise ValueError(f"Apex parameter s must be at least 1, got {s}.")
    if n < s - 1:
        raise ValueError(f"Need n >= s - 1, got n={n}, s={s}.")


def h_prime_edges(n: int, p: int, s: int) -> int:
    """Edges of ``H'(n,p,s)``: an independent ``s-1`` apex set joined to ``T_p(n-s+1)``."""
    _check_apex(n, s)
    return (s - 1) * (n - s + 1) + t_p_edges(n - s + 1, p)


def h_edges(n: int, p: int, s: int) -> int:
    """Edges of ``H(n,p,s) = K_{s-1} + T_p(n-s+1)``."""
    return comb(s - 1, 2) + h_prime_edges(n, p, s)


def f_chvatal_hanson(nu: int, delta: int) -> int:
    """Maximum edges of a graph with matching number ≤ *nu* and max degree ≤ *delta*.

    ``f(ν, Δ) = νΔ + ⌊Δ/2⌋·⌊ν/⌈Δ/2⌉⌋``; ``f(0, ·) = f(·, 0) = 0``.
    """
    _check_non_negative(nu=nu, delta=delta)
    if nu == 0 or delta == 0:
        return 0
    return nu * delta + (delta // 2) * (nu // -(-delta // 2))


def f_diag(k: int) -> int:
    """Diagonal value ``f(k-1, k-1)`` in closed form."""
    if k < 2:
        raise ValueError(f"Diagonal formula needs k >= 2, got {k}.")
    return k * k - k if k % 2 else k * k - 3 * k // 2


def g_diag(k: int) -> int:
    """Extremal number ``g(k-1, k-1)`` of the star, matching and split ``K_{2,k-1}`` family."""
    if k < 2:
        raise ValueError(f"Diagonal formula needs k >= 2, got {k}.")
    return (2 * k * k - 3 * k - 1) // 2 if k % 2 else k * k - 2 * k + 1
