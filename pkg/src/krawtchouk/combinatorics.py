"""Exact integer combinatorial primitives: binomials, Catalan and Super Catalan numbers.

All values are arbitrary-precision Python integers; there is no floating
point anywhere in this module.
"""
from __future__ import annotations

import math


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) with the out-of-range convention.

    Returns 0 when k < 0 or k > n. Negative n is rejected.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(m: int) -> int:
    """The m-th Catalan number, C(2m, m) / (m + 1)."""
    if m < 0:
        raise ValueError(f"catalan requires m >= 0, got m={m}")
    num = math.comb(2 * m, m)
    q, rem = divmod(num, m + 1)
    assert rem == 0  # divisibility is exact for Catalan numbers
    return q


def super_catalan(n: int, k: int) -> int:
    """Super Catalan number (2n-2k)! (2k)! / ((n-k)! k! n!)."""
    if n < 0:
        raise ValueError(f"super_catalan requires n >= 0, got n={n}")
    if k < 0 or k > n:
        raise ValueError(f"super_catalan requires 0 <= k <= n, got k={k}, n={n}")
    num = math.factorial(2 * n - 2 * k) * math.factorial(2 * k)
    den = math.factorial(n - k) * math.factorial(k) * math.factorial(n)
    q, rem = divmod(num, den)
    assert rem == 0  # the quotient is a known integer sequence
    return q
