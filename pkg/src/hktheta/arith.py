"""Small exact number-theory helpers shared across the package."""

from __future__ import annotations

import math


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorint requires a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError("divisors requires a positive integer")
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def ord2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("ord2 of zero is undefined")
    n = abs(n)
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def ilog(base: int, value: int) -> int:
    """Exact logarithm: the k with base**k == value, or a ValueError."""
    k = 0
    v = 1
    while v < value:
        v *= base
        k += 1
    if v != value:
        raise ValueError(f"{value} is not a power of {base}")
    return k


def prod(xs) -> int:
    return math.prod(xs)
