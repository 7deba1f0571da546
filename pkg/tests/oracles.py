"""Independent reference computations on plain lists of Fractions.

Nothing here imports gvseries; series are dense lists indexed by the power
of t (for even series, index j stands for t^(2j + shift)).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def sin_half_taylor(k: int, n_terms: int) -> list[Fraction]:
    """Odd Taylor coefficients of 2 sin(kt/2): entry n is the t^(2n+1) coefficient."""
    return [Fraction((-1) ** n * 2 * k ** (2 * n + 1), 2 ** (2 * n + 1) * factorial(2 * n + 1))
            for n in range(n_terms)]


def convolve(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def series_inverse(a: list[Fraction], n: int) -> list[Fraction]:
    b = [1 / a[0]]
    for m in range(1, n):
        s = sum((a[i] * b[m - i] for i in range(1, min(m, len(a) - 1) + 1)), Fraction(0))
        b.append(-s / a[0])
    return b


def kernel(k: int, g: int, order: int) -> dict[int, Fraction]:
    """(2 sin(kt/2))^(2g-2) as {exponent: coeff} for exponents <= order.

    Built by squaring the odd Taylor series (schoolbook product) and, for
    g = 0, inverting t^-2 times that square.
    """
    n = order // 2 + 4
    s = sin_half_taylor(k, n)
    # (2 sin)^2 = t^2 * sq where sq[j] is the coefficient of t^(2 + 2j)
    sq = convolve(s, s, n)
    if g == 0:
        inv = series_inverse(sq, n)  # coefficient of t^(-2 + 2j)
        return {2 * j - 2: c for j, c in enumerate(inv) if 2 * j - 2 <= order and c}
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for _ in range(g - 1):
        power = convolve(power, sq, n)
    shift = 2 * g - 2
    return {2 * j + shift: c for j, c in enumerate(power) if 2 * j + shift <= order and c}


def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def count_standard_tableaux(shape: tuple[int, ...]) -> int:
    """Number of SYT by removing corners recursively (no hook formula)."""
    shape = tuple(x for x in shape if x)
    if sum(shape) <= 1:
        return 1
    total = 0
    for i, row in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if row > below:
            smaller = list(shape)
            smaller[i] -= 1
            total += count_standard_tableaux(tuple(smaller))
    return total


def divisor_sum_over_d(d: int) -> Fraction:
    """Coefficient of q^d in sum_{k,m} q^(km)/m."""
    return sum((Fraction(1, m) for m in range(1, d + 1) if d % m == 0), Fraction(0))
