"""Multiple-cover kernels (2 sin(kt/2))^(2g-2) and the genus-basis solve."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from .errors import ValidityExhausted
from .tpoly import TPoly, invert_unit, mul


def _two_minus_two_cos(k: int, order: int) -> TPoly:
    """(2 sin(kt/2))^2 = 2 - 2 cos(kt), exact through t^order."""
    cs = {}
    for n in range(1, order // 2 + 1):
        cs[2 * n] = Fraction(2 * (-1) ** (n + 1) * k ** (2 * n), factorial(2 * n))
    return TPoly(cs, 2, max(order, 2))


class KernelCache:
    """Thread-safe memo of kernels keyed by (k, g, order)."""

    def __init__(self):
        self._memo: dict[tuple[int, int, int], TPoly] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._memo)

    def clear(self):
        with self._lock:
            self._memo.clear()

    def get(self, k: int, g: int, order: int) -> TPoly:
        key = (k, g, order)
        with self._lock:
            hit = self._memo.get(key)
        if hit is not None:
            return hit
        value = _compute_kernel(k, g, order, self)
        with self._lock:
            self._memo.setdefault(key, value)
        return value


DEFAULT_CACHE = KernelCache()


def _compute_kernel(k: int, g: int, order: int, cache: KernelCache) -> TPoly:
    if g == 1:
        return TPoly({0: 1}, 0, order)
    if g == 0:
        # one inversion of the square loses 4 orders
        return invert_unit(_two_minus_two_cos(k, order + 4))
    if g == 2:
        return _two_minus_two_cos(k, order)
    half = g // 2 + 1
    a = cache.get(k, half, order)
    b = cache.get(k, g + 1 - half, order)
    return mul(a, b).truncate(order)


def sin_kernel(k: int, g: int, order: int, cache: KernelCache | None = None) -> TPoly:
    """Laurent expansion of (2 sin(kt/2))^(2g-2), trusted through t^order."""
    if k < 1:
        raise ValueError("cover degree k must be positive")
    if g < 0:
        raise ValueError("genus must be non-negative")
    if order % 2:
        raise ValueError("order must be even")
    if order < 2 * g - 2:
        raise ValidityExhausted(
            f"kernel s({k},{g}) starts at t^{2 * g - 2}, above requested order {order}",
            required=2 * g - 2, available=order,
        )
    return (DEFAULT_CACHE if cache is None else cache).get(k, g, order)


def decompose_in_genus_basis(p: TPoly, cache: KernelCache | None = None
                             ) -> tuple[dict[int, Fraction], TPoly]:
    """Write p = sum_g c_g (2 sin(t/2))^(2g-2) through p.valid_to.

    The basis element of genus g starts with t^(2g-2) and coefficient one,
    so peeling from the bottom is a unitriangular solve.
    """
    if p.valid_to < -2:
        raise ValidityExhausted("series carries no trusted coefficients", required=-2,
                                available=p.valid_to)
    low = p.lowest_exp()
    if low is not None and low < -2:
        raise ValueError(f"term t^{low} is below t^-2 and has no genus")
    top = p.valid_to
    residual = p
    coeffs: dict[int, Fraction] = {}
    g = 0
    while 2 * g - 2 <= top:
        c = residual[2 * g - 2]
        if c:
            coeffs[g] = c
            residual = residual - sin_kernel(1, g, top, cache).scale(c)
        g += 1
    return coeffs, residual


def compose_genus_basis(coeffs: dict[int, Fraction], order: int,
                        cache: KernelCache | None = None) -> TPoly:
    """Inverse of :func:`decompose_in_genus_basis`."""
    out = TPoly.zero(order, -2)
    for g, c in coeffs.items():
        if c:
            out = out + sin_kernel(1, g, order, cache).scale(c)
    return out
