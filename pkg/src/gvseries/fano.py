"""Single-class BPS transform for Fano classes.

For c_1(A) = c1 > 0 the relation reads

    sum_g GW_g t^(2g-2) = sum_g BPS_g (2 sin(t/2))^(2g-2+2*c1),

with no multiple-cover sum.  The kernel of BPS_g is the genus-(g+c1)
kernel of the Calabi-Yau case, so both directions reduce to the genus
basis with a shift.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import ValidityExhausted
from .kernels import compose_genus_basis, decompose_in_genus_basis
from .tpoly import TPoly


@dataclass
class FanoSeries:
    """GW coefficients of one Fano class for a fixed insertion.

    ``gw_coeffs[g]`` is the coefficient of t^(2g-2); ``window`` is the
    largest genus represented.
    """

    c1: int
    gw_coeffs: dict[int, Fraction] = field(default_factory=dict)
    window: int = 0

    def __post_init__(self):
        if self.c1 < 0:
            raise ValueError("c1 must be non-negative")
        if self.window < 0:
            raise ValueError("window must be non-negative")
        clean = {}
        for g, c in self.gw_coeffs.items():
            if g < 0 or g > self.window:
                raise ValueError(f"genus {g} outside 0..{self.window}")
            c = Fraction(c)
            if c:
                clean[g] = c
        self.gw_coeffs = dict(sorted(clean.items()))

    @property
    def t_order(self) -> int:
        return 2 * self.window - 2

    def as_tpoly(self) -> TPoly:
        return TPoly({2 * g - 2: c for g, c in self.gw_coeffs.items()}, -2, self.t_order)


@dataclass
class FanoBPS:
    """BPS coefficients of one Fano class, as produced by :func:`fano_bps_from_gw`."""

    c1: int
    bps_coeffs: dict[int, Fraction] = field(default_factory=dict)
    window: int = 0


def fano_bps_from_gw(f: FanoSeries) -> dict[int, Fraction]:
    """Peel GW coefficients against the shifted kernels; returns nonzero BPS_g."""
    low = min(f.gw_coeffs, default=None)
    if low is not None and low < f.c1:
        raise ValueError(
            f"t^{2 * low - 2} term cannot occur for c1 = {f.c1}: "
            f"every kernel starts at t^{2 * f.c1 - 2} or higher"
        )
    coeffs, _ = decompose_in_genus_basis(f.as_tpoly())
    return {g - f.c1: c for g, c in coeffs.items()}


def fano_gw_from_bps(c1: int, b: Mapping[int, object], t_order: int) -> dict[int, Fraction]:
    """GW coefficients g -> [t^(2g-2)] of sum_g b_g (2 sin(t/2))^(2g-2+2*c1)."""
    if c1 < 0:
        raise ValueError("c1 must be non-negative")
    if t_order % 2 or t_order < -2:
        raise ValueError("t_order must be even and >= -2")
    shifted = {}
    for g, c in b.items():
        if g < 0:
            raise ValueError(f"negative genus {g}")
        c = Fraction(c)
        if not c:
            continue
        if 2 * (g + c1) - 2 > t_order:
            raise ValidityExhausted(
                f"BPS_{g} kernel starts at t^{2 * (g + c1) - 2}, beyond t^{t_order}",
                required=2 * (g + c1) - 2, available=t_order,
            )
        shifted[g + c1] = c
    p = compose_genus_basis(shifted, t_order)
    return {(e + 2) // 2: c for e, c in p.items()}


def fano_bps_table(f: FanoSeries) -> FanoBPS:
    return FanoBPS(f.c1, fano_bps_from_gw(f), f.window - f.c1)
