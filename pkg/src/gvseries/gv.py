"""Conversion between Gromov-Witten series and BPS tables.

The two sides are related by

    sum_{A,g} GW_{A,g} t^(2g-2) q^A
        = sum_{A,g} BPS_{A,g} sum_{k>=1} (1/k) (2 sin(kt/2))^(2g-2) q^(kA).

Going from BPS to GW is a finite sum once the mass cap is imposed.  Going
back is a triangular solve: classes are processed in increasing mass, and
the only contributions to q^A not yet known are those with k = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import StrictIntegrality, ValidityExhausted
from .kernels import KernelCache, decompose_in_genus_basis, sin_kernel
from .lattice import LatticeClass, LatticeConfig, divisors
from .qseries import QSeries
from .tpoly import TPoly

Key = tuple[LatticeClass, int]


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


@dataclass
class BPSTable:
    """Invariants indexed by (class, genus).

    Only nonzero entries are stored.  ``genus_window`` is the largest genus
    the computation could observe; absence of an entry above it means
    "unknown", not zero.
    """

    config: LatticeConfig
    entries: dict[Key, Fraction] = field(default_factory=dict)
    integrality_ok: bool = True
    observed_genus_cutoffs: dict[LatticeClass, int] = field(default_factory=dict)
    genus_window: int | None = None

    def __post_init__(self):
        clean = {}
        for (A, g), c in self.entries.items():
            c = Fraction(c)
            if g < 0:
                raise ValueError(f"negative genus {g}")
            if not self.config.contains(A):
                raise ValueError(f"class {A} has mass above the cap {self.config.mass_cap}")
            if c:
                clean[(A, g)] = c
        self.entries = dict(sorted(clean.items(), key=lambda kv: (self.config.sort_key(kv[0][0]),
                                                                   kv[0][1])))
        if self.genus_window is None:
            self.genus_window = self.config.genus_window

    def get(self, A: LatticeClass, g: int) -> Fraction:
        return self.entries.get((A, g), Fraction(0))

    def genera(self, A: LatticeClass) -> dict[int, Fraction]:
        return {g: c for (B, g), c in self.entries.items() if B == A}

    def classes(self) -> list[LatticeClass]:
        return list(dict.fromkeys(A for A, _ in self.entries))

    def all_integral(self) -> bool:
        return all(_is_int(c) for c in self.entries.values())

    def same_entries(self, other: "BPSTable") -> bool:
        return self.entries == other.entries

    def __add__(self, other: "BPSTable") -> "BPSTable":
        if self.config != other.config:
            raise ValueError("tables over different configurations")
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = out.get(k, Fraction(0)) + c
        return type(self)(self.config, out)

    def scale(self, r) -> "BPSTable":
        r = Fraction(r)
        return type(self)(self.config, {k: c * r for k, c in self.entries.items()})


def _cutoffs(config: LatticeConfig, entries: Mapping[Key, Fraction]) -> dict[LatticeClass, int]:
    cut = {A: 0 for A in config.classes()}
    for (A, g), c in entries.items():
        if c and g + 1 > cut[A]:
            cut[A] = g + 1
    return cut


def multicover_sum(genera: Mapping[int, Fraction], k: int, order: int,
                   cache: KernelCache | None = None) -> TPoly:
    """(1/k) sum_h BPS_{B,h} (2 sin(kt/2))^(2h-2), trusted through t^order."""
    out = TPoly.zero(order, -2)
    for h, c in genera.items():
        if 2 * h - 2 > order:
            continue
        out = out + sin_kernel(k, h, order, cache).scale(c / k)
    return out


def gw_from_bps(b: BPSTable, cache: KernelCache | None = None) -> QSeries:
    """GW series generated by a BPS table, truncated at the cap and t-window."""
    cfg = b.config
    T = cfg.t_order
    acc: dict[LatticeClass, TPoly] = {}
    for (A, g), c in b.entries.items():
        if 2 * g - 2 > T:
            raise ValidityExhausted(
                f"genus {g} entry for {A} lies outside the t-window t^{T}",
                required=2 * g - 2, available=T,
            )
        mA = cfg.mass(A)
        k = 1
        while k * mA <= cfg.mass_cap:
            term = sin_kernel(k, g, T, cache).scale(c / k)
            C = k * A
            acc[C] = acc[C] + term if C in acc else term
            k += 1
    return QSeries(cfg, acc)


def bps_from_gw(s: QSeries, strict: bool = False, cache: KernelCache | None = None) -> BPSTable:
    """Recover the BPS table of a GW series by mass-ordered multi-cover peeling."""
    cfg = s.config
    T = cfg.t_order
    if s.const:
        raise ValueError("a GW series has no q^0 term")
    for A, p in s.items():
        if p.valid_to < T:
            raise ValidityExhausted(
                f"coefficient of q^{A} trusted only to t^{p.valid_to}, window is t^{T}",
                required=T, available=p.valid_to,
            )
        low = p.lowest_exp()
        if low is not None and low < -2:
            raise ValueError(f"coefficient of q^{A} has a t^{low} term below t^-2")

    recovered: dict[LatticeClass, dict[int, Fraction]] = {}
    entries: dict[Key, Fraction] = {}
    for A in cfg.classes():
        residual = s[A].truncate(T)
        for k, B in divisors(A)[1:]:
            genera = recovered.get(B)
            if genera:
                residual = residual - multicover_sum(genera, k, T, cache)
        coeffs, _ = decompose_in_genus_basis(residual, cache)
        if coeffs:
            recovered[A] = coeffs
            for g, c in coeffs.items():
                if strict and not _is_int(c):
                    raise StrictIntegrality(
                        f"BPS invariant of {A} in genus {g} is {c}, not an integer", (A, g), c
                    )
                entries[(A, g)] = c
    return BPSTable(
        cfg,
        entries,
        integrality_ok=all(_is_int(c) for c in entries.values()),
        observed_genus_cutoffs=_cutoffs(cfg, entries),
        genus_window=cfg.genus_window,
    )
