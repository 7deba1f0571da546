"""Expansion of GW-type series in the basis G_g(q^A, t).

Since G_g(q^A, t) = t^(2g-2) q^A + (terms of larger mass, or the same class
with larger t-exponent), the coefficients e_{A,g} are found by peeling in
(mass, genus) order; every pivot is one.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotSuperRigidShape, StrictIntegrality, ValidityExhausted
from .gv import BPSTable, _cutoffs, _is_int
from .kernels import decompose_in_genus_basis
from .lattice import LatticeClass, LatticeConfig
from .localcurves import g_series
from .qseries import QSeries, pushforward
from .tpoly import TPoly


class ETable(BPSTable):
    """Coefficients e_{A,g} of the G-basis expansion; same layout as BPSTable."""


def _degree_budget(config: LatticeConfig) -> int:
    return max(1, int(config.mass_cap // config.min_mass()))


def elementary(g: int, A: LatticeClass, config: LatticeConfig) -> QSeries:
    """G_g(q^A, t) truncated at the mass cap and t-window of ``config``."""
    T = config.t_order
    if 2 * g - 2 > T:
        raise ValidityExhausted(
            f"G_{g} starts at t^{2 * g - 2}, outside the window t^{T}",
            required=2 * g - 2, available=T,
        )
    # one shared degree budget so the cached G-series serve every class
    G = g_series(g, _degree_budget(config), T)
    return pushforward(G, A, config)


def series_from_e(e: ETable) -> QSeries:
    """sum_{A,g} e_{A,g} G_g(q^A, t)."""
    cfg = e.config
    acc: dict[LatticeClass, TPoly] = {}
    for (A, g), c in e.entries.items():
        for C, p in elementary(g, A, cfg).items():
            p = p.scale(c)
            acc[C] = acc[C] + p if C in acc else p
    return QSeries(cfg, acc)


def extract_e(s: QSeries, strict: bool = False) -> ETable:
    """The unique e-table with series_from_e(e) == s inside the window."""
    cfg = s.config
    T = cfg.t_order
    if s.const:
        raise ValueError("a GW-type series has no q^0 term")
    for A, p in s.items():
        if p.valid_to < T:
            raise ValidityExhausted(
                f"coefficient of q^{A} trusted only to t^{p.valid_to}, window is t^{T}",
                required=T, available=p.valid_to,
            )
    residual = dict(s.items())
    entries: dict[tuple[LatticeClass, int], Fraction] = {}
    for A in cfg.classes():
        p = residual.pop(A, None)
        if p is None:
            continue
        coeffs, _ = decompose_in_genus_basis(p)
        for g, c in coeffs.items():
            if strict and not _is_int(c):
                raise StrictIntegrality(f"e-coefficient of {A} in genus {g} is {c}", (A, g), c)
            entries[(A, g)] = c
            for C, q in elementary(g, A, cfg).items():
                if C == A:
                    continue
                q = q.scale(-c)
                residual[C] = residual[C] + q if C in residual else q
    return ETable(
        cfg,
        entries,
        integrality_ok=all(_is_int(c) for c in entries.values()),
        observed_genus_cutoffs=_cutoffs(cfg, entries),
        genus_window=cfg.genus_window,
    )


def superrigid_decompose(s: QSeries, g: int) -> tuple[int, ETable]:
    """Split a rank-1 series as sign * G_g(q) + sum_{d>=2, h>=g} e_{d,h} G_h(q^d).

    Returns the sign and the d >= 2 tail.
    """
    cfg = s.config
    if cfg.rank != 1:
        raise ValueError("superrigid_decompose expects a rank-1 series")
    base = LatticeClass((1,))
    first = s[base]
    if not first or first.leading()[0] != 2 * g - 2 or abs(first.leading()[1]) != 1:
        raise NotSuperRigidShape(
            f"degree-one layer must start with +-t^{2 * g - 2}, got {first!r}"
        )
    e = extract_e(s)
    layer = {h: c for (A, h), c in e.entries.items() if A == base}
    sign = int(first.leading()[1])
    if layer != {g: Fraction(sign)}:
        raise NotSuperRigidShape(f"degree-one layer is {layer}, expected {{{g}: {sign}}}")
    tail = {}
    for (A, h), c in e.entries.items():
        if A == base:
            continue
        if h < g:
            raise NotSuperRigidShape(
                f"tail coefficient at degree {A.coords[0]} has genus {h} below base genus {g}"
            )
        tail[(A, h)] = c
    return sign, ETable(
        cfg, tail,
        integrality_ok=all(_is_int(c) for c in tail.values()),
        observed_genus_cutoffs=_cutoffs(cfg, tail),
    )
