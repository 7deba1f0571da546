"""Local contributions G_h(q, t) of an embedded genus-h curve.

    G_h = log(1 + sum_{d>=1} sum_{mu |- d} prod_{box in mu} (2 sin(hook(box) t/2))^(2h-2) q^d)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ValidityExhausted
from .gv import bps_from_gw
from .kernels import sin_kernel
from .lattice import LatticeClass, LatticeConfig
from .qseries import QSeries, log1p
from .tpoly import TPoly, mul


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def hook_lengths(self) -> list[int]:
        return hook_lengths(self)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(d: int) -> list[Partition]:
    """Partitions of d in reverse lexicographic order, (d) first."""
    if d < 1:
        raise ValueError("d must be positive")
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def hook_lengths(mu: Partition) -> list[int]:
    """Hook length arm + leg + 1 of every box, row by row."""
    conj = mu.conjugate().parts
    return [
        (row - j - 1) + (conj[j] - i - 1) + 1
        for i, row in enumerate(mu.parts)
        for j in range(row)
    ]


def kernel_order(h: int, d_max: int, t_order: int) -> int:
    """Internal t-order needed so that G_h is trusted through t_order.

    For h = 0 a degree-d term is a product of d kernels with a t^-2 pole
    each, which costs 2(d-1) orders; 2*d_max keeps one step of slack.
    """
    return t_order + 2 * d_max if h == 0 else t_order


def _box_product(hooks: tuple[int, ...], h: int, order: int) -> TPoly:
    out = None
    for hook, mult in sorted(Counter(hooks).items()):
        k = sin_kernel(hook, h, order)
        for _ in range(mult):
            out = k if out is None else mul(out, k)
            if out.valid_to > order:
                out = out.truncate(order)
    return out


def inner_sum(h: int, d: int, order: int) -> TPoly:
    """sum over partitions of d of the hook-length kernel product."""
    by_hooks = Counter(tuple(sorted(hook_lengths(mu))) for mu in partitions(d))
    total = None
    for hooks, n in by_hooks.items():
        term = _box_product(hooks, h, order).scale(n)
        total = term if total is None else total + term
    return total


def rank1_config(d_max: int, t_order: int) -> LatticeConfig:
    return LatticeConfig(1, (Fraction(1),), Fraction(d_max), t_order)


@lru_cache(maxsize=128)
def g_series(h: int, d_max: int, t_order: int) -> QSeries:
    """G_h as a rank-1 series in q up to degree d_max, trusted through t^t_order."""
    if h < 0 or d_max < 1:
        raise ValueError("need h >= 0 and d_max >= 1")
    if t_order % 2 or t_order < -2:
        raise ValueError("t_order must be even and >= -2")
    K = kernel_order(h, d_max, t_order)
    work = rank1_config(d_max, K)
    x = QSeries(work, {LatticeClass((d,)): inner_sum(h, d, K) for d in range(1, d_max + 1)})
    G = log1p(x)
    target = rank1_config(d_max, t_order)
    for A, p in G.items():
        if p.valid_to < t_order:
            raise ValidityExhausted(
                f"G_{h} at q^{A.coords[0]} trusted only to t^{p.valid_to}; "
                f"kernel order {K} is too small for window t^{t_order}",
                required=t_order, available=p.valid_to,
            )
    return QSeries(target, G.terms)


@dataclass
class LocalBPS:
    h: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    genus_window: int = 0
    observed_genus_cutoffs: dict[int, int] = field(default_factory=dict)
    integrality_ok: bool = True

    def get(self, d: int, g: int) -> Fraction:
        return self.entries.get((d, g), Fraction(0))


def local_bps(h: int, d_max: int, t_order: int) -> LocalBPS:
    table = bps_from_gw(g_series(h, d_max, t_order))
    return LocalBPS(
        h=h,
        entries={(A.coords[0], g): c for (A, g), c in table.entries.items()},
        genus_window=table.genus_window,
        observed_genus_cutoffs={A.coords[0]: g0 for A, g0 in table.observed_genus_cutoffs.items()},
        integrality_ok=table.integrality_ok,
    )
