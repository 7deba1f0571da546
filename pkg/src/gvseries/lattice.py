"""Effective classes as nonzero points of N^r, graded by a rational mass."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ResourceLimit

# Largest number of classes enumerate_classes will materialize.
MAX_CLASSES = 2_000_000


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


@dataclass(frozen=True, order=False)
class LatticeClass:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise ValueError("a class needs at least one coordinate")
        if any(c < 0 for c in coords):
            raise ValueError(f"negative coordinate in {coords}")
        if not any(coords):
            raise ValueError("the zero class is not an element of the lattice")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: int) -> "LatticeClass":
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "LatticeClass") -> "LatticeClass":
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return LatticeClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, k: int) -> "LatticeClass":
        if not isinstance(k, int) or k < 1:
            raise ValueError("classes may only be scaled by positive integers")
        return LatticeClass(tuple(k * c for c in self.coords))

    def content(self) -> int:
        """gcd of the coordinates."""
        return math.gcd(*self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__


@dataclass(frozen=True)
class LatticeConfig:
    """Rank, basis masses, mass cap and t-window of a computation.

    ``t_order`` is the largest retained exponent of ``t``; it is even and at
    least -2 so that the genus-zero term ``t^-2`` always fits.
    """

    rank: int
    mass_vector: tuple[Fraction, ...]
    mass_cap: Fraction
    t_order: int

    def __post_init__(self):
        masses = tuple(as_fraction(m) for m in self.mass_vector)
        object.__setattr__(self, "mass_vector", masses)
        object.__setattr__(self, "mass_cap", as_fraction(self.mass_cap))
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if len(masses) != self.rank:
            raise ValueError(f"expected {self.rank} masses, got {len(masses)}")
        if any(m <= 0 for m in masses):
            raise ValueError("basis masses must be positive")
        if self.mass_cap <= 0:
            raise ValueError("mass cap must be positive")
        if self.t_order < -2 or self.t_order % 2:
            raise ValueError(f"t_order must be even and >= -2, got {self.t_order}")

    @classmethod
    def make(cls, mass_vector: Sequence, mass_cap, t_order: int) -> "LatticeConfig":
        return cls(len(mass_vector), tuple(mass_vector), mass_cap, t_order)

    @property
    def genus_window(self) -> int:
        """Largest genus g with 2g-2 <= t_order."""
        return (self.t_order + 2) // 2

    def mass(self, A: LatticeClass) -> Fraction:
        if A.rank != self.rank:
            raise ValueError(f"class {A} has rank {A.rank}, config has rank {self.rank}")
        return sum((c * m for c, m in zip(A.coords, self.mass_vector)), Fraction(0))

    def contains(self, A: LatticeClass) -> bool:
        return A.rank == self.rank and self.mass(A) <= self.mass_cap

    def sort_key(self, A: LatticeClass):
        return (self.mass(A), A.coords)

    def sorted(self, classes: Iterable[LatticeClass]) -> list[LatticeClass]:
        return sorted(classes, key=self.sort_key)

    def classes(self) -> tuple[LatticeClass, ...]:
        return enumerate_classes(self)

    def with_t_order(self, t_order: int) -> "LatticeConfig":
        return LatticeConfig(self.rank, self.mass_vector, self.mass_cap, t_order)

    def min_mass(self) -> Fraction:
        return min(self.mass_vector)


def count_bound(config: LatticeConfig) -> int:
    """Upper bound on |Gamma_Lambda| from the bounding box of the simplex."""
    n = 1
    for m in config.mass_vector:
        n *= int(config.mass_cap // m) + 1
    return n - 1


@lru_cache(maxsize=256)
def enumerate_classes(config: LatticeConfig) -> tuple[LatticeClass, ...]:
    """All classes of positive mass at most the cap, in (mass, lex) order."""
    bound = count_bound(config)
    if bound > MAX_CLASSES:
        raise ResourceLimit(
            f"mass cap {config.mass_cap} admits up to {bound} classes (limit {MAX_CLASSES})",
            bound,
        )
    cap = config.mass_cap
    masses = config.mass_vector
    out: list[tuple[int, ...]] = []

    def rec(i: int, prefix: list[int], used: Fraction):
        if i == len(masses):
            if any(prefix):
                out.append(tuple(prefix))
            return
        c = 0
        while used + c * masses[i] <= cap:
            prefix.append(c)
            rec(i + 1, prefix, used + c * masses[i])
            prefix.pop()
            c += 1

    rec(0, [], Fraction(0))
    classes = [LatticeClass(c) for c in out]
    return tuple(config.sorted(classes))


def divisors(A: LatticeClass) -> list[tuple[int, LatticeClass]]:
    """Pairs (k, B) with k*B == A, ordered by increasing k."""
    n = A.content()
    out = []
    for k in range(1, n + 1):
        if n % k == 0:
            out.append((k, LatticeClass(tuple(c // k for c in A.coords))))
    return out
