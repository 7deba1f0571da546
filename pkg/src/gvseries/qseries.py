"""Mass-truncated formal series sum_A c_A(t) q^A over the class lattice."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NonzeroConstantTerm
from .lattice import LatticeClass, LatticeConfig
from .tpoly import TPoly, mul as tmul


class QSeries:
    """Finitely supported map from classes of mass <= cap to TPolys.

    Missing classes are exact zeros.  ``const`` is the coefficient of q^0,
    kept as an exact rational scalar because the zero class is not part of
    the lattice; it is what makes ``1 + x`` representable.
    """

    __slots__ = ("config", "_terms", "const")

    def __init__(self, config: LatticeConfig, terms: Mapping[LatticeClass, TPoly] | None = None,
                 const=0):
        self.config = config
        self.const = Fraction(const)
        cleaned: dict[LatticeClass, TPoly] = {}
        for A, p in (terms or {}).items():
            if not config.contains(A):
                if A.rank != config.rank:
                    raise ValueError(f"class {A} does not match rank {config.rank}")
                continue
            p = p.truncate(config.t_order).tighten()
            if p:
                cleaned[A] = p
        self._terms = {A: cleaned[A] for A in config.sorted(cleaned)}

    @classmethod
    def zero(cls, config: LatticeConfig) -> "QSeries":
        return cls(config)

    @classmethod
    def one(cls, config: LatticeConfig) -> "QSeries":
        return cls(config, const=1)

    @classmethod
    def monomial(cls, config: LatticeConfig, A: LatticeClass, p: TPoly | None = None) -> "QSeries":
        if p is None:
            p = TPoly({0: 1}, 0, config.t_order)
        return cls(config, {A: p})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[LatticeClass, TPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, A: LatticeClass) -> TPoly:
        p = self._terms.get(A)
        if p is None:
            return TPoly.zero(self.config.t_order, -2)
        return p

    def __contains__(self, A) -> bool:
        return A in self._terms

    def support(self) -> list[LatticeClass]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms and not self.const

    def min_class_mass(self) -> Fraction | None:
        if not self._terms:
            return None
        return min(self.config.mass(A) for A in self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.config == other.config and self.const == other.const
                and self._terms == other._terms)

    def agrees_with(self, other: "QSeries") -> bool:
        """Equal coefficients on the common trusted range of every class."""
        if self.config.rank != other.config.rank or self.const != other.const:
            return False
        for A in set(self._terms) | set(other._terms):
            if not self[A].agrees_with(other[A]):
                return False
        return True

    def __repr__(self) -> str:
        parts = [f"{self.const}"] if self.const else []
        parts += [f"q^{A}*{p!r}" for A, p in self._terms.items()]
        return "QSeries(" + (" + ".join(parts) or "0") + ")"

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "QSeries"):
        if self.config != other.config:
            raise ValueError("series live over different lattice configurations")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        terms = dict(self._terms)
        for A, p in other._terms.items():
            terms[A] = terms[A] + p if A in terms else p
        return QSeries(self.config, terms, self.const + other.const)

    def __neg__(self) -> "QSeries":
        return self.scale(-1)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, r) -> "QSeries":
        r = Fraction(r)
        if not r:
            return QSeries(self.config)
        return QSeries(self.config, {A: p.scale(r) for A, p in self._terms.items()}, self.const * r)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def truncate_mass(self, cap) -> "QSeries":
        cap = Fraction(cap)
        return QSeries(self.config,
                       {A: p for A, p in self._terms.items() if self.config.mass(A) <= cap},
                       self.const)


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, discarding every class above the mass cap."""
    a._check(b)
    cfg = a.config
    cap = cfg.mass_cap
    acc: dict[LatticeClass, TPoly] = {}

    def put(C, p):
        acc[C] = acc[C] + p if C in acc else p

    if b.const:
        for A, p in a._terms.items():
            put(A, p.scale(b.const))
    if a.const:
        for B, p in b._terms.items():
            put(B, p.scale(a.const))
    bm = [(B, cfg.mass(B), q) for B, q in b._terms.items()]
    for A, p in a._terms.items():
        room = cap - cfg.mass(A)
        for B, mB, q in bm:
            if mB <= room:
                put(A + B, tmul(p, q))
    return QSeries(cfg, acc, a.const * b.const)


def power_series_terms(x: QSeries) -> int:
    """Number of powers of x that can reach a class below the cap."""
    m = x.min_class_mass()
    if m is None:
        return 0
    return int(x.config.mass_cap // m)


def log1p(x: QSeries) -> QSeries:
    """log(1 + x) = sum_{n>=1} (-1)^(n+1) x^n / n for x without constant term."""
    if x.const:
        raise NonzeroConstantTerm("log1p needs a series with zero constant term")
    out = QSeries(x.config)
    power = x
    for n in range(1, power_series_terms(x) + 1):
        if n > 1:
            power = mul(power, x)
        if power.is_zero():
            break
        out = out + power.scale(Fraction((-1) ** (n + 1), n))
    return out


def exp(x: QSeries) -> QSeries:
    """exp(x) = 1 + sum_{n>=1} x^n / n! for x without constant term."""
    if x.const:
        raise NonzeroConstantTerm("exp needs a series with zero constant term")
    out = QSeries.one(x.config)
    power = x
    fact = 1
    for n in range(1, power_series_terms(x) + 1):
        if n > 1:
            power = mul(power, x)
        fact *= n
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, fact))
    return out


def pushforward(s: QSeries, A: LatticeClass, target: LatticeConfig) -> QSeries:
    """Substitute q -> q^A: the degree-d coefficient of a rank-1 series moves to d*A."""
    if s.config.rank != 1:
        raise ValueError("pushforward expects a rank-1 source series")
    if A.rank != target.rank:
        raise ValueError(f"class {A} does not have rank {target.rank}")
    mA = target.mass(A)
    terms = {}
    for D, p in s.items():
        d = D.coords[0]
        if d * mA <= target.mass_cap:
            terms[d * A] = p
    return QSeries(target, terms, s.const)


def from_terms(config: LatticeConfig, rows: Iterable[tuple[LatticeClass, TPoly]]) -> QSeries:
    terms: dict[LatticeClass, TPoly] = {}
    for A, p in rows:
        terms[A] = terms[A] + p if A in terms else p
    return QSeries(config, terms)
