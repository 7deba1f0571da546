"""Even Laurent polynomials in t with exact coefficients and a trusted order.

A :class:`TPoly` stands for an infinite Laurent series of which only the
coefficients at exponents ``<= valid_to`` are known.  ``min_exp`` is a lower
bound for the first possibly-nonzero exponent.  Multiplying by a series with
a pole shifts the unknown tail down, so every operation recomputes
``valid_to`` instead of silently truncating.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import NotAUnit, ParityError, ValidityExhausted

_ZERO = Fraction(0)


def _check_even(e: int, what: str = "exponent"):
    if e % 2:
        raise ParityError(f"odd {what} {e}: only even powers of t are supported")


class TPoly:
    __slots__ = ("_coeffs", "min_exp", "valid_to")

    def __init__(self, coeffs: Mapping[int, object] | None = None, min_exp: int | None = None,
                 valid_to: int | None = None):
        cs: dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            e = int(e)
            _check_even(e)
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                cs[e] = c
        if valid_to is None:
            valid_to = max(cs) if cs else (min_exp if min_exp is not None else 0)
        if min_exp is None:
            min_exp = min(cs) if cs else valid_to
        _check_even(min_exp, "min_exp")
        _check_even(valid_to, "valid_to")
        if min_exp > valid_to:
            raise ValidityExhausted(
                f"min_exp {min_exp} exceeds valid_to {valid_to}", required=min_exp, available=valid_to
            )
        for e in cs:
            if e < min_exp:
                raise ValueError(f"exponent {e} below min_exp {min_exp}")
        self._coeffs = {e: c for e, c in sorted(cs.items()) if e <= valid_to}
        self.min_exp = min_exp
        self.valid_to = valid_to

    @classmethod
    def _raw(cls, coeffs: dict[int, Fraction], min_exp: int, valid_to: int) -> "TPoly":
        # trusted constructor: even, nonzero, in range, sorted
        p = object.__new__(cls)
        p._coeffs = coeffs
        p.min_exp = min_exp
        p.valid_to = valid_to
        return p

    @classmethod
    def zero(cls, valid_to: int, min_exp: int | None = None) -> "TPoly":
        return cls({}, valid_to if min_exp is None else min_exp, valid_to)

    @classmethod
    def const(cls, c, valid_to: int = 0) -> "TPoly":
        return cls({0: c}, min(0, valid_to), valid_to)

    @classmethod
    def monomial(cls, e: int, c=1, valid_to: int | None = None) -> "TPoly":
        return cls({e: c}, e, e if valid_to is None else valid_to)

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, e: int) -> Fraction:
        if e > self.valid_to:
            raise ValidityExhausted(f"coefficient of t^{e} is beyond valid_to {self.valid_to}",
                                    required=e, available=self.valid_to)
        return self._coeffs.get(e, _ZERO)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def lowest_exp(self) -> int | None:
        return next(iter(self._coeffs), None)

    def leading(self) -> tuple[int, Fraction]:
        """Lowest stored exponent and its coefficient."""
        if not self._coeffs:
            raise ValueError("zero series has no leading term")
        e = next(iter(self._coeffs))
        return e, self._coeffs[e]

    def tighten(self) -> "TPoly":
        """Raise min_exp to the first stored exponent.

        Sound because everything up to ``valid_to`` is known exactly.
        """
        low = self.lowest_exp()
        new_min = self.valid_to if low is None else low
        if new_min == self.min_exp:
            return self
        return TPoly._raw(self._coeffs, new_min, self.valid_to)

    def truncate(self, order: int) -> "TPoly":
        _check_even(order, "order")
        if order >= self.valid_to:
            return self
        cs = {e: c for e, c in self._coeffs.items() if e <= order}
        return TPoly._raw(cs, min(self.min_exp, order), order)

    def agrees_with(self, other: "TPoly", upto: int | None = None) -> bool:
        """Coefficientwise equality on the common trusted range."""
        top = min(self.valid_to, other.valid_to)
        if upto is not None:
            top = min(top, upto)
        a = {e: c for e, c in self._coeffs.items() if e <= top}
        b = {e: c for e, c in other._coeffs.items() if e <= top}
        return a == b

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return (self._coeffs == other._coeffs and self.min_exp == other.min_exp
                and self.valid_to == other.valid_to)

    def __hash__(self):
        return hash((tuple(self._coeffs.items()), self.min_exp, self.valid_to))

    def __repr__(self) -> str:
        if not self._coeffs:
            body = "0"
        else:
            body = " + ".join(f"({c})t^{e}" for e, c in self._coeffs.items())
        return f"TPoly({body}; min_exp={self.min_exp}, valid_to={self.valid_to})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        top = min(self.valid_to, other.valid_to)
        cs = {e: c for e, c in self._coeffs.items() if e <= top}
        for e, c in other._coeffs.items():
            if e > top:
                break
            s = cs.get(e, _ZERO) + c
            if s:
                cs[e] = s
            else:
                cs.pop(e, None)
        lo = min(self.min_exp, other.min_exp)
        return TPoly._raw(dict(sorted(cs.items())), min(lo, top), top)

    def __neg__(self) -> "TPoly":
        return TPoly._raw({e: -c for e, c in self._coeffs.items()}, self.min_exp, self.valid_to)

    def __sub__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, r) -> "TPoly":
        r = r if isinstance(r, Fraction) else Fraction(r)
        if not r:
            return TPoly._raw({}, self.min_exp, self.valid_to)
        return TPoly._raw({e: c * r for e, c in self._coeffs.items()}, self.min_exp, self.valid_to)

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, TPoly):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "TPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def subs_scale(self, k: int) -> "TPoly":
        """The series with t replaced by k*t."""
        cs = {e: c * Fraction(k) ** e for e, c in self._coeffs.items()}
        return TPoly._raw(cs, self.min_exp, self.valid_to)


def add(a: TPoly, b: TPoly) -> TPoly:
    return a + b


def scale(a: TPoly, r) -> TPoly:
    return a.scale(r)


def leading(a: TPoly) -> tuple[int, Fraction]:
    return a.leading()


def truncate(a: TPoly, order: int) -> TPoly:
    return a.truncate(order)


def mul(a: TPoly, b: TPoly) -> TPoly:
    """Product with the Laurent validity budget.

    An error term O(t^(a.valid_to+2)) in ``a`` times ``b`` is
    O(t^(a.valid_to+2+b.min_exp)), hence the result is trusted up to
    ``min(a.valid_to + b.min_exp, b.valid_to + a.min_exp)``.
    """
    lo = a.min_exp + b.min_exp
    top = min(a.valid_to + b.min_exp, b.valid_to + a.min_exp)
    if top < lo:
        raise ValidityExhausted(
            f"product trusted only to t^{top}, below its lowest exponent t^{lo}",
            required=lo, available=top,
        )
    out: dict[int, Fraction] = {}
    bi = list(b._coeffs.items())
    for ea, ca in a._coeffs.items():
        lim = top - ea
        for eb, cb in bi:
            if eb > lim:
                break
            e = ea + eb
            out[e] = out.get(e, _ZERO) + ca * cb
    cs = {e: c for e, c in sorted(out.items()) if c}
    return TPoly._raw(cs, lo, top)


def invert_unit(a: TPoly) -> TPoly:
    """Multiplicative inverse of a series with a nonzero lowest term.

    If ``a = t^e0 * u`` with ``u(0) != 0`` then ``u`` is known to order
    ``valid_to - e0`` and the inverse ``t^-e0 / u`` to ``valid_to - 2*e0``.
    """
    if not a._coeffs:
        raise NotAUnit(f"series vanishes through t^{a.valid_to}; no leading term to invert")
    e0, c0 = a.leading()
    top = a.valid_to - 2 * e0
    if top < -e0:
        raise ValidityExhausted("inverse has no trusted terms", required=-e0, available=top)
    # u_j = coefficient of t^(e0 + 2j) in a; solve u * v = 1 for v_j
    n = (top + e0) // 2 + 1
    u = [a._coeffs.get(e0 + 2 * j, _ZERO) for j in range(n)]
    inv0 = 1 / c0
    v = [inv0]
    for j in range(1, n):
        s = _ZERO
        for i in range(1, j + 1):
            ui = u[i]
            if ui:
                s += ui * v[j - i]
        v.append(-s * inv0)
    cs = {2 * j - e0: c for j, c in enumerate(v) if c}
    return TPoly._raw(cs, -e0, top)
