"""Truncated power series over exact rationals.

A TruncatedSeries holds coefficients of x^0..x^K exactly. Coefficients are
Fractions, or Poly values (dense polynomials in a second symbol, written `y`
throughout) when a bivariate series is needed. All arithmetic is exact; no
operation ever touches floating point.

Binary operations require both operands truncated at the same order.
Division allows the denominator to start with zeros provided the numerator
starts with at least as many: the shared factor x^v cancels and the quotient
comes back truncated at K - v (only that much is determined by the inputs).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Union

from .errors import DomainError, SeriesOrderError

__all__ = [
    "DEFAULT_ORDER",
    "Poly",
    "TruncatedSeries",
    "series_mul",
    "series_div",
    "series_pow",
    "series_exp",
    "series_log",
    "coefficient",
]

DEFAULT_ORDER = 16

Scalar = Union[int, Fraction]
Coeff = Union[Fraction, "Poly"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Poly:
    """Dense polynomial in one symbol with Fraction coefficients.

    Used as the coefficient ring for bivariate series; mixes freely with ints
    and Fractions in arithmetic and comparisons.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cleaned = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @classmethod
    def symbol(cls) -> "Poly":
        """The polynomial y itself."""
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, value: Scalar = 1) -> "Poly":
        return cls((0,) * power + (value,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return _ZERO

    def evaluate(self, value: Scalar) -> Fraction:
        out = _ZERO
        for c in reversed(self.coeffs):
            out = out * value + c
        return Fraction(out)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: object) -> "Poly":
        other = _lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "Poly":
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Poly":
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "Poly":
        other = _lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Poly division by zero scalar")
            return Poly(tuple(c / other for c in self.coeffs))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else _ZERO)
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        parts = [f"{c}*y^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(parts) + ")"


def _lift(value: object) -> Poly | None:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return None


def _as_coeff(value: object) -> Coeff:
    if isinstance(value, Poly):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DomainError(f"series coefficients must be exact, got {type(value).__name__}")


class TruncatedSeries:
    """Power series in x truncated (inclusively) at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[object], order: int | None = None) -> None:
        values = [_as_coeff(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise SeriesOrderError(f"order must be >= 0, got {order}")
        if len(values) > order + 1:
            raise SeriesOrderError(
                f"{len(values)} coefficients exceed truncation order {order}"
            )
        values.extend([_ZERO] * (order + 1 - len(values)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((_ONE,), order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        if order < 1:
            raise SeriesOrderError("order must be >= 1 to hold x")
        return cls((_ZERO, _ONE), order)

    @classmethod
    def from_terms(
        cls, term: Callable[[int], object], order: int = DEFAULT_ORDER
    ) -> "TruncatedSeries":
        """Build a series from a coefficient function k -> c_k."""
        return cls((term(k) for k in range(order + 1)), order)

    def map_coeffs(self, fn: Callable[[Coeff], object]) -> "TruncatedSeries":
        return TruncatedSeries((fn(c) for c in self.coeffs), self.order)

    def scale(self, factor: object) -> "TruncatedSeries":
        f = _as_coeff(factor)
        return self.map_coeffs(lambda c: c * f)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(
            (a + b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(
            (a - b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __neg__(self) -> "TruncatedSeries":
        return self.map_coeffs(lambda c: -c)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_div(self, other)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        return series_pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __repr__(self) -> str:
        shown = ", ".join(repr(c) for c in self.coeffs[: min(5, self.order + 1)])
        tail = ", ..." if self.order + 1 > 5 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise SeriesOrderError(f"order mismatch: {a.order} vs {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the shared order."""
    _check_orders(a, b)
    order = a.order
    out: list[Coeff] = [_ZERO] * (order + 1)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j in range(order - i + 1):
            cb = b.coeffs[j]
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return TruncatedSeries(out, order)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient q with q*b = a. A shared leading zero order x^v cancels,
    shortening the result to order K - v."""
    _check_orders(a, b)
    shift = b.valuation()
    if shift is None:
        raise SeriesOrderError("division by the zero series")
    if shift:
        if any(a.coeffs[:shift]):
            raise SeriesOrderError(
                f"denominator vanishes to order {shift} but numerator does not"
            )
        num = a.coeffs[shift:]
        den = b.coeffs[shift:]
        order = a.order - shift
    else:
        num = a.coeffs
        den = b.coeffs
        order = a.order
    lead = den[0]
    if isinstance(lead, Poly):
        if lead.degree > 0:
            raise SeriesOrderError("leading denominator coefficient must be a scalar")
        lead = lead.coeff(0)
    out: list[Coeff] = []
    for m in range(order + 1):
        acc = num[m]
        for k in range(1, m + 1):
            dk = den[k]
            if dk:
                acc = acc - dk * out[m - k]
        out.append(acc / lead)
    return TruncatedSeries(out, order)


def series_pow(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    """a**exponent for integer exponent >= 0, by repeated squaring."""
    if exponent < 0:
        raise DomainError(f"series_pow requires exponent >= 0, got {exponent}")
    result = TruncatedSeries.one(a.order)
    base = a
    e = exponent
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) for a series with zero constant term."""
    if a.coeffs[0]:
        raise SeriesOrderError("series_exp requires a zero constant term")
    order = a.order
    acc = TruncatedSeries.one(order)
    term = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        term = series_mul(term, a).scale(Fraction(1, m))
        acc = acc + term
    return acc


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a series with constant term 1."""
    if not a.coeffs[0] == 1:
        raise SeriesOrderError("series_log requires constant term 1")
    order = a.order
    u = a - TruncatedSeries.one(order)
    acc = TruncatedSeries.zero(order)
    power = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        power = series_mul(power, u)
        signed = Fraction(1, m) if m % 2 else Fraction(-1, m)
        acc = acc + power.scale(signed)
    return acc


def coefficient(a: TruncatedSeries, x_power: int, y_power: int | None = None) -> Fraction:
    """Extract an exact coefficient; errors beyond the truncation order."""
    if x_power < 0:
        raise DomainError(f"x_power must be >= 0, got {x_power}")
    if x_power > a.order:
        raise SeriesOrderError(
            f"coefficient of x^{x_power} requested from a series truncated at {a.order}"
        )
    c = a.coeffs[x_power]
    if y_power is None:
        if isinstance(c, Poly):
            if c.degree > 0:
                raise DomainError(
                    f"coefficient of x^{x_power} carries symbol powers; pass y_power"
                )
            return c.coeff(0)
        return c
    if y_power < 0:
        raise DomainError(f"y_power must be >= 0, got {y_power}")
    if isinstance(c, Poly):
        return c.coeff(y_power)
    return c if y_power == 0 else _ZERO
