"""Harer-Zagier numbers by three independent routes, plus classical checks.

eps_g(N) counts complete pairwise gluings of a 2N-gon into a closed
orientable genus-g surface. Three ways to compute it live here:

* ``hz_sum``          -- a finite sum over genus splittings (the reference route);
* ``hz_tanh``         -- coefficient extraction from ((x/2)/tanh(x/2))^(N+1);
* ``hz_from_gluing_counts`` -- the boundary specialization: a genus-g surface
  with one 1-gon boundary and N-2g punctures is produced by gluings of the
  same 2N-gon with one edge left free, so the polygon count with signature
  (g, [1, 0, ..., 0]) equals eps_g(N).

For N < 2g every route returns 0 (the table's empty cells). All values are
exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DomainError, TruncationError
from .exact import compositions, double_factorial_odd, factorial
from .formula import SurfaceSignature, count_closed
from .series import (
    DEFAULT_ORDER,
    Poly,
    TruncatedSeries,
    coefficient,
    series_div,
    series_exp,
    series_log,
    series_pow,
)

__all__ = [
    "hz_sum",
    "hz_tanh",
    "hz_from_gluing_counts",
    "catalan",
    "hz_toric",
    "gf_identity_check",
    "GfIdentityReport",
]


def _validate(genus: int, n: int) -> None:
    if genus < 0:
        raise DomainError(f"genus must be >= 0, got {genus}")
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")


def hz_sum(genus: int, n: int) -> int:
    """eps_g(N) by the splitting sum.

    With L = N - 2g + 1 vertices on the glued surface,

        eps_g(N) = (1/4^g) * (2N)! / (L! * N!) * sum over splittings
                   p_1+...+p_L = g of prod_k 1/(2p_k + 1).
    """
    _validate(genus, n)
    if n < 2 * genus:
        return 0
    parts = n - 2 * genus + 1
    split_sum = Fraction(0)
    for split in compositions(genus, parts):
        denom = 1
        for p in split:
            denom *= 2 * p + 1
        split_sum += Fraction(1, denom)
    value = (
        split_sum
        * Fraction(factorial(2 * n), factorial(parts) * factorial(n))
        / 4**genus
    )
    if value.denominator != 1:
        raise ConsistencyError(f"hz_sum produced non-integer {value} at g={genus}, N={n}")
    return value.numerator


def _half_ratio_series(order: int) -> TruncatedSeries:
    """(x/2)/tanh(x/2) as an exact truncated series.

    Built as cosh(x/2) divided by sinh(x/2)/(x/2); the latter is written down
    directly from factorial coefficients so the x=0 pole never appears and no
    truncation order is lost.
    """
    cosh_half = TruncatedSeries.from_terms(
        lambda k: Fraction(1, 4 ** (k // 2) * factorial(k)) if k % 2 == 0 else 0,
        order,
    )
    sinh_ratio = TruncatedSeries.from_terms(
        lambda k: Fraction(1, 4 ** (k // 2) * factorial(k + 1)) if k % 2 == 0 else 0,
        order,
    )
    return series_div(cosh_half, sinh_ratio)


def hz_tanh(genus: int, n: int, order: int | None = None) -> int:
    """eps_g(N) by series coefficient extraction:

        eps_g(N) = (2N)! / ((N+1)! (N-2g)!) * [x^(2g)] ((x/2)/tanh(x/2))^(N+1).

    The truncation must satisfy order >= 2g; a too-small explicit order raises
    TruncationError rather than ever returning a wrong value.
    """
    _validate(genus, n)
    if n < 2 * genus:
        return 0
    if order is None:
        order = max(DEFAULT_ORDER, 2 * genus)
    if order < 2 * genus:
        raise TruncationError(
            f"order {order} cannot hold x^{2 * genus}; need order >= {2 * genus}"
        )
    powered = series_pow(_half_ratio_series(order), n + 1)
    c = coefficient(powered, 2 * genus)
    value = Fraction(factorial(2 * n), factorial(n + 1) * factorial(n - 2 * genus)) * c
    if value.denominator != 1:
        raise ConsistencyError(f"hz_tanh produced non-integer {value} at g={genus}, N={n}")
    return value.numerator


def hz_from_gluing_counts(genus: int, n: int) -> int:
    """eps_g(N) as the polygon gluing count with one 1-gon boundary.

    The 2N-gon with a single free edge glues to genus g with one boundary of
    size 1 plus N-2g punctures; that signature's count is eps_g(N).
    """
    _validate(genus, n)
    if n < 2 * genus:
        return 0
    holes = n - 2 * genus + 1
    sig = SurfaceSignature(genus, (1,) + (0,) * (holes - 1))
    return count_closed(sig)


def catalan(n: int) -> int:
    """eps_0(N) = (2N)!/((N+1)! N!), the Catalan numbers."""
    _validate(0, n)
    value = Fraction(factorial(2 * n), factorial(n + 1) * factorial(n))
    return value.numerator


def hz_toric(n: int) -> int:
    """eps_1(N) = (1/12) (2N)!/((N-2)! N!) for N >= 2."""
    _validate(1, n)
    if n < 2:
        raise DomainError(f"hz_toric requires N >= 2, got {n}")
    value = Fraction(factorial(2 * n), 12 * factorial(n - 2) * factorial(n))
    if value.denominator != 1:
        raise ConsistencyError(f"hz_toric produced non-integer {value} at N={n}")
    return value.numerator


@dataclass(frozen=True)
class GfIdentityReport:
    """Outcome of gf_identity_check: exact equality or the first bad spot."""

    holds: bool
    first_discrepancy: tuple[int, int] | None
    order: int


def gf_identity_check(order: int) -> GfIdentityReport:
    """Check the bivariate generating-function identity through x^order:

        1 + 2 * sum_{g>=0} sum_{N>=2g} eps_g(N) x^(N+1) y^(N-2g+1) / (2N-1)!!
            = ((1+x)/(1-x))^y.

    The left side is assembled from hz_sum values (the N=0 seed term is the
    empty gluing, eps_0(0)=1, whose 2xy term the identity needs at order 1);
    the right side is exp(y*log((1+x)/(1-x))) computed on exact bivariate
    series. Returns whether every coefficient through x^order matches, and if
    not, the smallest (x_power, y_power) where the two sides differ.
    """
    if order < 1:
        raise DomainError(f"gf_identity_check requires order >= 1, got {order}")

    lhs_coeffs: list[Poly] = [Poly() for _ in range(order + 1)]
    lhs_coeffs[0] = Poly.const(1)
    for n in range(0, order):
        for g in range(0, n // 2 + 1):
            eps = 1 if n == 0 else hz_sum(g, n)
            if eps == 0:
                continue
            weight = Fraction(2 * eps, double_factorial_odd(n))
            lhs_coeffs[n + 1] = lhs_coeffs[n + 1] + Poly.monomial(n - 2 * g + 1, weight)
    lhs = TruncatedSeries(lhs_coeffs, order)

    one_plus = TruncatedSeries((1, 1), order)
    one_minus = TruncatedSeries((1, -1), order)
    log_ratio = series_log(series_div(one_plus, one_minus))
    rhs = series_exp(log_ratio.scale(Poly.symbol()))

    for xp in range(order + 1):
        left = lhs.coeffs[xp]
        right = rhs.coeffs[xp]
        if left == right:
            continue
        for yp in range(order + 2):
            lv = left.coeff(yp) if isinstance(left, Poly) else (left if yp == 0 else 0)
            rv = right.coeff(yp) if isinstance(right, Poly) else (right if yp == 0 else 0)
            if lv != rv:
                return GfIdentityReport(False, (xp, yp), order)
    return GfIdentityReport(True, None, order)
