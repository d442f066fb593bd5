"""Closed-form count of polygon edge gluings by target surface.

A *signature* names an orientable surface: a genus g together with L >= 1
polygonal boundary components of sizes n_1..n_L (a size-0 component is a
puncture, i.e. a marked interior point left by a vertex that no boundary
touches). A polygon with

    N = n_1 + ... + n_L + 4g + 2L - 2

edges admits gluings that pair off some of its edges and leave the n_i edges
of the boundaries free; `count_closed` evaluates the number of inequivalent
such gluings directly, as an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AllPuncturesError, ConsistencyError, SignatureError
from .exact import compositions, factorial

__all__ = ["SurfaceSignature", "count_closed", "polygon_size"]


@dataclass(frozen=True)
class SurfaceSignature:
    """Target surface: genus plus the multiset of boundary sizes.

    Invalid combinations are rejected at construction time, so any instance
    in hand is safe to count. The all-punctures case (every size zero) is
    outside the scope of every counting route and gets its own error.
    """

    genus: int
    boundary_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(self.boundary_sizes)
        object.__setattr__(self, "boundary_sizes", sizes)
        if self.genus < 0:
            raise SignatureError(f"genus must be >= 0, got {self.genus}")
        if len(sizes) < 1:
            raise SignatureError("at least one boundary component is required")
        for n in sizes:
            if n < 0:
                raise SignatureError(f"boundary sizes must be >= 0, got {n}")
        if sum(sizes) == 0:
            raise AllPuncturesError(
                "all-punctures unsupported: at least one boundary size must be positive"
            )

    @property
    def holes(self) -> int:
        """Number of boundary components L (punctures included)."""
        return len(self.boundary_sizes)

    @property
    def boundary_edge_total(self) -> int:
        """Total count of free polygon edges, n_1 + ... + n_L."""
        return sum(self.boundary_sizes)

    @property
    def puncture_count(self) -> int:
        """How many boundary sizes are zero."""
        return self.boundary_sizes.count(0)

    def sorted_sizes(self) -> tuple[int, ...]:
        """Boundary sizes in non-increasing order (the normalized form)."""
        return tuple(sorted(self.boundary_sizes, reverse=True))


def polygon_size(sig: SurfaceSignature) -> int:
    """Edge count N of the polygon whose gluings produce `sig`."""
    return sig.boundary_edge_total + 4 * sig.genus + 2 * sig.holes - 2


def count_closed(sig: SurfaceSignature) -> int:
    """Count inequivalent gluings yielding `sig`, via the closed formula.

    The value is a product of exact rational factors

        (1/4^g) * (1/z!) * m_1*...*m_L * (S+4g+2L-3)! / (S+2g+L-1)!

    times a sum over all ordered splittings of the genus into L non-negative
    parts (one per boundary) of

        prod_k (2p_k + n_k)! / (n_k! * (2p_k + 1)!)

    where S = sum(n_i), z = number of zero sizes, and m_k = max(n_k, 1).
    Every division cancels; a non-integer result would mean a programming
    error and raises ConsistencyError rather than truncating.
    """
    g = sig.genus
    sizes = sig.boundary_sizes
    holes = len(sizes)
    total = sum(sizes)
    zeros = sizes.count(0)

    split_sum = Fraction(0)
    for parts in compositions(g, holes):
        term = Fraction(1)
        for p, n in zip(parts, sizes):
            term *= Fraction(factorial(2 * p + n), factorial(n) * factorial(2 * p + 1))
        split_sum += term

    size_product = 1
    for n in sizes:
        size_product *= n if n > 0 else 1

    value = (
        split_sum
        * size_product
        * Fraction(
            factorial(total + 4 * g + 2 * holes - 3),
            factorial(total + 2 * g + holes - 1),
        )
        / 4**g
        / factorial(zeros)
    )
    if value.denominator != 1:
        raise ConsistencyError(f"closed formula produced non-integer {value} for {sig}")
    return value.numerator
