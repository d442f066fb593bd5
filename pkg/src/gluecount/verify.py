"""Verification suites: each function re-derives a body of counts two ways
and reports agreement. The CLI `verify` subcommand and the acceptance tests
both run these.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import GluecountError
from .exact import double_factorial_odd, factorial
from .formula import SurfaceSignature, count_closed
from .gluing import _classify, _iter_raw, count_brute
from .hz import catalan, gf_identity_check, hz_from_gluing_counts, hz_sum, hz_tanh, hz_toric
from .recursion import CountTable, count_recursive

__all__ = [
    "SuiteResult",
    "suite_hz_table",
    "suite_closed_vs_recursive",
    "suite_brute_oracle",
    "suite_gf_identity",
    "suite_specializations",
    "suite_row_sums",
    "suite_structural",
    "run_suites",
    "iter_bounded_signatures",
    "iter_polygon_signatures",
]

# Classical closed-surface gluing counts for 2N-gons, N = 1..5 (rows) by
# genus (columns); long-established reference values.
HZ_TABLE = {
    (0, 1): 1,
    (0, 2): 2,
    (1, 2): 1,
    (0, 3): 5,
    (1, 3): 10,
    (0, 4): 14,
    (1, 4): 70,
    (2, 4): 21,
    (0, 5): 42,
    (1, 5): 420,
    (2, 5): 483,
}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failure: str | None = None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.checked} checks)"
        return f"FAIL {self.name}: {self.failure}"


def _desc_parts(total: int, length: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of `length` parts in 0..bound summing to `total`."""
    if length == 0:
        if total == 0:
            yield ()
        return
    top = min(total, bound)
    for head in range(top, -1, -1):
        if head * length < total:
            break
        for tail in _desc_parts(total - head, length - 1, head):
            yield (head,) + tail


def iter_bounded_signatures(
    max_genus: int, max_holes: int, max_n: int
) -> Iterator[SurfaceSignature]:
    """All valid normalized signatures with g <= max_genus, L <= max_holes,
    every size <= max_n; sorted by (g, L, sizes)."""
    for g in range(max_genus + 1):
        for holes in range(1, max_holes + 1):
            seen = []
            for total in range(1, holes * max_n + 1):
                for parts in _desc_parts(total, holes, max_n):
                    seen.append(parts)
            for parts in sorted(seen):
                yield SurfaceSignature(g, parts)


def iter_polygon_signatures(max_polygon: int) -> Iterator[SurfaceSignature]:
    """All valid normalized signatures whose polygon has <= max_polygon edges."""
    for n in range(1, max_polygon + 1):
        for g in range(0, (n + 2) // 4 + 1):
            for holes in range(1, (n + 2 - 4 * g) // 2 + 1):
                total = n + 2 - 4 * g - 2 * holes
                if total < 1:
                    continue
                for parts in _desc_parts(total, holes, total):
                    yield SurfaceSignature(g, parts)


def suite_hz_table(max_agree: int = 8) -> SuiteResult:
    """Classical table by all three routes, plus triple agreement to max_agree."""
    name = "hz-table-three-routes"
    checked = 0
    routes = (("sum", hz_sum), ("series", hz_tanh), ("gluing", hz_from_gluing_counts))
    for n in range(1, 6):
        for g in range(0, n // 2 + 2):
            expected = HZ_TABLE.get((g, n), 0)
            for label, fn in routes:
                got = fn(g, n)
                checked += 1
                if got != expected:
                    return SuiteResult(
                        name, False, checked,
                        f"{label} route gives {got} at g={g}, N={n}, expected {expected}",
                    )
    for n in range(1, max_agree + 1):
        for g in range(0, n // 2 + 2):
            a, b, c = hz_sum(g, n), hz_tanh(g, n), hz_from_gluing_counts(g, n)
            checked += 1
            if not (a == b == c):
                return SuiteResult(
                    name, False, checked,
                    f"routes disagree at g={g}, N={n}: sum={a}, series={b}, gluing={c}",
                )
    return SuiteResult(name, True, checked)


def suite_closed_vs_recursive(
    max_genus: int = 3, max_holes: int = 4, max_n: int = 6
) -> SuiteResult:
    """Closed formula against the cut recursion over ordered size tuples."""
    name = f"closed-vs-recursive g<={max_genus} L<={max_holes} n<={max_n}"
    memo = CountTable()
    checked = 0
    for g in range(max_genus + 1):
        for holes in range(1, max_holes + 1):
            for sizes in itertools.product(range(max_n + 1), repeat=holes):
                if sum(sizes) == 0:
                    continue
                sig = SurfaceSignature(g, sizes)
                closed = count_closed(sig)
                recursive = count_recursive(sig, memo)
                checked += 1
                if closed != recursive:
                    return SuiteResult(
                        name, False, checked,
                        f"sig=(g={g}, ns={list(sizes)}): closed={closed}, "
                        f"recursive={recursive}",
                    )
    return SuiteResult(name, True, checked)


def suite_brute_oracle(max_polygon: int = 9) -> SuiteResult:
    """Exhaustive enumeration against the closed formula, small polygons."""
    name = f"brute-vs-closed N<={max_polygon}"
    checked = 0
    for sig in iter_polygon_signatures(max_polygon):
        brute = count_brute(sig, cap=max_polygon)
        closed = count_closed(sig)
        checked += 1
        if brute != closed:
            return SuiteResult(
                name, False, checked,
                f"sig=(g={sig.genus}, ns={list(sig.boundary_sizes)}): "
                f"brute={brute}, closed={closed}",
            )
    return SuiteResult(name, True, checked)


def suite_gf_identity(order: int = 13) -> SuiteResult:
    """Bivariate generating-function identity, exact through x^order."""
    name = f"gf-identity K={order}"
    report = gf_identity_check(order)
    if not report.holds:
        return SuiteResult(
            name, False, 1, f"first discrepancy at (x,y) power {report.first_discrepancy}"
        )
    return SuiteResult(name, True, 1)


def _sphere_reference(sizes: tuple[int, ...]) -> int:
    total = sum(sizes)
    holes = len(sizes)
    product = 1
    for n in sizes:
        product *= n
    value = Fraction(product) * Fraction(
        factorial(total + 2 * holes - 3), factorial(total + holes - 1)
    )
    assert value.denominator == 1
    return value.numerator


def _torus_reference(sizes: tuple[int, ...]) -> int:
    total = sum(sizes)
    holes = len(sizes)
    product = 1
    for n in sizes:
        product *= n
    bracket = sum(Fraction((n + 1) * (n + 2), 6) for n in sizes)
    value = (
        Fraction(product, 4)
        * Fraction(factorial(total + 2 * holes + 1), factorial(total + holes + 1))
        * bracket
    )
    assert value.denominator == 1
    return value.numerator


def _sphere_printed(sizes: tuple[int, ...]) -> int:
    s = sum(sizes)
    n = list(sizes)
    if len(n) == 1:
        return 1
    if len(n) == 2:
        return n[0] * n[1]
    if len(n) == 3:
        return n[0] * n[1] * n[2] * (s + 3)
    if len(n) == 4:
        return n[0] * n[1] * n[2] * n[3] * (s + 4) * (s + 5)
    if len(n) == 5:
        return n[0] * n[1] * n[2] * n[3] * n[4] * (s + 5) * (s + 6) * (s + 7)
    raise ValueError("printed sphere forms cover 1..5 boundaries")


def _torus_printed(sizes: tuple[int, ...]) -> int:
    s = sum(sizes)
    n = list(sizes)
    squares = sum(v * v for v in n)
    if len(n) == 1:
        return n[0] * (n[0] + 1) * (n[0] + 2) * (n[0] + 3) // 24
    if len(n) == 2:
        poly = squares + 3 * s + 4
        return n[0] * n[1] * (s + 4) * (s + 5) * poly // 24
    if len(n) == 3:
        poly = squares + 3 * s + 6
        return n[0] * n[1] * n[2] * (s + 5) * (s + 6) * (s + 7) * poly // 24
    if len(n) == 4:
        poly = squares + 3 * s + 8
        return (
            n[0] * n[1] * n[2] * n[3]
            * (s + 6) * (s + 7) * (s + 8) * (s + 9)
            * poly // 24
        )
    raise ValueError("printed torus forms cover 1..4 boundaries")


def suite_specializations(max_catalan: int = 12) -> SuiteResult:
    """Genus-0/1 reductions: Catalan and toric sequences, and the short
    polynomial forms of the sphere and torus counts."""
    name = "specializations"
    checked = 0
    for n in range(1, max_catalan + 1):
        checked += 1
        if catalan(n) != hz_sum(0, n):
            return SuiteResult(name, False, checked, f"catalan mismatch at N={n}")
    for n in range(2, max_catalan + 1):
        checked += 1
        if hz_toric(n) != hz_sum(1, n):
            return SuiteResult(name, False, checked, f"toric mismatch at N={n}")
    for holes in range(1, 6):
        for sizes in itertools.product((1, 2, 3), repeat=holes):
            sphere = SurfaceSignature(0, sizes)
            torus = SurfaceSignature(1, sizes)
            closed0 = count_closed(sphere)
            closed1 = count_closed(torus)
            checks = [
                ("sphere-general", _sphere_reference(sizes), closed0),
                ("sphere-printed", _sphere_printed(sizes), closed0),
                ("torus-general", _torus_reference(sizes), closed1),
            ]
            if holes <= 4:
                checks.append(("torus-printed", _torus_printed(sizes), closed1))
            for label, expected, got in checks:
                checked += 1
                if expected != got:
                    return SuiteResult(
                        name, False, checked,
                        f"{label} mismatch at ns={list(sizes)}: "
                        f"formula={expected}, closed={got}",
                    )
    return SuiteResult(name, True, checked)


def suite_row_sums(max_n: int = 10) -> SuiteResult:
    """Sum over genus of the closed-gluing numbers equals (2N-1)!!."""
    name = f"row-sums N<={max_n}"
    checked = 0
    for n in range(1, max_n + 1):
        row = sum(hz_sum(g, n) for g in range(0, n // 2 + 1))
        expected = double_factorial_odd(n)
        checked += 1
        if row != expected:
            return SuiteResult(
                name, False, checked, f"row N={n} sums to {row}, expected {expected}"
            )
    return SuiteResult(name, True, checked)


def suite_structural(max_polygon: int = 9) -> SuiteResult:
    """Per-word invariants over every raw word up to max_polygon slots:
    size bookkeeping, integer genus, and boundary-walk totality."""
    name = f"structural-invariants N<={max_polygon}"
    checked = 0
    for n in range(1, max_polygon + 1):
        for free in range(n % 2, n + 1, 2):
            labels = tuple(range(1, free + 1))
            for mu, labs in _iter_raw(n, labels):
                checked += 1
                # Walk totality: the free-to-free successor map is a bijection.
                images = set()
                for i in range(n):
                    if mu[i] != -1:
                        continue
                    step = (i + 1) % n
                    hops = 0
                    while mu[step] != -1:
                        step = (mu[step] + 1) % n
                        hops += 1
                        if hops > n:
                            return SuiteResult(
                                name, False, checked,
                                f"walk stuck at slot {i} of word mu={mu}",
                            )
                    images.add(step)
                free_slots = {i for i in range(n) if mu[i] == -1}
                if images != free_slots:
                    return SuiteResult(
                        name, False, checked,
                        f"successor map not a bijection for mu={mu}",
                    )
                try:
                    _, genus, punctures, cycles, _ = _classify(n, mu, labs)
                except GluecountError as exc:
                    return SuiteResult(
                        name, False, checked, f"classify failed for mu={mu}: {exc}"
                    )
                total = sum(len(c) for c in cycles)
                holes = len(cycles) + punctures
                if total + 4 * genus + 2 * holes - 2 != n:
                    return SuiteResult(
                        name, False, checked,
                        f"size bookkeeping broken for mu={mu}: "
                        f"sum={total}, g={genus}, holes={holes}, n={n}",
                    )
    return SuiteResult(name, True, checked)


def run_suites(level: str = "quick") -> list[SuiteResult]:
    """quick: fast cross-checks for interactive use; full: every suite at
    the size the acceptance tests pin."""
    if level == "quick":
        return [
            suite_hz_table(max_agree=6),
            suite_closed_vs_recursive(2, 3, 4),
            suite_gf_identity(8),
        ]
    if level == "full":
        return [
            suite_hz_table(max_agree=8),
            suite_closed_vs_recursive(3, 4, 6),
            suite_brute_oracle(9),
            suite_gf_identity(13),
            suite_specializations(12),
            suite_row_sums(10),
            suite_structural(9),
        ]
    raise ValueError(f"unknown verify level {level!r}")
