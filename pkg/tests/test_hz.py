"""One-vertex map counts eps_g(N): three routes, classical specializations."""

import pytest

from gluecount import (
    DomainError,
    TruncationError,
    catalan,
    double_factorial_odd,
    gf_identity_check,
    hz_from_gluing_counts,
    hz_sum,
    hz_tanh,
    hz_toric,
)

# eps_g(N) for N = 1..5, genus column g = 0, 1, 2, ...
CLASSICAL = {
    1: (1,),
    2: (2, 1),
    3: (5, 10),
    4: (14, 70, 21),
    5: (42, 420, 483),
}


@pytest.mark.parametrize("route", [hz_sum, hz_tanh, hz_from_gluing_counts])
def test_classical_table(route):
    for n, row in CLASSICAL.items():
        for g, expected in enumerate(row):
            assert route(g, n) == expected, (route.__name__, g, n)


@pytest.mark.parametrize("route", [hz_sum, hz_tanh, hz_from_gluing_counts])
def test_empty_cells_are_zero(route):
    # Genus needs two handles' worth of edges: N < 2g kills the count.
    for g, n in [(1, 1), (2, 2), (2, 3), (3, 5), (5, 9)]:
        assert route(g, n) == 0


def test_routes_agree_beyond_the_table():
    for n in range(1, 11):
        for g in range(n // 2 + 1):
            reference = hz_sum(g, n)
            assert hz_tanh(g, n) == reference
            if n <= 8:
                assert hz_from_gluing_counts(g, n) == reference


def test_row_sums_are_odd_double_factorials():
    # Every complete gluing of the 2N-gon lands at some genus, and there are
    # (2N-1)!! gluings in all.
    for n in range(1, 11):
        total = sum(hz_sum(g, n) for g in range(n // 2 + 1))
        assert total == double_factorial_odd(n)


def test_catalan_values():
    assert [catalan(n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    for n in range(1, 13):
        assert catalan(n) == hz_sum(0, n)


def test_toric_values():
    assert [hz_toric(n) for n in range(2, 6)] == [1, 10, 70, 420]
    for n in range(2, 13):
        assert hz_toric(n) == hz_sum(1, n)


def test_single_point_examples():
    assert hz_from_gluing_counts(0, 2) == 2
    assert hz_from_gluing_counts(1, 2) == 1
    assert hz_from_gluing_counts(2, 4) == 21


@pytest.mark.parametrize("route", [hz_sum, hz_tanh, hz_from_gluing_counts])
def test_domain_errors(route):
    with pytest.raises(DomainError):
        route(-1, 3)
    with pytest.raises(DomainError):
        route(0, 0)


def test_toric_domain():
    with pytest.raises(DomainError):
        hz_toric(1)
    with pytest.raises(DomainError):
        catalan(0)


def test_tanh_order_control():
    # An explicit order big enough for x^(2g) works; a too-small one refuses
    # instead of silently truncating the answer to garbage.
    assert hz_tanh(1, 3, order=2) == 10
    assert hz_tanh(2, 4, order=4) == 21
    with pytest.raises(TruncationError):
        hz_tanh(2, 5, order=3)
    # Default order covers genus past the builtin floor.
    assert hz_tanh(9, 18) == hz_sum(9, 18)


def test_gf_identity_holds():
    for order in (2, 6):
        report = gf_identity_check(order)
        assert report.holds
        assert report.first_discrepancy is None
        assert report.order == order


def test_gf_identity_rejects_bad_order():
    with pytest.raises(DomainError):
        gf_identity_check(0)
