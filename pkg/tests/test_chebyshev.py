import pytest

from chebcm.algebra import ZZ, UniPolynomial
from chebcm.chebyshev import (
    chebyshev,
    classify_d,
    curve_polynomial,
    genus_of_cd,
    is_power_of_two,
    is_prime,
    in_scope_family,
    verify_functional_equation,
)

FIRST_SIX = {
    0: (2,),
    1: (0, 1),
    2: (-2, 0, 1),
    3: (0, -3, 0, 1),
    4: (2, 0, -4, 0, 1),
    5: (0, 5, 0, -5, 0, 1),
}


@pytest.mark.parametrize("d,coeffs", sorted(FIRST_SIX.items()))
def test_first_polynomials_frozen(d, coeffs):
    assert chebyshev(d).coeffs == coeffs


def test_recurrence_holds_generically():
    x = UniPolynomial(ZZ, (0, 1))
    for d in range(1, 40):
        assert chebyshev(d + 1) == x * chebyshev(d) - chebyshev(d - 1)


def test_functional_equation_small_range():
    assert all(verify_functional_equation(d) for d in range(0, 24))


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        chebyshev(-1)


def test_curve_polynomial_frozen_d3():
    # (x+2) * (x^3 - 3x) = x^4 + 2x^3 - 3x^2 - 6x
    assert curve_polynomial(3).coeffs == (0, -6, -3, 2, 1)


def test_curve_polynomial_degree():
    for d in range(2, 20):
        assert curve_polynomial(d).degree == d + 1


@pytest.mark.parametrize(
    "d,g",
    [(2, 1), (3, 1), (4, 2), (5, 2), (7, 3), (8, 4), (16, 8), (31, 15), (32, 16)],
)
def test_genus_is_floor_d_over_2(d, g):
    assert genus_of_cd(d) == g


def test_genus_rejects_degenerate_indices():
    with pytest.raises(ValueError):
        genus_of_cd(1)


def test_primality_and_power_of_two_helpers():
    assert [n for n in range(2, 30) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
    ]
    assert [n for n in range(1, 70) if is_power_of_two(n)] == [1, 2, 4, 8, 16, 32, 64]


def test_classification():
    assert all(classify_d(d) == 1 for d in (2, 4, 8, 16, 32, 64))
    assert all(classify_d(d) == 2 for d in (3, 5, 7, 11, 13, 61))
    assert all(classify_d(d) is None for d in (1, 6, 9, 10, 12, 15, 21))


def test_family_up_to_16():
    assert in_scope_family(16) == [2, 3, 4, 5, 7, 8, 11, 13, 16]
