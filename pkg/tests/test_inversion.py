import itertools
import math
import random

import pytest

from invchern.chern import cpn_tangent_gf
from invchern.inversion import (
    InversionResult,
    bell_gcd,
    bell_partial,
    hat_mult_inversion,
    hessenberg_determinant,
    lagrange_polynomial,
    mult_inversion_polynomial,
    shift_bell_variables,
    sign_rule_holds,
    universal_series,
)
from invchern.partitions import GRADED, GradedPolynomial
from invchern.series import TruncatedSeries, series_compose, series_mul

t = GradedPolynomial.var

L_TABLE = {
    1: -t(1),
    2: -t(2) + 2 * t(1) ** 2,
    3: -t(3) + 5 * t(1) * t(2) - 5 * t(1) ** 3,
    4: -t(4) + 6 * t(1) * t(3) + 3 * t(2) ** 2 - 21 * t(1) ** 2 * t(2) + 14 * t(1) ** 4,
}
M_TABLE = {
    1: -t(1),
    2: -t(2) + t(1) ** 2,
    3: -t(3) + 2 * t(1) * t(2) - t(1) ** 3,
    4: -t(4) + 2 * t(1) * t(3) + t(2) ** 2 - 3 * t(1) ** 2 * t(2) + t(1) ** 4,
}
HAT_TABLE = {
    1: -t(1),
    2: -t(2) + 2 * t(1) ** 2,
    3: -t(3) + 6 * t(1) * t(2) - 6 * t(1) ** 3,
    4: -t(4) + 8 * t(1) * t(3) + 6 * t(2) ** 2 - 36 * t(1) ** 2 * t(2) + 24 * t(1) ** 4,
}


def catalan(limit):
    c = [1]
    for n in range(limit):
        c.append(sum(c[i] * c[n - i] for i in range(n + 1)))
    return c


@pytest.mark.parametrize("n", sorted(L_TABLE))
@pytest.mark.parametrize("route", ["recursive", "direct-formula"])
def test_lagrange_table(n, route):
    assert lagrange_polynomial(n, route).polynomial == L_TABLE[n]


@pytest.mark.parametrize("n", sorted(M_TABLE))
@pytest.mark.parametrize("route", ["recursive", "determinant"])
def test_mult_table(n, route):
    assert mult_inversion_polynomial(n, route).polynomial == M_TABLE[n]


@pytest.mark.parametrize("n", sorted(HAT_TABLE))
@pytest.mark.parametrize("route", ["scaled", "series"])
def test_hat_table(n, route):
    assert hat_mult_inversion(n, route) == HAT_TABLE[n]


def test_routes_agree_up_to_10():
    for n in range(1, 11):
        assert lagrange_polynomial(n, "recursive").polynomial == \
            lagrange_polynomial(n, "direct-formula").polynomial
        assert mult_inversion_polynomial(n, "recursive").polynomial == \
            mult_inversion_polynomial(n, "determinant").polynomial
        assert hat_mult_inversion(n, "scaled") == hat_mult_inversion(n, "series")


def test_catalan_coefficient():
    cat = catalan(10)
    for n in range(1, 11):
        assert lagrange_polynomial(n).polynomial.coeff((1,) * n) == (-1) ** n * cat[n]


def test_normalization_anchors():
    for n in range(1, 11):
        assert lagrange_polynomial(n).polynomial.coeff((n,)) == -1
        assert mult_inversion_polynomial(n).polynomial.coeff((n,)) == -1


def test_unknown_route():
    with pytest.raises(ValueError):
        lagrange_polynomial(3, "magic")
    with pytest.raises(ValueError):
        mult_inversion_polynomial(0)


def test_result_invariants_enforced():
    with pytest.raises(ValueError):
        InversionResult(2, t(1), "recursive")
    with pytest.raises(ValueError):
        InversionResult(1, t(1) / 2, "recursive")


def test_inverse_substitution_gives_identity():
    for n in range(1, 11):
        order = n + 1
        f = TruncatedSeries([GRADED.zero, GRADED.one] + [t(k) for k in range(1, n + 1)], order, GRADED)
        g = TruncatedSeries(
            [GRADED.zero, GRADED.one] + [lagrange_polynomial(k).polynomial for k in range(1, n + 1)],
            order, GRADED)
        assert series_compose(f, g) == TruncatedSeries.variable(order, GRADED)


def test_reciprocal_product_is_one():
    for n in range(1, 11):
        m = TruncatedSeries(
            [GRADED.one] + [mult_inversion_polynomial(k).polynomial for k in range(1, n + 1)], n, GRADED)
        assert series_mul(universal_series(n), m) == TruncatedSeries.one(n, GRADED)


def leibniz_det(matrix):
    """O(n!) permutation expansion; the independent determinant oracle."""
    n = len(matrix)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * matrix[i][perm[i]]
        total = total + (-term if inversions % 2 else term)
    return total


def hessenberg_matrix(z):
    n = len(z)
    return [[z[i - j] if j <= i else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]


def test_hessenberg_small():
    assert hessenberg_determinant([t(1)]) == t(1)
    assert hessenberg_determinant([t(1), t(2)]) == t(1) ** 2 - t(2)


def test_hessenberg_random_integers_against_leibniz():
    rng = random.Random(3)
    for n in range(1, 7):
        for _ in range(5):
            z = [rng.randint(-9, 9) for _ in range(n)]
            assert hessenberg_determinant(z) == leibniz_det(hessenberg_matrix(z))


def test_hessenberg_symbolic_against_leibniz():
    for n in range(1, 7):
        z = [t(k) for k in range(1, n + 1)]
        assert hessenberg_determinant(z) == leibniz_det(hessenberg_matrix(z))


def test_bell_comtet_list():
    assert bell_partial(3, 2) == 2 * t(1) * t(2)
    assert bell_partial(5, 3) == 3 * (t(1) ** 2 * t(3) + t(1) * t(2) ** 2)
    assert bell_partial(7, 4) == 4 * (t(1) ** 3 * t(4) + 3 * t(1) ** 2 * t(2) * t(3) + t(1) * t(2) ** 3)
    assert bell_partial(9, 5) == 5 * (t(1) ** 4 * t(5) + 4 * t(1) ** 3 * t(2) * t(4)
                                      + 2 * t(1) ** 3 * t(3) ** 2 + 6 * t(1) ** 2 * t(2) ** 2 * t(3)
                                      + t(1) * t(2) ** 4)


def test_bell_diagonal_and_errors():
    for k in range(1, 8):
        assert bell_partial(k, k) == t(1) ** k
    with pytest.raises(ValueError):
        bell_partial(2, 3)


def test_bell_brute_force_expansion():
    # coefficient of x^n in (sum z_m x^m)^k by summing over all k-tuples of exponents
    for n, k in [(6, 3), (7, 2), (8, 4)]:
        expected = GradedPolynomial()
        for combo in itertools.product(range(1, n + 1), repeat=k):
            if sum(combo) == n:
                expected = expected + GradedPolynomial.monomial(combo)
        assert bell_partial(n, k) == expected


def test_bell_gcd():
    assert bell_gcd(3, 2) == 2
    assert bell_gcd(9, 5) == 5
    for n in range(1, 9):
        assert bell_gcd(2 * n + 1, n + 1) == n + 1
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert bell_gcd(n, k) == k // math.gcd(n, k)


def test_tangent_bell_identity():
    for n in range(1, 9):
        assert shift_bell_variables(bell_partial(2 * n + 1, n + 1)) == cpn_tangent_gf(n)


def test_sign_rule_conjecture():
    for n in range(1, 9):
        assert sign_rule_holds(lagrange_polynomial(n).polynomial)
        assert sign_rule_holds(mult_inversion_polynomial(n).polynomial)
        assert sign_rule_holds(hat_mult_inversion(n))
