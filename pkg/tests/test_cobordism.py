import math
from fractions import Fraction

import pytest

from invchern.chern import ChernRecord, cpn_record, theta_record
from invchern.cobordism import (
    THETA,
    consistency_check,
    decompose_in_theta,
    lagrange_in_tau,
    logarithm_series,
    mischenko_logarithm,
    roundtrip_ok,
    theta,
    theta_exponential,
)
from invchern.partitions import GradedPolynomial, partitions_of
from invchern.chern import IncompleteRecordError


def test_exponential_coefficients():
    beta = theta_exponential(2)
    assert list(beta) == [0, 1, theta(1) / 2, theta(2) / 6]
    assert theta_exponential(6)[1] == 1
    assert theta_exponential(6)[5] == theta(4) / 120


def test_logarithm_low_degrees():
    log = mischenko_logarithm(2)
    assert log[0] == GradedPolynomial.one("theta")
    assert log[1] == -theta(1)
    assert log[2] == -theta(2) / 2 + Fraction(3, 2) * theta(1) ** 2


@pytest.mark.parametrize("N", [1, 4, 10])
def test_roundtrip(N):
    assert roundtrip_ok(N)


@pytest.mark.parametrize("N", [1, 4, 8])
def test_consistency(N):
    assert consistency_check(N)


def test_logarithm_equals_lagrange_in_tau():
    log = mischenko_logarithm(8)
    for n in range(1, 9):
        assert log[n] == lagrange_in_tau(n)


def test_weight_grading():
    beta, alpha = theta_exponential(10), logarithm_series(10)
    for n in range(1, 11):
        assert beta[n + 1].weight == n
        assert alpha[n + 1].weight == n


def test_denominators_divide_lcm():
    log = mischenko_logarithm(8)
    for n in range(1, 9):
        lcm = math.lcm(*(math.prod(math.factorial(p + 1) for p in lam) for lam in partitions_of(n)))
        for _, c in log[n].terms():
            assert lcm % Fraction(c).denominator == 0


def test_decompose_examples():
    cp2 = ChernRecord("CP^2", 2, "normal", {(2,): -3, (1, 1): 6})
    assert decompose_in_theta(cp2) == -theta(2) / 2 + Fraction(3, 2) * theta(1) ** 2
    for n in range(1, 6):
        assert decompose_in_theta(theta_record(n, convention="normal")) == theta(n)
    assert decompose_in_theta(theta_record(2, 2, "normal")) == 8 * theta(2)


def test_decompose_rejects_bad_records():
    with pytest.raises(ValueError):
        decompose_in_theta(cpn_record(2, "tangent"))
    with pytest.raises(IncompleteRecordError):
        decompose_in_theta(ChernRecord("p", 2, "normal", {(2,): 1}))


def test_theta_ring():
    assert THETA.zero == GradedPolynomial.zero("theta")
