"""Logarithm/exponential pair of the complex-cobordism formal group, written
in theta-divisor generators.

``theta_k`` (namespace ``"theta"``) stands for the cobordism class of the
theta divisor of dimension ``k``.  The exponential has coefficient
``theta_n / (n+1)!`` at ``z^(n+1)``; inverting it gives the logarithm, whose
coefficient at ``u^(n+1)`` is ``[CP^n] / (n+1)``.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .chern import ChernRecord, IncompleteRecordError, cpn_record
from .inversion import lagrange_polynomial
from .partitions import GradedPolynomial, graded_ring
from .series import TruncatedSeries, series_comp_inverse, series_compose

THETA = graded_ring("theta")

ThetaExpression = GradedPolynomial


def theta(k: int) -> GradedPolynomial:
    return GradedPolynomial.var(k, "theta")


def theta_exponential(N: int) -> TruncatedSeries:
    """``z + sum_{n=1..N} theta_n z^(n+1) / (n+1)!`` truncated at ``z^(N+1)``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    coeffs = [THETA.zero, THETA.one]
    coeffs += [theta(n) / math.factorial(n + 1) for n in range(1, N + 1)]
    return TruncatedSeries(coeffs, N + 1, THETA)


def logarithm_series(N: int) -> TruncatedSeries:
    return series_comp_inverse(theta_exponential(N))


def mischenko_logarithm(N: int) -> list[GradedPolynomial]:
    """``[CP^n]`` in theta generators for ``n = 0..N`` (entry 0 is the point, 1)."""
    log = logarithm_series(N)
    return [log[n + 1] * (n + 1) for n in range(N + 1)]


def lagrange_in_tau(n: int) -> GradedPolynomial:
    """``(n+1) L_n`` evaluated at ``t_k = theta_k / (k+1)!``."""
    lag = lagrange_polynomial(n).polynomial
    return lag.evaluate(lambda k: theta(k) / math.factorial(k + 1)) * (n + 1)


def decompose_in_theta(record: ChernRecord) -> GradedPolynomial:
    """``[M] = sum_lambda c^nu_lambda(M) theta_lambda / prod (lambda_i + 1)!``."""
    if record.convention != "normal":
        raise ValueError("decompose_in_theta needs normal-bundle Chern numbers")
    if not record.complete:
        raise IncompleteRecordError(f"{record.name}: all normal Chern numbers are required")
    terms = {}
    for part, c in record.numbers.items():
        denom = math.prod(math.factorial(p + 1) for p in part)
        terms[part] = Fraction(c, denom)
    return GradedPolynomial(terms, "theta")


def roundtrip_ok(N: int) -> bool:
    """``alpha(beta(z)) = z`` and ``beta(alpha(u)) = u`` modulo degree ``N+2``."""
    beta = theta_exponential(N)
    alpha = logarithm_series(N)
    z = TruncatedSeries.variable(N + 1, THETA)
    return series_compose(alpha, beta) == z and series_compose(beta, alpha) == z


def consistency_check(N: int) -> bool:
    """Logarithm coefficients agree with the theta decomposition of ``CP^n`` for ``n <= N``."""
    log = mischenko_logarithm(N)
    return all(log[n] == decompose_in_theta(cpn_record(n, "normal"))
               for n in range(1, N + 1))
