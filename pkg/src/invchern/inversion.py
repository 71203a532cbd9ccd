"""Lagrange and multiplicative inversion polynomials, Hessenberg determinants
and partial ordinary Bell polynomials.

Every family is computed along at least two unrelated routes so that the
routes can be checked against each other.  All polynomials live in the
single ``t`` namespace; ``L_n`` is the coefficient of ``x^(n+1)`` in the
compositional inverse of ``x + sum t_k x^(k+1)`` and ``M_n`` the coefficient
of ``x^n`` in ``1 / (1 + sum t_k x^k)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .partitions import GRADED, GradedPolynomial, graded_ring
from .series import (
    TruncatedSeries,
    coeff_extract,
    series_comp_inverse,
    series_pow,
    series_recip,
)

LAGRANGE_ROUTES = ("recursive", "direct-formula")
MULT_ROUTES = ("recursive", "determinant")
HAT_ROUTES = ("scaled", "series")


@dataclass(frozen=True)
class InversionResult:
    n: int
    polynomial: GradedPolynomial
    route: str

    def __post_init__(self):
        if not self.polynomial.is_homogeneous() or self.polynomial.weight != self.n:
            raise ValueError(f"result is not homogeneous of weight {self.n}")
        if not self.polynomial.is_integral():
            raise ValueError("inversion polynomial has non-integral coefficients")


def universal_series(n: int, order: int | None = None, namespace: str = "t") -> TruncatedSeries:
    """``1 + t_1 x + ... + t_n x^n`` truncated at ``order`` (default ``n``)."""
    order = n if order is None else order
    ring = GRADED if namespace == "t" else graded_ring(namespace)
    coeffs = [ring.one] + [GradedPolynomial.var(k, namespace) for k in range(1, min(n, order) + 1)]
    return TruncatedSeries(coeffs, order, ring)


def _check_n(n: int):
    if n < 1:
        raise ValueError("n must be >= 1")


@lru_cache(maxsize=None)
def lagrange_polynomial(n: int, route: str = "recursive") -> InversionResult:
    """``L_n``: the ``n``-th coefficient of the compositional inverse.

    ``recursive`` inverts ``f = x + sum_{k<=n} t_k x^(k+1)`` degree by degree;
    ``direct-formula`` uses ``(n+1) L_n = [x^n] (x/f)^(n+1)``.
    """
    _check_n(n)
    if route == "recursive":
        f = TruncatedSeries(
            [GRADED.zero, GRADED.one] + [GradedPolynomial.var(k) for k in range(1, n + 1)],
            n + 1, GRADED)
        poly = coeff_extract(series_comp_inverse(f), n + 1)
    elif route == "direct-formula":
        x_over_f = series_recip(universal_series(n))
        poly = coeff_extract(series_pow(x_over_f, n + 1), n).exact_div(n + 1)
    else:
        raise ValueError(f"unknown route {route!r}; expected one of {LAGRANGE_ROUTES}")
    return InversionResult(n, poly, route)


def hessenberg_determinant(z: Sequence):
    """Determinant of the lower Hessenberg matrix with rows
    ``(z1, 1, 0, ...), (z2, z1, 1, ...), ..., (zn, ..., z1)``.

    Expanding along the first column gives
    ``D_m = sum_{k=1..m} (-1)^(k-1) z_k D_{m-k}`` with ``D_0 = 1``.
    """
    if not z:
        raise ValueError("need at least one entry")
    dets = [1]
    for m in range(1, len(z) + 1):
        acc = 0
        for k in range(1, m + 1):
            term = z[k - 1] * dets[m - k]
            acc = acc + term if k % 2 else acc - term
        dets.append(acc)
    return dets[-1]


@lru_cache(maxsize=None)
def mult_inversion_polynomial(n: int, route: str = "recursive") -> InversionResult:
    """``M_n``: the ``n``-th coefficient of ``1 / (1 + sum t_k x^k)``."""
    _check_n(n)
    if route == "recursive":
        poly = coeff_extract(series_recip(universal_series(n)), n)
    elif route == "determinant":
        det = hessenberg_determinant([GradedPolynomial.var(k) for k in range(1, n + 1)])
        poly = det if n % 2 == 0 else -det
    else:
        raise ValueError(f"unknown route {route!r}; expected one of {MULT_ROUTES}")
    return InversionResult(n, poly, route)


@lru_cache(maxsize=None)
def bell_partial(n: int, k: int) -> GradedPolynomial:
    """Partial ordinary Bell polynomial: ``[x^n] (sum_m z_m x^m)^k`` with ``z_m = t_m``."""
    if k < 1 or n < k:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    inner = TruncatedSeries(
        [GRADED.zero] + [GradedPolynomial.var(m) for m in range(1, n - k + 2)], n, GRADED)
    return coeff_extract(series_pow(inner, k), n)


def bell_gcd(n: int, k: int) -> int:
    """gcd of the coefficients of ``bell_partial(n, k)``; compare :func:`bell_gcd_predicted`."""
    return bell_partial(n, k).gcd_coefficients()


def bell_gcd_predicted(n: int, k: int) -> int:
    return k // math.gcd(n, k)


def shift_bell_variables(p: GradedPolynomial) -> GradedPolynomial:
    """Evaluate at ``z_1 = 1`` and ``z_(j+1) = t_j``."""
    return p.evaluate(lambda j: 1 if j == 1 else GradedPolynomial.var(j - 1))


@lru_cache(maxsize=None)
def hat_mult_inversion(n: int, route: str = "scaled") -> GradedPolynomial:
    """Reciprocal coefficients for series in exponential form.

    With ``P(x) = 1 + sum p_k x^k / k!`` and ``1/P = 1 + sum q_n x^n / n!``
    this returns ``q_n`` as a polynomial in the ``p_k`` (written ``t_k``).
    ``scaled`` rescales ``M_n`` (``t_k -> t_k / k!``, times ``n!``);
    ``series`` inverts the exponential-form series directly.
    """
    _check_n(n)
    if route == "scaled":
        m = mult_inversion_polynomial(n).polynomial
        poly = m.substitute_scaled(lambda k: Fraction(1, math.factorial(k))) * math.factorial(n)
    elif route == "series":
        coeffs = [GRADED.one] + [GradedPolynomial.var(k) / math.factorial(k) for k in range(1, n + 1)]
        poly = coeff_extract(series_recip(TruncatedSeries(coeffs, n, GRADED)), n) * math.factorial(n)
    else:
        raise ValueError(f"unknown route {route!r}; expected one of {HAT_ROUTES}")
    if not poly.is_integral():
        raise ArithmeticError(f"hat M_{n} came out non-integral: {poly}")
    return poly


def sign_rule_holds(p: GradedPolynomial) -> bool:
    """Whether every coefficient of ``t_lambda`` has sign ``(-1)^(number of parts)``.

    Observed for ``L_n``, ``M_n`` and hat ``M_n``; kept as a tested
    empirical rule rather than a theorem.
    """
    return all((c > 0) == (len(part) % 2 == 0) for part, c in p.terms())
