"""Generating functions of monomial Chern numbers.

All computations run through truncated series in one variable ``x`` with
graded-polynomial coefficients: the cohomology ring of ``CP^n`` is
``Z[x]/x^(n+1)``, so the universal monomial class of a sum of line bundles
with roots ``a_i x`` is a product of copies of ``1 + sum_k (a_i x)^k t_k``.
The generating function of a variety is the ``x^n`` coefficient of its
class multiplied by the value of ``x^n`` on the fundamental cycle.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from .inversion import lagrange_polynomial, mult_inversion_polynomial, universal_series
from .partitions import (
    GradedPolynomial,
    Partition,
    chern_basis_convert,
    make_partition,
    partitions_of,
)
from .series import TruncatedSeries, coeff_extract, series_mul, series_pow, series_recip

CONVENTIONS = ("tangent", "normal")


class IncompleteRecordError(ValueError):
    pass


@dataclass(frozen=True)
class ChernRecord:
    """Monomial Chern numbers of a variety, keyed by partitions of its dimension.

    ``numbers`` may be partial; :attr:`complete` tells whether every
    partition of ``dimension`` is present.
    """

    name: str
    dimension: int
    convention: str
    numbers: Mapping[Partition, int] = field(compare=True)
    note: str = field(default="", compare=False)

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"convention must be one of {CONVENTIONS}")
        nums = {make_partition(k): v for k, v in self.numbers.items()}
        bad = [k for k in nums if sum(k) != self.dimension]
        if bad:
            raise ValueError(f"partitions {bad} do not have weight {self.dimension}")
        object.__setattr__(self, "numbers", nums)

    @property
    def complete(self) -> bool:
        return all(p in self.numbers for p in partitions_of(self.dimension))

    def number(self, part) -> int:
        return self.numbers[make_partition(part)]

    def as_polynomial(self) -> GradedPolynomial:
        return GradedPolynomial(self.numbers.items())

    @classmethod
    def from_polynomial(cls, name: str, poly: GradedPolynomial, dimension: int,
                        convention: str, note: str = "") -> ChernRecord:
        nums = {p: poly.coeff(p) for p in partitions_of(dimension)}
        return cls(name, dimension, convention, nums, note)

    def to_json(self) -> dict:
        parts = sorted(self.numbers, key=lambda p: tuple(-x for x in p))
        data = {
            "name": self.name,
            "dimension": self.dimension,
            "convention": self.convention,
            "numbers": [{"partition": list(p), "coeff": str(self.numbers[p])} for p in parts],
            "complete": self.complete,
        }
        if self.note:
            data["note"] = self.note
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> ChernRecord:
        nums = {}
        for entry in data["numbers"]:
            nums[tuple(entry["partition"])] = int(entry["coeff"])
        rec = cls(data["name"], int(data["dimension"]), data["convention"], nums,
                  data.get("note", ""))
        if "complete" in data and bool(data["complete"]) != rec.complete:
            raise ValueError("'complete' flag disagrees with the numbers given")
        return rec

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _check_n(n: int):
    if n < 1:
        raise ValueError("dimension must be >= 1")


def cpn_tangent_gf(n: int) -> GradedPolynomial:
    """``C^tau(CP^n)``: ``[x^n] (1 + x t_1 + ... + x^n t_n)^(n+1)``."""
    _check_n(n)
    return coeff_extract(series_pow(universal_series(n), n + 1), n)


def cpn_normal_gf(n: int) -> GradedPolynomial:
    """``C^nu(CP^n)``: ``[x^n] (1 + x t_1 + ... + x^n t_n)^-(n+1)``."""
    _check_n(n)
    return coeff_extract(series_pow(universal_series(n), -(n + 1)), n)


def duality_check(n: int) -> bool:
    """Tangent times normal class of ``CP^n`` is 1, computed as series.

    Also checks that the extracted normal numbers match ``(n+1) L_n`` from
    compositional inversion.
    """
    _check_n(n)
    u = universal_series(n)
    tangent = series_pow(u, n + 1)
    normal = series_pow(u, -(n + 1))
    if series_mul(tangent, normal) != TruncatedSeries.one(n, u.ring):
        return False
    if tangent[n] != cpn_tangent_gf(n):
        return False
    return normal[n] == lagrange_polynomial(n).polynomial * (n + 1)


def _theta_class(n: int, k: int = 1) -> TruncatedSeries:
    """Tangent class of ``Theta^n(k)``: inverse of the normal class with root ``k x``."""
    normal = universal_series(n).map(lambda j, c: c * k ** j)
    return series_recip(normal)


def theta_tangent_gf(n: int) -> GradedPolynomial:
    """``C^tau(Theta^n)``: ``[x^n] 1/(1 + sum t_k x^k)`` times ``<x^n, Theta^n> = (n+1)!``."""
    _check_n(n)
    return coeff_extract(_theta_class(n), n) * math.factorial(n + 1)


def theta_normal_gf(n: int) -> GradedPolynomial:
    _check_n(n)
    return GradedPolynomial.monomial((n,), math.factorial(n + 1))


def theta_power_gf(n: int, k: int) -> tuple[GradedPolynomial, GradedPolynomial]:
    """Tangent and normal generating functions of ``Theta^n(k)``.

    The normal bundle has root ``k x`` and ``<x^n, Theta^n(k)> = k (n+1)!``.
    """
    _check_n(n)
    if k < 1:
        raise ValueError("k must be >= 1")
    pairing = k * math.factorial(n + 1)
    tangent = coeff_extract(_theta_class(n, k), n) * pairing
    normal = GradedPolynomial.monomial((n,), k ** n * pairing)
    return tangent, normal


def hypersurface_gf(m: int, d: int) -> GradedPolynomial:
    """Tangent generating function of a smooth degree-``d`` hypersurface in ``CP^m``.

    ``tau V + O(d) = tau CP^m`` restricted to ``V``, so the class is
    ``(1 + sum x^j t_j)^(m+1) / (1 + sum (d x)^j t_j)`` and ``<x^(m-1), V> = d``.
    """
    if m < 2 or d < 1:
        raise ValueError("need m >= 2 and d >= 1")
    n = m - 1
    u = universal_series(n)
    ambient = series_pow(u, m + 1)
    normal = u.map(lambda j, c: c * d ** j)
    return coeff_extract(series_mul(ambient, series_recip(normal)), n) * d


def euler_characteristic(record: ChernRecord) -> int:
    """Signed top Chern number ``c_(1,...,1)`` of the tangent bundle."""
    if record.convention != "tangent":
        record = flip_convention(record)
    top = (1,) * record.dimension
    if top not in record.numbers:
        raise IncompleteRecordError(f"{record.name}: top Chern number missing")
    return record.numbers[top]


def flip_convention(record: ChernRecord) -> ChernRecord:
    """Convert tangent numbers to normal numbers or back.

    Total Chern classes satisfy ``c(tau) c(nu) = 1``, so ``c_k`` of one bundle
    is ``M_k`` evaluated at the Chern classes of the other.  The monomial
    numbers are taken to the product basis, pushed through that substitution
    and brought back.
    """
    if not record.complete:
        raise IncompleteRecordError(f"{record.name}: conversion needs all Chern numbers")
    n = record.dimension
    products = chern_basis_convert(record.numbers, "to_product")
    flipped = {}
    for mu in partitions_of(n):
        poly = GradedPolynomial.one()
        for part in mu:
            poly = poly * mult_inversion_polynomial(part).polynomial
        # product-basis numbers are a linear functional on polynomials in the c_k
        flipped[mu] = sum(c * products[lam] for lam, c in poly.terms())
    monomial = chern_basis_convert(flipped, "to_monomial")
    other = "normal" if record.convention == "tangent" else "tangent"
    return ChernRecord(record.name, n, other, monomial, record.note)


def cpn_record(n: int, convention: str = "tangent") -> ChernRecord:
    gf = cpn_tangent_gf(n) if convention == "tangent" else cpn_normal_gf(n)
    return ChernRecord.from_polynomial(f"CP^{n}", gf, n, convention)


def theta_record(n: int, k: int = 1, convention: str = "tangent") -> ChernRecord:
    tangent, normal = theta_power_gf(n, k)
    name = f"Theta^{n}" if k == 1 else f"Theta^{n}({k})"
    return ChernRecord.from_polynomial(
        name, tangent if convention == "tangent" else normal, n, convention)


def hypersurface_record(m: int, d: int) -> ChernRecord:
    return ChernRecord.from_polynomial(f"V_{d} in CP^{m}", hypersurface_gf(m, d), m - 1, "tangent")
