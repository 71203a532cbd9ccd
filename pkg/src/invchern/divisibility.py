"""Divisibility of Chern numbers by the Euler characteristic.

``d(M)`` is the gcd of all monomial Chern numbers of ``M``; ``M`` is
*extremely divisible* when ``chi(M) != 0`` and ``d(M) = |chi(M)|``.  Since
monomial and product-basis numbers differ by a unimodular integer change of
basis, ``d`` does not depend on the basis or on the tangent/normal
convention.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Mapping

from .chern import (
    ChernRecord,
    IncompleteRecordError,
    euler_characteristic,
    flip_convention,
    hypersurface_record,
)
from .partitions import chern_basis_convert


@dataclass(frozen=True)
class SurfaceRecord:
    name: str
    c1sq: int
    c2: int

    def to_chern_record(self) -> ChernRecord:
        nums = chern_basis_convert({(1, 1): self.c1sq, (2,): self.c2}, "to_monomial")
        return ChernRecord(self.name, 2, "tangent", nums)

    @classmethod
    def from_chern_record(cls, record: ChernRecord) -> SurfaceRecord:
        if record.dimension != 2:
            raise ValueError("surface records need dimension 2")
        if record.convention != "tangent":
            record = flip_convention(record)
        prod = chern_basis_convert(record.numbers, "to_product")
        return cls(record.name, prod[(1, 1)], prod[(2,)])


@dataclass(frozen=True)
class DivisibilityVerdict:
    d: int
    chi: int
    extremely_divisible: bool
    witnessed: bool = False

    def __post_init__(self):
        if self.extremely_divisible != (self.chi != 0 and self.d == abs(self.chi)):
            raise ValueError("inconsistent verdict")


def _verdict(d: int, chi: int, witnessed: bool = False) -> DivisibilityVerdict:
    return DivisibilityVerdict(d, chi, chi != 0 and d == abs(chi), witnessed)


def gcd_chern_numbers(record: ChernRecord) -> DivisibilityVerdict:
    """Verdict for a record.

    A complete record gets an exact verdict.  A partial tangent record that
    contains ``chi`` and at least one number not divisible by it gets a
    negative verdict with ``witnessed=True`` (its ``d`` is then the gcd of
    the listed numbers).  Anything else raises :class:`IncompleteRecordError`.
    """
    if record.complete:
        d = math.gcd(*record.numbers.values())
        return _verdict(d, euler_characteristic(record))
    if record.convention != "tangent":
        raise IncompleteRecordError(f"{record.name}: partial normal records cannot be judged")
    chi = euler_characteristic(record)
    if chi != 0 and any(v % chi for v in record.numbers.values()):
        return _verdict(math.gcd(*record.numbers.values()), chi, witnessed=True)
    raise IncompleteRecordError(
        f"{record.name}: listed numbers are all multiples of chi; need the full record")


def surface_verdict(s: SurfaceRecord) -> DivisibilityVerdict:
    if s.c2 == 0:
        raise ValueError(f"{s.name}: c2 = 0, divisibility by chi is undefined")
    return _verdict(math.gcd(s.c1sq, s.c2), s.c2)


def del_pezzo_surface(degree: int) -> SurfaceRecord:
    """Del Pezzo surface of degree ``d``: ``c1^2 = d``, ``chi = 12 - d``."""
    if not 1 <= degree <= 9:
        raise ValueError("del Pezzo degree must lie in 1..9")
    return SurfaceRecord(f"S_{degree}", degree, 12 - degree)


def toric_surface(N: int) -> SurfaceRecord:
    """Smooth toric surface of an ``N``-gon: ``chi = N`` and Todd genus 1 force ``c1^2 = 12 - N``."""
    if N < 3:
        raise ValueError("a polygon needs N >= 3")
    return SurfaceRecord(f"X_{N}", 12 - N, N)


def del_pezzo_scan() -> dict[int, DivisibilityVerdict]:
    return {d: surface_verdict(del_pezzo_surface(d)) for d in range(1, 10)}


def toric_surface_scan(maxN: int) -> dict[int, DivisibilityVerdict]:
    if maxN < 3:
        raise ValueError("maxN must be >= 3")
    out = {}
    for N in range(3, maxN + 1):
        s = toric_surface(N)
        if surface_todd(s) != 1:
            raise AssertionError(f"Todd genus of {s.name} is {surface_todd(s)}, expected 1")
        out[N] = surface_verdict(s)
    return out


def hypersurface_scan(maxd: int, ambient: int = 3) -> dict[int, DivisibilityVerdict]:
    """Verdicts for smooth degree-``d`` hypersurfaces of ``CP^ambient``, ``d = 1..maxd``."""
    if maxd < 1:
        raise ValueError("maxd must be >= 1")
    return {d: gcd_chern_numbers(hypersurface_record(ambient, d)) for d in range(1, maxd + 1)}


def surface_signature(s: SurfaceRecord) -> Fraction:
    """Signature from ``c1^2 = 2 chi + 3 sigma``; see :func:`signature_is_integral`."""
    return Fraction(s.c1sq - 2 * s.c2, 3)


def signature_is_integral(s: SurfaceRecord) -> bool:
    return surface_signature(s).denominator == 1


def surface_todd(s: SurfaceRecord) -> Fraction:
    return Fraction(s.c1sq + s.c2, 12)


def chern_slope(s: SurfaceRecord) -> tuple[Fraction, bool]:
    """``(c1^2 / c2, slope <= 3)``; the second entry is the BMY bound check."""
    if s.c2 == 0:
        raise ValueError(f"{s.name}: slope undefined for c2 = 0")
    slope = Fraction(s.c1sq, s.c2)
    return slope, slope <= 3


def proportionality_check(a: ChernRecord, b: ChernRecord) -> Fraction | None:
    """The ratio ``mu`` with ``c_lambda(a) = mu c_lambda(b)`` for all ``lambda``, if any."""
    if a.dimension != b.dimension:
        raise ValueError("records have different dimensions")
    if not (a.complete and b.complete):
        raise IncompleteRecordError("proportionality needs complete records")
    if a.convention != b.convention:
        b = flip_convention(b)
    mu = None
    for part, y in b.numbers.items():
        x = a.numbers[part]
        if y == 0:
            if x != 0:
                return None
            continue
        ratio = Fraction(x, y)
        if mu is None:
            mu = ratio
        elif ratio != mu:
            return None
    return mu


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    record: ChernRecord | None
    surface: SurfaceRecord | None
    note: str


def load_catalog_data() -> Mapping:
    text = resources.files("invchern").joinpath("data/catalog.json").read_text()
    return json.loads(text)


def record_from_catalog(data: Mapping) -> ChernRecord:
    """Parse a catalog record, converting product-basis numbers to monomial ones."""
    nums = {tuple(e["partition"]): int(e["coeff"]) for e in data["numbers"]}
    if data.get("basis", "monomial") == "product":
        nums = chern_basis_convert(nums, "to_monomial")
    return ChernRecord(data["name"], int(data["dimension"]), data["convention"], nums,
                       data.get("note", ""))


def builtin_catalog() -> list[CatalogEntry]:
    data = load_catalog_data()
    out = []
    for s in data["surfaces"]:
        surf = SurfaceRecord(s["name"], s["c1sq"], s["c2"])
        out.append(CatalogEntry(surf.name, "surface", surf.to_chern_record(), surf, s.get("note", "")))
    for d in range(1, 10):
        surf = del_pezzo_surface(d)
        out.append(CatalogEntry(surf.name, "del Pezzo", surf.to_chern_record(), surf, ""))
    for N in range(3, 13):
        surf = toric_surface(N)
        out.append(CatalogEntry(surf.name, "toric surface", surf.to_chern_record(), surf, ""))
    for r in data["records"]:
        rec = record_from_catalog(r)
        out.append(CatalogEntry(rec.name, "record", rec, None, rec.note))
    for f in data.get("flags", []):
        out.append(CatalogEntry(f["name"], "flag", None, None, f["note"]))
    return out
