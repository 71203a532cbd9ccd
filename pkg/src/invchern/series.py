"""Truncated power series in one variable over a pluggable commutative ring.

A series is stored as its coefficients ``c_0 .. c_N`` together with the
truncation order ``N``; every result is exact modulo ``x^(N+1)``.  The
coefficient ring only needs ``+``, ``-``, ``*`` and ``==``, which is what
``int``, ``Fraction`` and :class:`invchern.partitions.GradedPolynomial` all
provide.  Binary operations refuse series of different orders instead of
silently truncating.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence


class SeriesError(ValueError):
    """Base class for usage errors raised by the series engine."""


class OrderMismatchError(SeriesError):
    pass


class NotInvertibleError(SeriesError, ArithmeticError):
    """Raised when a reciprocal or compositional inverse does not exist."""


@dataclass(frozen=True)
class Ring:
    """Names the coefficient ring of a series and supplies its 0 and 1."""

    name: str
    zero: Any
    one: Any


INTEGERS = Ring("ZZ", 0, 1)
RATIONALS = Ring("QQ", Fraction(0), Fraction(1))


class TruncatedSeries:
    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs: Iterable[Any], order: int | None = None,
                 ring: Ring = RATIONALS):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("order must be nonnegative")
        if len(coeffs) > order + 1:
            raise SeriesError(
                f"{len(coeffs)} coefficients do not fit order {order}; "
                "use truncate() explicitly")
        coeffs.extend(ring.zero for _ in range(order + 1 - len(coeffs)))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, value, order: int, ring: Ring = RATIONALS):
        return cls([value], order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = RATIONALS):
        return cls([ring.one], order, ring)

    @classmethod
    def variable(cls, order: int, ring: Ring = RATIONALS):
        """The series ``x`` (just ``0`` when ``order`` is 0)."""
        return cls([ring.zero, ring.one][:order + 1], order, ring)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts or ["0"]) + f" + O(x^{self.order + 1})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError("cannot raise the truncation order")
        return TruncatedSeries(self.coeffs[:order + 1], order, self.ring)

    def map(self, func) -> TruncatedSeries:
        """Apply ``func(n, c_n)`` to every coefficient."""
        return TruncatedSeries(
            [func(n, c) for n, c in enumerate(self.coeffs)], self.order, self.ring)

    def __add__(self, other):
        return series_add(self, _lift(other, self))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        return series_add(self, -_lift(other, self))

    def __rsub__(self, other):
        return series_add(_lift(other, self), -self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries([c * other for c in self.coeffs], self.order, self.ring)

    def __rmul__(self, other):
        return TruncatedSeries([other * c for c in self.coeffs], self.order, self.ring)

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, inner)


def _lift(value, like: TruncatedSeries) -> TruncatedSeries:
    if isinstance(value, TruncatedSeries):
        return value
    return TruncatedSeries.constant(value, like.order, like.ring)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries([x + y for x, y in zip(a.coeffs, b.coeffs)], a.order, a.ring)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    zero = a.ring.zero
    ac, bc = a.coeffs, b.coeffs
    # skip zero coefficients: most series here are sparse in low degree
    a_nz = [(i, c) for i, c in enumerate(ac) if c != zero]
    b_nz = [(j, c) for j, c in enumerate(bc) if c != zero]
    out = [zero] * (a.order + 1)
    for i, x in a_nz:
        for j, y in b_nz:
            if i + j > a.order:
                break
            out[i + j] = out[i + j] + x * y
    return TruncatedSeries(out, a.order, a.ring)


def series_recip(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is 1.

    Uses ``q_0 = 1`` and ``q_n = -sum_{k=1..n} a_k q_{n-k}``, so no division
    in the coefficient ring is ever needed.
    """
    if a.coeffs[0] != a.ring.one:
        raise NotInvertibleError("reciprocal needs constant term equal to 1")
    q = [a.ring.one]
    for n in range(1, a.order + 1):
        acc = a.ring.zero
        for k in range(1, n + 1):
            if a.coeffs[k] != a.ring.zero:
                acc = acc + a.coeffs[k] * q[n - k]
        q.append(-acc)
    return TruncatedSeries(q, a.order, a.ring)


def series_compose(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """``a(b(x))`` by Horner's rule; ``b`` must have zero constant term."""
    _check_orders(a, b)
    if b.coeffs[0] != b.ring.zero:
        raise SeriesError("inner series must have zero constant term")
    result = TruncatedSeries.constant(a.coeffs[-1], a.order, a.ring)
    for c in reversed(a.coeffs[:-1]):
        result = series_mul(result, b) + c
    return result


def series_comp_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``g`` of ``f = x + ...`` with ``g(f(x)) = x``.

    Coefficients of ``g`` are solved degree by degree: with the powers
    ``f^j`` precomputed, the coefficient of ``x^m`` in ``g(f(x))`` is
    ``sum_j g_j [x^m] f^j`` and ``[x^m] f^m = 1``, so ``g_m`` is forced.
    """
    ring, zero = f.ring, f.ring.zero
    if f.coeffs[0] != zero:
        raise NotInvertibleError("series must have zero constant term")
    if f.order == 0:
        return TruncatedSeries([zero], 0, ring)
    if f.coeffs[1] != ring.one:
        raise NotInvertibleError("series must start with x")
    powers = [None, f]
    for _ in range(2, f.order + 1):
        powers.append(series_mul(powers[-1], f))
    g = [zero, ring.one]
    for m in range(2, f.order + 1):
        acc = zero
        for j in range(1, m):
            if g[j] != zero:
                acc = acc + g[j] * powers[j].coeffs[m]
        g.append(-acc)
    return TruncatedSeries(g, f.order, ring)


def coeff_extract(h: TruncatedSeries, n: int):
    """``[x^n] h``."""
    if not 0 <= n <= h.order:
        raise SeriesError(f"index {n} outside 0..{h.order}")
    return h.coeffs[n]


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """``a^k`` by repeated squaring; negative ``k`` goes through the reciprocal."""
    if k < 0:
        return series_pow(series_recip(a), -k)
    result = TruncatedSeries.one(a.order, a.ring)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def from_polynomial(coeffs: Sequence[Any], order: int, ring: Ring = RATIONALS) -> TruncatedSeries:
    """Build a series from a possibly longer coefficient list, dropping the tail."""
    return TruncatedSeries(list(coeffs)[:order + 1], order, ring)
