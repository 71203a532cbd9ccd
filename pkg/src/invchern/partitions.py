"""Integer partitions and polynomials in weighted variables ``t_1, t_2, ...``.

A monomial ``t_{l1} t_{l2} ... t_{lk}`` is identified with the partition
``(l1, ..., lk)`` (parts sorted descending), so the exponent of ``t_j`` is the
multiplicity of ``j`` among the parts and the weight of the monomial is the
size of the partition.  Partitions are plain tuples of ints.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Iterable, Mapping

from .series import Ring

Partition = tuple


class NamespaceError(TypeError):
    """Raised when polynomials in different variable namespaces are combined."""


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n if max_part is None else min(n, max_part)))


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in _partitions(n - first, min(first, n - first)):
            out.append((first,) + rest)
    return tuple(out)


def partition_order_key(p: Partition):
    """Sort key: by weight, then reverse lexicographic within a weight."""
    return (sum(p), tuple(-x for x in p))


def multiplicities(p: Partition) -> dict[int, int]:
    return dict(Counter(p))


def _normalize(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an exact rational, got {c!r}")
    return int(c) if isinstance(c, int) else Fraction(c)


class GradedPolynomial:
    """Immutable polynomial ``sum_lambda c_lambda t_lambda`` with exact coefficients.

    Integral coefficients are stored as ``int``; the rest as ``Fraction``.
    ``namespace`` names the variable family (``"t"`` for characteristic-number
    variables, ``"theta"`` for theta-divisor classes); arithmetic across
    namespaces raises :class:`NamespaceError`.
    """

    __slots__ = ("_terms", "namespace", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), namespace: str = "t"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, object] = {}
        for part, coeff in items:
            key = make_partition(part)
            acc[key] = acc.get(key, 0) + coeff
        self._terms = {k: _normalize(v) for k, v in acc.items() if v != 0}
        self.namespace = namespace
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, namespace: str) -> GradedPolynomial:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.namespace = namespace
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, namespace: str = "t") -> GradedPolynomial:
        return cls._raw({}, namespace)

    @classmethod
    def one(cls, namespace: str = "t") -> GradedPolynomial:
        return cls._raw({(): 1}, namespace)

    @classmethod
    def var(cls, k: int, namespace: str = "t") -> GradedPolynomial:
        """The single variable ``t_k``."""
        if k < 1:
            raise ValueError("variable index must be >= 1")
        return cls._raw({(k,): 1}, namespace)

    @classmethod
    def monomial(cls, part: Iterable[int], coeff=1, namespace: str = "t") -> GradedPolynomial:
        return cls({make_partition(part): coeff}, namespace)

    # -- inspection -------------------------------------------------------

    def terms(self) -> list[tuple[Partition, object]]:
        """Nonzero terms in canonical order (weight, then reverse lex)."""
        return [(p, self._terms[p]) for p in sorted(self._terms, key=partition_order_key)]

    def coeff(self, part: Iterable[int]):
        return self._terms.get(make_partition(part), 0)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def weights(self) -> set[int]:
        return {sum(p) for p in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    @property
    def weight(self) -> int:
        """Weight of a homogeneous polynomial (0 for the zero polynomial)."""
        ws = self.weights()
        if len(ws) > 1:
            raise ValueError("polynomial is not homogeneous")
        return ws.pop() if ws else 0

    def component(self, weight: int) -> GradedPolynomial:
        return GradedPolynomial._raw(
            {p: c for p, c in self._terms.items() if sum(p) == weight}, self.namespace)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def gcd_coefficients(self) -> int:
        """gcd of the absolute values of all coefficients (0 for the zero polynomial)."""
        if not self.is_integral():
            raise ValueError("gcd_coefficients needs integral coefficients")
        return math.gcd(*self._terms.values()) if self._terms else 0

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> GradedPolynomial | None:
        if isinstance(other, GradedPolynomial):
            if other.namespace != self.namespace:
                raise NamespaceError(
                    f"cannot mix namespaces {self.namespace!r} and {other.namespace!r}")
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return GradedPolynomial({(): other}, self.namespace)
        return None

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.namespace == other.namespace and self._terms == other._terms
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.namespace, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for p, c in o._terms.items():
            v = terms.get(p, 0) + c
            if v:
                terms[p] = _normalize(v)
            else:
                terms.pop(p, None)
        return GradedPolynomial._raw(terms, self.namespace)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial._raw({p: -c for p, c in self._terms.items()}, self.namespace)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            if other == 0:
                return GradedPolynomial.zero(self.namespace)
            return GradedPolynomial._raw(
                {p: _normalize(c * other) for p, c in self._terms.items()}, self.namespace)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return poly_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = GradedPolynomial.one(self.namespace)
        for _ in range(k):
            result = poly_mul(result, self)
        return result

    def __truediv__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        return NotImplemented

    def exact_div(self, k: int) -> GradedPolynomial:
        """Divide an integral polynomial by ``k``, failing on any remainder."""
        out = {}
        for p, c in self._terms.items():
            q, r = divmod(c, k)
            if r or not isinstance(c, int):
                raise ArithmeticError(f"coefficient {c} of {p} not divisible by {k}")
            out[p] = q
        return GradedPolynomial._raw(out, self.namespace)

    # -- substitution -----------------------------------------------------

    def substitute_scaled(self, scale: Callable[[int], object]) -> GradedPolynomial:
        """Replace each ``t_k`` by ``scale(k) * t_k``."""
        out = {}
        for p, c in self._terms.items():
            factor = 1
            for part in p:
                factor = factor * scale(part)
            out[p] = c * factor
        return GradedPolynomial(out, self.namespace)

    def evaluate(self, values: Callable[[int], object] | Mapping[int, object]):
        """Substitute ``t_k -> values(k)``; values may be numbers or polynomials."""
        get = values.__getitem__ if isinstance(values, Mapping) else values
        cache: dict[int, object] = {}
        total = 0
        for p, c in self._terms.items():
            term = c
            for part in p:
                if part not in cache:
                    cache[part] = get(part)
                term = term * cache[part]
            total = total + term
        return total

    def rename(self, namespace: str) -> GradedPolynomial:
        return GradedPolynomial._raw(dict(self._terms), namespace)

    # -- display / serialization -----------------------------------------

    def format(self, var: str | None = None) -> str:
        var = var or self.namespace
        if not self._terms:
            return "0"
        out = []
        for p, c in self.terms():
            mono = "*".join(
                f"{var}{k}" + (f"^{e}" if e > 1 else "")
                for k, e in sorted(Counter(p).items()))
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GradedPolynomial({self.format()!r}, namespace={self.namespace!r})"

    def to_json(self) -> dict:
        ws = self.weights()
        data = {
            "weight": ws.pop() if len(ws) == 1 else (0 if not ws else None),
            "terms": [{"partition": list(p), "coeff": str(c)} for p, c in self.terms()],
        }
        if self.namespace != "t":
            data["namespace"] = self.namespace
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> GradedPolynomial:
        terms = [(tuple(t["partition"]), Fraction(t["coeff"])) for t in data["terms"]]
        poly = cls(terms, data.get("namespace", "t"))
        if data.get("weight") is not None and not poly.is_zero() and poly.weight != data["weight"]:
            raise ValueError("declared weight does not match terms")
        return poly

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def poly_mul(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    """Product of two polynomials; monomials multiply by merging their parts."""
    if a.namespace != b.namespace:
        raise NamespaceError(f"cannot mix namespaces {a.namespace!r} and {b.namespace!r}")
    out: dict[Partition, object] = {}
    for p, c in a._terms.items():
        for q, d in b._terms.items():
            key = _merge(p, q)
            out[key] = out.get(key, 0) + c * d
    return GradedPolynomial._raw(
        {k: _normalize(v) for k, v in out.items() if v != 0}, a.namespace)


@lru_cache(maxsize=1 << 16)
def _merge(p: Partition, q: Partition) -> Partition:
    if not p:
        return q
    if not q:
        return p
    return tuple(sorted(p + q, reverse=True))


def gcd_coefficients(p: GradedPolynomial) -> int:
    return p.gcd_coefficients()


def substitute_scaled(p: GradedPolynomial, scale: Callable[[int], object]) -> GradedPolynomial:
    return p.substitute_scaled(scale)


def graded_ring(namespace: str = "t") -> Ring:
    return Ring(namespace, GradedPolynomial.zero(namespace), GradedPolynomial.one(namespace))


GRADED = graded_ring("t")


# -- symmetric functions ------------------------------------------------------

def _expand_elementary(k: int, nvars: int) -> dict[tuple, int]:
    out = {}
    for combo in itertools.combinations(range(nvars), k):
        exps = [0] * nvars
        for i in combo:
            exps[i] = 1
        out[tuple(exps)] = 1
    return out


def _mul_expanded(a: dict, b: dict) -> dict:
    out: dict[tuple, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


@lru_cache(maxsize=None)
def _e_to_m(mu: Partition, nvars: int) -> tuple:
    poly = {(0,) * nvars: 1}
    for part in mu:
        poly = _mul_expanded(poly, _expand_elementary(part, nvars))
    # a symmetric polynomial's coefficient of m_lambda sits at the sorted exponent vector
    out = {}
    for exps, c in poly.items():
        if c and list(exps) == sorted(exps, reverse=True):
            out[tuple(e for e in exps if e)] = c
    return tuple(sorted(out.items(), key=lambda kv: partition_order_key(kv[0])))


def elementary_to_monomial(mu: Iterable[int], nvars: int | None = None) -> dict[Partition, int]:
    """Expand ``e_{mu_1} ... e_{mu_k}`` in the monomial symmetric basis.

    The product is multiplied out over ``nvars`` variables (default ``|mu|``)
    and collected by exponent multiset.

    >>> elementary_to_monomial((1, 1))
    {(2,): 1, (1, 1): 2}
    """
    mu = make_partition(mu)
    n = sum(mu)
    if nvars is None:
        nvars = n
    if nvars < n:
        raise ValueError(f"need at least {n} variables, got {nvars}")
    return dict(_e_to_m(mu, nvars))


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    a = [row[:] + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def basis_matrix(n: int) -> tuple[list[Partition], list[list[int]]]:
    """Rows ``mu``, columns ``lambda``: coefficient of ``m_lambda`` in ``e_mu``."""
    parts = partitions_of(n)
    rows = []
    for mu in parts:
        exp = elementary_to_monomial(mu, n)
        rows.append([exp.get(lam, 0) for lam in parts])
    return parts, rows


def chern_basis_convert(numbers: Mapping, direction: str = "to_monomial") -> dict[Partition, object]:
    """Convert Chern numbers between the product basis and the monomial basis.

    In the product basis the key ``mu`` stands for ``c_{mu_1} ... c_{mu_k}``;
    in the monomial basis ``lambda`` stands for the class of ``m_lambda`` in
    the Chern roots.  ``direction`` is ``"to_monomial"`` or ``"to_product"``.
    All partitions of the common weight must be present.
    """
    if direction not in ("to_monomial", "to_product"):
        raise ValueError(f"unknown direction {direction!r}")
    numbers = {make_partition(k): v for k, v in numbers.items()}
    weights = {sum(k) for k in numbers}
    if len(weights) != 1:
        raise ValueError(f"inconsistent weights {sorted(weights)}")
    n = weights.pop()
    parts, mat = basis_matrix(n)
    missing = [p for p in parts if p not in numbers]
    if missing:
        raise ValueError(f"missing numbers for partitions {missing}")
    vec = [numbers[p] for p in parts]
    if direction == "to_product":
        out = [sum(c * v for c, v in zip(row, vec)) for row in mat]
    else:
        out = _solve_exact([[Fraction(c) for c in row] for row in mat],
                           [Fraction(v) for v in vec])
    return {p: _normalize(Fraction(v)) for p, v in zip(parts, out)}


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def dominates(a: Partition, b: Partition) -> bool:
    """``a >= b`` in dominance order (same weight assumed)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True
