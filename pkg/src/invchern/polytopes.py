"""Face censuses of associahedra and permutohedra, computed combinatorially.

Faces of the ``(n-1)``-dimensional associahedron are non-crossing diagonal
dissections of a convex ``(n+2)``-gon; a dissection whose cells have
``s_1, ..., s_k`` vertices is filed under the partition ``(s_i - 2)``.  Faces
of the permutohedron are ordered set partitions of ``{1..n}``, filed under
their multiset of block sizes.  In both cases a face described by ``k``
parts has dimension ``n - k``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .partitions import GradedPolynomial, Partition, make_partition, partitions_of

EXPLICIT_LIMIT = 8
POLYTOPES = ("associahedron", "permutohedron")


@dataclass(frozen=True)
class FaceCensus:
    n: int
    counts: Mapping[Partition, int]
    polytope: str

    def __post_init__(self):
        if self.polytope not in POLYTOPES:
            raise ValueError(f"unknown polytope {self.polytope!r}")
        if any(sum(p) != self.n for p in self.counts):
            raise ValueError("census keys must be partitions of n")

    def f_vector(self) -> list[int]:
        """Number of faces of each dimension ``0 .. n-1``."""
        f = [0] * self.n
        for part, c in self.counts.items():
            f[self.n - len(part)] += c
        return f

    def faces_of_dimension(self, dim: int) -> dict[Partition, int]:
        return {p: c for p, c in self.ordered() if self.n - len(p) == dim}

    def ordered(self) -> list[tuple[Partition, int]]:
        return [(p, self.counts[p]) for p in partitions_of(self.n) if p in self.counts]

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "polytope": self.polytope,
            "weight": self.n,
            "terms": [{"partition": list(p), "coeff": str(c)} for p, c in self.ordered()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> FaceCensus:
        counts = {make_partition(t["partition"]): int(t["coeff"]) for t in data["terms"]}
        return cls(int(data["weight"]), counts, data["polytope"])


# -- associahedron ------------------------------------------------------------

def _crosses(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


def _diagonals(m: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(m) for j in range(i + 2, m) if not (i == 0 and j == m - 1)]


def iter_dissections(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All sets of pairwise non-crossing diagonals of the ``(n+2)``-gon.

    Each set is yielded once, as a sorted tuple of ``(i, j)`` pairs over the
    vertex labels ``0 .. n+1``.
    """
    diags = _diagonals(n + 2)

    def extend(start, chosen):
        yield tuple(chosen)
        for idx in range(start, len(diags)):
            d = diags[idx]
            if all(not _crosses(d, c) for c in chosen):
                chosen.append(d)
                yield from extend(idx + 1, chosen)
                chosen.pop()

    yield from extend(0, [])


def cell_sizes(vertices: tuple[int, ...], diagonals) -> list[int]:
    """Vertex counts of the cells cut out of ``vertices`` by ``diagonals``."""
    diagonals = list(diagonals)
    if not diagonals:
        return [len(vertices)]
    a, b = diagonals[0]
    inside = tuple(v for v in vertices if a <= v <= b)
    outside = tuple(v for v in vertices if v <= a or v >= b)
    rest_in = [d for d in diagonals[1:] if a <= d[0] and d[1] <= b]
    rest_out = [d for d in diagonals[1:] if d not in rest_in]
    return cell_sizes(inside, rest_in) + cell_sizes(outside, rest_out)


def _census_by_enumeration(n: int) -> Counter:
    counts = Counter()
    vertices = tuple(range(n + 2))
    for diss in iter_dissections(n):
        counts[make_partition(s - 2 for s in cell_sizes(vertices, diss))] += 1
    return counts


@lru_cache(maxsize=None)
def _side(length: int) -> tuple:
    """Dissections of the region cut off by a chord spanning ``length`` edges.

    Returns ``(cell-size multiset, count)`` pairs; a single edge (length 1)
    cuts off nothing.  The cell on the chord has at least two further sides,
    so the chord's span splits into a first gap and a chain of at least one more.
    """
    if length == 1:
        return (((), 1),)
    out = Counter()
    for first in range(1, length):
        for cells, c in _side(first):
            for (r, rest), d in _chains(length - first).items():
                out[tuple(sorted(cells + rest + (r + 2,), reverse=True))] += c * d
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _chains(length: int) -> Counter:
    """Split ``length`` into consecutive gaps, each gap dissected independently.

    Keys are ``(number of gaps, cell sizes)``.
    """
    out = Counter()
    for cells, c in _side(length):
        out[(1, cells)] += c
    for first in range(1, length):
        for cells, c in _side(first):
            for (r, rest), d in _chains(length - first).items():
                out[(r + 1, tuple(sorted(cells + rest, reverse=True)))] += c * d
    return out


def _census_by_dp(n: int) -> Counter:
    counts = Counter()
    for cells, c in _side(n + 1):
        counts[make_partition(s - 2 for s in cells)] += c
    return counts


def dissection_census(n: int, method: str = "auto") -> FaceCensus:
    """Face census of the associahedron for weight ``n``.

    ``method`` is ``"enumerate"`` (explicit diagonal sets), ``"dp"``
    (counting recursion over chord lengths) or ``"auto"``, which enumerates
    up to ``EXPLICIT_LIMIT`` and counts beyond.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "auto":
        method = "enumerate" if n <= EXPLICIT_LIMIT else "dp"
    if method == "enumerate":
        counts = _census_by_enumeration(n)
    elif method == "dp":
        counts = _census_by_dp(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return FaceCensus(n, dict(counts), "associahedron")


# -- permutohedron ------------------------------------------------------------

def ordered_partition_count(part: Partition) -> int:
    """Ordered set partitions of ``{1..n}`` with block sizes ``part`` (in any order)."""
    n = sum(part)
    ways_to_fill = math.factorial(n) // math.prod(math.factorial(p) for p in part)
    arrangements = math.factorial(len(part)) // math.prod(
        math.factorial(m) for m in Counter(part).values())
    return ways_to_fill * arrangements


def iter_ordered_set_partitions(n: int) -> Iterator[tuple[frozenset, ...]]:
    def rec(remaining: int):
        if not remaining:
            yield ()
            return
        sub = remaining
        while sub:
            block = frozenset(i + 1 for i in range(n) if sub >> i & 1)
            for rest in rec(remaining & ~sub):
                yield (block,) + rest
            sub = (sub - 1) & remaining

    yield from rec((1 << n) - 1)


def ordered_partition_census(n: int, method: str = "closed") -> FaceCensus:
    """Face census of the permutohedron: ``"closed"`` form or ``"enumerate"``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "closed":
        counts = {p: ordered_partition_count(p) for p in partitions_of(n)}
    elif method == "enumerate":
        counts = dict(Counter(
            make_partition(len(b) for b in op) for op in iter_ordered_set_partitions(n)))
    else:
        raise ValueError(f"unknown method {method!r}")
    return FaceCensus(n, counts, "permutohedron")


def match_coefficients(census: FaceCensus, poly: GradedPolynomial) -> bool:
    """Whether ``poly`` has coefficient ``(-1)^k * count`` on every ``t_lambda`` with ``k`` parts."""
    if not poly.is_zero() and poly.weight != census.n:
        raise ValueError(f"weight mismatch: census {census.n}, polynomial {poly.weight}")
    return all(poly.coeff(p) == (-1) ** len(p) * census.counts.get(p, 0)
               for p in partitions_of(census.n))
