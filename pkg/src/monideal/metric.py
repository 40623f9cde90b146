"""Certified Hausdorff-type distance between finitely generated monomial ideals.

The directed distance from ``I`` to ``J`` is the supremum, over exponent vectors
``g`` in the staircase of ``I``, of the euclidean distance from ``g`` to the
staircase of ``J``. For closed ``J`` the squared distance from a point ``p`` is
``min_b sum_i max(b_i - p_i, 0)^2`` over generators ``b`` of ``J``, an exact
rational that is non-increasing in every coordinate of ``p``.

The supremum is found by best-first branch and bound over ``[0, U]^d`` with
``U`` one past the largest generator coordinate (clamping a point to ``U`` keeps
it in the staircase and cannot decrease the objective). Cells are half-open
``[l, u)``. A cell meets the staircase of ``I`` in the boxes ``[max(l, a), u)``
for generators ``a < u``; the objective at their common lower corner bounds the
cell from above, and at each piece's own lower corner gives attained values.
Cells split on their longest edge at a generator coordinate inside it, so
every cell eventually has coinciding bounds. All comparisons are on exact
squared rationals; square roots are taken only for the final enclosure, with
outward rounding.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DistanceUndefined, OpenBoxError, ZeroIdealError
from .ideal import Ideal, _same_cfg, irredundant_generators


@dataclass(frozen=True)
class Enclosure:
    """Rational bounds ``lo <= dist <= hi``."""

    lo: Fraction
    hi: Fraction
    expanded: int = field(default=0, compare=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def format(self, digits: int = 8) -> str:
        return f"[{decimal_down(self.lo, digits)}, {decimal_up(self.hi, digits)}]"

    def __str__(self):
        return self.format()


@dataclass(frozen=True, order=True)
class SearchBox:
    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]


def _decimal(x: Fraction, digits: int, up: bool) -> str:
    scale = 10 ** digits
    n = x.numerator * scale
    q, r = divmod(n, x.denominator)
    if up and r:
        q += 1
    whole, frac = divmod(q, scale)
    return f"{whole}.{frac:0{digits}d}" if digits else str(whole)


def decimal_down(x: Fraction, digits: int) -> str:
    return _decimal(Fraction(x), digits, up=False)


def decimal_up(x: Fraction, digits: int) -> str:
    return _decimal(Fraction(x), digits, up=True)


def _scale(precision: Fraction) -> int:
    return max(1, math.ceil(1 / Fraction(precision)))


def sqrt_down(x: Fraction, precision: Fraction) -> Fraction:
    """Rational ``s <= sqrt(x)`` with ``sqrt(x) - s < precision``."""
    n = _scale(precision)
    return Fraction(math.isqrt(x.numerator * n * n // x.denominator), n)


def sqrt_up(x: Fraction, precision: Fraction) -> Fraction:
    """Rational ``s >= sqrt(x)`` with ``s - sqrt(x) < precision``."""
    n = _scale(precision)
    s = math.isqrt(x.numerator * n * n // x.denominator)
    if s * s * x.denominator != x.numerator * n * n:
        s += 1
    return Fraction(s, n)


def _squared_gap(p: Sequence[Fraction], generators: Sequence[tuple]) -> Fraction:
    best = None
    for b in generators:
        total = Fraction(0)
        for bi, pi in zip(b, p):
            if bi > pi:
                total += (bi - pi) ** 2
                if best is not None and total >= best:
                    break
        if best is None or total < best:
            best = total
            if not best:
                break
    return best


def _closed_generators(ideal: Ideal) -> list[tuple]:
    if ideal.is_zero():
        raise ZeroIdealError("distance to the zero ideal is infinite")
    return [tuple(m.exponents) for m in irredundant_generators(ideal)]


def point_to_ideal(p, ideal: Ideal) -> Fraction:
    """Squared euclidean distance from the exponent vector ``p`` to the staircase of ``ideal``."""
    p = tuple(Fraction(x) for x in p)
    gens = _closed_generators(ideal)
    if len(p) != ideal.d:
        raise ValueError(f"point has {len(p)} coordinates, ideal has {ideal.d}")
    return _squared_gap(p, gens)


class _Search:
    def __init__(self, sources: list[tuple], targets: list[tuple], d: int):
        self.sources = sources
        self.targets = targets
        top = max((x for g in sources + targets for x in g), default=Fraction(0))
        self.root = SearchBox((Fraction(0),) * d, (Fraction(top) + 1,) * d)

    def bounds(self, cell: SearchBox):
        l, u = cell.lower, cell.upper
        pieces = []
        for a in self.sources:
            if all(ai < ui for ai, ui in zip(a, u)):
                pieces.append((a, tuple(max(li, ai) for li, ai in zip(l, a))))
        if not pieces:
            return None
        corner = tuple(min(c[i] for _, c in pieces) for i in range(len(l)))
        upper = _squared_gap(corner, self.targets)
        lower = max(_squared_gap(c, self.targets) for _, c in pieces)
        return upper, lower, pieces

    def split(self, cell: SearchBox, pieces) -> tuple[SearchBox, SearchBox]:
        l, u = cell.lower, cell.upper
        best = None
        for i in range(len(l)):
            cuts = {a[i] for a, _ in pieces if l[i] < a[i] < u[i]}
            if not cuts:
                continue
            length = u[i] - l[i]
            if best is None or length > best[0]:
                mid = (l[i] + u[i]) / 2
                cut = min(cuts, key=lambda c: (abs(c - mid), c))
                best = (length, i, cut)
        if best is None:
            raise AssertionError("a cell without breakpoints has matching bounds")
        _, i, cut = best
        left = SearchBox(l, u[:i] + (cut,) + u[i + 1:])
        right = SearchBox(l[:i] + (cut,) + l[i + 1:], u)
        return left, right


def _within(lo_sq: Fraction, hi_sq: Fraction, tol: Fraction) -> bool:
    root = sqrt_down(lo_sq, tol / 4)
    return hi_sq <= (root + tol / 2) ** 2


def directed_distance(source: Ideal, target: Ideal, tol=Fraction(1, 10**6)) -> Enclosure:
    """Enclosure of ``sup_{g in source} inf_{h in target} |g - h|`` of width at most ``tol``."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    _same_cfg(source, target)
    search = _Search(_closed_generators(source), _closed_generators(target), source.d)

    lo_sq = Fraction(0)
    heap = []
    expanded = 0

    def push(cell):
        nonlocal lo_sq
        b = search.bounds(cell)
        if b is None:
            return
        upper, lower, pieces = b
        lo_sq = max(lo_sq, lower)
        heapq.heappush(heap, (-upper, cell, pieces))

    push(search.root)
    hi_sq = lo_sq
    while heap:
        neg_upper, cell, pieces = heap[0]
        hi_sq = -neg_upper
        if hi_sq <= lo_sq:
            hi_sq = lo_sq
            break
        if _within(lo_sq, hi_sq, tol):
            break
        heapq.heappop(heap)
        expanded += 1
        for child in search.split(cell, pieces):
            push(child)
    else:
        hi_sq = lo_sq

    precision = tol / 4
    return Enclosure(sqrt_down(lo_sq, precision), sqrt_up(hi_sq, precision), expanded)


def distance(i: Ideal, j: Ideal, tol=Fraction(1, 10**6)) -> Enclosure:
    """Symmetric distance: the larger of the two directed distances."""
    _same_cfg(i, j)
    if i.is_zero() or j.is_zero():
        raise DistanceUndefined("the distance is only a metric on nonzero ideals")
    for ideal in (i, j):
        if not ideal.is_finitely_generated():
            raise OpenBoxError(f"{ideal} is not finitely generated")
    forward = directed_distance(i, j, tol)
    backward = directed_distance(j, i, tol)
    return Enclosure(
        max(forward.lo, backward.lo),
        max(forward.hi, backward.hi),
        forward.expanded + backward.expanded,
    )
