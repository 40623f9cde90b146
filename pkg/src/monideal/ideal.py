"""Monomials, almost-principal boxes, and monomial ideals as box antichains.

A :class:`Box` with thresholds ``alpha`` and strictness flags ``strict`` is the
set of exponent vectors ``r`` with ``r_i >= alpha_i`` (closed) or ``r_i > alpha_i``
(strict) in every coordinate. An :class:`Ideal` is a finite union of boxes kept
as an antichain under box containment, in a canonical order, so two ideals are
equal exactly when their box tuples are equal.

Coordinates that a box does not constrain carry ``(0, closed)``. The zero ideal
is the empty antichain; the unit ideal is the single all-``(0, closed)`` box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import ConfigMismatchError, DimensionMismatchError, OpenBoxError
from .exponent import INF, AmbientConfig, as_exponent, format_exponent, geq_eps, normalize_strictness


@dataclass(frozen=True)
class Monomial:
    """``X_1^{r_1} ... X_d^{r_d}`` with finite nonnegative rational exponents."""

    exponents: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(as_exponent(e) for e in self.exponents))

    @classmethod
    def of(cls, *exponents) -> "Monomial":
        return cls(tuple(exponents))

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_dims(self, other)
        return Monomial(tuple(a + b for a, b in zip(self, other)))

    def __str__(self):
        return format_monomial(self)


def _as_monomial(m) -> Monomial:
    return m if isinstance(m, Monomial) else Monomial(tuple(m))


def _check_dims(a, b):
    if len(a) != len(b):
        raise DimensionMismatchError(f"dimension mismatch: {len(a)} vs {len(b)}")


def divides(f, g) -> bool:
    """True iff ``f`` divides ``g``, i.e. ``g - f`` is a nonnegative exponent vector."""
    f, g = _as_monomial(f), _as_monomial(g)
    _check_dims(f, g)
    return all(b >= a for a, b in zip(f, g))


def lcm(fs: Sequence) -> Monomial:
    """Componentwise maximum of a nonempty list of monomials."""
    fs = [_as_monomial(f) for f in fs]
    if not fs:
        raise ValueError("lcm of an empty list")
    for f in fs[1:]:
        _check_dims(fs[0], f)
    return Monomial(tuple(max(col) for col in zip(*fs)))


@dataclass(frozen=True, order=True)
class Box:
    """The almost-principal ideal ``I_{alpha, strict}``; all thresholds finite."""

    alpha: tuple[Fraction, ...]
    strict: tuple[bool, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.strict):
            raise DimensionMismatchError("alpha and strict differ in length")
        if any(a == INF for a in self.alpha):
            raise ValueError("a box with an infinite threshold is the zero ideal; use Ideal.zero")
        object.__setattr__(self, "alpha", tuple(as_exponent(a) for a in self.alpha))
        object.__setattr__(self, "strict", tuple(bool(e) for e in self.strict))

    @classmethod
    def closed(cls, alpha) -> "Box":
        alpha = tuple(alpha)
        return cls(alpha, (False,) * len(alpha))

    @classmethod
    def unit(cls, d: int) -> "Box":
        return cls((Fraction(0),) * d, (False,) * d)

    @property
    def d(self) -> int:
        return len(self.alpha)

    @property
    def is_closed(self) -> bool:
        return not any(self.strict)

    def corner(self) -> Monomial:
        return Monomial(self.alpha)

    def support(self) -> frozenset[int]:
        """1-based indices of the coordinates the box actually constrains."""
        return frozenset(i + 1 for i, (a, e) in enumerate(zip(self.alpha, self.strict)) if a > 0 or e)

    def __str__(self):
        return format_box(self)


def box_member(r, box: Box) -> bool:
    r = _as_monomial(r)
    _check_dims(r, box.alpha)
    return all(geq_eps(x, a, e) for x, a, e in zip(r, box.alpha, box.strict))


def box_contains(outer: Box, inner: Box) -> bool:
    """True iff every monomial of ``inner`` lies in ``outer``."""
    _check_dims(outer.alpha, inner.alpha)
    for a, e, b, f in zip(outer.alpha, outer.strict, inner.alpha, inner.strict):
        if b > a:
            continue
        if b == a and (not e or f):
            continue
        return False
    return True


def box_meet(b: Box, c: Box) -> Box:
    """Intersection of two boxes, which is again a box."""
    _check_dims(b.alpha, c.alpha)
    alpha, strict = [], []
    for a1, e1, a2, e2 in zip(b.alpha, b.strict, c.alpha, c.strict):
        if a1 > a2:
            alpha.append(a1)
            strict.append(e1)
        elif a2 > a1:
            alpha.append(a2)
            strict.append(e2)
        else:
            alpha.append(a1)
            strict.append(e1 or e2)
    return Box(tuple(alpha), tuple(strict))


def _normalize_box(box: Box, cfg: AmbientConfig) -> Box:
    if box.d != cfg.d:
        raise DimensionMismatchError(f"box has {box.d} coordinates, ambient dimension is {cfg.d}")
    if cfg.dense:
        return box
    pairs = [normalize_strictness(a, e, cfg) for a, e in zip(box.alpha, box.strict)]
    return Box(tuple(a for a, _ in pairs), tuple(e for _, e in pairs))


def normalize(boxes: Iterable[Box], cfg: AmbientConfig) -> tuple[Box, ...]:
    """Canonical antichain: drop every box contained in another, sort the rest."""
    unique = sorted({_normalize_box(b, cfg) for b in boxes})
    kept = []
    for b in unique:
        if any(box_contains(c, b) for c in unique if c != b):
            continue
        kept.append(b)
    return tuple(kept)


class Ideal:
    """A monomial ideal stored as a canonical antichain of boxes.

    Instances are immutable. ``I + J`` is the sum, ``I & J`` the intersection,
    and ``I <= J`` tests containment of ``I`` in ``J``.
    """

    __slots__ = ("_boxes", "_cfg")

    def __init__(self, boxes: Iterable[Box], cfg: AmbientConfig):
        self._cfg = cfg
        self._boxes = normalize(boxes, cfg)

    @classmethod
    def zero(cls, cfg: AmbientConfig) -> "Ideal":
        return cls((), cfg)

    @classmethod
    def unit(cls, cfg: AmbientConfig) -> "Ideal":
        return cls((Box.unit(cfg.d),), cfg)

    @classmethod
    def from_generators(cls, generators: Iterable, cfg: AmbientConfig) -> "Ideal":
        """Finitely generated ideal from exponent vectors or Monomials."""
        return cls((Box.closed(tuple(_as_monomial(g))) for g in generators), cfg)

    @property
    def boxes(self) -> tuple[Box, ...]:
        return self._boxes

    @property
    def cfg(self) -> AmbientConfig:
        return self._cfg

    @property
    def d(self) -> int:
        return self._cfg.d

    def is_zero(self) -> bool:
        return not self._boxes

    def is_unit(self) -> bool:
        return self._boxes == (Box.unit(self.d),)

    def is_finitely_generated(self) -> bool:
        return all(b.is_closed for b in self._boxes)

    def times(self, m) -> "Ideal":
        """The product ideal ``X^m * I``."""
        m = _as_monomial(m)
        _check_dims(m, range(self.d))
        return Ideal((Box(tuple(a + x for a, x in zip(b.alpha, m)), b.strict) for b in self._boxes), self._cfg)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self._cfg == other._cfg and self._boxes == other._boxes

    def __hash__(self):
        return hash((self._cfg, self._boxes))

    def __contains__(self, r):
        return member(r, self)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __le__(self, other):
        return contains(other, self)

    def __ge__(self, other):
        return contains(self, other)

    def __repr__(self):
        return f"Ideal({format_ideal(self)!r}, d={self.d}, mode={self._cfg.mode.value})"

    def __str__(self):
        return format_ideal(self)


def _same_cfg(i: Ideal, j: Ideal):
    if i.cfg != j.cfg:
        raise ConfigMismatchError(f"ambient configurations differ: {i.cfg} vs {j.cfg}")


def member(r, ideal: Ideal) -> bool:
    return any(box_member(r, b) for b in ideal.boxes)


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    _same_cfg(i, j)
    return Ideal(i.boxes + j.boxes, i.cfg)


def intersect(i: Ideal, j: Ideal) -> Ideal:
    _same_cfg(i, j)
    return Ideal((box_meet(b, c) for b, c in product(i.boxes, j.boxes)), i.cfg)


def contains(i: Ideal, j: Ideal) -> bool:
    """True iff ``j`` is a subset of ``i``.

    Checking box by box suffices: a box covered by a finite union of boxes is
    already covered by one of them.
    """
    _same_cfg(i, j)
    return all(any(box_contains(b, c) for b in i.boxes) for c in j.boxes)


def irredundant_generators(ideal: Ideal) -> list[Monomial]:
    """The unique irredundant monomial generating sequence of a finitely generated ideal."""
    if not ideal.is_finitely_generated():
        raise OpenBoxError(f"{ideal} is not finitely generated (it has a strict threshold)")
    return [b.corner() for b in ideal.boxes]


@dataclass(frozen=True)
class PurePowerIdeal:
    """``J_{alpha, strict}``: generated by ``X_i^r`` with ``r`` past the threshold of ``i``.

    A threshold of ``INF`` means the ideal has no generators in that variable.
    """

    alpha: tuple
    strict: tuple[bool, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.strict):
            raise DimensionMismatchError("alpha and strict differ in length")
        object.__setattr__(self, "alpha", tuple(INF if a == INF else as_exponent(a) for a in self.alpha))
        object.__setattr__(self, "strict", tuple(bool(e) for e in self.strict))

    @classmethod
    def from_map(cls, d: int, entries: dict) -> "PurePowerIdeal":
        """Build from a sparse ``{variable (1-based): (threshold, strict)}`` map."""
        alpha, strict = [INF] * d, [False] * d
        for i, (a, e) in entries.items():
            if not 1 <= i <= d:
                raise DimensionMismatchError(f"variable index {i} out of range 1..{d}")
            alpha[i - 1], strict[i - 1] = a, e
        return cls(tuple(alpha), tuple(strict))

    @property
    def d(self) -> int:
        return len(self.alpha)

    def entries(self) -> dict:
        """Sparse map of the finite thresholds, keyed by 1-based variable."""
        return {i + 1: (a, e) for i, (a, e) in enumerate(zip(self.alpha, self.strict)) if a != INF}

    def sort_key(self):
        return (self.alpha, self.strict)

    def to_ideal(self, cfg: AmbientConfig) -> Ideal:
        if cfg.d != self.d:
            raise DimensionMismatchError(f"pure-power ideal has {self.d} variables, ambient dimension is {cfg.d}")
        boxes = []
        zero = Fraction(0)
        for i, (a, e) in self.entries().items():
            alpha = [zero] * self.d
            strict = [False] * self.d
            alpha[i - 1], strict[i - 1] = a, e
            boxes.append(Box(tuple(alpha), tuple(strict)))
        return Ideal(boxes, cfg)

    def contains(self, other: "PurePowerIdeal") -> bool:
        """True iff ``other`` is a subset of ``self`` (a per-variable comparison)."""
        _check_dims(self.alpha, other.alpha)
        for a, e, b, f in zip(self.alpha, self.strict, other.alpha, other.strict):
            if b == INF:
                continue
            if a == INF:
                return False
            if b > a or (b == a and (not e or f)):
                continue
            return False
        return True

    def __str__(self):
        parts = []
        for i, (a, e) in self.entries().items():
            parts.append(_format_factor(i, a, e) or "1")
        return "(" + ", ".join(parts) + ")"


def _format_factor(i: int, a, strict: bool) -> str:
    if a == 0 and not strict:
        return ""
    if strict:
        return f"x{i}^>{format_exponent(a)}"
    if a == 1:
        return f"x{i}"
    return f"x{i}^{format_exponent(a)}"


def format_box(box: Box) -> str:
    factors = [_format_factor(i + 1, a, e) for i, (a, e) in enumerate(zip(box.alpha, box.strict))]
    text = " ".join(f for f in factors if f)
    return text or "1"


def format_monomial(m: Monomial) -> str:
    return format_box(Box.closed(m.exponents))


def format_ideal(ideal: Ideal) -> str:
    """DSL text for an ideal, e.g. ``(x1 x2^>1, x2^3/2)``; ``()`` is the zero ideal."""
    return "(" + ", ".join(format_box(b) for b in ideal.boxes) + ")"
