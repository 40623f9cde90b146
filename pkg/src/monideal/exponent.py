"""Exponent scalars: nonnegative rationals extended by infinity.

Rationals are :class:`fractions.Fraction` (always reduced), and the extra
element is ``INF`` (``math.inf``), which compares above every rational. Infinity
only ever takes part in comparisons and ``max``/``min``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

INF = math.inf

ExtendedExponent = Union[Fraction, float]

_RATIONAL_RE = re.compile(r"\s*(\d+)(?:\s*/\s*(\d+))?\s*$")


class Mode(enum.Enum):
    """Exponent group: all of Q (dense) or only Z (classical)."""

    DENSE = "Q"
    INTEGER = "Z"


@dataclass(frozen=True)
class AmbientConfig:
    """Number of variables plus exponent mode; fixed for every object built under it."""

    d: int
    mode: Mode = Mode.DENSE

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.d!r}")
        if not isinstance(self.mode, Mode):
            object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def dense(self) -> bool:
        return self.mode is Mode.DENSE


def as_exponent(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a nonnegative Fraction."""
    if isinstance(value, str):
        value = parse_rational(value)
    elif isinstance(value, float):
        raise TypeError("floating-point exponents are not supported; use Fraction or 'p/q'")
    r = Fraction(value)
    if r < 0:
        raise ValueError(f"exponent must be nonnegative, got {r}")
    return r


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a nonnegative rational: {text!r}")
    num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), den)


def parse_extended(text: str) -> ExtendedExponent:
    if text.strip() == "inf":
        return INF
    return parse_rational(text)


def format_exponent(value: ExtendedExponent) -> str:
    """``p`` or ``p/q``; infinity renders as ``inf``."""
    if value == INF:
        return "inf"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def geq_eps(r: ExtendedExponent, alpha: ExtendedExponent, strict: bool) -> bool:
    """``r >= alpha`` when closed, ``r > alpha`` when strict.

    Against an infinite threshold only ``r = inf`` qualifies, whatever the flag.
    """
    if alpha == INF:
        return r == INF
    return r > alpha if strict else r >= alpha


def normalize_strictness(alpha, strict: bool, cfg: AmbientConfig) -> tuple[Fraction, bool]:
    """Rewrite an integer-mode threshold as the equivalent closed integer one.

    Dense mode is left untouched. In integer mode ``{n : n > a}`` becomes
    ``{n : n >= floor(a) + 1}`` and ``{n : n >= a}`` becomes ``{n : n >= ceil(a)}``.
    """
    alpha = Fraction(alpha)
    if cfg.dense:
        return alpha, bool(strict)
    if strict:
        return Fraction(math.floor(alpha) + 1), False
    return Fraction(math.ceil(alpha)), False
