"""Irredundant m-irreducible decomposition, m-irreducibility and m-primality."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import UnitIdealError, ZeroIdealError
from .exponent import INF, AmbientConfig
from .ideal import Box, Ideal, PurePowerIdeal, intersect


@dataclass(frozen=True)
class Decomposition:
    """Pairwise incomparable pure-power components whose intersection is ``source``."""

    components: tuple[PurePowerIdeal, ...]
    source: Ideal

    def ideals(self) -> list[Ideal]:
        return [c.to_ideal(self.source.cfg) for c in self.components]

    def intersection(self) -> Ideal:
        return intersect_all(self.ideals(), self.source.cfg)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __str__(self):
        return " ^ ".join(str(c) for c in self.components) or "(1)"


def intersect_all(ideals: Iterable[Ideal], cfg: AmbientConfig) -> Ideal:
    """Intersection of a family; the empty family gives the unit ideal."""
    result = Ideal.unit(cfg)
    for ideal in ideals:
        result = intersect(result, ideal)
    return result


def box_support(box: Box) -> frozenset[int]:
    return box.support()


def _merge(component: tuple, i: int, a, strict: bool) -> tuple:
    """Add the pure-power generators ``X_i^{>= or > a}`` to a component."""
    alpha, flags = component
    b, f = alpha[i], flags[i]
    if a < b:
        b, f = a, strict
    elif a == b:
        f = f and strict
    return alpha[:i] + (b,) + alpha[i + 1:], flags[:i] + (f,) + flags[i + 1:]


def _contains(outer: tuple, inner: tuple) -> bool:
    return PurePowerIdeal(*outer).contains(PurePowerIdeal(*inner))


def _minimal(components: Iterable[tuple]) -> list[tuple]:
    unique = sorted(set(components))
    return [c for c in unique if not any(o != c and _contains(c, o) for o in unique)]


def minimal_components(components: Iterable[PurePowerIdeal]) -> tuple[PurePowerIdeal, ...]:
    """Drop duplicates and every component that contains another one."""
    kept = _minimal((c.alpha, c.strict) for c in components)
    return tuple(PurePowerIdeal(a, e) for a, e in kept)


def decompose(ideal: Ideal) -> Decomposition:
    """Unique irredundant finite m-irreducible decomposition.

    Each box is the intersection of single-variable pure-power ideals over its
    support, so the ideal is a sum of intersections. Distributing gives an
    intersection of sums, one per choice of a support variable in every box;
    each such sum is a pure-power ideal. Choices are folded in box by box and
    non-minimal partial sums are dropped early: a partial sum containing another
    only produces components containing the other's extensions.
    """
    if ideal.is_zero():
        raise ZeroIdealError("the zero ideal has no finite decomposition into proper ideals")
    if ideal.is_unit():
        return Decomposition((), ideal)
    d = ideal.d
    partial = [((INF,) * d, (False,) * d)]
    for box in ideal.boxes:
        extended = []
        for comp in partial:
            for i in sorted(box.support()):
                extended.append(_merge(comp, i - 1, box.alpha[i - 1], box.strict[i - 1]))
        partial = _minimal(extended)
    components = tuple(PurePowerIdeal(a, e) for a, e in partial)
    return Decomposition(components, ideal)


def is_m_irreducible(ideal: Ideal) -> bool:
    """True iff the ideal is generated by pure powers, i.e. every box has support of size <= 1."""
    if ideal.is_zero() or ideal.is_unit():
        raise UnitIdealError("m-irreducibility is only asked of nonzero proper ideals")
    return all(len(b.support()) <= 1 for b in ideal.boxes)


def _prime_threshold(cfg: AmbientConfig) -> tuple[Fraction, bool]:
    return (Fraction(0), True) if cfg.dense else (Fraction(1), False)


def q_ideal(support: Iterable[int], cfg: AmbientConfig) -> Ideal:
    """``Q_T``: all positive powers of the variables indexed by ``T`` (1-based)."""
    a, e = _prime_threshold(cfg)
    entries = {i: (a, e) for i in support}
    return PurePowerIdeal.from_map(cfg.d, entries).to_ideal(cfg)


def is_m_prime(ideal: Ideal) -> Optional[frozenset[int]]:
    """Return ``T`` with ``ideal == Q_T``, or None when the ideal is not m-prime."""
    if ideal.is_unit():
        raise UnitIdealError("the unit ideal is not proper")
    threshold = _prime_threshold(ideal.cfg)
    support = set()
    for box in ideal.boxes:
        s = box.support()
        if len(s) != 1:
            return None
        (i,) = s
        if (box.alpha[i - 1], box.strict[i - 1]) != threshold:
            return None
        support.add(i)
    return frozenset(support)
