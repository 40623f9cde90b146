"""Monomial Krull dimension via minimum hitting sets of box supports.

``Q_T`` contains a box exactly when ``T`` meets the box's support, so the
smallest m-prime over an ideal comes from a minimum hitting set of the supports.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Union

from .errors import OpenBoxError, UnitIdealError, ZeroIdealError
from .ideal import Ideal

NEG_INF = -math.inf

MDim = Union[int, float]


def min_hitting_set(sets: list[frozenset[int]], universe: range) -> frozenset[int]:
    """Lexicographically first minimum-size set meeting every member of ``sets``.

    Exhaustive over sizes ``0..len(universe)``; raises if some set is empty.
    """
    if any(not s for s in sets):
        raise ValueError("an empty set cannot be hit")
    for k in range(len(universe) + 1):
        for cand in combinations(universe, k):
            t = frozenset(cand)
            if all(t & s for s in sets):
                return t
    raise AssertionError("the full universe always hits nonempty subsets of it")


def _hitting_set(ideal: Ideal) -> frozenset[int]:
    return min_hitting_set([b.support() for b in ideal.boxes], range(1, ideal.d + 1))


def mdim(ideal: Ideal) -> MDim:
    """``d`` minus the fewest variables generating an m-prime that contains the ideal.

    The zero ideal has dimension ``d`` and the unit ideal ``-inf``.
    """
    if ideal.is_unit():
        return NEG_INF
    if ideal.is_zero():
        return ideal.d
    return ideal.d - len(_hitting_set(ideal))


def max_chain(ideal: Ideal) -> list[frozenset[int]]:
    """Supports ``T_0 < T_1 < ... < T_n = {1..d}`` of a longest m-prime chain over the ideal.

    ``T_0`` is the lexicographically first minimum hitting set and each step adds
    the smallest missing variable, so ``n == mdim(ideal)``.
    """
    if ideal.is_unit():
        raise UnitIdealError("the unit ideal lies in no m-prime")
    t = frozenset() if ideal.is_zero() else _hitting_set(ideal)
    chain = [t]
    for i in range(1, ideal.d + 1):
        if i not in t:
            t = t | {i}
            chain.append(t)
    return chain


def semicontinuity_radius(ideal: Ideal) -> Fraction:
    """Smallest positive exponent among the minimal generators.

    Any nonzero ideal closer than this has monomial dimension at least ``mdim(ideal)``.
    """
    if ideal.is_zero():
        raise ZeroIdealError("the zero ideal has no generators")
    if not ideal.is_finitely_generated():
        raise OpenBoxError(f"{ideal} is not finitely generated")
    positive = [a for b in ideal.boxes for a in b.alpha if a > 0]
    if not positive:
        raise UnitIdealError("the unit ideal has no positive generator exponent")
    return min(positive)
