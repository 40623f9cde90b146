import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal import (
    AmbientConfig,
    DistanceUndefined,
    Enclosure,
    Ideal,
    Mode,
    OpenBoxError,
    directed_distance,
    distance,
    irredundant_generators,
    parse_ideal,
    point_to_ideal,
)
from monideal.metric import decimal_down, decimal_up, sqrt_down, sqrt_up

D2 = AmbientConfig(2)
TOL = F(1, 10**4)


def gens_of(ideal):
    return [tuple(float(x) for x in m.exponents) for m in irredundant_generators(ideal)]


def float_gap(p, gens):
    return min(math.sqrt(sum(max(b - q, 0.0) ** 2 for b, q in zip(g, p))) for g in gens)


def grid_directed(i, j, steps=40):
    """Float lower estimate: sample the staircase of ``i`` on a grid over [0, U]^2."""
    gi, gj = gens_of(i), gens_of(j)
    top = max(x for g in gi + gj for x in g) + 1
    h = top / steps
    best = 0.0
    for a in range(steps + 1):
        for b in range(steps + 1):
            p = (a * h, b * h)
            if any(all(q >= c for q, c in zip(p, g)) for g in gi):
                best = max(best, float_gap(p, gj))
    return best, h


def generator_directed(i, j):
    """Float value of the largest gap from a generator of ``i`` to ``j``."""
    gj = gens_of(j)
    return max(float_gap(g, gj) for g in gens_of(i))


def random_fg(rng, d, n=None):
    n = n or rng.randint(1, 3)
    gens = [tuple(F(rng.randint(0, 6), rng.choice([1, 2])) for _ in range(d)) for _ in range(n)]
    return Ideal.from_generators(gens, AmbientConfig(d))


def test_point_to_ideal_examples():
    x2 = parse_ideal("(x2)", D2)
    assert point_to_ideal((1, 0), x2) == 1
    assert point_to_ideal((1, 1), x2) == 0
    assert point_to_ideal((0, 0), parse_ideal("(x1^3 x2^4)", D2)) == 25
    with pytest.raises(OpenBoxError):
        point_to_ideal((0, 0), parse_ideal("(x1^>1)", D2))


def test_disjoint_axes():
    e = distance(parse_ideal("(x2)", D2), parse_ideal("(x1)", D2))
    assert 1 in e and e.width <= F(1, 10**6)


def test_shifted_ideal():
    i = parse_ideal("(x1, x2)", D2)
    j = i.times((F(1, 2), 0))
    assert j == parse_ideal("(x1^3/2, x1^1/2 x2)", D2)
    for e in (directed_distance(i, j), distance(i, j), distance(j, i)):
        assert F(1, 2) in e and e.width <= F(1, 10**6)
    # j lies inside i, so nothing of j is far from i
    assert directed_distance(j, i).hi == 0


def test_contained_direction_is_zero():
    big, small = parse_ideal("(x1)", D2), parse_ideal("(x1^2 x2)", D2)
    assert directed_distance(small, big).hi == 0
    assert math.sqrt(2) - 1e-6 <= float(directed_distance(big, small).hi)


def test_errors():
    with pytest.raises(DistanceUndefined):
        distance(Ideal.zero(D2), parse_ideal("(x1)", D2))
    with pytest.raises(OpenBoxError):
        distance(parse_ideal("(x1 x2^>1)", D2), parse_ideal("(x1)", D2))
    with pytest.raises(ValueError):
        directed_distance(parse_ideal("(x1)", D2), parse_ideal("(x2)", D2), tol=0)


def test_rounding_helpers():
    assert sqrt_down(F(2), F(1, 1000)) <= F(1414214, 10**6)
    assert sqrt_up(F(2), F(1, 1000)) ** 2 >= 2
    assert sqrt_down(F(9, 4), F(1, 10)) == F(3, 2) == sqrt_up(F(9, 4), F(1, 10))
    assert decimal_down(F(2, 3), 3) == "0.666" and decimal_up(F(2, 3), 3) == "0.667"
    assert Enclosure(F(1), F(2)).overlaps(Enclosure(F(2), F(3)))


def test_integer_mode_gives_same_value():
    z = AmbientConfig(2, Mode.INTEGER)
    a = distance(parse_ideal("(x1^2, x2)", z), parse_ideal("(x1 x2^3)", z), TOL)
    b = distance(parse_ideal("(x1^2, x2)", D2), parse_ideal("(x1 x2^3)", D2), TOL)
    assert a.overlaps(b)


def test_identical_ideals():
    rng = random.Random(3)
    for _ in range(10):
        i = random_fg(rng, 3)
        assert distance(i, i, TOL).hi <= TOL


def test_against_generator_and_grid_oracles():
    rng = random.Random(5)
    for _ in range(25):
        i, j = random_fg(rng, 2), random_fg(rng, 2)
        e = directed_distance(i, j, TOL)
        exact = generator_directed(i, j)
        assert float(e.lo) - 1e-9 <= exact <= float(e.hi) + 1e-9
        grid, h = grid_directed(i, j)
        assert grid <= float(e.hi) + 1e-9
        assert float(e.lo) <= grid + h * math.sqrt(2) + 1e-9


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_axioms(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3])
    i, j, k = (random_fg(rng, d) for _ in range(3))
    ij, ji = distance(i, j, TOL), distance(j, i, TOL)
    assert ij.overlaps(ji)
    assert ij.lo <= distance(i, k, TOL).hi + distance(k, j, TOL).hi
    bound_sq = max(sum(x * x for x in m.exponents) for g in (i, j) for m in irredundant_generators(g))
    assert ij.lo ** 2 <= bound_sq
    assert ij.hi <= sqrt_up(bound_sq, TOL) + TOL


def test_distinct_ideals_are_apart():
    i = parse_ideal("(x1 x2)", D2)
    j = parse_ideal("(x1 x2^5/4)", D2)
    gap = F(1, 4)
    e = distance(i, j, gap / 4)
    assert e.lo > 0 and gap in e


def test_distinct_random_ideals_are_apart():
    rng = random.Random(9)
    seen = 0
    while seen < 15:
        i, j = random_fg(rng, 2), random_fg(rng, 2)
        if i == j:
            continue
        seen += 1
        # the grid estimate is a lower bound on the true distance
        gap = max(grid_directed(i, j, 24)[0], grid_directed(j, i, 24)[0])
        assert gap > 0
        e = distance(i, j, F(gap).limit_denominator(10**6) / 4)
        assert e.lo > 0
