import random
import sys
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from monideal import AmbientConfig, Box, Ideal, Mode, member

settings.register_profile("default", deadline=None)
settings.load_profile("default")

HALVES = [Fraction(n, 2) for n in range(0, 9)]


def representatives(ideals, d):
    """One sample value per cell of the threshold arrangement, per coordinate.

    Membership in any of the given ideals is constant on each cell, so two ideals
    agree everywhere iff they agree on the product of these values.
    """
    cols = []
    for i in range(d):
        ts = sorted({b.alpha[i] for ideal in ideals for b in ideal.boxes} | {Fraction(0)})
        vals = []
        for a, b in zip(ts, ts[1:]):
            vals += [a, (a + b) / 2]
        vals += [ts[-1], ts[-1] + 1]
        cols.append(vals)
    return product(*cols)


def same_monomials(i, j):
    return all(member(p, i) == member(p, j) for p in representatives([i, j], i.d))


def random_box(rng, d, mode=Mode.DENSE, values=HALVES, open_prob=0.3):
    if mode is Mode.INTEGER:
        values = [v for v in values if v.denominator == 1]
    alpha = tuple(rng.choice(values) for _ in range(d))
    strict = tuple(rng.random() < open_prob for _ in range(d))
    return Box(alpha, strict)


def random_ideal(rng, cfg, max_boxes=4, open_prob=0.3, min_boxes=1):
    n = rng.randint(min_boxes, max_boxes)
    return Ideal([random_box(rng, cfg.d, cfg.mode, open_prob=open_prob) for _ in range(n)], cfg)


def random_closed_ideal(rng, cfg, max_boxes=3):
    return random_ideal(rng, cfg, max_boxes, open_prob=0.0)


@pytest.fixture
def rng():
    return random.Random(20130513)


@st.composite
def boxes(draw, d, open_flags=True):
    alpha = tuple(draw(st.sampled_from(HALVES)) for _ in range(d))
    if open_flags:
        strict = tuple(draw(st.booleans()) for _ in range(d))
    else:
        strict = (False,) * d
    return Box(alpha, strict)


@st.composite
def ideals(draw, d=None, mode=Mode.DENSE, max_boxes=4, open_flags=True, min_boxes=0):
    if d is None:
        d = draw(st.integers(1, 3))
    cfg = AmbientConfig(d, mode)
    bs = draw(st.lists(boxes(d, open_flags), min_size=min_boxes, max_size=max_boxes))
    return Ideal(bs, cfg)


def monomials(d):
    return st.tuples(*[st.sampled_from(HALVES + [Fraction(1, 3), Fraction(7, 4)]) for _ in range(d)])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = sorted(getattr(module, "REPORT", []), key=lambda line: int(line.split("[")[1].split("]")[0]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
