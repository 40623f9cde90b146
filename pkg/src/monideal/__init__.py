"""Exact monomial ideals with rational (or integer) exponents."""

from .covers import (
    IntervalCover,
    IntervalGraph,
    IntervalWeight,
    WeightedCover,
    cover_leq,
    decompose_via_covers,
    graph_from_ideal,
    is_interval_cover,
    minimal_interval_covers,
    q_cover_ideal,
    vertex_cover_number,
    weighted_cover_oracle,
)
from .decompose import Decomposition, box_support, decompose, is_m_irreducible, is_m_prime, q_ideal
from .dimension import NEG_INF, max_chain, mdim, semicontinuity_radius
from .dsl import parse, parse_ideal, parse_monomial
from .errors import (
    DistanceUndefined,
    MonomialIdealError,
    OpenBoxError,
    ParseError,
    ShapeError,
    ZeroIdealError,
)
from .exponent import INF, AmbientConfig, Mode, geq_eps, normalize_strictness
from .ideal import (
    Box,
    Ideal,
    Monomial,
    PurePowerIdeal,
    box_contains,
    box_member,
    contains,
    divides,
    ideal_sum,
    intersect,
    irredundant_generators,
    lcm,
    member,
    normalize,
)
from .metric import Enclosure, directed_distance, distance, point_to_ideal
from .svg import RenderSpec, render_svg

__version__ = "0.1.0"
