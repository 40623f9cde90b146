"""Interval vertex covers of graphs built from diagonal quadratic ideals.

An ideal generated by monomials ``X_i^a X_j^a`` (``i != j``, ``a > 0``) gives a
graph on the variables: ``ij`` is an edge when some such monomial lies in the
ideal, labelled by the interval of admissible ``a``. Its minimal interval
vertex covers ``(W, sigma)`` index the components ``Q_{W, sigma}`` of the
irredundant decomposition.

Vertices are the 1-based variable indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping

from .decompose import Decomposition, decompose
from .errors import ShapeError
from .exponent import AmbientConfig, Mode, as_exponent, format_exponent
from .ideal import Box, Ideal, PurePowerIdeal


@dataclass(frozen=True, order=True)
class IntervalWeight:
    """The interval ``(s, inf)`` when open, ``[s, inf)`` when closed (then ``s > 0``)."""

    threshold: Fraction
    open: bool

    def __post_init__(self):
        object.__setattr__(self, "threshold", as_exponent(self.threshold))
        if not self.open and self.threshold == 0:
            raise ValueError("[0, inf) is not an admissible interval")

    def issubset(self, other: "IntervalWeight") -> bool:
        if other.threshold < self.threshold:
            return True
        return other.threshold == self.threshold and (not other.open or self.open)

    def __contains__(self, a) -> bool:
        return a > self.threshold if self.open else a >= self.threshold

    def __str__(self):
        s = format_exponent(self.threshold)
        return f"({s},inf)" if self.open else f"[{s},inf)"


def hull(intervals: Iterable[IntervalWeight]) -> IntervalWeight:
    """Smallest admissible interval containing all the given ones."""
    intervals = list(intervals)
    s = min(w.threshold for w in intervals)
    closed = any(not w.open for w in intervals if w.threshold == s)
    return IntervalWeight(s, not closed)


def edge(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ValueError("loops are not edges")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class IntervalGraph:
    d: int
    edges: Mapping[tuple[int, int], IntervalWeight]

    def __post_init__(self):
        normalized = {}
        for (i, j), w in self.edges.items():
            e = edge(i, j)
            if not (1 <= e[0] and e[1] <= self.d):
                raise ValueError(f"edge {e} outside vertices 1..{self.d}")
            normalized[e] = w
        object.__setattr__(self, "edges", dict(sorted(normalized.items())))

    def __hash__(self):
        return hash((self.d, tuple(self.edges.items())))

    def __str__(self):
        return ", ".join(f"{i}{j}: {w}" for (i, j), w in self.edges.items())


@dataclass(frozen=True)
class IntervalCover:
    """A pair ``(W, sigma)``; ``W`` is the key set of ``sigma``."""

    sigma: tuple[tuple[int, IntervalWeight], ...]

    @classmethod
    def of(cls, sigma: Mapping[int, IntervalWeight]) -> "IntervalCover":
        return cls(tuple(sorted(sigma.items())))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.sigma)

    def as_dict(self) -> dict[int, IntervalWeight]:
        return dict(self.sigma)

    def sort_key(self):
        return (len(self.sigma), self.sigma)

    def __str__(self):
        return "{" + ", ".join(f"{i}:{w}" for i, w in self.sigma) + "}"


def graph_from_ideal(ideal: Ideal) -> IntervalGraph:
    """Edge-labelled graph of an ideal generated by monomials ``X_i^a X_j^a``.

    Several boxes on the same pair merge into the union of their intervals.
    """
    labels: dict[tuple[int, int], list[IntervalWeight]] = {}
    for box in ideal.boxes:
        support = sorted(box.support())
        if len(support) != 2:
            raise ShapeError(f"box {box} does not constrain exactly two variables")
        i, j = support
        a, b = box.alpha[i - 1], box.alpha[j - 1]
        e, f = box.strict[i - 1], box.strict[j - 1]
        if a != b or e != f:
            raise ShapeError(f"box {box} is not of the form X_i^a X_j^a")
        labels.setdefault((i, j), []).append(IntervalWeight(a, e))
    return IntervalGraph(ideal.d, {k: hull(v) for k, v in labels.items()})


def is_interval_cover(graph: IntervalGraph, sigma) -> bool:
    """Every edge has an endpoint in ``W`` whose interval contains the edge's interval."""
    if isinstance(sigma, IntervalCover):
        sigma = sigma.as_dict()
    for (i, j), s in graph.edges.items():
        if i in sigma and s.issubset(sigma[i]):
            continue
        if j in sigma and s.issubset(sigma[j]):
            continue
        return False
    return True


def cover_leq(c1: IntervalCover, c2: IntervalCover) -> bool:
    """``W1 <= W2`` and ``sigma1(i) <= sigma2(i)`` on ``W1``."""
    s1, s2 = c1.as_dict(), c2.as_dict()
    return all(i in s2 and w.issubset(s2[i]) for i, w in s1.items())


def q_cover_ideal(cover, cfg: AmbientConfig) -> Ideal:
    """``Q_{W, sigma}``: the pure powers ``X_i^a`` with ``i`` in ``W`` and ``a`` in ``sigma(i)``."""
    if isinstance(cover, IntervalCover):
        cover = cover.as_dict()
    return cover_component(cover, cfg.d).to_ideal(cfg)


def cover_component(sigma: Mapping[int, IntervalWeight], d: int) -> PurePowerIdeal:
    return PurePowerIdeal.from_map(d, {i: (w.threshold, w.open) for i, w in sigma.items()})


def component_cover(component: PurePowerIdeal) -> IntervalCover:
    return IntervalCover.of({i: IntervalWeight(a, e) for i, (a, e) in component.entries().items()})


def minimal_covers(covers: Iterable[IntervalCover]) -> list[IntervalCover]:
    unique = set(covers)
    kept = [c for c in unique if not any(o != c and cover_leq(o, c) for o in unique)]
    return sorted(kept, key=IntervalCover.sort_key)


def minimal_interval_covers(graph: IntervalGraph) -> list[IntervalCover]:
    """All minimal interval vertex covers, by search over edge-to-endpoint assignments.

    For each assignment the cheapest cover gives every chosen vertex the hull of
    its assigned edge intervals; every minimal cover arises this way.
    """
    edges = list(graph.edges.items())
    if not edges:
        return [IntervalCover(())]
    candidates = []
    for choice in product((0, 1), repeat=len(edges)):
        assigned: dict[int, list[IntervalWeight]] = {}
        for (pair, s), side in zip(edges, choice):
            assigned.setdefault(pair[side], []).append(s)
        candidates.append(IntervalCover.of({v: hull(ws) for v, ws in assigned.items()}))
    return minimal_covers(candidates)


def covers_via_decomposition(ideal: Ideal) -> list[IntervalCover]:
    """Minimal interval covers read off the irredundant decomposition."""
    graph_from_ideal(ideal)
    return sorted((component_cover(c) for c in decompose(ideal).components), key=IntervalCover.sort_key)


def decompose_via_covers(ideal: Ideal) -> Decomposition:
    """Decomposition as the intersection of ``Q_{W, sigma}`` over minimal interval covers."""
    graph = graph_from_ideal(ideal)
    components = [cover_component(c.as_dict(), ideal.d) for c in minimal_interval_covers(graph)]
    return Decomposition(tuple(sorted(components, key=PurePowerIdeal.sort_key)), ideal)


def diagonal_ideal(graph: IntervalGraph, cfg: AmbientConfig) -> Ideal:
    """The ideal generated by ``X_i^a X_j^a`` for ``a`` in the label of ``ij``."""
    boxes = []
    for (i, j), w in graph.edges.items():
        alpha = [Fraction(0)] * graph.d
        strict = [False] * graph.d
        alpha[i - 1] = alpha[j - 1] = w.threshold
        strict[i - 1] = strict[j - 1] = w.open
        boxes.append(Box(tuple(alpha), tuple(strict)))
    return Ideal(boxes, cfg)


def to_dot(graph: IntervalGraph) -> str:
    lines = ["graph G {"]
    for v in range(1, graph.d + 1):
        lines.append(f"  {v};")
    for (i, j), w in graph.edges.items():
        lines.append(f'  {i} -- {j} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# Integer-weighted edge ideals

@dataclass(frozen=True, order=True)
class WeightedCover:
    """A pair ``(W, delta)`` with positive integer vertex weights."""

    delta: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, delta: Mapping[int, int]) -> "WeightedCover":
        return cls(tuple(sorted(delta.items())))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.delta)

    def as_dict(self) -> dict[int, int]:
        return dict(self.delta)

    def __str__(self):
        return "{" + ", ".join(f"{i}^{w}" for i, w in self.delta) + "}"


def _weighted_edges(weights: Mapping) -> dict[tuple[int, int], int]:
    out = {}
    for (i, j), w in weights.items():
        if int(w) != w or w < 1:
            raise ValueError(f"edge weight must be a positive integer, got {w}")
        out[edge(i, j)] = int(w)
    return out


def is_weighted_cover(weights: Mapping, delta: Mapping[int, int]) -> bool:
    for (i, j), w in _weighted_edges(weights).items():
        if (i in delta and delta[i] <= w) or (j in delta and delta[j] <= w):
            continue
        return False
    return True


def weighted_cover_leq(c1: WeightedCover, c2: WeightedCover) -> bool:
    """``W1 <= W2`` and ``delta1(i) >= delta2(i)`` on ``W1``."""
    d1, d2 = c1.as_dict(), c2.as_dict()
    return all(i in d2 and w >= d2[i] for i, w in d1.items())


def weighted_cover_oracle(weights: Mapping, d: int) -> list[WeightedCover]:
    """Minimal weighted vertex covers by exhaustive enumeration.

    Every vertex is either left out or given a weight in ``1..max(weights)``.
    """
    edges = _weighted_edges(weights)
    top = max(edges.values(), default=1)
    covers = []
    for choice in product(range(top + 1), repeat=d):
        delta = {v: w for v, w in zip(range(1, d + 1), choice) if w}
        if is_weighted_cover(edges, delta):
            covers.append(WeightedCover.of(delta))
    kept = [c for c in covers if not any(o != c and weighted_cover_leq(o, c) for o in covers)]
    return sorted(kept, key=lambda c: (len(c.delta), c.delta))


def weighted_edge_ideal(weights: Mapping, d: int) -> Ideal:
    """``I(Gamma_omega)`` in the classical ring: generated by ``X_i^w X_j^w``."""
    cfg = AmbientConfig(d, Mode.INTEGER)
    graph = IntervalGraph(d, {e: IntervalWeight(w, False) for e, w in _weighted_edges(weights).items()})
    return diagonal_ideal(graph, cfg)


def weighted_cover_ideal(cover: WeightedCover, d: int) -> Ideal:
    """``P_{W, delta}``: generated by ``X_i^{delta(i)}`` for ``i`` in ``W``."""
    cfg = AmbientConfig(d, Mode.INTEGER)
    return PurePowerIdeal.from_map(d, {i: (w, False) for i, w in cover.delta}).to_ideal(cfg)


def vertex_cover_number(edges: Iterable) -> int:
    """Minimum size of a vertex cover, by exhaustive search."""
    if isinstance(edges, IntervalGraph):
        edges = edges.edges
    edges = [edge(*e) for e in edges]
    vertices = sorted({v for e in edges for v in e})
    for k in range(len(vertices) + 1):
        for w in combinations(vertices, k):
            w = set(w)
            if all(i in w or j in w for i, j in edges):
                return k
    return len(vertices)
