# Graphs, vertex covers and pictures
#
# An ideal generated by diagonal monomials x_i^a x_j^a is a graph with an
# interval on each edge. Its minimal interval vertex covers are exactly its
# irreducible components.

import sys

from monideal import (
    AmbientConfig,
    decompose_via_covers,
    graph_from_ideal,
    minimal_interval_covers,
    parse_ideal,
    render_svg,
    weighted_cover_oracle,
)
from monideal.covers import to_dot, weighted_cover_ideal

cfg = AmbientConfig(3)
I = parse_ideal("(x1 x2, x2^>2 x3^>2)", cfg)
g = graph_from_ideal(I)
print(g)
for c in minimal_interval_covers(g):
    print(c)
print(decompose_via_covers(I))
print(to_dot(g))

# With integer weights the covers carry a power on each vertex.

for c in weighted_cover_oracle({(1, 2): 1, (2, 3): 2}, 3):
    print(c, weighted_cover_ideal(c, 3))

# Pictures work in two variables. Open faces are dashed and open corners hollow.

svg = render_svg(parse_ideal("(x1 x2^>1)", AmbientConfig(2)))
out = sys.argv[1] if len(sys.argv) > 1 else None
if out:
    with open(out, "w") as fh:
        fh.write(svg)
else:
    print(svg.count("<line"), "line elements")
