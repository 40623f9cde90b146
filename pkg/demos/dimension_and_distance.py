# Dimension, and how far apart two ideals are
#
# The dimension counts the variables left over after the fewest variables
# whose primes contain the ideal. The distance is a Hausdorff distance between
# staircases, returned as a certified interval.

from fractions import Fraction

from monideal import AmbientConfig, distance, max_chain, mdim, parse_ideal, semicontinuity_radius

cfg = AmbientConfig(3)
I = parse_ideal("(x1 x2, x2^>2 x3^>2)", cfg)
print(mdim(I))
for support in max_chain(I):
    print(sorted(support))

# The two axes in the plane are at distance 1.

plane = AmbientConfig(2)
print(distance(parse_ideal("(x2)", plane), parse_ideal("(x1)", plane)))

# Shifting an ideal by x1^(1/2) moves it by exactly 1/2.

J = parse_ideal("(x1, x2)", plane)
shifted = J.times((Fraction(1, 2), 0))
enc = distance(J, shifted, tol=Fraction(1, 10**8))
print(enc.format(10), enc.expanded)

# Small moves do not lower the dimension. The radius says how small.

G = parse_ideal("(x1^2 x2, x2^3/2)", plane)
eps = semicontinuity_radius(G)
nearby = parse_ideal("(x1^9/4 x2^5/4, x2^7/4)", plane)
print(eps, distance(G, nearby, Fraction(1, 1000)), mdim(G), mdim(nearby))
