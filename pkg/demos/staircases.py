# Staircases with rational corners
#
# An ideal here is a set of exponent vectors closed under going up. Each
# generator box is a corner; a `>` in front of an exponent makes that side of
# the corner open, so the face itself is left out.

from fractions import Fraction

from monideal import AmbientConfig, member, parse_ideal

cfg = AmbientConfig(2)

# The corner at (1, 1) with the bottom face removed.

I = parse_ideal("(x1 x2^>1)", cfg)
print(I)
print(member((1, Fraction(3, 2)), I), member((1, 1), I))

# Sums take the union of the staircases, intersections the overlap. `^` binds
# tighter than `+`.

J = parse_ideal("(x1, x2) ^ (x1^>1, x2^1/2)", cfg)
print(J)
print(J == parse_ideal("(x1^>1, x2, x1 x2^1/2)", cfg))

# Canonical form is the set of corners that no other corner already covers,
# so equality is plain tuple comparison.

K = parse_ideal("(x1 x2^>1) + (x1 x2^2) + (x1^2 x2^>1)", cfg)
print(K == I, K.boxes)

# Names can be bound and reused.

print(parse_ideal("A = (x1^3/2); B = (x2^1/2)\nA + B ^ (x1)", cfg))
