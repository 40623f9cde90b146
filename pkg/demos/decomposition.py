# Breaking an ideal into irreducible pieces
#
# Every nonzero ideal with finitely many corners is a finite, irredundant
# intersection of ideals generated by pure powers of single variables.

from monideal import AmbientConfig, decompose, is_m_irreducible, is_m_prime, parse_ideal

cfg = AmbientConfig(3)
I = parse_ideal("(x1 x2, x2^>2 x3^>2)", cfg)
dec = decompose(I)

for component in dec.ideals():
    print(component, is_m_irreducible(component))

# Intersecting the pieces gives back the ideal.

print(dec.intersection() == I)

# The order of the corners does not matter.

shuffled = parse_ideal("(x3^>2 x2^>2, x2 x1)", cfg)
print(decompose(shuffled).components == dec.components)

# Primes are the ideals generated by all positive powers of a set of variables.

print(is_m_prime(parse_ideal("(x2^>0, x3^>0)", cfg)))
print(is_m_prime(parse_ideal("(x2)", cfg)))
