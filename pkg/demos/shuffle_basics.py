"""
Shuffle products of lattice chains
==================================

"""

from synorres import (FormalChain, Monomial, RationalField,
                      build_lcm_lattice, enumerate_shuffles, shuffle_product)
from synorres.chains import boundary

field = RationalField()

# shuffles of a 1-chain with a 0-chain: C(3, 2) = 3 permutations
for w in enumerate_shuffles(1, 0):
    print(w)
print()

L = build_lcm_lattice(
    [Monomial((1, 1, 0)), Monomial((1, 0, 1)), Monomial((0, 1, 1))],
    ("x", "y", "z"))


def show(c, name):
    print(f"{name} =")
    for key, coeff in sorted(c.items()):
        labels = " > ".join(L.format_label(v) for v in key)
        print(f"  {str(coeff):>3}  ({labels})")


# product of two atoms: each interleaving gets a join-prefix, so the
# result climbs through lcm(xy, xz) = xyz
a = FormalChain.single((3,), field)   # x*y
b = FormalChain.single((2,), field)   # x*z
show(a, "a")
show(b, "b")
show(shuffle_product(a, b, L), "a shuffled with b")
print()

# the product is a chain map: d(a * b) = da * b + (-1)^(dim a + 1) a * db
prod = shuffle_product(a, b, L)
lhs = boundary(prod)
sign = field.one if (a.dim + 1) % 2 == 0 else -field.one
rhs = shuffle_product(boundary(a), b, L) + \
    shuffle_product(a, boundary(b), L).scale(sign)
show(lhs, "d(a * b)")
print("chain-map identity holds:", lhs == rhs)
