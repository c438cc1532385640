"""
SL2(q) against the determinant-xi coset
=======================================

Class counts by type (A scalar, B one eigenvalue non-semisimple, C two
eigenvalues, D irreducible) and the explicit commuting matching.
"""

from commuting_classes.fields import field_of_order
from commuting_classes.gl2 import coset_table, coset_table_bruteforce, sl2_cxi_matching

print(" q   SL (A B C D)   C_xi (A B C D)")
for q in (3, 5, 7, 9, 11, 13, 25, 27):
    t = coset_table(q)
    print(f"{q:2d}   {t.sl}   {t.c_xi}   formula agrees: {t.verified}")

# the counts read off the enumerated group instead of the catalog
for q in (3, 5, 7):
    b = coset_table_bruteforce(q)
    print(f"brute force q={q}: {b.sl} {b.c_xi}")

# C with C on diagonal matrices, D with D as field multiplications,
# and the two scalar classes take the leftover C and D classes
q = 7
F = field_of_order(q)
m = sl2_cxi_matching(q)
print(f"q={q}, xi={F.xi}: {len(m.pairs)} pairs, verified={m.verified}")
for p in m.pairs:
    print(f"  {str(p.left):10s} <-> {str(p.right):10s}  {p.x} , {p.y}")

# even q: scalars sit in every coset
print("q=8:", len(sl2_cxi_matching(8).pairs), "pairs by scalar multiplication")
