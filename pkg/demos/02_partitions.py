"""
Coarsenings and parity counts of partitions
===========================================

Two classes of Sym(n) commute exactly when their cycle types share a
coarsening.  Here that rule is compared with brute force, and the parity
counts behind the Sym(n)/Alt(n) matching are tabulated.
"""

from commuting_classes.partitions import (coarsenings, common_coarsening, counting_identity, format_partition,
                                          parse_partition, proposition1_crosscheck, sym_bijection_f)

lam = parse_partition("4,3^4,1^2")
cs = sorted(coarsenings(lam), reverse=True)
print(f"{format_partition(lam)} has {len(cs)} coarsenings, e.g. {format_partition(cs[0])}")

# merging happens once per part size: (2,1,1) reaches (2,2) but not (4)
print("(2,2) and (4):", common_coarsening((2, 2), (4,)))
print("(2,1,1) and (4):", common_coarsening((2, 1, 1), (4,)))

# exhaustive agreement with the commuting relation of Sym(n)
for n in range(1, 9):
    rep = proposition1_crosscheck(n)
    print(f"  n={n}: {rep.pairs_checked} pairs agree")

# p_even = p_odd + d_o
print(" n  p_even  p_odd  d_o")
for n in (5, 10, 20, 40, 60):
    c = counting_identity(n)
    print(f"{n:2d} {c.p_even:7d} {c.p_odd:6d} {c.d_o:4d}")

# an explicit bijection P_even minus D_o -> P_odd along common coarsenings
for a, b in sym_bijection_f(6).items():
    print(f"  {format_partition(a):12s} -> {format_partition(b)}")
