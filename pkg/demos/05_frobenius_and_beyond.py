"""
Split classes, Frobenius kernels, and other coset pairs
=======================================================

For prime index, every non-identity class of H splits exactly when G is a
Frobenius group with kernel H.  The last part tries matchings between two
arbitrary cosets; those results are exploratory.
"""

from commuting_classes import catalog as cat
from commuting_classes.frobenius import proposition3_check, weakened_hypothesis_observation
from commuting_classes.matching import conjecture_explorer

for spec in ("sym:3/alt", "sym:4/alt", "alt:4/v4", "dihedral:5", "dihedral:6", "sl2-in-gl2:3"):
    Q = cat.load(spec)
    r = proposition3_check(Q)
    print(f"{spec:14s} all split={r.all_nonidentity_split!s:5s} Frobenius={r.is_frobenius!s:5s}"
          f" kernel nilpotent={r.kernel_nilpotent}")

# a weaker hypothesis: only the non-central classes of H split
obs = weakened_hypothesis_observation(cat.load("q8/gen:0"))
print("Q8 over <i>:", obs)

# experimental: non-split classes of H t^x against those of H t^y
for spec in ("sl2-in-gl2:5", "agl1:5/derived", "cyclic:8/sub:4"):
    Q = cat.load(spec)
    n = Q.quotient_order
    found = sum(conjecture_explorer(Q, x, y)[0] for x in range(n) for y in range(n))
    print(f"{spec}: matchings found for {found} of {n * n} coset pairs")
