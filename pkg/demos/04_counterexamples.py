"""
Commuting is weaker than being powers of one element
====================================================

In Sym(4) the double transpositions (0 1)(2 3) and (0 2)(1 3) commute, yet
no z has both of them as powers of z on each of its orbits.  In GL4(2) the
unipotent classes (3,1) and (2,2) commute, yet no cyclic subalgebra F2[Z]
meets both.
"""

from commuting_classes.gl2 import gl4_counterexample
from commuting_classes.group_core import Permutation
from commuting_classes.partitions import sym4_counterexample

r = sym4_counterexample()
print(f"x={r.x}, y={r.y}, commute={r.commute}, z tried={r.z_checked}, witnesses={len(r.witnesses)}")

# replacing y by x: z = x itself works
r = sym4_counterexample(Permutation.parse("(0 1)(2 3)"))
print("with y = x:", r.witnesses)

g = gl4_counterexample()
print("(3,1) representative:", g.x)
print("a commuting (2,2) partner:", g.y, f"({g.commuting_partners} in total)")
print(f"algebras F2[Z] scanned: {g.algebras_scanned}, meeting both classes: {g.algebras_with_both}")
