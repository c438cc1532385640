"""
Commuting classes in Sym(4) over Alt(4)
=======================================

Enumerate Sym(4), split its classes by coset of Alt(4), and pair the
non-split classes of each coset with the classes of the odd coset.
"""

from commuting_classes import catalog as cat
from commuting_classes.commuting import commuting_matrix, coset_profiles, is_split
from commuting_classes.matching import hall_audit, nonsplit_class_ids, theorem1_matching, theorem2_partition

Q = cat.load("sym:4", "alt")
G = Q.group
print(G, "| quotient order", Q.quotient_order, "| t =", G.render(Q.t_rep))

# the class table: (3,1) is the only class that splits in Alt(4)
for C in G.classes:
    print(f"  class {C.class_id}: {G.render(C.rep):12s} size {C.size:2d}  coset {Q.class_exponent(C)}"
          f"  {'split' if is_split(Q, C) else 'non-split'}")

# the same number of non-split classes in every coset
print("non-split counts:", [p.nonsplit_count for p in coset_profiles(Q)])

# Hall's condition for the even coset against the odd coset, every subset
rel = commuting_matrix(G)
audit = hall_audit(rel, nonsplit_class_ids(Q, 0), nonsplit_class_ids(Q, 1))
print(f"Hall audit: {audit.n_subsets} subsets, minimum surplus {audit.min_surplus}")

# the matching itself, with a commuting witness per pair
for a, b, w in theorem1_matching(Q, 0).pairs:
    print(f"  {G.render(G.classes[a].rep):12s} <-> {G.render(G.classes[b].rep):12s}"
          f"  witness {G.render(w.c)} * {G.render(w.d)}")

# prime index: the non-split classes fall into commuting tuples, one per coset
for T in theorem2_partition(Q):
    print("  tuple:", ", ".join(G.render(r) for r in T.reps))
