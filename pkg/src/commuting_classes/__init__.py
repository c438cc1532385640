"""Commuting conjugacy classes of finite groups, computed by exhaustive enumeration."""

from .catalog import CATALOG, GroupSpec, load
from .commuting import (ClassPairWitness, central_classes, classes_commute, commuting_class_graph,
                        commuting_matrix, coset_profiles, is_split)
from .group_core import (ConjugacyClass, FiniteGroup, MatrixElem, Permutation, QuotientData, centralizer,
                         close_group, conjugacy_classes, cyclic_quotient)
from .matching import (ClassMatching, CommutingTuple, HallAuditReport, conjecture_explorer,
                       find_coprime_residue, hall_audit, max_matching, power_map_class_bijection,
                       theorem1_matching, theorem2_partition)

__version__ = "0.1.0"
