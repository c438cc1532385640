"""The commuting relation on conjugacy classes and split/non-split status."""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .errors import CountMismatch, NonCentralUniversalClass
from .group_core import ConjugacyClass, FiniteGroup, QuotientData, centralizer


@dataclass(frozen=True)
class ClassPairWitness:
    class_c: int
    class_d: int
    c: int
    d: int

    def swapped(self) -> "ClassPairWitness":
        return ClassPairWitness(self.class_d, self.class_c, self.d, self.c)


@dataclass(frozen=True)
class ClassCosetProfile:
    exponent: int
    class_ids: tuple[int, ...]
    split: tuple[bool, ...]

    @property
    def nonsplit_ids(self) -> tuple[int, ...]:
        return tuple(c for c, s in zip(self.class_ids, self.split) if not s)

    @property
    def nonsplit_count(self) -> int:
        return len(self.nonsplit_ids)


_matrix_cache: "weakref.WeakKeyDictionary[FiniteGroup, np.ndarray]" = weakref.WeakKeyDictionary()


def commuting_matrix(G: FiniteGroup) -> np.ndarray:
    """Boolean matrix ``M[i, j]`` true iff class ``i`` commutes with class ``j``.

    Row ``i`` is read off the centralizer of the representative of class
    ``i``; by conjugation invariance that single representative suffices.
    """
    M = _matrix_cache.get(G)
    if M is None:
        k = len(G.classes)
        M = np.zeros((k, k), dtype=bool)
        for C in G.classes:
            M[C.class_id, np.unique(G.class_of[centralizer(G, C.rep)])] = True
        M.setflags(write=False)
        _matrix_cache[G] = M
    return M


def classes_commute(G: FiniteGroup, C: ConjugacyClass, D: ConjugacyClass) -> ClassPairWitness | None:
    """Witness ``(rep of C, first member of D commuting with it)``, or ``None``."""
    hits = D.members[G.commutes(D.members, C.rep)]
    if len(hits) == 0:
        return None
    return ClassPairWitness(C.class_id, D.class_id, C.rep, int(hits[0]))


def classes_commute_bruteforce(G: FiniteGroup, C: ConjugacyClass, D: ConjugacyClass) -> bool:
    """Full double loop over ``C x D``; independent of conjugation invariance."""
    return bool(np.any(G.commutes(C.members[:, None], D.members[None, :])))


def commuting_class_graph(G: FiniteGroup) -> dict[int, list[int]]:
    """Adjacency lists of ``~`` over class ids (each class lists itself)."""
    M = commuting_matrix(G)
    return {i: np.flatnonzero(M[i]).tolist() for i in range(len(M))}


def is_split(Q: QuotientData, C: ConjugacyClass) -> bool:
    """True iff the H-conjugation orbit of ``C.rep`` is smaller than ``C``."""
    G = Q.group
    orbit = np.unique(G.conj(C.rep, Q.h_members))
    return len(orbit) < C.size


def is_split_by_centralizer(Q: QuotientData, C: ConjugacyClass) -> bool:
    """True iff ``Cent_G(rep)`` misses some coset of H."""
    cent = centralizer(Q.group, C.rep)
    return len(np.unique(Q.exponent_of[cent])) < Q.quotient_order


def coset_profiles(Q: QuotientData) -> list[ClassCosetProfile]:
    """One profile per coset ``H t^m``; checks the equal non-split counts."""
    profiles = []
    for m in range(Q.quotient_order):
        cls = Q.classes_in_coset(m)
        profiles.append(ClassCosetProfile(m, tuple(c.class_id for c in cls),
                                          tuple(is_split(Q, c) for c in cls)))
    counts = {p.nonsplit_count for p in profiles}
    if len(counts) != 1:
        raise CountMismatch(f"non-split counts differ across cosets: {[p.nonsplit_count for p in profiles]}")
    for m in Q.generating_exponents():
        if any(profiles[m].split):
            raise CountMismatch(f"split class found in generating coset {m}")
    return profiles


def central_classes(G: FiniteGroup) -> list[int]:
    """Classes adjacent under ``~`` to every class; each must be a central singleton."""
    M = commuting_matrix(G)
    universal = np.flatnonzero(M.all(axis=1)).tolist()
    for cid in universal:
        C = G.classes[cid]
        if C.size != 1 or len(centralizer(G, C.rep)) != G.order:
            raise NonCentralUniversalClass(f"class {cid} commutes with every class but is not central")
    return universal


def to_dot(Q: QuotientData) -> str:
    """Graphviz rendering of the commuting-class graph, loops omitted."""
    G = Q.group
    M = commuting_matrix(G)
    lines = ["graph commuting {"]
    for C in G.classes:
        lines.append(f"  c{C.class_id}[coset={Q.class_exponent(C)},"
                     f"split={int(is_split(Q, C))},size={C.size}];")
    k = len(M)
    for i in range(k):
        for j in range(i + 1, k):
            if M[i, j]:
                lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
