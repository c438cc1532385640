"""Hall-condition audits, bipartite matchings and the coset matching constructions.

The matching between non-split classes of a coset ``H t^x`` and the classes of
the generating coset ``H t`` exists because the neighbourhood of any ``r``
non-split classes in ``H t`` has at least ``r`` members; :func:`hall_audit`
measures exactly that surplus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Hashable, Mapping, Sequence

import numpy as np

from .commuting import ClassPairWitness, classes_commute, commuting_matrix, is_split
from .errors import MatchingIncomplete, NotCoprime, NotPrimeIndex, PartitionDefect
from .fields import is_prime
from .group_core import QuotientData

EXHAUSTIVE_LIMIT = 18
RANDOM_SUBSETS = 10_000


@dataclass
class HallAuditReport:
    """Sizes ``r`` (left subset) and ``s`` (its neighbourhood) for each audited subset."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    r: np.ndarray
    s: np.ndarray
    exhaustive: bool
    violations: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def n_subsets(self) -> int:
        return len(self.r)

    @property
    def min_surplus(self) -> int:
        return int((self.s - self.r).min()) if len(self.r) else 0


def _popcount(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(words).sum(axis=-1).astype(np.int64)


def hall_audit(relation: np.ndarray, left: Sequence[int], right: Sequence[int],
               subset_cap: int = EXHAUSTIVE_LIMIT, seed: int = 0) -> HallAuditReport:
    """Check ``|N(S)| >= |S|`` for subsets ``S`` of ``left``.

    Every nonempty subset is audited when ``len(left) <= subset_cap``;
    otherwise all singletons and pairs plus 10,000 random subsets drawn with
    ``numpy.random.default_rng(seed)``.
    """
    left, right = tuple(left), tuple(right)
    sub = np.asarray(relation, dtype=bool)[np.ix_(left, right)] if left and right else np.zeros((len(left), len(right)), bool)
    nb = np.packbits(sub, axis=1) if len(right) else np.zeros((len(left), 1), np.uint8)
    k = len(left)
    if k <= subset_cap:
        # union of neighbourhoods for every bitmask, built by doubling
        unions = np.zeros((1, nb.shape[1]), dtype=np.uint8)
        sizes = np.zeros(1, dtype=np.int64)
        for i in range(k):
            unions = np.concatenate([unions, unions | nb[i]])
            sizes = np.concatenate([sizes, sizes + 1])
        r, s = sizes[1:], _popcount(unions[1:])
        bad = np.flatnonzero(s < r) + 1
        violations = [(tuple(left[j] for j in range(k) if m >> j & 1), int(r[m - 1]), int(s[m - 1]))
                      for m in bad.tolist()]
        return HallAuditReport(left, right, r, s, True, violations)

    rng = np.random.default_rng(seed)
    subsets = [(i,) for i in range(k)] + [(i, j) for i in range(k) for j in range(i + 1, k)]
    for _ in range(RANDOM_SUBSETS):
        size = int(rng.integers(1, k + 1))
        subsets.append(tuple(sorted(rng.choice(k, size=size, replace=False).tolist())))
    r = np.array([len(S) for S in subsets], dtype=np.int64)
    s = np.array([int(np.count_nonzero(sub[list(S)].any(axis=0))) for S in subsets], dtype=np.int64)
    violations = [(tuple(left[j] for j in S), int(a), int(b)) for S, a, b in zip(subsets, r, s) if b < a]
    return HallAuditReport(left, right, r, s, False, violations)


def max_matching(relation: np.ndarray, left: Sequence[int], right: Sequence[int]) -> dict[int, int]:
    """Maximum bipartite matching by augmenting paths.

    Left vertices are processed in the given order and neighbours scanned in
    the given right order, so the result is deterministic.  A vertex present
    on both sides prefers itself, so a reflexive relation on equal sides
    yields the identity pairing.
    """
    rel = np.asarray(relation, dtype=bool)
    right = list(right)
    adj = {}
    for u in left:
        nbrs = [v for v in right if rel[u, v]]
        if u in nbrs:
            nbrs.remove(u)
            nbrs.insert(0, u)
        adj[u] = nbrs
    return augmenting_path_matching(adj)


def augmenting_path_matching(adj: Mapping[Hashable, Sequence[Hashable]]) -> dict:
    """Maximum matching of a bipartite graph given as left -> right adjacency lists."""
    match_right: dict = {}
    match_left: dict = {}
    # greedy pass: first free neighbour
    for u, nbrs in adj.items():
        for v in nbrs:
            if v not in match_right:
                match_right[v], match_left[u] = u, v
                break
    for root in adj:
        if root in match_left:
            continue
        # iterative DFS for an augmenting path starting at root
        seen = set()
        stack = [(root, iter(adj[root]))]
        path: list = []
        found = False
        while stack and not found:
            u, it = stack[-1]
            for v in it:
                if v in seen:
                    continue
                seen.add(v)
                path.append((u, v))
                if v not in match_right:
                    found = True
                else:
                    w = match_right[v]
                    stack.append((w, iter(adj[w])))
                break
            else:
                stack.pop()
                if path and stack:
                    path.pop()
                continue
        if found:
            for u, v in path:
                match_right[v] = u
                match_left[u] = v
    return {u: match_left[u] for u in adj if u in match_left}


@dataclass(frozen=True)
class ClassMatching:
    """Pairs (class in ``H t^x``, class in the target coset, commuting witness)."""

    coset_x: int
    pairs: tuple[tuple[int, int, ClassPairWitness], ...]
    target_coset: int = 1
    experimental: bool = False

    def __len__(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return {a: b for a, b, _ in self.pairs}


def nonsplit_class_ids(Q: QuotientData, m: int) -> list[int]:
    return [C.class_id for C in Q.classes_in_coset(m) if not is_split(Q, C)]


def _witnessed(Q: QuotientData, pairing: dict[int, int]) -> tuple:
    G = Q.group
    out = []
    for a, b in pairing.items():
        w = classes_commute(G, G.classes[a], G.classes[b])
        if w is None:
            raise MatchingIncomplete(f"classes {a} and {b} were matched but do not commute")
        out.append((a, b, w))
    return tuple(out)


def theorem1_matching(Q: QuotientData, x_exponent: int) -> ClassMatching:
    """Match the non-split classes of ``H t^x`` with the classes of ``H t``.

    Each pair carries a witness ``(c, d)`` of commuting elements.
    """
    n = Q.quotient_order
    if not 0 <= x_exponent < n:
        raise ValueError(f"coset exponent must lie in [0, {n})")
    t_exp = 1 % n
    left = nonsplit_class_ids(Q, x_exponent)
    right = [C.class_id for C in Q.classes_in_coset(t_exp)]
    pairing = max_matching(commuting_matrix(Q.group), left, right)
    if len(left) != len(right) or len(pairing) != len(left):
        raise MatchingIncomplete(
            f"coset {x_exponent}: {len(left)} non-split classes, {len(right)} generating-coset "
            f"classes, matched {len(pairing)}")
    return ClassMatching(x_exponent, _witnessed(Q, pairing), t_exp)


def verify_class_matching(Q: QuotientData, M: ClassMatching, left_ids, right_ids) -> bool:
    """Independent re-check: exact sides, distinct endpoints, witnesses commute."""
    G = Q.group
    lefts = [a for a, _, _ in M.pairs]
    rights = [b for _, b, _ in M.pairs]
    if sorted(lefts) != sorted(left_ids) or sorted(rights) != sorted(right_ids):
        return False
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        return False
    for a, b, w in M.pairs:
        if G.class_of[w.c] != a or G.class_of[w.d] != b:
            return False
        if not bool(G.commutes(w.c, w.d)):
            return False
        if int(G.mul(w.c, w.d)) != int(G.mul(w.d, w.c)):
            return False
    return True


def power_map_class_bijection(Q: QuotientData, c: int, x_exponent: int) -> dict[int, int]:
    """Map each class ``g^G`` in ``H t^x`` to ``(g^c)^G`` in ``H t^(cx)``."""
    G = Q.group
    if gcd(c, G.order) != 1:
        raise NotCoprime(f"{c} is not coprime to |G| = {G.order}")
    n = Q.quotient_order
    src = Q.classes_in_coset(x_exponent)
    dst = {C.class_id for C in Q.classes_in_coset(c * x_exponent)}
    reps = np.array([C.rep for C in src], dtype=np.int64)
    images = G.class_of[G.power(reps, c)] if len(reps) else np.array([], dtype=np.int64)
    pairing = {C.class_id: int(i) for C, i in zip(src, images)}
    if set(pairing.values()) != dst or len(dst) != len(src):
        raise PartitionDefect(f"power map by {c} is not a class bijection {x_exponent} -> {c * x_exponent % n}")
    # every member, not only the representative, must land in the image class
    for C in src:
        if np.any(G.class_of[G.power(C.members, c)] != pairing[C.class_id]):
            raise PartitionDefect(f"power map by {c} does not respect class {C.class_id}")
    return pairing


def find_coprime_residue(group_order: int, p: int, i: int) -> int:
    """Smallest positive ``c`` with ``c = i (mod p)`` and ``gcd(c, group_order) == 1``."""
    c = i
    while gcd(c, group_order) != 1:
        c += p
    return c


@dataclass(frozen=True)
class CommutingTuple:
    """Classes ``(g_0^G, ..., g_{p-1}^G)`` with ``g_m`` in ``H t^m``, reps pairwise commuting."""

    classes: tuple[int, ...]
    reps: tuple[int, ...]
    exponents: tuple[int, ...]


def theorem2_partition(Q: QuotientData) -> list[CommutingTuple]:
    """Partition the non-split classes into commuting tuples, one class per coset.

    Starts from the matching of :func:`theorem1_matching` with ``x = 0``;
    for a matched pair with commuting reps ``h``, ``g`` the tuple is
    ``(h, g, g^c_2, ..., g^c_{p-1})``.
    """
    G = Q.group
    p = Q.quotient_order
    if not is_prime(p):
        raise NotPrimeIndex(f"|G:H| = {p} is not prime")
    cs = tuple(find_coprime_residue(G.order, p, i) for i in range(2, p))
    tuples = []
    for a, b, w in theorem1_matching(Q, 0).pairs:
        reps = [w.c, w.d] + [int(G.power(w.d, c)) for c in cs]
        tuples.append(CommutingTuple(tuple(int(G.class_of[g]) for g in reps), tuple(reps), cs))

    covered = [cid for T in tuples for cid in T.classes]
    nonsplit = sorted(cid for m in range(p) for cid in nonsplit_class_ids(Q, m))
    if len(covered) != len(set(covered)) or sorted(covered) != nonsplit:
        raise PartitionDefect("tuples are not a partition of the non-split classes")
    for T in tuples:
        if [int(Q.exponent_of[g]) for g in T.reps] != list(range(p)):
            raise PartitionDefect(f"tuple {T.classes} does not have one class per coset")
        r = np.array(T.reps)
        if not np.all(G.commutes(r[:, None], r[None, :])):
            raise PartitionDefect(f"tuple {T.classes} has non-commuting representatives")
    return tuples


def conjecture_explorer(Q: QuotientData, x_exponent: int, y_exponent: int) -> tuple[bool, ClassMatching | None]:
    """Experimental: look for a commuting perfect matching between the
    non-split classes of ``H t^x`` and ``H t^y``.

    Returns ``(found, matching)``.  ``found == False`` means no perfect
    matching exists for this pair of cosets in this group.
    """
    left = nonsplit_class_ids(Q, x_exponent)
    right = nonsplit_class_ids(Q, y_exponent)
    pairing = max_matching(commuting_matrix(Q.group), left, right)
    if len(left) != len(right) or len(pairing) != len(left):
        return False, None
    return True, ClassMatching(x_exponent % Q.quotient_order, _witnessed(Q, pairing),
                               y_exponent % Q.quotient_order, experimental=True)
