"""Integer partitions and the commuting criterion for classes of Sym(n).

A partition is a weakly decreasing tuple of positive integers.  A
*coarsening* of ``mu`` is obtained by splitting, for every part size ``s``,
the parts equal to ``s`` into groups and replacing each group by its sum.
Two classes of Sym(n) commute exactly when their cycle types share a
coarsening.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from .errors import CrosscheckFailure, MatchingIncomplete, SizeMismatch, TooLarge

Partition = tuple[int, ...]

ORACLE_MAX_N = 8


def is_partition(parts) -> bool:
    return all(isinstance(x, int) and x >= 1 for x in parts) and all(
        a >= b for a, b in zip(parts, parts[1:]))


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n == 0:
        yield ()
        return
    # classic descending-part successor rule on a mutable list
    a = [n]
    while True:
        yield tuple(a)
        # strip trailing ones
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        a[-1] -= 1
        k = a[-1]
        rest = ones + 1
        while rest > k:
            a.append(k)
            rest -= k
        if rest:
            a.append(rest)


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, reverse lexicographic.

    >>> partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(iter_partitions(n))


def format_partition(lam: Partition) -> str:
    return "+".join(map(str, lam)) if lam else "0"


def parse_partition(text: str) -> Partition:
    """Parse ``"4+3+3+1"`` or exponent shorthand like ``"4,3^4,1^2"``."""
    text = text.strip().strip("()")
    if text in ("", "0"):
        return ()
    parts: list[int] = []
    for tok in text.replace("+", ",").split(","):
        tok = tok.strip()
        if "^" in tok:
            base, exp = tok.split("^")
            parts.extend([int(base)] * int(exp))
        elif tok:
            parts.append(int(tok))
    if any(x < 1 for x in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class PartitionClass:
    in_P_even: bool
    in_D_o: bool


def classify(lam: Partition) -> PartitionClass:
    """Parity of the number of even parts, and whether the parts are distinct and odd."""
    even = sum(1 for x in lam if x % 2 == 0)
    d_o = even == 0 and len(set(lam)) == len(lam)
    in_even = even % 2 == 0
    assert in_even or not d_o
    return PartitionClass(in_even, d_o)


@lru_cache(maxsize=None)
def coarsenings(mu: Partition) -> frozenset[Partition]:
    """Every coarsening of ``mu``, including ``mu`` itself.

    >>> sorted(coarsenings((2, 1, 1)))
    [(2, 1, 1), (2, 2)]
    """
    per_size = []
    for s, m in sorted(Counter(mu).items()):
        per_size.append([tuple(s * g for g in grouping) for grouping in iter_partitions(m)])
    out = set()
    for choice in product(*per_size):
        out.add(tuple(sorted((x for parts in choice for x in parts), reverse=True)))
    return frozenset(out)


def is_coarsening(nu: Partition, mu: Partition) -> bool:
    return nu in coarsenings(mu)


def common_coarsening(lam: Partition, mu: Partition) -> Partition | None:
    """A partition coarsening both arguments, or ``None``.

    The witness is the lexicographically smallest element of the
    intersection, so the answer is symmetric in its arguments.
    """
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"{lam} and {mu} partition different integers")
    common = coarsenings(lam) & coarsenings(mu)
    return min(common) if common else None


# -- group-theoretic oracle ------------------------------------------------

@lru_cache(maxsize=None)
def _sym_data(n: int):
    from .commuting import commuting_matrix
    from .groups import symmetric

    G = symmetric(n)
    types = {G.element(C.rep).cycle_type(): C.class_id for C in G.classes}
    return G, types, commuting_matrix(G)


def sym_commuting_oracle(n: int, lam: Partition, mu: Partition) -> bool:
    """Brute-force truth of ``C^lam ~ C^mu`` in Sym(n)."""
    if n > ORACLE_MAX_N:
        raise TooLarge(f"brute force limited to n <= {ORACLE_MAX_N}")
    if sum(lam) != n or sum(mu) != n:
        raise SizeMismatch("partitions must sum to n")
    G, types, M = _sym_data(max(n, 1))
    if n == 0:
        return True
    return bool(M[types[lam], types[mu]])


@dataclass(frozen=True)
class CrosscheckReport:
    n: int
    pairs_checked: int
    mismatches: tuple[tuple[Partition, Partition], ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def proposition1_crosscheck(n: int) -> CrosscheckReport:
    """Compare the common-coarsening test with brute force over all unordered pairs."""
    P = partitions(n)
    bad = []
    count = 0
    for i, lam in enumerate(P):
        for mu in P[i:]:
            count += 1
            if (common_coarsening(lam, mu) is not None) != sym_commuting_oracle(n, lam, mu):
                bad.append((lam, mu))
    if bad:
        raise CrosscheckFailure(f"n={n}: mismatches {bad}")
    return CrosscheckReport(n, count, ())


# -- counting -------------------------------------------------------------

@dataclass(frozen=True)
class PartitionCounts:
    n: int
    p_even: int
    p_odd: int
    d_o: int


def counting_identity(n: int) -> PartitionCounts:
    """Enumerate partitions of ``n`` and count P_even, P_odd and D_o.

    Every partition is visited once, as a multiplicity vector built from the
    largest part size down; parity of the number of even parts and the
    distinct-odd flag are carried along. Asserts ``p_even == p_odd + d_o``.

    >>> counting_identity(5)
    PartitionCounts(n=5, p_even=4, p_odd=3, d_o=1)
    """
    counts = [0, 0, 0]  # p_even, p_odd, d_o

    def visit(rest: int, k: int, even: int, distinct_odd: bool) -> None:
        if k == 2:
            # the last two part sizes: each m2 fixes the number of ones
            for m2 in range(rest // 2 + 1):
                counts[(even + m2) & 1] += 1
            if distinct_odd and rest <= 1 and not even & 1:
                counts[2] += 1
            return
        if k == 1:
            counts[even & 1] += 1
            counts[2] += distinct_odd and rest <= 1 and not even & 1
            return
        for m in range(rest // k + 1):
            ok = distinct_odd and (m == 0 or (k & 1 and m == 1))
            visit(rest - m * k, k - 1, even + m if not k & 1 else even, ok)

    if n == 0:
        return PartitionCounts(0, 1, 0, 1)
    visit(n, n, 0, True)
    p_even, p_odd, d_o = counts
    if p_even != p_odd + d_o:
        raise CrosscheckFailure(f"n={n}: p_even={p_even}, p_odd={p_odd}, d_o={d_o}")
    return PartitionCounts(n, p_even, p_odd, d_o)


def counting_identity_slow(n: int) -> PartitionCounts:
    """Same counts from explicit partition tuples; the test oracle."""
    p_even = p_odd = d_o = 0
    for lam in iter_partitions(n):
        even = sum(1 for x in lam if not x & 1)
        if even & 1:
            p_odd += 1
        else:
            p_even += 1
            d_o += even == 0 and len(set(lam)) == len(lam)
    return PartitionCounts(n, p_even, p_odd, d_o)


# -- the bijection f -------------------------------------------------------

def sym_bijection_f(n: int) -> dict[Partition, Partition]:
    """A bijection ``P_even(n) minus D_o(n) -> P_odd(n)`` along common coarsenings.

    Built as a maximum matching in the bipartite graph whose edges join
    partitions with a common coarsening.
    """
    from .matching import augmenting_path_matching

    P = partitions(n)
    left = [lam for lam in P if classify(lam).in_P_even and not classify(lam).in_D_o]
    right = [mu for mu in P if not classify(mu).in_P_even]
    by_coarsening: dict[Partition, list[Partition]] = {}
    for mu in right:
        for nu in coarsenings(mu):
            by_coarsening.setdefault(nu, []).append(mu)
    rank = {mu: i for i, mu in enumerate(right)}
    adj = {}
    for lam in left:
        nbrs = {mu for nu in coarsenings(lam) for mu in by_coarsening.get(nu, ())}
        adj[lam] = sorted(nbrs, key=rank.__getitem__)
    f = augmenting_path_matching(adj)
    if len(f) != len(left) or len(left) != len(right):
        raise MatchingIncomplete(f"n={n}: matched {len(f)} of {len(left)} / {len(right)}")
    return f


# -- the Sym(4) remark ----------------------------------------------------

@dataclass(frozen=True)
class Sym4Counterexample:
    x: str
    y: str
    commute: bool
    z_checked: int
    witnesses: tuple[str, ...]


def _acts_as_power_on_orbits(x: np.ndarray, z: np.ndarray) -> bool:
    """Whether ``x`` agrees with some power of ``z`` on every orbit of ``z``."""
    n = len(z)
    seen = np.zeros(n, dtype=bool)
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        i = z[start]
        while i != start:
            orbit.append(i)
            i = z[i]
        seen[orbit] = True
        # powers of z restricted to the orbit; z^k maps orbit[j] to orbit[j + k]
        L = len(orbit)
        pos = {p: j for j, p in enumerate(orbit)}
        if not any(all(x[p] in pos and pos[x[p]] == (j + k) % L for j, p in enumerate(orbit))
                   for k in range(L)):
            return False
    return True


def power_of_orbits_witnesses(x, y, n: int) -> list:
    """Every ``z`` in Sym(n) such that ``x`` and ``y`` act as powers of ``z`` on each ``z``-orbit."""
    from .groups import symmetric

    G = symmetric(n)
    xs, ys = np.asarray(x.images), np.asarray(y.images)
    return [G.element(i) for i in range(G.order)
            if _acts_as_power_on_orbits(xs, G.rows[i]) and _acts_as_power_on_orbits(ys, G.rows[i])]


def sym4_counterexample(y=None) -> Sym4Counterexample:
    """Commuting double transpositions that are not simultaneously powers of one ``z``."""
    from .group_core import Permutation

    x = Permutation.parse("(0 1)(2 3)", 4)
    y = Permutation.parse("(0 2)(1 3)", 4) if y is None else y
    wit = power_of_orbits_witnesses(x, y, 4)
    return Sym4Counterexample(str(x), str(y), x * y == y * x, 24, tuple(str(z) for z in wit))
