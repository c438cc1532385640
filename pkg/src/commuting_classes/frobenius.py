"""Prime-index subgroups all of whose non-identity classes split.

Such a subgroup is exactly a Frobenius kernel with complement of prime
order; both sides of that equivalence are computed here independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .commuting import is_split
from .errors import EquivalenceFailure, NotNormal, NotPrimeIndex
from .fields import is_prime
from .group_core import FiniteGroup, QuotientData, centralizer


@dataclass(frozen=True)
class FrobeniusReport:
    all_nonidentity_split: bool
    is_frobenius: bool
    complement_order: int
    fixed_point_free_witness_checked: bool
    kernel_nilpotent: bool | None
    upper_central_series_lengths: list[int] = field(default_factory=list)
    outer_elements_have_order_p: bool | None = None


def _require_prime(Q: QuotientData) -> None:
    if not is_prime(Q.quotient_order):
        raise NotPrimeIndex(f"|G:H| = {Q.quotient_order} is not prime")


def all_nonidentity_classes_split(Q: QuotientData) -> bool:
    """Every G-class inside H other than the identity class is split."""
    _require_prime(Q)
    G = Q.group
    return all(is_split(Q, C) for C in Q.classes_in_coset(0) if C.rep != G.identity)


def is_frobenius_with_kernel(G: FiniteGroup, h_members) -> bool:
    """Every ``t`` outside H centralizes only the identity of H.

    Only one element per G-class needs checking, since H is normal.  With
    H trivial the test holds vacuously (a degenerate "Frobenius" group).
    """
    h = np.unique(np.asarray(h_members, dtype=np.int64))
    for s in G.generators:
        if not np.all(np.isin(G.conj(h, s), h)):
            raise NotNormal("subgroup is not normal")
    if len(h) == G.order:
        return False
    inside = np.zeros(G.order, dtype=bool)
    inside[h] = True
    for C in G.classes:
        if inside[C.rep]:
            continue
        if len(centralizer(G, C.rep, h)) != 1:
            return False
    return True


def upper_central_series(G: FiniteGroup, members) -> list[np.ndarray]:
    """``Z_0 = 1 < Z_1 < ...`` for the subgroup ``members``, until it stabilizes."""
    h = np.unique(np.asarray(members, dtype=np.int64))
    inv = G.inv(h)
    series = [np.array([G.identity], dtype=np.int64)]
    while True:
        z = series[-1]
        nxt = []
        for g in h.tolist():
            # g Z commutes with every x Z  iff  [g, x] lies in Z for every x
            comm = G.mul(G.mul(G.inv(g), inv), G.mul(g, h))
            if np.all(np.isin(comm, z)):
                nxt.append(g)
        nxt = np.array(nxt, dtype=np.int64)
        if len(nxt) == len(z):
            return series
        series.append(nxt)


def is_nilpotent(G: FiniteGroup, members) -> tuple[bool, list[int]]:
    series = upper_central_series(G, members)
    sizes = [len(z) for z in series]
    return sizes[-1] == len(np.unique(members)), sizes


def proposition3_check(Q: QuotientData) -> FrobeniusReport:
    """Compute both sides of the split/Frobenius equivalence and compare."""
    _require_prime(Q)
    G, p = Q.group, Q.quotient_order
    lhs = all_nonidentity_classes_split(Q)
    rhs = is_frobenius_with_kernel(G, Q.h_members)
    if lhs != rhs:
        raise EquivalenceFailure(f"{G.name}: all-split={lhs} but Frobenius={rhs}")
    nilpotent, sizes, outer_ok = None, [], None
    if rhs:
        nilpotent, sizes = is_nilpotent(G, Q.h_members)
        outside = np.flatnonzero(Q.exponent_of != 0)
        outer_ok = bool(np.all(G.power(outside, p) == G.identity))
    return FrobeniusReport(lhs, rhs, p if rhs else 0, True, nilpotent, sizes, outer_ok)


@dataclass(frozen=True)
class WeakHypothesisObservation:
    group: str
    hypothesis_holds: bool
    kernel_nilpotent: bool | None


def weakened_hypothesis_observation(Q: QuotientData) -> WeakHypothesisObservation:
    """Reporting only: when every non-central class in H splits, is H nilpotent?

    No conclusion is asserted; the caller decides what to do with a
    counterexample.
    """
    G = Q.group
    holds = all(is_split(Q, C) for C in Q.classes_in_coset(0) if C.size > 1)
    nil = is_nilpotent(G, Q.h_members)[0] if holds else None
    return WeakHypothesisObservation(G.name, holds, nil)
