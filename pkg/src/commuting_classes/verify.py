"""The full verification suite over the built-in catalog.

Each check returns a :class:`Check`; :func:`run` collects them by section
(``theorems``, ``sym``, ``gl2``, ``frobenius``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable

import numpy as np

from . import catalog as cat
from .commuting import (central_classes, classes_commute, classes_commute_bruteforce, commuting_matrix,
                        coset_profiles, is_split, is_split_by_centralizer)
from .errors import TheoremViolation
from .frobenius import proposition3_check, weakened_hypothesis_observation
from .gl2 import (coset_table, coset_table_bruteforce, coset_table_formula, crosscheck_catalog,
                  gl4_counterexample, same_type_commute_check, sl2_cxi_matching)
from .group_core import centralizer
from .matching import (hall_audit, nonsplit_class_ids, power_map_class_bijection, theorem1_matching,
                       theorem2_partition, verify_class_matching)
from .partitions import classify, counting_identity, proposition1_crosscheck, sym4_counterexample

SECTIONS = ("theorems", "sym", "gl2", "frobenius")
DEFAULT_Q = (3, 5, 7)
SCHEME_Q = (3, 5, 7, 9, 11)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except TheoremViolation as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, bool(ok), detail, time.perf_counter() - t0)


def _catalog(names: Iterable[str] | None = None):
    return [cat.load(s) for s in (names or cat.CATALOG)]


# -- criteria -------------------------------------------------------------

def check_coset_matchings(names=None) -> Check:
    def run():
        n_match = 0
        for Q in _catalog(names):
            right = [C.class_id for C in Q.classes_in_coset(1)]
            for x in range(Q.quotient_order):
                M = theorem1_matching(Q, x)
                if not verify_class_matching(Q, M, nonsplit_class_ids(Q, x), right):
                    return False, f"{Q.group.name} coset {x}: matching failed re-verification"
                n_match += 1
        return True, f"{n_match} perfect commuting matchings verified"
    return _timed("Coset-to-generator matchings", run)


def check_double_counting(names=None, seed: int = 0) -> Check:
    def run():
        subsets = 0
        for Q in _catalog(names):
            counts = {p.nonsplit_count for p in coset_profiles(Q)}
            right = [C.class_id for C in Q.classes_in_coset(1)]
            if counts != {len(right)}:
                return False, f"{Q.group.name}: non-split counts {counts} vs |Ht classes| {len(right)}"
            rel = commuting_matrix(Q.group)
            for x in range(Q.quotient_order):
                left = nonsplit_class_ids(Q, x)
                rep = hall_audit(rel, left, right, seed=seed)
                if not rep.exhaustive and len(left) <= 18:
                    return False, "audit was not exhaustive"
                if not rep.passed:
                    return False, f"{Q.group.name} coset {x}: Hall violation {rep.violations[0]}"
                subsets += rep.n_subsets
        return True, f"equal non-split counts; s >= r on {subsets} audited subsets"
    return _timed("Non-split counts and Hall condition", run)


def check_commuting_tuples(names=None) -> Check:
    def run():
        done, ps = 0, set()
        for Q in _catalog(names):
            if not cat.prime_index(Q):
                continue
            tuples = theorem2_partition(Q)
            G = Q.group
            # independent re-check of the partition
            covered = sorted(c for T in tuples for c in T.classes)
            want = sorted(C.class_id for C in G.classes if not is_split(Q, C))
            if covered != want:
                return False, f"{G.name}: tuples do not partition the non-split classes"
            for T in tuples:
                r = np.array(T.reps)
                if sorted(Q.exponent_of[r].tolist()) != list(range(Q.quotient_order)):
                    return False, f"{G.name}: tuple misses a coset"
                if not np.all(G.mul(r[:, None], r[None, :]) == G.mul(r[None, :], r[:, None])):
                    return False, f"{G.name}: tuple reps do not commute"
            done += 1
            ps.add(Q.quotient_order)
        return True, f"{done} prime-index pairs, p in {sorted(ps)}"
    return _timed("Commuting tuples (prime index)", run)


def coprime_exponents(order: int, count: int = 3) -> list[int]:
    out, c = [], 2
    while len(out) < count:
        if gcd(c, order) == 1:
            out.append(c)
        c += 1
    return out


def check_power_maps(names=None) -> Check:
    def run():
        checked = 0
        for Q in _catalog(names):
            G = Q.group
            for c in coprime_exponents(G.order):
                d = pow(c, -1, G.order)
                for x in range(Q.quotient_order):
                    f = power_map_class_bijection(Q, c, x)
                    g = power_map_class_bijection(Q, d, c * x % Q.quotient_order)
                    if any(g[f[a]] != a for a in f):
                        return False, f"{G.name}: power maps {c}, {d} are not inverse"
                    checked += 1
        return True, f"{checked} (group, c, coset) power-map bijections inverted by d"
    return _timed("Coprime power maps", run)


def check_centre(names=None) -> Check:
    def run():
        for Q in _catalog(names):
            G = Q.group
            universal = central_classes(G)
            brute = [C.class_id for C in G.classes
                     if C.size == 1 and len(centralizer(G, C.rep)) == G.order]
            if universal != brute:
                return False, f"{G.name}: {universal} vs {brute}"
        return True, "universal classes are exactly the central singletons"
    return _timed("Centre recognition", run)


def check_relation_consistency(names=None) -> Check:
    """Supporting invariants: witness search vs double loop, both split tests."""
    def run():
        pairs = 0
        for Q in _catalog(names):
            G = Q.group
            for C in G.classes:
                if is_split(Q, C) != is_split_by_centralizer(Q, C):
                    return False, f"{G.name}: split tests disagree on class {C.class_id}"
            if G.order > 500:
                continue
            for C in G.classes:
                for D in G.classes:
                    w = classes_commute(G, C, D)
                    if (w is not None) != classes_commute_bruteforce(G, C, D):
                        return False, f"{G.name}: classes {C.class_id}, {D.class_id}"
                    pairs += 1
        return True, f"{pairs} class pairs agree with the double loop; split tests agree"
    return _timed("Relation consistency", run)


def check_common_coarsening(max_n: int = 8) -> Check:
    def run():
        total = sum(proposition1_crosscheck(n).pairs_checked for n in range(1, max_n + 1))
        return True, f"{total} partition pairs, n = 1..{max_n}"
    return _timed("Common coarsening criterion", run)


def check_counting_identity(max_n: int = 60) -> Check:
    def run():
        for n in range(1, max_n + 1):
            c = counting_identity(n)
            if c.p_even != c.p_odd + c.d_o:
                return False, f"n={n}: {c}"
        return True, f"p_even = p_odd + d_o for n = 1..{max_n}"
    return _timed("Counting identity", run)


def check_sym_split(max_n: int = 7) -> Check:
    # n = 1 is excluded: Alt(1) = Sym(1), so the class (1) is non-split
    def run():
        for n in range(2, max_n + 1):
            Q = cat.load(f"alt-in-sym:{n}")
            G = Q.group
            for C in G.classes:
                lam = G.element(C.rep).cycle_type()
                if classify(lam).in_D_o != is_split(Q, C):
                    return False, f"n={n}, {lam}"
        return True, f"odd-and-distinct criterion matches brute force, n = 2..{max_n}"
    return _timed("Sym split criterion", run)


def check_gl2_split(qs=DEFAULT_Q) -> Check:
    def run():
        for q in qs:
            r = crosscheck_catalog(q)
            if not (r.bijective and r.determinants_agree and r.split_agree):
                return False, f"q={q}: {r}"
        return True, f"divisor criterion and determinant formula match brute force, q in {list(qs)}"
    return _timed("GL2 split criterion", run)


def check_sym4_counterexample() -> Check:
    def run():
        r = sym4_counterexample()
        ok = r.commute and not r.witnesses and r.z_checked == 24
        return ok, f"x={r.x}, y={r.y} commute; {len(r.witnesses)} of 24 z work"
    return _timed("Sym(4) counterexample", run)


def check_gl4_counterexample() -> Check:
    def run():
        r = gl4_counterexample()
        ok = r.commuting_partners > 0 and r.algebras_with_both == 0 and r.algebras_scanned == 65536 and r.self_check_ok
        return ok, (f"{r.commuting_partners} commuting (2,2) partners of a (3,1) element; "
                    f"{r.algebras_with_both} of {r.algebras_scanned} cyclic algebras meet both")
    return _timed("GL4(2) counterexample", run)


def check_coset_table(max_q: int = 31, brute_q=DEFAULT_Q) -> Check:
    def run():
        from .fields import prime_power

        odd_q = []
        for q in range(3, max_q + 1, 2):
            try:
                prime_power(q)
            except ValueError:
                continue
            odd_q.append(q)
            t, f = coset_table(q), coset_table_formula(q)
            if (t.sl, t.c_xi) != (f.sl, f.c_xi):
                return False, f"q={q}: catalog {t} vs formula {f}"
        for q in brute_q:
            b, f = coset_table_bruteforce(q), coset_table_formula(q)
            if (b.sl, b.c_xi) != (f.sl, f.c_xi):
                return False, f"q={q}: brute force {b} vs formula {f}"
        return True, f"odd q {odd_q}; brute force at {list(brute_q)}"
    return _timed("SL2 / C_xi class table", run)


def check_scheme(qs=SCHEME_Q) -> Check:
    def run():
        for q in qs:
            m = sl2_cxi_matching(q)
            if not m.verified:
                return False, f"q={q}"
            if q <= 11 and q % 2 and not same_type_commute_check(q).passed:
                return False, f"q={q}: same-type commuting check failed"
        return True, f"complete commuting matchings for q in {list(qs)}"
    return _timed("SL2 / C_xi matching scheme", run)


def check_frobenius(names=None) -> Check:
    def run():
        pos, neg = [], []
        for Q in _catalog(names):
            if not cat.prime_index(Q):
                continue
            r = proposition3_check(Q)
            if r.is_frobenius:
                if not r.kernel_nilpotent or not r.outer_elements_have_order_p:
                    return False, f"{Q.group.name}: kernel not nilpotent or outer order wrong"
                pos.append(Q.group.name)
            else:
                neg.append(Q.group.name)
        return True, f"{len(pos)} Frobenius ({', '.join(pos)}); {len(neg)} not"
    return _timed("Split classes vs Frobenius kernel", run)


def weakened_hypothesis_notes(names=None) -> list[str]:
    out = []
    for Q in _catalog(names):
        if Q.quotient_order != 2:
            continue
        obs = weakened_hypothesis_observation(Q)
        if obs.hypothesis_holds:
            flag = "" if obs.kernel_nilpotent else "  <-- COUNTEREXAMPLE"
            out.append(f"{obs.group}: every non-central class of H splits; H nilpotent = {obs.kernel_nilpotent}{flag}")
    return out


def run(sections: Iterable[str] = SECTIONS, qs=None, seed: int = 0) -> list[Check]:
    sections = list(sections)
    checks: list[Check] = []
    if "theorems" in sections:
        checks += [check_coset_matchings(), check_double_counting(seed=seed), check_commuting_tuples(),
                   check_power_maps(), check_centre(), check_relation_consistency()]
    if "sym" in sections:
        checks += [check_common_coarsening(), check_counting_identity(), check_sym_split(),
                   check_sym4_counterexample()]
    if "gl2" in sections:
        brute = tuple(q for q in (qs or DEFAULT_Q) if q <= 9)
        checks += [check_coset_table(brute_q=tuple(q for q in brute if q % 2)),
                   check_scheme(tuple(qs) if qs else SCHEME_Q),
                   check_gl2_split(brute), check_gl4_counterexample()]
    if "frobenius" in sections:
        checks += [check_frobenius()]
    return checks
