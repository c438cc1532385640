"""The twelve acceptance criteria, one PASS/FAIL line each.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

import time

import numpy as np
import pytest

from commuting_classes import catalog as cat
from commuting_classes import verify
from commuting_classes.commuting import central_classes, is_split
from commuting_classes.gl2 import gl4_counterexample
from commuting_classes.group_core import centralizer
from commuting_classes.partitions import counting_identity, sym4_counterexample


def ac1_coset_matchings():
    t0 = time.perf_counter()
    c = verify.check_coset_matchings()
    elapsed = time.perf_counter() - t0
    return c.passed and elapsed < 60, f"{c.detail}; {elapsed:.1f}s (limit 60s)"


def ac2_double_counting():
    c = verify.check_double_counting(seed=0)
    return c.passed, c.detail


def ac3_commuting_tuples():
    c = verify.check_commuting_tuples()
    ps = {cat.load(s).quotient_order for s in cat.CATALOG if cat.prime_index(cat.load(s))}
    return c.passed and {2, 3} <= ps, c.detail


def ac4_power_maps():
    c = verify.check_power_maps()
    enough = all(len(verify.coprime_exponents(cat.load(s).group.order)) >= 3 for s in cat.CATALOG)
    return c.passed and enough, c.detail


def ac5_common_coarsening():
    c = verify.check_common_coarsening(8)
    return c.passed, c.detail


def ac6_counting_identity():
    t0 = time.perf_counter()
    ok = all((lambda r: r.p_even == r.p_odd + r.d_o)(counting_identity(n)) for n in range(1, 61))
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 10, f"n = 1..60 in {elapsed:.1f}s (limit 10s)"


def ac7_coset_table():
    c = verify.check_coset_table(31, (3, 5, 7))
    return c.passed, c.detail


def ac8_scheme():
    c = verify.check_scheme((3, 5, 7, 9, 11))
    return c.passed, c.detail


def ac9_split_criteria():
    a = verify.check_sym_split(7)
    b = verify.check_gl2_split((3, 5, 7))
    return a.passed and b.passed, f"{a.detail}; {b.detail}"


def ac10_counterexamples():
    s = sym4_counterexample()
    t0 = time.perf_counter()
    g = gl4_counterexample()
    elapsed = time.perf_counter() - t0
    ok = (s.commute and s.z_checked == 24 and not s.witnesses
          and g.commuting_partners > 0 and g.algebras_scanned == 65536 and g.algebras_with_both == 0
          and elapsed < 300)
    return ok, (f"Sym(4): 0 of 24 z; GL4(2): {g.commuting_partners} commuting witnesses, "
                f"{g.algebras_with_both} of {g.algebras_scanned} algebras meet both, {elapsed:.1f}s")


def ac11_frobenius():
    c = verify.check_frobenius()
    named = {"alt-in-sym:3": True, "alt:4/v4": True, "dihedral:3": True, "dihedral:5": True,
             "alt-in-sym:4": False}
    from commuting_classes.frobenius import proposition3_check

    cases = all(proposition3_check(cat.load(s)).is_frobenius == want for s, want in named.items())
    return c.passed and cases, c.detail


def ac12_centre():
    for s in cat.CATALOG:
        G = cat.load(s).group
        # all pairs up to order 1000; above that, commuting with every generator
        others = G.all() if G.order <= 1000 else np.array(G.generators)
        z = np.flatnonzero(G.commutes(G.all()[:, None], others[None, :]).all(axis=1))
        brute = sorted(int(G.class_of[g]) for g in z)
        if central_classes(G) != brute:
            return False, f"{s}: {central_classes(G)} vs {brute}"
    return True, f"central_classes equals the directly computed centre on {len(cat.CATALOG)} groups"


CRITERIA = [ac1_coset_matchings, ac2_double_counting, ac3_commuting_tuples, ac4_power_maps, ac5_common_coarsening,
            ac6_counting_identity, ac7_coset_table, ac8_scheme, ac9_split_criteria,
            ac10_counterexamples, ac11_frobenius, ac12_centre]


def _line(i, fn):
    ok, detail = fn()
    return ok, f"{'PASS' if ok else 'FAIL'} AC{i} {fn.__name__.split('_', 1)[1]}: {detail}"


@pytest.mark.parametrize("i,fn", list(enumerate(CRITERIA, 1)), ids=[f.__name__ for f in CRITERIA])
def test_acceptance(i, fn, capsys):
    ok, line = _line(i, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_line(i, fn) for i, fn in enumerate(CRITERIA, 1)]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
