import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from commuting_classes.errors import SizeMismatch, TooLarge
from commuting_classes.group_core import Permutation
from commuting_classes.partitions import (classify, coarsenings, common_coarsening, counting_identity,
                                          counting_identity_slow, format_partition, is_coarsening,
                                          iter_partitions, parse_partition, partitions,
                                          proposition1_crosscheck, sym4_counterexample, sym_bijection_f,
                                          sym_commuting_oracle)

def euler_p(N):
    """p(0..N) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * N
    for n in range(1, N + 1):
        k, s = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            s += sign * p[n - g1]
            if g2 <= n:
                s += sign * p[n - g2]
            k += 1
        p[n] = s
    return p


def test_partition_examples():
    assert partitions(0) == [()]
    assert len(partitions(5)) == 7
    assert len(partitions(10)) == 42


def test_partition_counts_match_pentagonal_recurrence():
    p = euler_p(30)
    assert [len(partitions(n)) for n in range(31)] == p


@pytest.mark.parametrize("n", range(1, 12))
def test_partitions_distinct_sorted_reverse_lex(n):
    P = partitions(n)
    assert len(set(P)) == len(P)
    assert P == sorted(P, reverse=True)
    assert all(sum(lam) == n and list(lam) == sorted(lam, reverse=True) for lam in P)


def test_classify_examples():
    c = classify((2, 2, 1))
    assert c.in_P_even and not c.in_D_o
    c = classify((5, 3, 1))
    assert c.in_P_even and c.in_D_o
    c = classify((3, 1, 1))
    assert c.in_P_even and not c.in_D_o
    assert not classify((2, 1)).in_P_even


def test_classify_matches_permutation_parity():
    # P_even is exactly the cycle types of even permutations
    for n in range(1, 9):
        for lam in partitions(n):
            cycles, start = [], 0
            for part in lam:
                cycles.append(tuple(range(start, start + part)))
                start += part
            p = Permutation.from_cycles(cycles, n)
            inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if p.images[i] > p.images[j])
            assert classify(lam).in_P_even == (inversions % 2 == 0)


def test_parse_and_format():
    lam = parse_partition("4,3^4,1^2")
    assert lam == (4, 3, 3, 3, 3, 1, 1)
    assert format_partition(lam) == "4+3+3+3+3+1+1"
    assert parse_partition(format_partition(lam)) == lam
    assert parse_partition("0") == ()


def test_coarsening_examples():
    lam = parse_partition("4,3^4,1^2")
    assert (12, 4, 2) in coarsenings(lam)
    assert (6, 4, 3, 3, 1, 1) in coarsenings(lam)
    assert coarsenings((1,)) == {(1,)}
    assert coarsenings((2, 1, 1)) == {(2, 1, 1), (2, 2)}
    assert coarsenings((3, 1)) == {(3, 1)}


def brute_coarsenings(mu):
    """Set partitions of the parts into blocks of equal sizes, summed."""
    mu = list(mu)
    out = set()

    def rec(i, blocks):
        if i == len(mu):
            out.add(tuple(sorted((sum(b) for b in blocks), reverse=True)))
            return
        for b in blocks:
            if b[0] == mu[i]:
                b.append(mu[i])
                rec(i + 1, blocks)
                b.pop()
        blocks.append([mu[i]])
        rec(i + 1, blocks)
        blocks.pop()

    rec(0, [])
    return out


@pytest.mark.parametrize("n", range(1, 10))
def test_coarsenings_match_set_partition_oracle(n):
    for mu in partitions(n):
        assert coarsenings(mu) == brute_coarsenings(mu)


def test_common_coarsening_examples():
    assert common_coarsening((3, 2, 1), (3, 2, 1)) == (3, 2, 1)
    assert common_coarsening((2, 1, 1), (3, 1)) is None
    # single-round coarsening: (4) is not reachable from (2,1,1), matching
    # the brute-force fact that (2,1,1) and (4) do not commute in Sym(4)
    assert common_coarsening((2, 1, 1), (4,)) is None
    assert common_coarsening((2, 2), (4,)) == (4,)
    with pytest.raises(SizeMismatch):
        common_coarsening((2, 1), (2, 2))


def test_oracle_examples():
    assert all(sym_commuting_oracle(4, lam, (1, 1, 1, 1)) for lam in partitions(4))
    assert not sym_commuting_oracle(4, (2, 1, 1), (4,))
    assert sym_commuting_oracle(4, (2, 2), (4,))
    with pytest.raises(TooLarge):
        sym_commuting_oracle(9, (9,), (9,))


def test_crosscheck_examples():
    assert proposition1_crosscheck(1).pairs_checked == 1
    assert proposition1_crosscheck(3).pairs_checked == 6
    assert proposition1_crosscheck(4).pairs_checked == 15


@pytest.mark.parametrize("n", range(1, 9))
def test_crosscheck_exhaustive(n):
    rep = proposition1_crosscheck(n)
    p = len(partitions(n))
    assert rep.passed and rep.pairs_checked == p * (p + 1) // 2


def test_counting_examples():
    c = counting_identity(5)
    assert (c.p_even, c.p_odd, c.d_o) == (4, 3, 1)
    c = counting_identity(1)
    assert (c.p_even, c.p_odd, c.d_o) == (1, 0, 1)
    c = counting_identity(2)
    assert (c.p_even, c.p_odd, c.d_o) == (1, 1, 0)


def test_counting_fast_matches_tuple_enumeration():
    for n in range(0, 31):
        assert counting_identity(n) == counting_identity_slow(n)


def distinct_odd_count(N):
    # coefficients of prod (1 + x^(2k+1)), an independent count of D_o
    c = [1] + [0] * N
    for part in range(1, N + 1, 2):
        for n in range(N, part - 1, -1):
            c[n] += c[n - part]
    return c


def test_counting_identity_to_60():
    p, d = euler_p(60), distinct_odd_count(60)
    for n in range(1, 61):
        c = counting_identity(n)
        assert c.p_even + c.p_odd == p[n]
        assert c.d_o == d[n]
        assert c.p_even == c.p_odd + c.d_o


def test_bijection_examples():
    assert sym_bijection_f(2) == {(1, 1): (2,)}
    f = sym_bijection_f(4)
    assert set(f) == {(1, 1, 1, 1), (2, 2)}
    assert set(f.values()) == {(2, 1, 1), (4,)}
    assert len(sym_bijection_f(5)) == 3


@pytest.mark.parametrize("n", range(2, 13))
def test_bijection_respects_commuting(n):
    f = sym_bijection_f(n)
    c = counting_identity(n)
    assert len(f) == c.p_odd == len(set(f.values()))
    for lam, mu in f.items():
        assert classify(lam).in_P_even and not classify(lam).in_D_o
        assert not classify(mu).in_P_even
        assert common_coarsening(lam, mu) is not None
        if n <= 8:
            assert sym_commuting_oracle(n, lam, mu)


def test_sym4_counterexample():
    r = sym4_counterexample()
    assert r.commute and r.z_checked == 24 and r.witnesses == ()
    r = sym4_counterexample(Permutation.parse("(0 1)(2 3)"))
    assert "(0 1)(2 3)" in r.witnesses


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=7))
def test_coarsening_properties(parts):
    mu = tuple(sorted(parts, reverse=True))
    cs = coarsenings(mu)
    assert mu in cs
    assert all(sum(nu) == sum(mu) for nu in cs)
    # a coarsening never has more parts, and merging is within a part size
    assert all(len(nu) <= len(mu) for nu in cs)
    assert is_coarsening(mu, mu)
    assert common_coarsening(mu, mu) == min(cs & cs)
