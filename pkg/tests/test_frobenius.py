import pytest

from commuting_classes import catalog as cat, groups
from commuting_classes.errors import NotPrimeIndex
from commuting_classes.frobenius import (all_nonidentity_classes_split, is_frobenius_with_kernel,
                                         is_nilpotent, proposition3_check, upper_central_series,
                                         weakened_hypothesis_observation)

PRIME_INDEX = [s for s in cat.CATALOG if cat.prime_index(cat.load(s))]


def test_split_side_examples(s3, s4):
    assert all_nonidentity_classes_split(s3)
    assert not all_nonidentity_classes_split(s4)
    assert all_nonidentity_classes_split(cat.load("dihedral:5"))


def test_frobenius_side_examples(s3, s4):
    assert is_frobenius_with_kernel(s3.group, s3.h_members)
    assert not is_frobenius_with_kernel(s4.group, s4.h_members)
    Q = cat.load("alt:4/v4")
    assert is_frobenius_with_kernel(Q.group, Q.h_members)


def test_report_examples(s3, s4):
    r = proposition3_check(s3)
    assert r.all_nonidentity_split and r.is_frobenius and r.kernel_nilpotent and r.complement_order == 2
    r = proposition3_check(cat.load("alt:4/v4"))
    assert r.is_frobenius and r.kernel_nilpotent and r.upper_central_series_lengths == [1, 4]
    r = proposition3_check(s4)
    assert not r.all_nonidentity_split and not r.is_frobenius
    with pytest.raises(NotPrimeIndex):
        proposition3_check(cat.load("cyclic:8/sub:4"))


@pytest.mark.parametrize("spec", PRIME_INDEX)
def test_equivalence_on_catalog(spec):
    r = proposition3_check(cat.load(spec))
    assert r.all_nonidentity_split == r.is_frobenius
    if r.is_frobenius:
        assert r.kernel_nilpotent and r.outer_elements_have_order_p


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_odd_dihedral_is_frobenius(n):
    assert proposition3_check(cat.load(f"dihedral:{n}")).is_frobenius


def test_even_dihedral_is_not():
    assert not proposition3_check(cat.load("dihedral:6")).is_frobenius


def test_upper_central_series():
    G = groups.symmetric(4)
    assert not is_nilpotent(G, G.all())[0]
    q8 = groups.quaternion()
    ok, sizes = is_nilpotent(q8, q8.all())
    assert ok and sizes == [1, 2, 8]
    D = groups.dihedral(8)
    assert [len(z) for z in upper_central_series(D, D.all())] == [1, 2, 4, 16]


def test_weakened_hypothesis_reporting_only():
    obs = weakened_hypothesis_observation(cat.load("q8/gen:0"))
    assert obs.hypothesis_holds in (True, False)
    if obs.hypothesis_holds:
        assert obs.kernel_nilpotent is not None
