import numpy as np
import pytest

from commuting_classes import catalog as cat, groups
from commuting_classes.commuting import (central_classes, classes_commute, classes_commute_bruteforce,
                                         commuting_class_graph, commuting_matrix, coset_profiles, is_split,
                                         is_split_by_centralizer, to_dot)
from commuting_classes.group_core import Permutation, cyclic_quotient


def class_by_type(G, cycle_type):
    return next(C for C in G.classes if G.element(C.rep).cycle_type() == cycle_type)


def test_witness_examples(s4):
    G = s4.group
    ident = G.classes[0]
    for D in G.classes:
        w = classes_commute(G, ident, D)
        assert w is not None and w.c == G.identity
    c22, c4, c211 = (class_by_type(G, t) for t in [(2, 2), (4,), (2, 1, 1)])
    w = classes_commute(G, c22, c4)
    assert w is not None and int(G.mul(w.c, w.d)) == int(G.mul(w.d, w.c))
    assert w.c in c22 and w.d in c4
    # the spec's named pair: (0 1)(2 3) commutes with (0 2 1 3)
    x = G.index_of([Permutation.parse("(0 1)(2 3)").images])[0]
    y = G.index_of([Permutation.parse("(0 2 1 3)").images])[0]
    assert G.commutes(x, y)
    assert classes_commute(G, c211, c4) is None
    assert classes_commute(G, c211, c22) is not None


def test_split_examples(s4, s3):
    G = s4.group
    assert is_split(s4, class_by_type(G, (3, 1)))
    assert not is_split(s4, class_by_type(G, (2, 2)))
    for Q in (s4, s3, cat.load("sl2-in-gl2:5"), cat.load("alt:4/v4")):
        for m in Q.generating_exponents():
            assert not any(is_split(Q, C) for C in Q.classes_in_coset(m))


def test_profile_examples(s4, s3):
    assert [p.nonsplit_count for p in coset_profiles(s4)] == [2, 2]
    assert [sorted(s4.group.element(s4.group.classes[c].rep).cycle_type() for c in p.nonsplit_ids)
            for p in coset_profiles(s4)] == [[(1, 1, 1, 1), (2, 2)], [(2, 1, 1), (4,)]]
    assert [p.nonsplit_count for p in coset_profiles(s3)] == [1, 1]
    G = s4.group
    whole = cyclic_quotient(G, G.all())
    (prof,) = coset_profiles(whole)
    assert prof.nonsplit_count == len(G.classes)


def test_graph_examples(s3, s4):
    G = groups.cyclic(7)
    M = commuting_matrix(G)
    assert M.all()
    adj = commuting_class_graph(s3.group)
    G3 = s3.group
    t, r = class_by_type(G3, (2, 1)), class_by_type(G3, (3,))
    assert set(adj[0]) >= {t.class_id, r.class_id}
    assert r.class_id not in adj[t.class_id]


def test_central_classes_examples(s4):
    q8 = cat.load("q8", "whole").group
    assert [q8.classes[c].size for c in central_classes(q8)] == [1, 1]
    assert central_classes(s4.group) == [0]
    G = groups.cyclic(6)
    assert central_classes(G) == list(range(6))


def test_relation_matrix_is_symmetric_and_readonly(s4):
    M = commuting_matrix(s4.group)
    assert np.array_equal(M, M.T) and M.diagonal().all()
    with pytest.raises(ValueError):
        M[0, 0] = False


@pytest.mark.parametrize("spec", ["sym:4", "dihedral:6", "q8", "alt:5", "gl2:3", "agl1:5"])
def test_relation_against_double_loop(spec):
    G = cat.load(spec).group
    M = commuting_matrix(G)
    for C in G.classes:
        for D in G.classes:
            assert M[C.class_id, D.class_id] == classes_commute_bruteforce(G, C, D)


@pytest.mark.parametrize("spec", cat.CATALOG)
def test_split_tests_agree(spec):
    Q = cat.load(spec)
    for C in Q.group.classes:
        assert is_split(Q, C) == is_split_by_centralizer(Q, C)


def test_dot_format(s4):
    dot = to_dot(s4)
    assert dot.startswith("graph")
    assert "  c2[coset=0,split=1,size=8];" in dot
    assert "c1 -- c3;" in dot
    assert " -- c0;" not in dot.replace("c0 -- c0;", "")  # no loops written
    assert to_dot(s4) == dot
