"""Constructors for the standard groups and normal subgroups used throughout."""

from __future__ import annotations

import numpy as np

from .fields import FieldSpec, field_of_order
from .group_core import DEFAULT_CAP, FiniteGroup, MatrixElem, Permutation, close_group


def symmetric(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n <= 1:
        return close_group([Permutation.identity(max(n, 1))], cap, name=f"Sym({n})")
    gens = [Permutation.from_cycles([(0, 1)], n), Permutation.from_cycles([tuple(range(n))], n)]
    return close_group(gens, cap, name=f"Sym({n})")


def alternating(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 3:
        return close_group([Permutation.identity(max(n, 1))], cap, name=f"Alt({n})")
    gens = [Permutation.from_cycles([(0, 1, i)], n) for i in range(2, n)]
    return close_group(gens, cap, name=f"Alt({n})")


def cyclic(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return close_group([Permutation.from_cycles([tuple(range(n))], n)], cap, name=f"C{n}")


def dihedral(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Symmetries of the regular ``n``-gon, order ``2n``."""
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return close_group([rot, ref], cap, name=f"D{2 * n}")


def quaternion(cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Q8 in its regular representation on 8 points.

    Points ``0..7`` stand for ``1, -1, i, -i, j, -j, k, -k``; the generators
    are right multiplication by ``i`` and by ``j``.
    """
    # right multiplication tables for i and j
    right_i = (2, 3, 1, 0, 7, 6, 4, 5)
    right_j = (4, 5, 6, 7, 1, 0, 3, 2)
    return close_group([Permutation(right_i), Permutation(right_j)], cap, name="Q8")


def affine_line(p: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """AGL(1, p): maps ``x -> a x + b`` on GF(p), order ``p (p - 1)``."""
    from .fields import make_field

    F = make_field(p)
    shift = Permutation(tuple((x + 1) % p for x in range(p)))
    scale = Permutation(tuple((F.xi * x) % p for x in range(p)))
    return close_group([shift, scale], cap, name=f"AGL(1,{p})")


def gl2_generators(F: FieldSpec) -> list[MatrixElem]:
    """Two standard generators of GL_2(q): ``diag(xi, 1)`` and ``[[-1, 1], [-1, 0]]``."""
    m1 = F.neg(1)
    return [MatrixElem(((F.xi, 0), (0, 1)), F), MatrixElem(((m1, 1), (m1, 0)), F)]


def general_linear_2(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    F = field_of_order(q)
    gens = gl2_generators(F)
    if q == 2:
        # diag(xi, 1) is the identity over GF(2); one more involution is needed
        gens.append(MatrixElem(((0, 1), (1, 0)), F))
    return close_group(gens, cap, name=f"GL2({q})")


# -- normal subgroups -------------------------------------------------------

def even_permutations(G: FiniteGroup) -> np.ndarray:
    """Indices of even permutations of ``G``."""
    rows = G.rows
    n = rows.shape[1]
    inversions = np.zeros(G.order, dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            inversions += rows[:, i] > rows[:, j]
    return np.flatnonzero(inversions % 2 == 0)


def determinant_one(G: FiniteGroup) -> np.ndarray:
    F = G.field
    return np.flatnonzero(F.det2(G.rows.reshape(-1, 2, 2)) == 1)


def powers_subgroup(G: FiniteGroup, k: int) -> np.ndarray:
    """The subgroup of ``k``-th powers of a cyclic group (index ``gcd(k, |G|)``)."""
    return np.unique(G.power(G.all(), k))


def subgroup_generated(G: FiniteGroup, elements) -> np.ndarray:
    """Closure of a set of element indices under multiplication."""
    gens = np.unique(np.asarray(list(elements), dtype=np.int64))
    known = {G.identity}
    frontier = np.array([G.identity], dtype=np.int64)
    while len(frontier):
        cand = np.unique(G.mul(frontier[:, None], gens[None, :]).ravel())
        frontier = np.array([c for c in cand.tolist() if c not in known], dtype=np.int64)
        known.update(frontier.tolist())
    return np.array(sorted(known), dtype=np.int64)


def center(G: FiniteGroup) -> np.ndarray:
    return np.array([c.rep for c in G.classes if c.size == 1], dtype=np.int64)


def derived_subgroup(G: FiniteGroup) -> np.ndarray:
    a = G.all()
    comm = G.mul(G.mul(G.inv(a)[:, None], G.inv(a)[None, :]), G.mul(a[:, None], a[None, :]))
    return subgroup_generated(G, np.unique(comm))


def rotations(G: FiniteGroup) -> np.ndarray:
    """Rotation subgroup of a dihedral group built by :func:`dihedral`."""
    rows = G.rows
    n = rows.shape[1]
    shift = (rows - np.arange(n)) % n
    return np.flatnonzero(np.all(shift == shift[:, :1], axis=1))


def klein_four_in_alt4(G: FiniteGroup) -> np.ndarray:
    """Identity and double transpositions of a degree-4 permutation group."""
    rows = G.rows
    fixed = np.sum(rows == np.arange(rows.shape[1]), axis=1)
    involution = np.all(np.take_along_axis(rows, rows, axis=1) == np.arange(rows.shape[1]), axis=1)
    return np.flatnonzero((fixed == 4) | ((fixed == 0) & involution))
