"""Exhaustively enumerated finite groups, conjugacy classes and cyclic quotients.

Groups are stored as a sorted integer array with one row per element (the
image list of a permutation, or the row-major entries of a matrix).  Row
order is lexicographic, so an element's index doubles as its canonical rank
and the smallest index in a class is its canonical representative.

Products are written left to right: for permutations ``(a * b)[i] ==
b[a[i]]`` (apply ``a`` first), for matrices the usual matrix product.
Conjugation is ``g^x = x^-1 g x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import CapExceeded, KindMismatch, NotNormal, QuotientNotCyclic
from .fields import FieldSpec

DEFAULT_CAP = 250_000


# -- elements ---------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Permutation of ``range(n)`` given by its image list."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse disjoint-cycle notation such as ``"(0 1)(2 3 4)"``.

        Points are 0-based and may be separated by spaces or commas.  The
        degree defaults to one more than the largest point mentioned.
        """
        text = text.strip()
        if not re.fullmatch(r"(\(\s*\d*(?:[\s,]+\d+)*\s*\)\s*)*", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = [
            [int(x) for x in re.split(r"[\s,]+", body.strip()) if x]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        points = [x for c in cycles for x in c]
        if len(points) != len(set(points)):
            raise ValueError(f"cycles are not disjoint: {text!r}")
        degree = max(points, default=-1) + 1
        if n is None:
            n = degree
        elif degree > n:
            raise ValueError(f"point {degree - 1} outside degree {n}")
        return cls.from_cycles([c for c in cycles if c], n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class MatrixElem:
    """Square matrix over a finite field, entries as integer encodings."""

    entries: tuple[tuple[int, ...], ...]
    field: FieldSpec

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        if self.det() == 0:
            raise ValueError("matrix is singular")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def __mul__(self, other: "MatrixElem") -> "MatrixElem":
        return MatrixElem(tuple(map(tuple, self.field.matmul(self.array(), other.array()))), self.field)

    def det(self) -> int:
        return matrix_det(self.array(), self.field)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.entries) + "]"


Element = Union[Permutation, MatrixElem]


def matrix_det(m: np.ndarray, F: FieldSpec) -> int:
    """Determinant of one square matrix by Gaussian elimination."""
    a = [[int(x) for x in row] for row in m]
    d = len(a)
    det = 1
    for col in range(d):
        piv = next((r for r in range(col, d) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = F.neg(det)
        det = F.mul(det, a[col][col])
        inv = F.inv(a[col][col])
        for r in range(col + 1, d):
            if a[r][col]:
                f = F.mul(a[r][col], inv)
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[col])]
    return int(det)


# -- groups -------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    class_id: int
    rep: int
    members: np.ndarray

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        i = np.searchsorted(self.members, g)
        return bool(i < len(self.members) and self.members[i] == g)


class FiniteGroup:
    """A fully enumerated group of permutations or matrices.

    Build one with :func:`close_group`; elements are then referred to by
    their integer index into :attr:`rows`.
    """

    def __init__(self, kind: str, rows: np.ndarray, generators: Sequence[int],
                 field: FieldSpec | None = None, name: str = "") -> None:
        self.kind = kind
        self.rows = rows
        self.rows.setflags(write=False)
        self.field = field
        self.name = name
        self.width = rows.shape[1]
        self.base = self.width if kind == "perm" else field.q
        self.dim = self.width if kind == "perm" else int(round(self.width**0.5))
        self.keys = _row_keys(rows, self.base)
        self.generators = tuple(int(g) for g in generators)
        if kind == "perm":
            self.identity = 0
        else:
            self.identity = self.index_of(np.eye(self.dim, dtype=np.int64).reshape(1, -1))[0]

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name or self.kind} of order {self.order}>"

    def __len__(self) -> int:
        return self.order

    @property
    def order(self) -> int:
        return len(self.rows)

    # -- element access
    def element(self, i: int) -> Element:
        row = self.rows[int(i)]
        if self.kind == "perm":
            return Permutation(tuple(row))
        return MatrixElem(tuple(map(tuple, row.reshape(self.dim, self.dim))), self.field)

    def render(self, i: int) -> str:
        return str(self.element(i))

    def index_of(self, rows) -> np.ndarray:
        """Indices of the given element rows (or Permutation/MatrixElem objects)."""
        if isinstance(rows, (Permutation, MatrixElem)):
            rows = [rows]
        if isinstance(rows, list) and rows and isinstance(rows[0], (Permutation, MatrixElem)):
            rows = np.array([_elem_row(e) for e in rows], dtype=np.int64)
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, self.width)
        k = _row_keys(rows, self.base)
        idx = np.searchsorted(self.keys, k)
        idx = np.minimum(idx, self.order - 1)
        if not np.all(self.keys[idx] == k):
            raise KeyError("element not in group")
        return idx.astype(np.int64)

    def _compose_rows(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kind == "perm":
            return np.take_along_axis(b, a, axis=-1)
        shape = a.shape[:-1] + (self.dim, self.dim)
        return self.field.matmul(a.reshape(shape), b.reshape(shape)).reshape(a.shape)

    def mul(self, a, b) -> np.ndarray:
        """Index-wise products ``a * b`` (broadcasting)."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        flat = self._compose_rows(self.rows[a.ravel()], self.rows[b.ravel()])
        return self.index_of(flat).reshape(a.shape)

    def commutes(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        ra, rb = self.rows[a.ravel()], self.rows[b.ravel()]
        eq = np.all(self._compose_rows(ra, rb) == self._compose_rows(rb, ra), axis=-1)
        return eq.reshape(a.shape)

    @cached_property
    def inverses(self) -> np.ndarray:
        if self.kind == "perm":
            return self.index_of(np.argsort(self.rows, axis=1))
        return self.power(np.arange(self.order), self.order - 1)

    def inv(self, a):
        return self.inverses[a]

    def conj(self, g, x) -> np.ndarray:
        """``x^-1 g x`` index-wise."""
        return self.mul(self.mul(self.inv(x), g), x)

    def power(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            return self.power(self.inv(a), -e)
        result = np.full(a.shape, self.identity, dtype=np.int64)
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        cur = np.arange(self.order)
        k = 1
        while np.any(orders == 0):
            orders[(cur == self.identity) & (orders == 0)] = k
            cur = self.mul(cur, np.arange(self.order))
            k += 1
        return orders

    def all(self) -> np.ndarray:
        return np.arange(self.order)

    # -- classes
    @cached_property
    def classes(self) -> list[ConjugacyClass]:
        n = self.order
        src, dst = [], []
        for s in self.generators:
            src.append(np.arange(n))
            dst.append(self.conj(np.arange(n), s))
        if src:
            src_a, dst_a = np.concatenate(src), np.concatenate(dst)
        else:
            src_a = dst_a = np.arange(n)
        graph = coo_matrix((np.ones(len(src_a)), (src_a, dst_a)), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        order = np.argsort(labels, kind="stable")
        splits = np.flatnonzero(np.diff(labels[order])) + 1
        groups = sorted(np.split(order, splits), key=lambda m: int(m.min()))
        return [ConjugacyClass(i, int(m.min()), np.sort(m)) for i, m in enumerate(groups)]

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for c in self.classes:
            out[c.members] = c.class_id
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return len(self.classes) == self.order


def _elem_row(e: Element) -> list[int]:
    if isinstance(e, Permutation):
        return list(e.images)
    return [x for r in e.entries for x in r]


def _row_keys(rows: np.ndarray, base: int) -> np.ndarray:
    width = rows.shape[1]
    if width * np.log2(max(base, 2)) < 62:
        powers = base ** np.arange(width - 1, -1, -1, dtype=np.int64)
        return rows @ powers
    powers = [base ** (width - 1 - j) for j in range(width)]
    return np.array([sum(int(x) * p for x, p in zip(r, powers)) for r in rows], dtype=object)


def close_group(generators: Sequence[Element], cap: int = DEFAULT_CAP, name: str = "") -> FiniteGroup:
    """Enumerate the group generated by ``generators``.

    >>> G = close_group([Permutation.parse("(0 1)", 3), Permutation.parse("(0 1 2)")])
    >>> G.order
    6
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    first = gens[0]
    if isinstance(first, Permutation):
        kind, field, width = "perm", None, first.degree
        if any(not isinstance(g, Permutation) or g.degree != width for g in gens):
            raise KindMismatch("generators must be permutations of one degree")
        ident = list(range(width))
        base = width
    elif isinstance(first, MatrixElem):
        kind, field, width = "matrix", first.field, first.dim**2
        if any(not isinstance(g, MatrixElem) or g.dim != first.dim or g.field != field for g in gens):
            raise KindMismatch("generators must be matrices of one size over one field")
        ident = list(np.eye(first.dim, dtype=np.int64).ravel())
        base = field.q
    else:
        raise KindMismatch(f"unsupported generator type {type(first).__name__}")

    gen_rows = np.array([_elem_row(g) for g in gens], dtype=np.int64)
    probe = FiniteGroup.__new__(FiniteGroup)
    probe.kind, probe.field, probe.width = kind, field, width
    probe.dim = width if kind == "perm" else first.dim

    rows = np.unique(np.vstack([np.array([ident]), gen_rows]), axis=0)
    known = _row_keys(rows, base)
    frontier = rows
    while len(frontier):
        cand = np.vstack([probe._compose_rows(frontier, np.broadcast_to(g, frontier.shape)) for g in gen_rows])
        ck = _row_keys(cand, base)
        ck, first_pos = np.unique(ck, return_index=True)
        fresh = ~np.isin(ck, known)
        frontier = cand[first_pos[fresh]]
        known = np.concatenate([known, ck[fresh]])
        rows = np.vstack([rows, frontier])
        if len(rows) > cap:
            raise CapExceeded(f"group order exceeds cap {cap}")
    rows = rows[np.argsort(_row_keys(rows, base), kind="stable")]
    G = FiniteGroup(kind, np.ascontiguousarray(rows), [], field=field, name=name)
    G.generators = tuple(int(i) for i in G.index_of(gen_rows))
    return G


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Conjugacy classes sorted by canonical representative."""
    return G.classes


def centralizer(G: FiniteGroup, g: int, within=None) -> np.ndarray:
    """Sorted indices ``x`` in ``within`` (default: all of G) with ``xg == gx``."""
    within = G.all() if within is None else np.asarray(within, dtype=np.int64)
    return np.sort(within[G.commutes(within, g)])


# -- cyclic quotients -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QuotientData:
    """A normal subgroup H with G/H cyclic, together with a generating coset.

    ``exponent_of[g]`` is the ``m`` in ``[0, quotient_order)`` with
    ``g in H t^m`` where ``t = t_rep``.
    """

    group: FiniteGroup
    h_members: np.ndarray
    quotient_order: int
    t_rep: int
    exponent_of: np.ndarray

    def coset(self, m: int) -> np.ndarray:
        return np.flatnonzero(self.exponent_of == m % self.quotient_order)

    def class_exponent(self, C: ConjugacyClass) -> int:
        return int(self.exponent_of[C.rep])

    def classes_in_coset(self, m: int) -> list[ConjugacyClass]:
        m %= self.quotient_order
        return [C for C in self.group.classes if self.exponent_of[C.rep] == m]

    def generating_exponents(self) -> list[int]:
        n = self.quotient_order
        return [m for m in range(n) if np.gcd(m, n) == 1] if n > 1 else [0]


def _check_subgroup(G: FiniteGroup, h: np.ndarray, max_pairs: int = 20_000_000) -> None:
    if G.identity not in set(h.tolist()):
        raise ValueError("subgroup must contain the identity")
    if G.order % len(h):
        raise ValueError("subset size does not divide the group order")
    hs = set(h.tolist())
    if not set(G.inv(h).tolist()) <= hs:
        raise ValueError("subset is not closed under inverses")
    if len(h) ** 2 <= max_pairs:
        chunk = max(1, 2_000_000 // len(h))
        for start in range(0, len(h), chunk):
            prods = G.mul(h[start:start + chunk, None], h[None, :])
            if not np.all(np.isin(prods, h)):
                raise ValueError("subset is not closed under multiplication")


def cyclic_quotient(G: FiniteGroup, h_members) -> QuotientData:
    """Verify ``H`` is normal with cyclic quotient and pick the generating coset.

    ``t_rep`` is the canonically smallest element whose coset generates
    ``G/H``; its coset has exponent 1.
    """
    h = np.unique(np.asarray(h_members, dtype=np.int64))
    _check_subgroup(G, h)
    for s in G.generators:
        if not np.all(np.isin(G.conj(h, s), h)):
            raise NotNormal("subgroup is not normal")
    label = np.full(G.order, -1, dtype=np.int64)
    n = 0
    for g in range(G.order):
        if label[g] < 0:
            label[G.mul(h, g)] = n
            n += 1
    if n == 1:
        t = 0
        return QuotientData(G, h, 1, t, np.zeros(G.order, dtype=np.int64))

    # order of each coset in the quotient, via powers of its smallest element
    reps = np.array([int(np.flatnonzero(label == c)[0]) for c in range(n)])
    id_label = label[G.identity]
    coset_order = np.zeros(n, dtype=np.int64)
    cur = reps.copy()
    for k in range(1, n + 1):
        hit = (label[cur] == id_label) & (coset_order == 0)
        coset_order[hit] = k
        cur = G.mul(cur, reps)
    if not np.any(coset_order == n):
        raise QuotientNotCyclic(f"G/H of order {n} is not cyclic")
    t = int(np.flatnonzero(coset_order[label] == n)[0])
    exponent_of_label = np.empty(n, dtype=np.int64)
    cur = G.identity
    for m in range(n):
        exponent_of_label[label[cur]] = m
        cur = int(G.mul(cur, t))
    return QuotientData(G, h, n, t, exponent_of_label[label])
