"""Conjugacy classes of GL_2(q) by type, and their relation to the SL_2(q) cosets.

Classes of GL_d(q) are parametrized by assigning a partition to monic
irreducible polynomials ``f != t``; here polynomials are coefficient tuples,
lowest degree first, so ``t - a`` is ``(-a, 1)``.  For ``d = 2`` there are
four types:

A  scalars ``aI``; partition ``(1, 1)`` on ``t - a``
B  ``[[a, 1], [0, a]]``; partition ``(2)`` on ``t - a``
C  ``diag(a, b)`` with ``a != b``; ``(1)`` on each of ``t - a``, ``t - b``
D  companion matrix of an irreducible quadratic; ``(1)`` on it
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import EvenField, SchemeDefect
from .fields import FieldElem, FieldSpec, field_of_order, prime_factors

Poly = tuple[int, ...]


@dataclass(frozen=True)
class GLClassParams:
    """``{f: lambda_f}`` for one class of GL_d(q), stored as sorted pairs."""

    assignment: tuple[tuple[Poly, tuple[int, ...]], ...]
    d: int
    field: FieldSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(sorted(self.assignment)))
        total = sum(sum(lam) * (len(f) - 1) for f, lam in self.assignment)
        if total != self.d:
            raise ValueError(f"sum of |lambda_f| deg f is {total}, expected {self.d}")
        for f, lam in self.assignment:
            if f[-1] != 1:
                raise ValueError(f"{f} is not monic")
            if len(f) == 2 and f[0] == 0:
                raise ValueError("the polynomial t carries no partition")


def class_determinant(params: GLClassParams) -> FieldElem:
    """``(-1)^d * prod_f f(0)^|lambda_f|``."""
    F = params.field
    det = FieldElem(1, F)
    for f, lam in params.assignment:
        det = det * FieldElem(f[0], F) ** sum(lam)
    return -det if params.d % 2 else det


def gl_split_predicate(params: GLClassParams) -> bool:
    """Whether some prime divisor of ``q - 1`` divides every part of every partition.

    Such classes are exactly the ones that split on restriction to SL_d(q).
    """
    parts = [a for _, lam in params.assignment for a in lam]
    return any(all(a % r == 0 for a in parts) for r in prime_factors(params.field.q - 1))


# -- polynomials over F ----------------------------------------------------

def linear(F: FieldSpec, a: int) -> Poly:
    return (F.neg(a), 1)


def monic_irreducible_quadratics(F: FieldSpec) -> list[Poly]:
    """``(e, c, 1)`` for each irreducible ``t^2 + c t + e``, sorted by ``(c, e)``."""
    x = np.arange(F.q)
    out = []
    for c in range(F.q):
        for e in range(F.q):
            vals = F.add(F.add(F.mul(x, x), F.mul(c, x)), e)
            if np.all(vals != 0):
                out.append((e, c, 1))
    return out


def char_poly2(F: FieldSpec, M) -> Poly:
    M = np.asarray(M)
    tr = F.add(int(M[0, 0]), int(M[1, 1]))
    return (int(F.det2(M)), F.neg(tr), 1)


def roots(F: FieldSpec, f: Poly) -> list[int]:
    x = np.arange(F.q)
    val = np.zeros(F.q, dtype=np.int64)
    for coef in reversed(f):
        val = F.add(F.mul(val, x), coef)
    return np.flatnonzero(val == 0).tolist()


# -- catalog ---------------------------------------------------------------

@dataclass(frozen=True)
class GL2ClassRecord:
    tag: str
    key: tuple
    rep: tuple[tuple[int, int], tuple[int, int]]
    params: GLClassParams
    determinant: int

    def matrix(self) -> np.ndarray:
        return np.array(self.rep, dtype=np.int64)

    def __str__(self) -> str:
        return f"{self.tag}{self.key}"


def gl2_class_key(F: FieldSpec, M) -> tuple[str, tuple]:
    """Type tag and parameters of the GL_2 class containing ``M``.

    A 2x2 class is fixed by its characteristic polynomial together with
    whether the matrix is scalar.
    """
    M = np.asarray(M)
    if M[0, 1] == 0 and M[1, 0] == 0 and M[0, 0] == M[1, 1]:
        return "A", (int(M[0, 0]),)
    f = char_poly2(F, M)
    rs = roots(F, f)
    if not rs:
        return "D", (f[1], f[0])
    if len(rs) == 1:
        return "B", (rs[0],)
    return "C", (min(rs), max(rs))


def _record(F: FieldSpec, tag: str, key: tuple) -> GL2ClassRecord:
    if tag == "A":
        (a,) = key
        rep, assign = ((a, 0), (0, a)), ((linear(F, a), (1, 1)),)
    elif tag == "B":
        (a,) = key
        rep, assign = ((a, 1), (0, a)), ((linear(F, a), (2,)),)
    elif tag == "C":
        a, b = key
        rep, assign = ((a, 0), (0, b)), ((linear(F, a), (1,)), (linear(F, b), (1,)))
    else:
        c, e = key
        rep, assign = ((0, F.neg(e)), (1, F.neg(c))), (((e, c, 1), (1,)),)
    det = int(F.det2(np.array(rep)))
    return GL2ClassRecord(tag, key, rep, GLClassParams(assign, 2, F), det)


@lru_cache(maxsize=None)
def gl2_class_catalog(q: int) -> tuple[GL2ClassRecord, ...]:
    """Every conjugacy class of GL_2(q) with a canonical representative.

    >>> [r.tag for r in gl2_class_catalog(2)]
    ['A', 'B', 'D']
    """
    F = field_of_order(q)
    units = list(F.units())
    recs = [_record(F, "A", (a,)) for a in units]
    recs += [_record(F, "B", (a,)) for a in units]
    recs += [_record(F, "C", (a, b)) for a in units for b in units if a < b]
    recs += [_record(F, "D", (f[1], f[0])) for f in monic_irreducible_quadratics(F)]
    return tuple(recs)


def catalog_counts_formula(q: int) -> dict[str, int]:
    return {"A": q - 1, "B": q - 1, "C": (q - 1) * (q - 2) // 2, "D": (q * q - q) // 2}


@dataclass(frozen=True)
class CatalogCrosscheck:
    q: int
    catalog_size: int
    group_classes: int
    bijective: bool
    determinants_agree: bool
    split_agree: bool | None


def crosscheck_catalog(q: int, check_split: bool = True) -> CatalogCrosscheck:
    """Compare the catalog with brute-force classes of the enumerated group."""
    from .commuting import is_split
    from .group_core import cyclic_quotient
    from .groups import determinant_one, general_linear_2

    F = field_of_order(q)
    G = general_linear_2(q)
    cat = gl2_class_catalog(q)
    idx = G.index_of(np.array([np.array(r.rep).ravel() for r in cat]))
    cls = G.class_of[idx]
    bijective = len(set(cls.tolist())) == len(cat) == len(G.classes)
    dets = all(int(class_determinant(r.params)) == matrix_det2(F, r.rep) == r.determinant for r in cat)
    split_ok = None
    if check_split:
        Q = cyclic_quotient(G, determinant_one(G))
        split_ok = all(gl_split_predicate(r.params) == is_split(Q, G.classes[c])
                       for r, c in zip(cat, cls.tolist()))
    return CatalogCrosscheck(q, len(cat), len(G.classes), bijective, dets, split_ok)


def matrix_det2(F: FieldSpec, M) -> int:
    return int(F.det2(np.asarray(M, dtype=np.int64)))


# -- the SL_2(q) / C_xi table ----------------------------------------------

TYPES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class CosetTable:
    q: int
    sl: tuple[int, int, int, int]
    c_xi: tuple[int, int, int, int]
    verified: bool


def coset_table_formula(q: int) -> CosetTable:
    if q % 2 == 0:
        raise EvenField("the table is stated for odd q")
    return CosetTable(q, (2, 2, (q - 3) // 2, (q - 1) // 2), (0, 0, (q - 1) // 2, (q + 1) // 2), True)


def _count_types(tags_dets, target: int) -> tuple[int, int, int, int]:
    return tuple(sum(1 for t, d in tags_dets if t == T and d == target) for T in TYPES)


def coset_table(q: int) -> CosetTable:
    """Class counts by type in SL_2(q) and in the determinant-``xi`` coset.

    Counted by filtering the catalog on determinant and compared with the
    closed forms; ``verified`` records the comparison.
    """
    if q % 2 == 0:
        raise EvenField("the table is stated for odd q")
    F = field_of_order(q)
    tags = [(r.tag, r.determinant) for r in gl2_class_catalog(q)]
    sl, cx = _count_types(tags, 1), _count_types(tags, F.xi)
    want = coset_table_formula(q)
    return CosetTable(q, sl, cx, sl == want.sl and cx == want.c_xi)


def coset_table_bruteforce(q: int) -> CosetTable:
    """Same counts read off the enumerated group's classes, without the catalog."""
    from .groups import general_linear_2

    F = field_of_order(q)
    G = general_linear_2(q)
    tags = []
    for C in G.classes:
        M = G.rows[C.rep].reshape(2, 2)
        tags.append((gl2_class_key(F, M)[0], matrix_det2(F, M)))
    sl, cx = _count_types(tags, 1), _count_types(tags, F.xi)
    want = coset_table_formula(q)
    return CosetTable(q, sl, cx, sl == want.sl and cx == want.c_xi)


# -- explicit matching between SL_2(q) and C_xi ----------------------------

def field_multiplication_matrix(F: FieldSpec, u: int, v: int) -> np.ndarray:
    """Matrix of ``z -> (u + v b) z`` on GF(q^2) = F[b], basis ``(1, b)``.

    ``b`` is a root of the first irreducible quadratic over F.
    """
    e, c, _ = monic_irreducible_quadratics(F)[0]
    return np.array([[u, F.neg(F.mul(v, e))], [v, F.sub(u, F.mul(v, c))]], dtype=np.int64)


@lru_cache(maxsize=None)
def _multiplication_reps(q: int) -> dict[tuple, tuple[int, int]]:
    F = field_of_order(q)
    out: dict[tuple, tuple[int, int]] = {}
    for v in range(1, q):
        for u in range(q):
            key = gl2_class_key(F, field_multiplication_matrix(F, u, v))
            out.setdefault(key, (u, v))
    return out


def type_d_realization(F: FieldSpec, key: tuple) -> np.ndarray:
    """A multiplication-by-alpha matrix lying in the type D class ``key``."""
    u, v = _multiplication_reps(F.q)[("D", key)]
    return field_multiplication_matrix(F, u, v)


@dataclass(frozen=True)
class SchemePair:
    left: GL2ClassRecord
    right: GL2ClassRecord
    x: tuple
    y: tuple


@dataclass(frozen=True)
class SchemeMatching:
    q: int
    pairs: tuple[SchemePair, ...]
    verified: bool


def _as_tuple(M) -> tuple:
    return tuple(tuple(int(x) for x in r) for r in np.asarray(M))


def sl2_cxi_matching(q: int) -> SchemeMatching:
    """Match non-split SL_2(q) classes with classes of determinant ``xi``.

    Odd ``q``: types C and D are matched within type as far as possible
    (diagonal witnesses for C, field-multiplication witnesses for D) and the
    one leftover class of each type goes to a scalar class.  Even ``q``:
    multiplying by the scalar square root of ``xi`` is itself a bijection of
    commuting classes.
    """
    F = field_of_order(q)
    cat = gl2_class_catalog(q)
    left = [r for r in cat if r.determinant == 1 and not gl_split_predicate(r.params)]
    right = [r for r in cat if r.determinant == F.xi]
    by_key = {(r.tag, r.key): r for r in cat}
    pairs: list[SchemePair] = []
    if q % 2 == 0:
        s = next(a for a in F.units() if F.mul(a, a) == F.xi)
        for r in left:
            X = r.matrix()
            Y = F.mul(s, X)
            pairs.append(SchemePair(r, by_key[gl2_class_key(F, Y)], _as_tuple(X), _as_tuple(Y)))
    else:
        lc = [r for r in left if r.tag == "C"]
        ld = [r for r in left if r.tag == "D"]
        rc = [r for r in right if r.tag == "C"]
        rd = [r for r in right if r.tag == "D"]
        scalars = [r for r in left if r.tag == "A"]
        if len(rc) != len(lc) + 1 or len(rd) != len(ld) + 1 or len(scalars) != 2:
            raise SchemeDefect(f"q={q}: unexpected type counts")
        for a, b in zip(lc, rc):
            pairs.append(SchemePair(a, b, a.rep, b.rep))
        for a, b in zip(ld, rd):
            pairs.append(SchemePair(a, b, _as_tuple(type_d_realization(F, a.key)),
                                    _as_tuple(type_d_realization(F, b.key))))
        for a, b in zip(scalars, (rc[-1], rd[-1])):
            pairs.append(SchemePair(a, b, a.rep, b.rep))
    result = SchemeMatching(q, tuple(pairs), False)
    if not verify_scheme(result):
        raise SchemeDefect(f"q={q}: matching failed verification")
    return SchemeMatching(q, tuple(pairs), True)


def verify_scheme(M: SchemeMatching) -> bool:
    """Exact sides, class membership of every witness, and commutation."""
    F = field_of_order(M.q)
    cat = gl2_class_catalog(M.q)
    want_left = {str(r) for r in cat if r.determinant == 1 and not gl_split_predicate(r.params)}
    want_right = {str(r) for r in cat if r.determinant == F.xi}
    lefts = [str(p.left) for p in M.pairs]
    rights = [str(p.right) for p in M.pairs]
    if len(set(lefts)) != len(lefts) or set(lefts) != want_left:
        return False
    if len(set(rights)) != len(rights) or set(rights) != want_right:
        return False
    for p in M.pairs:
        X, Y = np.array(p.x), np.array(p.y)
        if gl2_class_key(F, X) != (p.left.tag, p.left.key):
            return False
        if gl2_class_key(F, Y) != (p.right.tag, p.right.key):
            return False
        if not np.array_equal(F.matmul(X, Y), F.matmul(Y, X)):
            return False
    return True


@dataclass(frozen=True)
class SameTypeReport:
    q: int
    pairs_checked: dict[str, int]
    commute_failures: int
    polynomial_failures: int

    @property
    def passed(self) -> bool:
        return self.commute_failures == 0 and self.polynomial_failures == 0


def _realize(F: FieldSpec, r: GL2ClassRecord) -> np.ndarray:
    return type_d_realization(F, r.key) if r.tag == "D" else r.matrix()


def polynomial_in(F: FieldSpec, X: np.ndarray, Y: np.ndarray) -> tuple[int, int] | None:
    """``(a, b)`` with ``Y = a I + b X``, found by exhaustive search, else ``None``."""
    I = np.eye(2, dtype=np.int64)
    for a, b in product(range(F.q), repeat=2):
        if np.array_equal(F.add(F.mul(a, I), F.mul(b, X)), Y):
            return a, b
    return None


def same_type_commute_check(q: int) -> SameTypeReport:
    """Same-type classes of SL_2(q) and C_xi have commuting, mutually polynomial reps."""
    F = field_of_order(q)
    cat = [r for r in gl2_class_catalog(q) if r.determinant in (1, F.xi)]
    counts = {}
    bad_comm = bad_poly = 0
    for T in TYPES:
        group = [r for r in cat if r.tag == T]
        mats = [_realize(F, r) for r in group]
        counts[T] = 0
        for i in range(len(group)):
            for j in range(i, len(group)):
                X, Y = mats[i], mats[j]
                counts[T] += 1
                if not np.array_equal(F.matmul(X, Y), F.matmul(Y, X)):
                    bad_comm += 1
                if T != "A" and (polynomial_in(F, X, Y) is None or polynomial_in(F, Y, X) is None):
                    bad_poly += 1
                if T == "A" and polynomial_in(F, X, Y) is None:
                    bad_poly += 1
    return SameTypeReport(q, counts, bad_comm, bad_poly)


# -- the unipotent classes (3,1) and (2,2) of GL_4(2) -----------------------

@dataclass(frozen=True)
class GL4Counterexample:
    x: tuple
    y: tuple
    commuting_partners: int
    algebras_scanned: int
    algebras_with_both: int
    self_check_ok: bool


def _gf2_matrices_4x4() -> np.ndarray:
    codes = np.arange(1 << 16)
    bits = (codes[:, None] >> np.arange(16)) & 1
    return bits.reshape(-1, 4, 4).astype(np.int64)


def _codes(M: np.ndarray) -> np.ndarray:
    return (M.reshape(M.shape[0], 16) << np.arange(16)).sum(axis=1)


def _gf2_rank(M: np.ndarray) -> np.ndarray:
    """Rank over GF(2) of each 4x4 matrix, via the size of its row space."""
    rows = (M << np.arange(4)).sum(axis=2)  # (N, 4) row bitmasks
    span = np.zeros((M.shape[0], 16), dtype=np.int64)
    for s in range(16):
        acc = np.zeros(M.shape[0], dtype=np.int64)
        for i in range(4):
            if s >> i & 1:
                acc ^= rows[:, i]
        span[:, s] = acc
    seen = np.zeros(M.shape[0], dtype=np.int64)
    for s in range(16):
        seen |= 1 << span[:, s]
    return np.log2(np.bitwise_count(seen.astype(np.uint64))).round().astype(np.int64)


def unipotent_labels() -> np.ndarray:
    """Label every matrix in Mat_4(2): 1 for type (3,1), 2 for (2,2), else 0."""
    M = _gf2_matrices_4x4()
    N = M ^ np.eye(4, dtype=np.int64)
    N2 = (N @ N) % 2
    N3 = (N2 @ N) % 2
    rk1, rk2 = _gf2_rank(N), _gf2_rank(N2)
    nil3 = ~N3.reshape(-1, 16).any(axis=1)
    labels = np.zeros(len(M), dtype=np.int64)
    labels[(rk1 == 2) & (rk2 == 1) & nil3] = 1
    labels[(rk1 == 2) & (rk2 == 0)] = 2
    return labels


def gl4_counterexample() -> GL4Counterexample:
    """Unipotent classes (3,1) and (2,2) of GL_4(2): they commute, yet no
    cyclic subalgebra ``F_2[Z]`` of Mat_4(2) meets both."""
    M = _gf2_matrices_4x4()
    labels = unipotent_labels()
    I = np.eye(4, dtype=np.int64)
    X = I.copy()
    X[0, 1] = X[1, 2] = 1  # Jordan blocks of sizes 3 and 1
    assert labels[_codes(X[None])[0]] == 1
    ys = M[labels == 2]
    comm = np.all((X @ ys) % 2 == (ys @ X) % 2, axis=(1, 2))
    partners = ys[comm]

    # F_2[Z] is spanned by I, Z, Z^2, Z^3
    Z2 = (M @ M) % 2
    Z3 = (Z2 @ M) % 2
    basis = np.stack([_codes(np.broadcast_to(I, M.shape)), _codes(M), _codes(Z2), _codes(Z3)], axis=1)
    combos = np.zeros((len(M), 16), dtype=np.int64)
    for s in range(16):
        for i in range(4):
            if s >> i & 1:
                combos[:, s] ^= basis[:, i]
    lab = labels[combos]
    both = np.any(lab == 1, axis=1) & np.any(lab == 2, axis=1)
    self_ok = bool(np.any(lab[_codes(X[None])[0]] == 1))
    return GL4Counterexample(
        _as_tuple(X), _as_tuple(partners[0]) if len(partners) else (),
        int(len(partners)), int(len(M)), int(both.sum()), self_ok)
