"""Finite fields GF(p^k) with integer-encoded elements.

An element is the integer ``sum(c_j * p**j)`` where ``c_0 + c_1 t + ...`` is
its residue polynomial modulo the field's defining polynomial.  Every
operation accepts Python ints or numpy integer arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import NotPrime, TooLarge

MAX_FIELD_SIZE = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, k = fs[0], 0
    while q > 1:
        q //= p
        k += 1
    return p, k


# -- polynomials over GF(p), coefficient tuples low degree first ------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = _poly_trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a = _poly_trim(a)
    return a


def _is_irreducible_mod_p(m: tuple[int, ...], p: int) -> bool:
    k = len(m) - 1
    if k == 1:
        return True
    # trial division by every monic polynomial of degree 1..k//2
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            f = tuple(low) + (1,)
            if not _poly_mod(list(m), f, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``k`` over GF(p) with the smallest encoding.

    The encoding of ``t^k + c_{k-1} t^{k-1} + ... + c_0`` is
    ``sum(c_j * p**j)``.
    """
    for code in range(p**k):
        low = [(code // p**j) % p for j in range(k)]
        m = tuple(low) + (1,)
        if _is_irreducible_mod_p(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(q) with q = p**k, built from a fixed irreducible modulus."""

    p: int
    k: int
    modulus: tuple[int, ...]
    xi: int = field(init=False)
    _digits: np.ndarray = field(init=False, repr=False)
    _powers: np.ndarray = field(init=False, repr=False)
    _exp: np.ndarray = field(init=False, repr=False)
    _log: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        q = self.q
        codes = np.arange(q)
        digits = np.stack([(codes // self.p**j) % self.p for j in range(self.k)], axis=1)
        object.__setattr__(self, "_digits", digits.astype(np.int64))
        object.__setattr__(self, "_powers", self.p ** np.arange(self.k, dtype=np.int64))
        xi = next(a for a in range(1, q) if self._slow_order(a) == q - 1)
        object.__setattr__(self, "xi", xi)
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, xi)
        exp[q - 1:] = exp[: q - 1]
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    @property
    def q(self) -> int:
        return self.p**self.k

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    # slow scalar routines, used only while bootstrapping the log tables
    def _slow_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        da = [(a // self.p**j) % self.p for j in range(self.k)]
        db = [(b // self.p**j) % self.p for j in range(self.k)]
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        r = _poly_mod(prod, self.modulus, self.p)
        return sum(c * self.p**j for j, c in enumerate(r))

    def _slow_order(self, a: int) -> int:
        x, n = a, 1
        while x != 1:
            x = self._slow_mul(x, a)
            n += 1
        return n

    # vectorised arithmetic
    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        s = (self._digits[a] + self._digits[b]) % self.p
        return self._encode(s)

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self._encode((-self._digits[a]) % self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        a_arr, b_arr = np.asarray(a), np.asarray(b)
        out = self._exp[self._log[a_arr] + self._log[b_arr]]
        out = np.where((a_arr == 0) | (b_arr == 0), 0, out)
        return out if out.ndim else int(out)

    def inv(self, a):
        a_arr = np.asarray(a)
        if np.any(a_arr == 0):
            raise ZeroDivisionError("inverse of zero")
        out = self._exp[(self.q - 1 - self._log[a_arr]) % (self.q - 1)]
        return out if out.ndim else int(out)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    def log(self, a: int) -> int:
        """Discrete logarithm base ``xi``."""
        if a == 0:
            raise ValueError("log of zero")
        return int(self._log[a])

    def order(self, a: int) -> int:
        return (self.q - 1) // np.gcd(self.q - 1, self.log(a))

    def is_square(self, a: int) -> bool:
        return a == 0 or self.p == 2 or self.log(a) % 2 == 0

    def _encode(self, digits: np.ndarray):
        out = digits @ self._powers
        return out if np.ndim(out) else int(out)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Batched matrix product over the field; shapes ``(..., d, d)``."""
        if self.k == 1:
            return np.matmul(a.astype(np.int64), b.astype(np.int64)) % self.p
        terms = self.mul(a[..., :, :, None], b[..., None, :, :])  # [..., i, k, j]
        acc = terms[..., 0, :]
        for kk in range(1, terms.shape[-2]):
            acc = self.add(acc, terms[..., kk, :])
        return acc

    def det2(self, m: np.ndarray):
        """Determinant of ``(..., 2, 2)`` matrices."""
        return self.sub(self.mul(m[..., 0, 0], m[..., 1, 1]), self.mul(m[..., 0, 1], m[..., 1, 0]))


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """Build GF(p^k) using the smallest-encoded monic irreducible modulus.

    The primitive element ``xi`` is the smallest encoding of multiplicative
    order ``q - 1``.

    >>> F = make_field(5)
    >>> F.xi
    2
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    if p**k > MAX_FIELD_SIZE:
        raise TooLarge(f"GF({p}^{k}) exceeds {MAX_FIELD_SIZE} elements")
    return FieldSpec(p, k, smallest_irreducible(p, k))


def field_of_order(q: int) -> FieldSpec:
    p, k = prime_power(q)
    return make_field(p, k)


@dataclass(frozen=True)
class FieldElem:
    """A single field element; thin wrapper for readable scalar code."""

    encoding: int
    field: FieldSpec

    def __post_init__(self) -> None:
        if not 0 <= self.encoding < self.field.q:
            raise ValueError(f"encoding {self.encoding} outside GF({self.field.q})")

    def _wrap(self, x) -> "FieldElem":
        return FieldElem(int(x), self.field)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.encoding
        return int(other) % self.field.q if self.field.k == 1 else int(other)

    def __add__(self, other) -> "FieldElem":
        return self._wrap(self.field.add(self.encoding, self._coerce(other)))

    def __sub__(self, other) -> "FieldElem":
        return self._wrap(self.field.sub(self.encoding, self._coerce(other)))

    def __mul__(self, other) -> "FieldElem":
        return self._wrap(self.field.mul(self.encoding, self._coerce(other)))

    def __neg__(self) -> "FieldElem":
        return self._wrap(self.field.neg(self.encoding))

    def __truediv__(self, other) -> "FieldElem":
        return self._wrap(self.field.div(self.encoding, self._coerce(other)))

    def __pow__(self, e: int) -> "FieldElem":
        if e < 0:
            return FieldElem(self.field.inv(self.encoding), self.field) ** (-e)
        return self._wrap(self.field.power(self.encoding, e))

    def __int__(self) -> int:
        return self.encoding

    def __repr__(self) -> str:
        return f"{self.encoding}@GF({self.field.q})"
