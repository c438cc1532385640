import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from commuting_classes.errors import NotPrime, TooLarge
from commuting_classes.fields import (FieldElem, field_of_order, is_prime, make_field, prime_power,
                                      smallest_irreducible)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27]


def test_small_fields_match_examples():
    assert make_field(3).xi == 2
    assert make_field(5).xi == 2
    F4 = make_field(2, 2)
    assert F4.modulus == (1, 1, 1)  # t^2 + t + 1, low degree first


def test_errors():
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(TooLarge):
        make_field(2, 17)
    with pytest.raises(ValueError):
        prime_power(12)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    # commutativity, identities, inverses
    assert np.array_equal(F.add(a, b), F.add(b, a))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    assert np.array_equal(F.add(a, 0), a)
    assert np.array_equal(F.mul(a, 1), a)
    assert np.all(F.add(np.arange(q), F.neg(np.arange(q))) == 0)
    u = np.arange(1, q)
    assert np.all(F.mul(u, F.inv(u)) == 1)
    # the multiplicative group is cyclic, generated by xi
    assert F.order(F.xi) == q - 1
    assert sorted(F.power(F.xi, e) for e in range(q - 1)) == list(range(1, q))


@pytest.mark.parametrize("q", [4, 8, 9, 25])
def test_distributivity(q):
    F = field_of_order(q)
    for a, b, c in itertools.product(range(q), repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_modulus_is_smallest_irreducible():
    # over GF(2): t^3 + t + 1 is the smallest cubic
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)
    # over GF(3): t^2 + 1 is irreducible (-1 is not a square mod 3)
    assert smallest_irreducible(3, 2) == (1, 0, 1)


def test_squares():
    F = make_field(7)
    assert sorted(a for a in F.units() if F.is_square(a)) == [1, 2, 4]
    assert not F.is_square(F.xi)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(1, 8))
def test_field_elem_ops(a, b, c):
    F = field_of_order(9)
    x, y, z = FieldElem(a, F), FieldElem(b, F), FieldElem(c, F)
    assert (x + y) - y == x
    assert (x * z) / z == x
    assert z ** 8 == FieldElem(1, F)


def test_matmul_matches_naive():
    F = field_of_order(5)
    rng = np.random.default_rng(1)
    A = rng.integers(0, 5, (10, 2, 2))
    B = rng.integers(0, 5, (10, 2, 2))
    assert np.array_equal(F.matmul(A, B), (A @ B) % 5)
