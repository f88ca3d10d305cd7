from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from polargrass.errors import (
    DivisionByZero,
    EvenCharacteristic,
    NonPrime,
    OddCharacteristic,
    ReducibleModulus,
    ZeroInput,
)
from polargrass.gf import field_of_order, is_irreducible, make_field, parse_field, prime_power

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def naive_mul(F, a, b):
    """Schoolbook polynomial product reduced by repeated subtraction of the modulus."""
    p, k = F.p, F.k
    da = [(a // p ** i) % p for i in range(k)]
    db = [(b // p ** i) % p for i in range(k)]
    prod = [0] * (2 * k)
    for i, j in itertools.product(range(k), repeat=2):
        prod[i + j] += da[i] * db[j]
    for deg in range(2 * k - 1, k - 1, -1):
        c = prod[deg] % p
        for i, m in enumerate(F.modulus):
            prod[deg - k + i] -= c * m
    return sum((prod[i] % p) * p ** i for i in range(k))


def naive_add(F, a, b):
    p = F.p
    return sum((((a // p ** i) + (b // p ** i)) % p) * p ** i for i in range(F.k))


def test_prime_field():
    F = make_field(3, 1)
    assert F.q == 3 and F.mul(2, 2) == 1


def test_gf4_multiplication():
    F = make_field(2, 2, [1, 1, 1])
    assert list(F.elements()) == [0, 1, 2, 3]
    assert F.mul(2, 2) == 3


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])


def test_non_monic_or_wrong_degree_modulus():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 1])
    with pytest.raises(ReducibleModulus):
        make_field(3, 2, [1, 0, 2])


def test_nonprime_rejected():
    with pytest.raises(NonPrime):
        make_field(4, 1)
    with pytest.raises(NonPrime):
        field_of_order(6)
    with pytest.raises(NonPrime):
        field_of_order(1)


def test_inverse_and_division_by_zero():
    F = make_field(5)
    assert F.inv(2) == 3
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        make_field(2, 3).div(1, 0)


def test_default_moduli():
    assert field_of_order(4).modulus == (1, 1, 1)
    assert field_of_order(8).modulus == (1, 1, 0, 1)
    assert field_of_order(9).modulus == (1, 0, 1)


def test_prime_power_split():
    assert prime_power(9) == (3, 2)
    assert prime_power(16) == (2, 4)
    assert prime_power(7) == (7, 1)


@pytest.mark.parametrize("q", SMALL_Q)
def test_arithmetic_matches_naive(q):
    F = field_of_order(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert F.add(a, b) == naive_add(F, a, b)
        assert F.mul(a, b) == naive_mul(F, a, b)
        assert F.add(F.sub(a, b), b) == a
        if b:
            assert F.mul(F.div(a, b), b) == a


@pytest.mark.parametrize("q", SMALL_Q)
def test_pow_and_inverse(q):
    F = field_of_order(q)
    for a in range(1, q):
        assert F.pow(a, q - 1) == 1
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, -1) == F.inv(a)
    assert F.pow(0, 0) == 1 and F.pow(0, 3) == 0


@given(st.sampled_from(SMALL_Q), st.data())
def test_field_axioms(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0


def test_is_square_examples():
    F3, F5 = make_field(3), make_field(5)
    assert F3.is_square(1) and not F3.is_square(2)
    assert F5.is_square(4)
    with pytest.raises(ZeroInput):
        F3.is_square(0)
    with pytest.raises(EvenCharacteristic):
        field_of_order(4).is_square(1)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_square_classes(q):
    F = field_of_order(q)
    squares = {F.mul(x, x) for x in range(1, q)}
    assert len(squares) == (q - 1) // 2
    assert all(F.is_square(a) == (a in squares) for a in range(1, q))


def test_trace_examples():
    assert make_field(2).trace2(1) == 1
    F4 = field_of_order(4)
    assert F4.trace2(2) == 1 and F4.trace2(1) == 0
    with pytest.raises(OddCharacteristic):
        make_field(3).trace2(1)


@pytest.mark.parametrize("q", [2, 4, 8, 16])
def test_trace_additive_and_balanced(q):
    F = field_of_order(q)
    tr = [F.trace2(a) for a in range(q)]
    assert set(tr) <= {0, 1}
    assert tr.count(0) == q // 2
    for a, b in itertools.product(range(q), repeat=2):
        assert tr[F.add(a, b)] == tr[a] ^ tr[b]


def test_root_count_examples():
    F3 = make_field(3)
    assert F3.quadratic_nonzero_root_count(0, 0, 0) == 2
    assert F3.quadratic_nonzero_root_count(1, 1, 0) == 1
    assert F3.quadratic_nonzero_root_count(1, 0, 1) == 0
    assert field_of_order(8).quadratic_nonzero_root_count(0, 0, 0) == 7


def test_irreducibility():
    assert is_irreducible([1, 1, 1], 2)
    assert not is_irreducible([1, 0, 1], 2)
    assert is_irreducible([2, 1], 3)
    assert not is_irreducible([5], 7)


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_serialize_round_trip(q):
    F = field_of_order(q)
    assert parse_field(F.serialize()) == F
    with pytest.raises(ValueError):
        parse_field("3")
