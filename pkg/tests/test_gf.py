from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aqbch.errors import DivisionByZero, FieldMismatch, FieldTooLarge, NotPrime, ZeroElement
from aqbch.gf import (
    element_order,
    embedding,
    extension,
    field_create,
    field_of_order,
    is_irreducible,
    is_prime,
    ord_n_q,
    prime_power,
)
from oracles import RefField, mult_order, ref_field_for

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 64, 81, 125, 256, 1024]


def test_is_prime_small():
    primes = [p for p in range(200) if is_prime(p)]
    sieve = [p for p in range(2, 200) if all(p % d for d in range(2, int(p**0.5) + 1))]
    assert primes == sieve


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(NotPrime):
            prime_power(bad)


def test_field_create_errors():
    with pytest.raises(NotPrime):
        field_create(4)
    with pytest.raises(FieldTooLarge):
        field_create(2, 21)


def test_cached_instances():
    assert field_create(2, 4) is field_of_order(16)


@pytest.mark.parametrize("q", ORDERS)
def test_modulus_irreducible_and_primitive(q):
    F = field_of_order(q)
    assert is_irreducible(list(F.modulus), F.p)
    assert F.order_of(F.primitive) == q - 1
    # smallest primitive: every smaller nonzero element has lower order
    assert all(F.order_of(a) < q - 1 for a in range(1, F.primitive))


def test_gf16_modulus_is_x4_x_1():
    F = field_of_order(16)
    assert tuple(F.modulus) == (1, 1, 0, 0, 1)
    assert F.primitive == 2


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 64])
def test_multiplication_matches_reference(q):
    F = field_of_order(q)
    rf = ref_field_for(F)
    for a in range(q):
        for b in range(q):
            assert F.mul(a, b) == rf.mul(a, b)
            assert F.add(a, b) == rf.add(a, b)


@pytest.mark.parametrize("q", ORDERS)
def test_vector_ops_match_scalar(q):
    F = field_of_order(q)
    rng = np.random.default_rng(q)
    a = rng.integers(0, q, 300)
    b = rng.integers(0, q, 300)
    A, B = F.array(a), F.array(b)
    assert [int(x) for x in F.vmul(A, B)] == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert [int(x) for x in F.vadd(A, B)] == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert [int(x) for x in F.vsub(A, B)] == [F.sub(int(x), int(y)) for x, y in zip(a, b)]
    nz = A[A != 0]
    assert np.all(F.vmul(nz, F.vinv(nz)) == 1)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ORDERS), st.data())
def test_field_axioms(q, data):
    F = field_of_order(q)
    el = st.integers(0, q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.exp(F.log(a)) == a


def test_frobenius_is_additive():
    F = field_of_order(27)
    for a in range(27):
        for b in range(27):
            assert F.pow(F.add(a, b), 3) == F.add(F.pow(a, 3), F.pow(b, 3))


def test_element_objects():
    F = field_of_order(8)
    a = F(3)
    assert a + a == F.zero
    assert a * a.inverse() == F.one
    assert a / a == F.one
    assert a * 1 == a and int(a + 0) == 3
    assert a ** 7 == F.one
    assert element_order(F.primitive_element) == 7
    assert a.rep == (1, 1, 0)
    with pytest.raises(FieldMismatch):
        _ = a + field_of_order(4)(1)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroElement):
        F.log(0)
    with pytest.raises(FieldMismatch):
        F.array([8])


@pytest.mark.parametrize("q,m", [(2, 4), (2, 5), (4, 2), (4, 3), (3, 2), (2, 6)])
def test_embedding_is_homomorphism(q, m):
    base = field_of_order(q)
    ext, emb = extension(base, m)
    assert ext.order == q**m
    for a in range(q):
        for b in range(q):
            assert emb.to_ext(base.mul(a, b)) == ext.mul(emb.to_ext(a), emb.to_ext(b))
            assert emb.to_ext(base.add(a, b)) == ext.add(emb.to_ext(a), emb.to_ext(b))
        assert emb.to_base(emb.to_ext(a)) == a
    assert embedding(base, ext) is emb


def test_embedding_rejects_non_subfield():
    with pytest.raises(FieldMismatch):
        embedding(field_of_order(4), field_of_order(8))


@pytest.mark.parametrize("n,q", [(15, 2), (31, 2), (63, 2), (127, 2), (15, 4), (63, 4), (8, 3), (26, 3), (7, 2)])
def test_ord_n_q(n, q):
    assert ord_n_q(n, q) == mult_order(n, q)


def test_reference_field_sanity():
    rf = RefField(2, (1, 1, 0, 0, 1))
    assert rf.mul(8, 2) == 3  # x^3 * x = x^4 = x + 1
