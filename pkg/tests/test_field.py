import pickle

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import code_mul_prime_ext, zp_is_irreducible
from ffdigits import FieldElem, make_field
from ffdigits.errors import CapExceeded, LevelMismatch, PreconditionError
from ffdigits.field import (
    element_degree, field_of_order, find_primitive, is_primitive, multiplicative_order, prime_field,
    trace_and_norm,
)

TOWERS = [(2, 1, 3), (2, 1, 4), (3, 1, 2), (2, 2, 2), (3, 2, 2), (5, 1, 2), (2, 3, 2), (7, 1, 2)]


def test_gf8_modulus_and_primitive():
    ctx = make_field(2, 1, 3)
    assert ctx.top.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert ctx.primitive.coeffs == (0, 1, 0)  # x itself
    assert ctx.N == 7


def test_small_moduli():
    assert field_of_order(4).modulus == (1, 1, 1)
    assert field_of_order(9).modulus == (1, 0, 1)
    assert make_field(2, 2, 2).top.modulus == (2, 1, 1)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_prime_extension_modulus_is_first_irreducible(p, k):
    F = field_of_order(p**k)
    mod = list(F.modulus)
    assert zp_is_irreducible(mod, p)
    # Nothing earlier in the (constant-term-fastest) order is irreducible.
    idx = sum(c * p**i for i, c in enumerate(mod[:-1]))
    for j in range(idx):
        cand = [(j // p**i) % p for i in range(k)] + [1]
        assert not zp_is_irreducible(cand, p)


@pytest.mark.parametrize("p,k", [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_prime_extension_mul_matches_schoolbook(p, k):
    F = field_of_order(p**k)
    mod = list(F.modulus)
    for a in range(F.order):
        for b in range(F.order):
            assert F.mul(a, b) == code_mul_prime_ext(a, b, p, mod)


@pytest.mark.parametrize("p,s,n", TOWERS)
def test_field_axioms_exhaustive(p, s, n):
    top = make_field(p, s, n).top
    Q = top.order
    codes = range(Q)
    for a in codes:
        assert top.add(a, top.neg(a)) == 0
        if a:
            assert top.mul(a, top.inv(a)) == 1
            assert top.pow(a, Q - 1) == 1
    rng = np.random.default_rng(p * 100 + s * 10 + n)
    for a, b, c in rng.integers(0, Q, size=(300, 3)):
        a, b, c = int(a), int(b), int(c)
        assert top.mul(a, top.add(b, c)) == top.add(top.mul(a, b), top.mul(a, c))
        assert top.mul(top.mul(a, b), c) == top.mul(a, top.mul(b, c))
        assert top.add(a, b) == top.add(b, a)


@pytest.mark.parametrize("p,s,n", TOWERS)
def test_vector_ops_match_scalar(p, s, n):
    top = make_field(p, s, n).top
    rng = np.random.default_rng(1)
    a = rng.integers(0, top.order, 500)
    b = rng.integers(0, top.order, 500)
    assert list(top.mul_vec(a, b)) == [top.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert list(top.add_vec(a, b)) == [top.add(int(x), int(y)) for x, y in zip(a, b)]
    assert list(top.neg_vec(a)) == [top.neg(int(x)) for x in a]


@pytest.mark.parametrize("p,s,n", TOWERS)
def test_primitive_generates(p, s, n):
    ctx = make_field(p, s, n)
    z = ctx.primitive
    seen = set()
    x = ctx.top.one()
    for _ in range(ctx.N):
        seen.add(x.code)
        x = x * z
    assert x == 1 and len(seen) == ctx.N
    # It is the first such code.
    assert all(not is_primitive(ctx, c) for c in range(1, z.code))


def test_subfield_codes_embed():
    ctx = make_field(2, 2, 2)
    a = FieldElem(ctx.base, 2)
    b = FieldElem(ctx.top, 3)
    assert (a * b).field is ctx.top
    assert FieldElem(ctx.base, 3) == FieldElem(ctx.top, 3)
    assert (a * a).code == ctx.base.mul(2, 2) == 3
    # Plain ints are prime-field scalars: 3 means 1 in characteristic 2.
    assert FieldElem(ctx.top, 1) == 3
    other = make_field(3, 1, 2)
    with pytest.raises(LevelMismatch):
        _ = a + FieldElem(other.top, 1)


@pytest.mark.parametrize("p,s,n", TOWERS)
def test_frobenius_fixed_field_and_degree(p, s, n):
    ctx = make_field(p, s, n)
    counts = {}
    for x in ctx.top.elements():
        d = element_degree(ctx, x)
        counts[d] = counts.get(d, 0) + 1
        assert ctx.frobenius(x, n) == x
    # GF(q^d) has q^d elements, so sum of counts over e | d is q^d.
    for d in counts:
        assert sum(counts[e] for e in counts if d % e == 0) == ctx.q**d


@pytest.mark.parametrize("p,s,n", TOWERS)
def test_trace_norm_land_in_base(p, s, n):
    ctx = make_field(p, s, n)
    for x in list(ctx.top.elements())[:200]:
        tr, nm = trace_and_norm(ctx, x)
        assert ctx.frobenius(tr, 1) == tr
        assert ctx.frobenius(nm, 1) == nm
        assert tr.code < ctx.q and nm.code < ctx.q


def test_trace_is_onto_and_balanced():
    ctx = make_field(3, 1, 3)
    hist = np.zeros(3, int)
    for x in ctx.top.elements():
        hist[trace_and_norm(ctx, x)[0].code] += 1
    assert list(hist) == [9, 9, 9]


def test_multiplicative_order():
    ctx = make_field(2, 1, 4)
    orders = [multiplicative_order(ctx, c) for c in range(1, 16)]
    assert sorted(set(orders)) == [1, 3, 5, 15]
    assert orders.count(15) == 8
    with pytest.raises(ZeroDivisionError):
        multiplicative_order(ctx, 0)


@given(st.sampled_from(TOWERS), st.data())
def test_elem_arithmetic_properties(tower, data):
    ctx = make_field(*tower)
    Q = ctx.top.order
    a, b = (FieldElem(ctx.top, data.draw(st.integers(0, Q - 1))) for _ in range(2))
    assert a + b - b == a
    assert (a - b) + b == a
    if b:
        assert a * b / b == a
        assert b ** (Q - 1) == 1
        assert b**-1 == b.inverse()
    assert a**ctx.top.order == a


def test_errors_and_caps(monkeypatch):
    with pytest.raises(PreconditionError):
        make_field(4, 1, 1)
    with pytest.raises(PreconditionError):
        field_of_order(6)
    with pytest.raises(ZeroDivisionError):
        prime_field(5).inv(0)
    with pytest.raises(ValueError):
        FieldElem(prime_field(5), 5)
    monkeypatch.setenv("FFDIGITS_CAP_BITS", "10")
    with pytest.raises(CapExceeded):
        make_field(2, 1, 11)


def test_pickle_round_trip():
    ctx = make_field(2, 2, 3)
    again = pickle.loads(pickle.dumps(ctx))
    assert again is ctx
    x = pickle.loads(pickle.dumps(ctx.primitive))
    assert x == ctx.primitive


def test_find_primitive_is_cached():
    ctx = make_field(3, 1, 3)
    assert ctx.primitive is ctx.primitive
    assert find_primitive(ctx) == ctx.primitive
