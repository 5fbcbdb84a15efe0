import pytest
import sympy
from hypothesis import given, strategies as st

from ffdigits.ntheory import cyclotomic_value, divisors, factorize, mobius, q_repunit


def test_factorize_and_divisors():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert divisors(63) == (1, 3, 7, 9, 21, 63)
    assert divisors(1) == (1,)
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(1, 10**6))
def test_divisors_brute(m):
    if m <= 5000:
        assert list(divisors(m)) == [d for d in range(1, m + 1) if m % d == 0]
    assert all(m % d == 0 for d in divisors(m))


@given(st.integers(1, 5000))
def test_mobius_matches_sympy(m):
    assert mobius(m) == int(sympy.mobius(m))


@pytest.mark.parametrize("n,q,expected", [(4, 2, 5), (6, 2, 3), (1, 2, 1), (2, 3, 4), (3, 3, 13), (12, 2, 13)])
def test_cyclotomic_examples(n, q, expected):
    assert cyclotomic_value(n, q) == expected


def test_cyclotomic_matches_sympy():
    x = sympy.Symbol("x")
    for n in range(1, 25):
        poly = sympy.cyclotomic_poly(n, x)
        for q in (2, 3, 4, 5, 7, 8, 9):
            assert cyclotomic_value(n, q) == int(poly.subs(x, q)), (n, q)


def test_cyclotomic_product_identity():
    for q in (2, 3, 5):
        for n in range(1, 16):
            prod = 1
            for d in divisors(n):
                prod *= cyclotomic_value(d, q)
            assert prod == q**n - 1


def test_cyclotomic_overflow():
    with pytest.raises(OverflowError):
        cyclotomic_value(2, 2**200)


def test_repunit():
    assert q_repunit(2, 5) == 31
    assert q_repunit(3, 4) == 40
    assert q_repunit(10, 3) == 111
