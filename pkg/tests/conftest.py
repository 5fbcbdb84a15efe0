"""Brute-force oracles shared by the test modules.

These deliberately avoid the package's own algorithms: integer-mod-p
polynomial arithmetic written out by hand, periods found by trying every
shift, factorizations delegated to sympy.
"""

import numpy as np
import pytest
import sympy
from hypothesis import HealthCheck, settings

settings.register_profile("ffdigits", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ffdigits")


# -- integer polynomials mod p, little-endian lists ------------------------------


def zp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return zp_trim(out)


def zp_mod(a, m, p):
    a = zp_trim(a)
    inv = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        s = len(a) - len(m)
        for i, x in enumerate(m):
            a[s + i] = (a[s + i] - c * x) % p
        a = zp_trim(a)
    return a


def zp_monics(deg, p):
    """All monic polynomials of degree ``deg`` over Z/p."""
    for idx in range(p**deg):
        coeffs = []
        for _ in range(deg):
            idx, r = divmod(idx, p)
            coeffs.append(r)
        yield coeffs + [1]


def zp_is_irreducible(f, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for g in zp_monics(d, p):
            if not zp_mod(f, g, p):
                return False
    return True


def code_mul_prime_ext(a, b, p, modulus):
    """Multiply two codes of GF(p^k) = Z/p[x]/(modulus) straight from the definition."""
    k = len(modulus) - 1

    def digits(c):
        return [(c // p**i) % p for i in range(k)]

    r = zp_mod(zp_mul(zp_trim(digits(a)), zp_trim(digits(b)), p), modulus, p)
    return sum(v * p**i for i, v in enumerate(r))


# -- cyclic sequences -------------------------------------------------------------


def brute_period(values):
    v = np.asarray(values)
    N = len(v)
    for r in range(1, N + 1):
        if np.array_equal(np.roll(v, -r), v):
            return r
    raise AssertionError("unreachable")


# -- factorization ----------------------------------------------------------------


def sympy_factor_degrees(coeffs, p):
    """Degrees of the irreducible factors of a GF(p) polynomial (little-endian codes)."""
    x = sympy.Symbol("x")
    expr = sum(int(c) * x**i for i, c in enumerate(coeffs))
    _, facs = sympy.Poly(expr, x, modulus=p).factor_list()
    return sorted({f.degree() for f, _ in facs})


def necklace(q, n):
    """Number of monic irreducibles of degree n over GF(q) by Moebius inversion, own divisor loop."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += int(sympy.mobius(d)) * q ** (n // d)
    return total // n


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
