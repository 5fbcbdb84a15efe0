"""Integer helpers shared by the field and digit modules."""

from functools import lru_cache

from sympy import factorint, isprime

from .errors import CapExceeded

# Orders handled here come from q^n - 1 with q^n <= 2^64.
FACTOR_CAP = 1 << 64


def is_prime(m):
    return m >= 2 and bool(isprime(m))


@lru_cache(maxsize=None)
def factorize(m):
    """Prime factorization of ``m`` as a sorted tuple of ``(prime, exponent)``."""
    if m < 1:
        raise ValueError(f"cannot factor {m}")
    if m > FACTOR_CAP:
        raise CapExceeded(f"{m} exceeds the factorization cap 2^64")
    return tuple(sorted((int(p), int(e)) for p, e in factorint(m).items()))


def prime_factors(m):
    return tuple(p for p, _ in factorize(m))


@lru_cache(maxsize=None)
def divisors(m):
    """All positive divisors of ``m`` in increasing order."""
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def mobius(m):
    if m < 1:
        raise ValueError("mobius is defined for m >= 1")
    mu = 1
    for _, e in factorize(m):
        if e > 1:
            return 0
        mu = -mu
    return mu


def cyclotomic_value(n, q):
    """``Phi_n(q)`` as the exact integer ``prod_{d | n} (q^d - 1)^mu(n/d)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num, den = 1, 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rest = divmod(num, den)
    if rest:
        raise ArithmeticError(f"Phi_{n}({q}) is not an integer: {num}/{den}")
    if value >= 1 << 128:
        raise OverflowError(f"Phi_{n}({q}) exceeds 128 bits")
    return value


def q_repunit(q, n):
    """``Q_n = (q^n - 1) / (q - 1)``."""
    if q < 2 or n < 0:
        raise ValueError("need q >= 2 and n >= 0")
    return (q**n - 1) // (q - 1)
