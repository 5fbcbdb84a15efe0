"""Finite-field towers GF(p) <= GF(q) <= GF(q^n) with integer-coded elements.

An element of an extension of degree ``d`` over a base of order ``b`` is
stored as the code ``sum(a_i * b**i)`` of its little-endian coefficient
vector ``(a_0, ..., a_{d-1})`` over the base. Codes of subfield elements are
unchanged when they are viewed in a bigger level, so lifting is free.
"""

from dataclasses import dataclass
from functools import lru_cache
import os
import threading

import numpy as np

from . import kernels
from .errors import CapExceeded, LevelMismatch, PreconditionError
from .ntheory import divisors, factorize, is_prime, prime_factors
from .poly import first_monic_irreducible

HARD_CAP_BITS = 64
# Fields up to this order get full add/mul tables.
TABLE_LIMIT = 1 << 10


def cap_bits():
    """Cardinality cap in bits; ``FFDIGITS_CAP_BITS`` overrides the default of 64."""
    raw = os.environ.get("FFDIGITS_CAP_BITS")
    if raw is None:
        return HARD_CAP_BITS
    bits = int(raw)
    if not 1 <= bits <= HARD_CAP_BITS:
        raise ValueError(f"FFDIGITS_CAP_BITS must be in [1, {HARD_CAP_BITS}], got {bits}")
    return bits


class _Level:
    """Shared behaviour of prime fields and extensions (codes are ints)."""

    p: int
    order: int
    level: int

    def _table_ops(self):
        addt, mult, negt, invt = self.tables()
        self._addl = addt.tolist()
        self._mull = mult.tolist()
        self._negl = negt.tolist()
        self._invl = invt.tolist()

    def elem(self, coeffs_or_code):
        if isinstance(coeffs_or_code, int):
            code = coeffs_or_code
        else:
            code = self.encode(coeffs_or_code)
        return FieldElem(self, code)

    def zero(self):
        return FieldElem(self, 0)

    def one(self):
        return FieldElem(self, 1)

    def elements(self):
        for code in range(self.order):
            yield FieldElem(self, code)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.order})")
        if self.order <= TABLE_LIMIT:
            return self._invl[a]
        return self.pow(a, self.order - 2)

    def add_vec(self, a, b):
        return kernels.add_vec(a, b, self.kernel_params())

    def neg_vec(self, a):
        return kernels.neg_vec(a, self.kernel_params())

    def mul_vec(self, a, b):
        return kernels.mul_vec(a, b, self.kernel_params())

    def frobenius_fixed(self, a, e):
        """``a**(p**e) == a``, the membership test for the subfield GF(p^e)."""
        return self.pow(a, self.p**e) == a


class PrimeField(_Level):
    def __init__(self, p):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        self.p = p
        self.order = p
        self.degree = 1
        self.prime_degree = 1
        self.base = None
        self.modulus = None
        self.level = 0
        self._tables = None
        self._fk = None
        if p <= TABLE_LIMIT:
            self._table_ops()

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (prime_field, (self.p,))

    def encode(self, coeffs):
        (c,) = coeffs
        return int(c) % self.p

    def decode(self, code):
        return (code,)

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, -1, self.p)

    def tables(self):
        if self._tables is None:
            if self.p > TABLE_LIMIT:
                raise CapExceeded(f"no tables for GF({self.p})")
            r = np.arange(self.p, dtype=np.int64)
            addt = (r[:, None] + r[None, :]) % self.p
            mult = (r[:, None] * r[None, :]) % self.p
            negt = -r % self.p
            invt = np.zeros(self.p, np.int64)
            invt[1:] = [pow(int(a), -1, self.p) for a in r[1:]]
            self._tables = tuple(t.astype(np.int64) for t in (addt, mult, negt, invt))
        return self._tables

    def kernel_params(self):
        if self._fk is None:
            addt, mult, negt, _ = self.tables()
            self._fk = (self.p, 1, self.p, 1, addt, mult, negt, np.array([0, 1], np.int64), 0)
        return self._fk


class ExtensionField(_Level):
    """``base[x] / (modulus)`` with ``modulus`` monic irreducible over ``base``."""

    def __init__(self, base, modulus):
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(self.modulus) - 1
        if self.degree < 1 or self.modulus[-1] != 1:
            raise PreconditionError("modulus must be monic of degree >= 1")
        self.p = base.p
        self.order = base.order**self.degree
        self.prime_degree = base.prime_degree * self.degree
        self.level = base.level + 1
        self._tables = None
        self._fk = None
        self._basel = (base._addl, base._mull, base._negl) if hasattr(base, "_addl") else None
        if self.order <= TABLE_LIMIT:
            self._table_ops()

    def __repr__(self):
        return f"GF({self.base.order}^{self.degree})"

    def __reduce__(self):
        return (_rebuild_extension, (self.base, self.modulus))

    def encode(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError(f"coefficient vector longer than the degree {self.degree}")
        b = self.base.order
        code = 0
        for c in reversed(coeffs):
            if not 0 <= c < b:
                raise ValueError(f"{c} is not a code of {self.base!r}")
            code = code * b + c
        return code

    def decode(self, code):
        b = self.base.order
        out = []
        for _ in range(self.degree):
            code, r = divmod(code, b)
            out.append(r)
        return tuple(out)

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        r, pw = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * pw
            a //= p
            b //= p
            pw *= p
        return r

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        r, pw = 0, 1
        while a:
            r += (-a % p) * pw
            a //= p
            pw *= p
        return r

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.order <= TABLE_LIMIT and hasattr(self, "_mull"):
            return self._mull[a][b]
        if self._basel is None:
            return self._mul_generic(a, b)
        addl, mull, negl = self._basel
        n = self.degree
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(da):
            if ai:
                row = mull[ai]
                for j, bj in enumerate(db):
                    if bj:
                        prod[i + j] = addl[prod[i + j]][row[bj]]
        mod = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            lead = prod[k]
            if lead:
                row = mull[lead]
                for t in range(n):
                    if mod[t]:
                        prod[k - n + t] = addl[prod[k - n + t]][negl[row[mod[t]]]]
        bo = self.base.order
        code = 0
        for i in range(n - 1, -1, -1):
            code = code * bo + prod[i]
        return code

    def _mul_generic(self, a, b):
        B = self.base
        n = self.degree
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(da):
            for j, bj in enumerate(db):
                prod[i + j] = B.add(prod[i + j], B.mul(ai, bj))
        for k in range(2 * n - 2, n - 1, -1):
            lead = prod[k]
            for t in range(n):
                prod[k - n + t] = B.sub(prod[k - n + t], B.mul(lead, self.modulus[t]))
        return self.encode(prod[:n])

    def kernel_params(self):
        if self._fk is None:
            addt, mult, negt, _ = self.base.tables()
            modc = np.array(self.modulus, np.int64)
            modmask = 0
            if self.base.order == 2:
                modmask = sum(int(c) << i for i, c in enumerate(self.modulus))
            self._fk = (self.p, self.prime_degree, self.base.order, self.degree, addt, mult, negt, modc, modmask)
        return self._fk

    def tables(self):
        if self._tables is None:
            if self.order > TABLE_LIMIT:
                raise CapExceeded(f"no tables for {self!r}")
            fk = self.kernel_params()
            r = np.arange(self.order, dtype=np.int64)
            a, b = np.meshgrid(r, r, indexing="ij")
            addt = kernels.add_vec(a, b, fk)
            mult = kernels.mul_vec(a, b, fk)
            negt = kernels.neg_vec(r, fk)
            invt = np.zeros(self.order, np.int64)
            ii, jj = np.nonzero(mult == 1)
            invt[ii] = jj
            self._tables = (addt, mult, negt, invt)
        return self._tables


@lru_cache(maxsize=None)
def prime_field(p):
    return PrimeField(p)


@lru_cache(maxsize=None)
def _rebuild_extension(base, modulus):
    return ExtensionField(base, modulus)


def _embeds(small, big):
    while big is not None:
        if big is small:
            return True
        big = big.base
    return False


@dataclass(frozen=True, eq=False)
class FieldElem:
    """An element of one level of a tower; ``coeffs`` is its vector over the base."""

    field: object
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.order:
            raise ValueError(f"code {self.code} out of range for {self.field!r}")

    @property
    def coeffs(self):
        return self.field.decode(self.code)

    def _coerce(self, other):
        # Returns (field, a, b) with both codes viewed in the bigger level.
        if isinstance(other, FieldElem):
            if _embeds(other.field, self.field):
                return self.field, self.code, other.code
            if _embeds(self.field, other.field):
                return other.field, self.code, other.code
            raise LevelMismatch(f"{self.field!r} vs {other.field!r}")
        if isinstance(other, int):
            return self.field, self.code, other % self.field.p
        return None

    def _binop(self, other, op, swap=False):
        got = self._coerce(other)
        if got is None:
            return NotImplemented
        F, a, b = got
        if swap:
            a, b = b, a
        return FieldElem(F, getattr(F, op)(a, b))

    def __eq__(self, other):
        got = self._coerce(other) if isinstance(other, (FieldElem, int)) else None
        if got is None:
            return NotImplemented
        return got[1] == got[2]

    def __hash__(self):
        return hash(self.code)

    def __bool__(self):
        return self.code != 0

    def __add__(self, other):
        return self._binop(other, "add")

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        return self._binop(other, "sub")

    def __rsub__(self, other):
        return self._binop(other, "sub", swap=True)

    def __mul__(self, other):
        return self._binop(other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, "div")

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.code))

    def __pow__(self, e):
        return FieldElem(self.field, self.field.pow(self.code, e))

    def __int__(self):
        return self.code

    def __str__(self):
        return ",".join(map(str, self.coeffs))

    def __repr__(self):
        return f"FieldElem({self.field!r}, [{self}])"


class FieldCtx:
    """The tower GF(p) <= GF(q) <= GF(q^n) and its primitive element.

    Immutable after construction apart from the primitive element, which is
    found on first use under a lock.
    """

    def __init__(self, p, s, n, prime, base, top):
        self.p, self.s, self.n = p, s, n
        self.prime, self.base, self.top = prime, base, top
        self.q = base.order
        self.N = top.order - 1
        self._primitive = None
        self._lock = threading.Lock()

    def __reduce__(self):
        return (make_field, (self.p, self.s, self.n))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, q={self.q}, n={self.n})"

    @property
    def levels(self):
        return (self.prime, self.base, self.top)

    @property
    def primitive(self):
        if self._primitive is None:
            with self._lock:
                if self._primitive is None:
                    self._primitive = find_primitive(self)
        return self._primitive

    def elem(self, coeffs_or_code):
        return self.top.elem(coeffs_or_code)

    def frobenius_code(self, code, k):
        for _ in range(k % self.n):
            code = self.top.pow(code, self.q)
        return code

    def frobenius(self, x, k):
        _check_top(self, x)
        return FieldElem(self.top, self.frobenius_code(x.code, k))


def _check_top(ctx, x):
    if not isinstance(x, FieldElem) or x.field is not ctx.top:
        raise LevelMismatch("expected an element of the top level GF(q^n)")


@lru_cache(maxsize=None)
def _make_field(p, s, n, bits):
    if not isinstance(p, int) or not is_prime(p):
        raise PreconditionError(f"characteristic {p} is not prime")
    if s < 1 or n < 1:
        raise PreconditionError("extension degrees must be >= 1")
    if p ** (s * n) > 1 << bits:
        raise CapExceeded(f"{p}^{s * n} exceeds the cardinality cap 2^{bits}")
    prime = prime_field(p)
    base = _rebuild_extension(prime, first_monic_irreducible(prime, s).coeffs)
    top = _rebuild_extension(base, first_monic_irreducible(base, n).coeffs)
    return FieldCtx(p, s, n, prime, base, top)


def make_field(p, s=1, n=1):
    """Build GF(p) <= GF(p^s) <= GF(p^(s n)) with lexicographically-first moduli."""
    return _make_field(p, s, n, cap_bits())


def field_of_order(q):
    """GF(q) as the base level of the tower for ``q = p^s``."""
    fac = factorize(q) if q > 1 else ()
    if len(fac) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    (p, s), = fac
    return make_field(p, s, 1).base


def arith(ctx_or_level, op, *operands):
    """Field operation ``op`` in {add, sub, mul, inv, pow} on :class:`FieldElem` operands."""
    a = operands[0]
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** operands[1]
    b = operands[1]
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def multiplicative_order(ctx, x):
    """Order of ``x`` in GF(q^n)^*."""
    code = getattr(x, "code", x)
    if code == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    top = ctx.top
    order = ctx.N
    for ell, e in factorize(order):
        for _ in range(e):
            if top.pow(code, order // ell) == 1:
                order //= ell
            else:
                break
    return order


def is_primitive(ctx, x):
    code = getattr(x, "code", x)
    if code == 0:
        return False
    return all(ctx.top.pow(code, ctx.N // ell) != 1 for ell in prime_factors(ctx.N)) if ctx.N > 1 else code == 1


def find_primitive(ctx):
    """First element (in code order) of multiplicative order exactly q^n - 1."""
    for code in range(1, ctx.top.order):
        if is_primitive(ctx, code):
            return FieldElem(ctx.top, code)
    raise AssertionError("no primitive element found")


def frobenius(ctx, x, k):
    """``x ** (q**k)``."""
    return ctx.frobenius(x, k)


def element_degree(ctx, x):
    """Degree of ``x`` over GF(q): the least ``d | n`` with ``x^(q^d) = x``."""
    _check_top(ctx, x)
    for d in divisors(ctx.n):
        if ctx.frobenius_code(x.code, d) == x.code:
            return d
    raise AssertionError("x^(q^n) != x")


def trace_and_norm(ctx, x):
    """Sum and product of the GF(q)-conjugates of ``x``."""
    _check_top(ctx, x)
    top = ctx.top
    tr, nm = 0, 1
    c = x.code
    for _ in range(ctx.n):
        tr = top.add(tr, c)
        nm = top.mul(nm, c)
        c = top.pow(c, ctx.q)
    return FieldElem(top, tr), FieldElem(top, nm)
