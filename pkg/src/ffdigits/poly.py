"""Dense polynomials over a field level, weight sets, and the digit-sum functional.

Coefficients are stored little-endian as integer codes of the coefficient
field (see :mod:`ffdigits.field`). Monic polynomials of a fixed degree ``n``
are ordered by the integer ``sum(a_i * q**i)`` over their lower
coefficients, i.e. the constant term varies fastest. Every enumeration and
"first witness" in the package uses this order.
"""

from dataclasses import dataclass
from functools import lru_cache
import re

import numpy as np

from . import kernels
from .errors import CapExceeded, LevelMismatch, PreconditionError
from .ntheory import divisors, prime_factors

# Largest q^n for which all monic candidates of degree n are scanned.
ENUM_CAP = 1 << 26
_CHUNK = 1 << 15


@dataclass(frozen=True)
class Poly:
    """Polynomial over ``field`` with little-endian coefficient codes.

    The zero polynomial has no stored coefficients and degree ``-1``, which
    sits below every real degree.
    """

    field: object
    coeffs: tuple

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        order = self.field.order
        if any(a < 0 or a >= order for a in c):
            raise ValueError(f"coefficient out of range for a field of order {order}")
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, w):
        """Coefficient of ``x**w`` (zero above the degree)."""
        return self.coeffs[w] if 0 <= w < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if isinstance(other, int):
            return Poly(self.field, (other,))
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field is not self.field:
            raise LevelMismatch("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly(self.field, _add(self.field, self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, tuple(self.field.neg(a) for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly(self.field, _mul(self.field, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        quo, rem = _divmod(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate at a code of the coefficient field or of an extension of it."""
        F = getattr(x, "field", self.field)
        x = getattr(x, "code", x)
        acc = 0
        for a in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r} over GF({self.field.order}))"


# -- coefficient-list primitives -------------------------------------------


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = F.add(out[i], bi)
    return _trim(out)


def _mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _trim(out)


def _divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    quo = [0] * max(len(a) - db, 0)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        c = F.mul(rem[-1], inv_lead)
        quo[shift] = c
        for t, bt in enumerate(b):
            if bt:
                rem[t + shift] = F.sub(rem[t + shift], F.mul(c, bt))
        _trim(rem)
    return _trim(quo), rem


def _monic(F, a):
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(inv, c) for c in a]


# -- public ring operations -------------------------------------------------


def poly_gcd(f, g):
    """Monic gcd of two polynomials over the same field."""
    F = f.field
    a, b = list(f.coeffs), list(g.coeffs)
    while b:
        a, b = b, _divmod(F, a, b)[1]
    return Poly(F, _monic(F, a))


def poly_powmod(f, e, g):
    """``f**e mod g`` by square-and-multiply; ``e`` may be any non-negative int."""
    if e < 0:
        raise ValueError("negative exponent")
    if not g:
        raise ZeroDivisionError("modulus is the zero polynomial")
    F = f.field
    mod = list(g.coeffs)
    base = _divmod(F, list(f.coeffs), mod)[1]
    result = _divmod(F, [1], mod)[1]
    while e:
        if e & 1:
            result = _divmod(F, _mul(F, result, base), mod)[1]
        e >>= 1
        if e:
            base = _divmod(F, _mul(F, base, base), mod)[1]
    return Poly(F, result)


def is_irreducible(f):
    """Rabin's test: ``x^(q^n) = x mod f`` and ``gcd(x^(q^(n/l)) - x, f) = 1`` for primes ``l | n``."""
    n = f.degree
    if n < 1:
        raise PreconditionError("irreducibility is undefined for constants")
    if n == 1:
        return True
    F = f.field
    f = Poly(F, _monic(F, list(f.coeffs)))
    x = Poly(F, (0, 1))
    q = F.order
    # x^(q^k) mod f for k = 0..n by repeated q-th powers.
    frob = [x]
    for _ in range(n):
        frob.append(poly_powmod(frob[-1], q, f))
    if frob[n] != x:
        return False
    for ell in prime_factors(n):
        if poly_gcd(frob[n // ell] - x, f).degree != 0:
            return False
    return True


def has_factor_of_degree(h, n):
    """Whether ``h`` has a monic irreducible factor of degree exactly ``n``.

    ``g = gcd(h, x^(q^n) - x)`` is the squarefree product of the factors whose
    degree divides ``n``; dividing out those of degree ``d | n, d < n`` leaves
    a non-constant part exactly when a degree-``n`` factor exists.
    """
    if not h:
        raise PreconditionError("the zero polynomial has every factor")
    F = h.field
    x = Poly(F, (0, 1))
    q = F.order
    h = Poly(F, _monic(F, list(h.coeffs)))
    if h.degree < n:
        return False

    def frob_minus_x(k, mod):
        return poly_powmod(x, q**k, mod) - x

    g = poly_gcd(h, frob_minus_x(n, h))
    for d in divisors(n)[:-1]:
        if g.degree < 1:
            break
        g = g // poly_gcd(g, frob_minus_x(d, g))
    return g.degree >= 1


def _coerce_field(q):
    if isinstance(q, int):
        from .field import field_of_order

        return field_of_order(q)
    return q


def monic_candidates(F, n, start, stop):
    """Rows of monic degree-``n`` candidates with lower-coefficient index in ``[start, stop)``."""
    q = F.order
    idx = np.arange(start, stop, dtype=np.int64)
    rows = np.empty((stop - start, n + 1), np.int64)
    for i in range(n):
        rows[:, i] = idx % q
        idx //= q
    rows[:, n] = 1
    return rows


def _cofactors(n):
    return np.array([n // ell for ell in prime_factors(n)] if n > 1 else [], dtype=np.int64)


def _scan_irreducible(F, n, start, stop):
    cands = monic_candidates(F, n, start, stop)
    addt, mult, negt, invt = F.tables()
    flags = kernels.irreducible_flags(cands, F.order, addt, mult, negt, invt, _cofactors(n))
    return cands[flags]


def first_monic_irreducible(F, n):
    """Smallest monic irreducible of degree ``n`` over ``F`` in enumeration order."""
    if n == 1:
        return Poly(F, (0, 1))
    total = F.order**n
    start, size = 0, 256
    while start < total:
        stop = min(total, start + size)
        found = _scan_irreducible(F, n, start, stop)
        if found.shape[0]:
            return Poly(F, tuple(int(c) for c in found[0]))
        start, size = stop, min(size * 4, _CHUNK)
    raise AssertionError(f"no irreducible of degree {n} over GF({F.order})")


@lru_cache(maxsize=64)
def _irreducible_table(F, n):
    total = F.order**n
    if total > ENUM_CAP:
        raise CapExceeded(f"q^n = {total} exceeds the enumeration cap {ENUM_CAP}")
    parts = [_scan_irreducible(F, n, a, min(total, a + _CHUNK)) for a in range(0, total, _CHUNK)]
    table = np.concatenate(parts) if parts else np.empty((0, n + 1), np.int64)
    table.setflags(write=False)
    return table


def irreducible_table(q, n):
    """All monic irreducibles of degree ``n`` as a read-only ``(M, n+1)`` code matrix."""
    if n < 1:
        raise PreconditionError("degree must be at least 1")
    return _irreducible_table(_coerce_field(q), n)


def enumerate_monic_irreducibles(q, n):
    """Yield every monic irreducible of degree ``n`` over GF(q) once, in enumeration order."""
    F = _coerce_field(q)
    for row in irreducible_table(F, n):
        yield Poly(F, tuple(int(c) for c in row))


def necklace_count(q, n):
    """Number of monic irreducibles of degree ``n`` over GF(q), by the Moebius formula."""
    from .digits import mobius
    from .ntheory import divisors

    return sum(mobius(d) * q ** (n // d) for d in divisors(n)) // n


def char_poly(ctx, xi):
    """Characteristic polynomial of ``xi`` over GF(q): the product of ``x - xi^(q^k)``, k < n."""
    top = ctx.top
    code = getattr(xi, "code", xi)
    acc = [1]
    for k in range(ctx.n):
        root = top.neg(ctx.frobenius_code(code, k))
        # acc * (x + root), coefficients in the top field.
        nxt = [0] * (len(acc) + 1)
        for i, a in enumerate(acc):
            nxt[i + 1] = top.add(nxt[i + 1], a)
            nxt[i] = top.add(nxt[i], top.mul(a, root))
        acc = nxt
    q = ctx.q
    if any(c >= q for c in acc):
        raise AssertionError("characteristic polynomial left the base field")
    return Poly(ctx.base, tuple(acc))


def reciprocal(h):
    """Monic reciprocal ``h(0)^-1 * x^deg(h) * h(1/x)``."""
    if not h or h[0] == 0:
        raise PreconditionError("reciprocal needs a nonzero constant term")
    F = h.field
    inv = F.inv(h[0])
    return Poly(F, tuple(F.mul(inv, c) for c in reversed(h.coeffs)))


def sum_of_digits(h, W):
    """Sum of the coefficients of ``x**w`` in ``h`` over ``w`` in ``W``.

    Indices above ``deg h`` contribute zero.
    """
    F = h.field
    acc = 0
    for w in W:
        acc = F.add(acc, h[w])
    return acc


# -- weight sets --------------------------------------------------------------


@dataclass(frozen=True)
class WeightSet:
    """A subset of ``[0, n]`` stored as a bit mask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.mask < 0 or self.mask >> (self.n + 1):
            raise ValueError(f"mask {self.mask:#x} is not a subset of [0, {self.n}]")

    @classmethod
    def of(cls, n, elements):
        mask = 0
        for w in elements:
            if not 0 <= w <= n:
                raise ValueError(f"{w} is not in [0, {n}]")
            mask |= 1 << w
        return cls(n, mask)

    @classmethod
    def interval(cls, n, lo, hi):
        return cls.of(n, range(lo, hi + 1))

    @classmethod
    def full(cls, n):
        return cls(n, (1 << (n + 1)) - 1)

    def __iter__(self):
        m, w = self.mask, 0
        while m:
            if m & 1:
                yield w
            m >>= 1
            w += 1

    def __contains__(self, w):
        return 0 <= w <= self.n and bool((self.mask >> w) & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def elements(self):
        return list(self)

    def reflect(self):
        """The reflection ``{n - w : w in W}``."""
        return WeightSet.of(self.n, (self.n - w for w in self))

    def __or__(self, other):
        return WeightSet(self.n, self.mask | other.mask)

    def __sub__(self, other):
        return WeightSet(self.n, self.mask & ~other.mask)

    def __str__(self):
        return "{" + ",".join(map(str, self)) + "}"


# -- text formats -------------------------------------------------------------


def format_poly(h):
    """Human form, descending degree: ``x^3+x+1``, ``2x^2+1``."""
    if not h.coeffs:
        return "0"
    terms = []
    for w in range(h.degree, -1, -1):
        c = h.coeffs[w]
        if c == 0:
            continue
        if w == 0:
            terms.append(str(c))
        else:
            mono = "x" if w == 1 else f"x^{w}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


def poly_to_csv(h):
    """Machine form: comma-separated little-endian codes, ``1,1,0,1``."""
    return ",".join(str(c) for c in h.coeffs) if h.coeffs else "0"


_TERM = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


def parse_poly(text, field):
    """Parse either the machine form or the human form."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty polynomial string")
    if re.fullmatch(r"\d+(,\d+)*", text):
        return Poly(field, tuple(int(t) for t in text.split(",")))
    coeffs = {}
    for term in text.split("+"):
        m = _TERM.match(term)
        if not term or not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"malformed term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if c >= field.order:
            raise ValueError(f"coefficient {c} is not a code of GF({field.order})")
        w = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[w] = field.add(coeffs.get(w, 0), c)
    top = max(coeffs)
    return Poly(field, tuple(coeffs.get(w, 0) for w in range(top + 1)))
