"""Cyclic functions Z_N -> GF(Q): periods, symmetries, DFT and convolution."""

from dataclasses import dataclass
import enum

import numpy as np

from . import kernels
from .errors import LevelMismatch, PreconditionError
from .field import TABLE_LIMIT
from .ntheory import cyclotomic_value, divisors, factorize


@dataclass(frozen=True, eq=False)
class CyclicFn:
    """A function on Z_N stored as the vector of its value codes in ``field``."""

    field: object
    values: np.ndarray

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.int64)
        if v.ndim != 1 or v.shape[0] < 1:
            raise ValueError("values must be a non-empty 1-d array")
        if v.min() < 0 or v.max() >= self.field.order:
            raise ValueError(f"values out of range for {self.field!r}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def zeros(cls, field, N):
        return cls(field, np.zeros(N, np.int64))

    @classmethod
    def kronecker(cls, field, N, at=0):
        v = np.zeros(N, np.int64)
        v[at % N] = 1
        return cls(field, v)

    @property
    def N(self):
        return self.values.shape[0]

    def __len__(self):
        return self.N

    def __getitem__(self, i):
        return int(self.values[i % self.N])

    def __eq__(self, other):
        if not isinstance(other, CyclicFn):
            return NotImplemented
        return self.field.p == other.field.p and np.array_equal(self.values, other.values)

    __hash__ = None

    def lift(self, field):
        """View the same values in a bigger level of the tower (codes are unchanged)."""
        if field.p != self.field.p or field.order < self.field.order:
            raise LevelMismatch(f"cannot lift {self.field!r} values into {field!r}")
        return CyclicFn(field, self.values)

    def _common(self, other):
        if self.N != other.N:
            raise PreconditionError(f"size mismatch: Z_{self.N} vs Z_{other.N}")
        if self.field.p != other.field.p:
            raise LevelMismatch("functions over different characteristics")
        return self.field if self.field.order >= other.field.order else other.field

    def __add__(self, other):
        F = self._common(other)
        return CyclicFn(F, F.add_vec(self.values, other.values))

    def __neg__(self):
        return CyclicFn(self.field, self.field.neg_vec(self.values))

    def __sub__(self, other):
        F = self._common(other)
        return CyclicFn(F, F.add_vec(self.values, F.neg_vec(other.values)))

    def scale(self, c, field=None):
        """Multiply every value by the scalar code ``c`` (of ``field`` or the own level)."""
        F = field if field is not None and field.order > self.field.order else self.field
        return CyclicFn(F, F.mul_vec(self.values, int(c)))

    def pointwise(self, other):
        F = self._common(other)
        return CyclicFn(F, F.mul_vec(self.values, other.values))

    def support(self):
        return np.nonzero(self.values)[0]

    def to_json(self):
        return {
            "N": self.N,
            "level": repr(self.field),
            "values": [",".join(map(str, self.field.decode(int(v)))) for v in self.values],
        }


def least_period(f):
    """Smallest ``r >= 1`` with ``f(i + r) = f(i)`` for all ``i``; scans divisors of N upward."""
    return kernels.least_period(f.values, np.array(divisors(f.N), np.int64))


def shift(f, k):
    """``i -> f(i + k)``."""
    return CyclicFn(f.field, np.roll(f.values, -(k % f.N)))


def reversal(f):
    """``i -> f(-(1 + i))``."""
    idx = (-1 - np.arange(f.N)) % f.N
    return CyclicFn(f.field, f.values[idx])


def complement(f):
    """Swap the values 0 and 1 of a {0,1}-valued function."""
    if np.any(f.values > 1):
        raise PreconditionError("complement needs a {0,1}-valued function")
    return CyclicFn(f.field, 1 - f.values)


def compose(pi, f, field=None):
    """``pi o f`` for a value map given as a callable or a lookup table over codes."""
    if callable(pi):
        table = np.array([pi(c) for c in range(f.field.order)], np.int64)
    else:
        table = np.asarray(pi, np.int64)
    return CyclicFn(field if field is not None else f.field, table[f.values])


def permute(f, sigma):
    """``i -> sigma(f(i))`` for a permutation ``sigma`` of the value field."""
    order = f.field.order
    table = np.array([sigma(c) for c in range(order)] if callable(sigma) else sigma, np.int64)
    if table.shape != (order,) or not np.array_equal(np.sort(table), np.arange(order)):
        raise PreconditionError("sigma is not a bijection of the value field")
    return compose(table, f)


def _root_field(zeta, f):
    F = zeta.field
    if F.p != f.field.p or F.order < f.field.order:
        raise LevelMismatch(f"values in {f.field!r} do not embed in {F!r}")
    N = f.N
    z = zeta.code
    if z == 0 or F.pow(z, N) != 1 or any(F.pow(z, N // ell) == 1 for ell, _ in factorize(N)):
        raise PreconditionError(f"zeta does not have multiplicative order {N}")
    return F


def _has_tables(F):
    return F.order <= TABLE_LIMIT


def _dft_values(values, z, F):
    if _has_tables(F):
        addt, mult, _, _ = F.tables()
        zp = kernels.powers(z, values.shape[0], F.kernel_params())
        return kernels.dft_tab(values, zp, addt, mult)
    return kernels.dft(values, z, F.kernel_params())


def dft(zeta, f):
    """``i -> sum_j f(j) zeta^(i j)``, O(N^2); table-driven when the value field is small."""
    F = _root_field(zeta, f)
    return CyclicFn(F, _dft_values(f.values, zeta.code, F))


def dft_at(zeta, f, i):
    """One value of the transform, in O(N)."""
    F = _root_field(zeta, f)
    return kernels.dft_at(f.values, zeta.code, i % f.N, F.kernel_params())


def idft(zeta, g):
    """Inverse transform ``N^-1 * dft(zeta^-1, g)``."""
    F = _root_field(zeta, g)
    p = F.p
    if g.N % p == 0:
        raise PreconditionError(f"N = {g.N} is not invertible in characteristic {p}")
    inv_zeta = zeta.inverse()
    out = _dft_values(g.values, inv_zeta.code, F)
    n_inv = pow(g.N, -1, p)
    return CyclicFn(F, F.mul_vec(out, n_inv))


def convolve(f, g):
    """Cyclic convolution ``i -> sum_{j+k=i} f(j) g(k)``."""
    F = f._common(g)
    if _has_tables(F):
        addt, mult, _, _ = F.tables()
        return CyclicFn(F, kernels.convolve_tab(f.values, g.values, addt, mult))
    return CyclicFn(F, kernels.convolve(f.values, g.values, F.kernel_params()))


def conv_power(f, m):
    """``m``-fold convolution of ``f`` with itself; the 0-th power is the Kronecker delta."""
    if m < 0:
        raise ValueError("negative convolution power")
    result = CyclicFn.kronecker(f.field, f.N)
    base = f
    while m:
        if m & 1:
            result = convolve(result, base)
        m >>= 1
        if m:
            base = convolve(base, base)
    return result


class PeriodVerdict(enum.Enum):
    DEGREE_N_GUARANTEED = "DegreeNGuaranteed"
    INCONCLUSIVE = "Inconclusive"


def degree_threshold(q, n):
    """``(q^n - 1) / Phi_n(q)``: least periods dividing this are inconclusive."""
    return (q**n - 1) // cyclotomic_value(n, q)


def period_criterion(r, q, n):
    """Guarantee a degree-``n`` element in the support when ``r`` does not divide the threshold."""
    N = q**n - 1
    if r < 1 or N % r:
        raise PreconditionError(f"{r} does not divide q^n - 1 = {N}")
    if degree_threshold(q, n) % r:
        return PeriodVerdict.DEGREE_N_GUARANTEED
    return PeriodVerdict.INCONCLUSIVE
