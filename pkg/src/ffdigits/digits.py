"""q-ary digits, the residue sets Omega(W) and their indicator functions delta_W."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .cyclic import CyclicFn
from .errors import CapExceeded
from .field import prime_field
from .ntheory import cyclotomic_value, factorize, mobius, q_repunit
from .poly import WeightSet

__all__ = [
    "OmegaSet", "cyclotomic_value", "delta_fn", "delta_labels", "mobius", "omega",
    "q_digits", "q_repunit", "reflect", "supp_q", "weight_q",
]

# Z_{q^n - 1} is materialised densely; keep it desk sized.
DELTA_CAP = 1 << 26


def q_digits(t, q):
    """Base-``q`` digits of ``t``, lowest first; ``[]`` for 0."""
    if t < 0:
        raise ValueError("t must be non-negative")
    out = []
    while t:
        t, d = divmod(t, q)
        out.append(d)
    return out


def supp_q(t, q):
    return [i for i, d in enumerate(q_digits(t, q)) if d]


def weight_q(t, q):
    return len(supp_q(t, q))


def reflect(W, n=None):
    """``n - W`` for a :class:`WeightSet` (``n`` defaults to ``W.n``)."""
    if n is not None and n != W.n:
        W = WeightSet.of(n, W)
    return W.reflect()


@dataclass(frozen=True)
class OmegaSet:
    q: int
    n: int
    W: WeightSet
    residues: tuple

    def __len__(self):
        return len(self.residues)

    def __iter__(self):
        return iter(self.residues)

    def __contains__(self, k):
        return k in self.residues


def _omega_w(q, n, w):
    N = q**n - 1
    if w == 0:
        return [0]
    out = []
    for idx in combinations(range(n), w):
        k = sum(q**i for i in idx)
        # k == N only when q == 2 and w == n: that residue is 0, already Omega(0).
        if k < N:
            out.append(k)
    return out


def omega(q, n, W):
    """Residues of Z_{q^n-1} with all q-digits in {0,1} and digit count in ``W``.

    Built from the w-subsets of digit positions, never by scanning Z_N.
    """
    if not isinstance(W, WeightSet):
        W = WeightSet.of(n, W)
    if q**n - 1 > DELTA_CAP:
        raise CapExceeded(f"q^n - 1 = {q**n - 1} exceeds {DELTA_CAP}")
    res = []
    for w in W:
        res.extend(_omega_w(q, n, w))
    return OmegaSet(q, n, W, tuple(sorted(res)))


@lru_cache(maxsize=32)
def delta_labels(q, n):
    """Array ``lab`` on Z_{q^n-1}: ``lab[k] = w`` for ``k`` in Omega(w), else ``n + 1``.

    ``delta_W(k) = (mask(W) >> lab[k]) & 1``, which is what the sweep kernels use.
    """
    N = q**n - 1
    if N > DELTA_CAP:
        raise CapExceeded(f"q^n - 1 = {N} exceeds {DELTA_CAP}")
    lab = np.full(N, n + 1, np.int64)
    for w in range(n + 1):
        lab[_omega_w(q, n, w)] = w
    lab.setflags(write=False)
    return lab


def delta_fn(q, n, W, field=None):
    """Indicator of Omega(W) on Z_{q^n-1} with values in GF(p)."""
    if not isinstance(W, WeightSet):
        W = WeightSet.of(n, W)
    F = field if field is not None else prime_field(factorize(q)[0][0])
    bits = (np.int64(W.mask) >> delta_labels(q, n)) & 1
    return CyclicFn(F, bits)
