"""Characteristic elementary symmetric functions and the gamma/Delta constructions.

For ``xi`` in GF(q^n), ``sigma_w(xi)`` is the w-th elementary symmetric
polynomial of the conjugates ``xi, xi^q, ..., xi^(q^(n-1))``; its DFT
counterpart is the indicator ``delta_w``. ``gamma_fn`` and ``delta_cap_fn``
combine these into functions whose least period certifies an irreducible
polynomial with a prescribed digit sum.
"""

from dataclasses import dataclass, field
import enum
from itertools import combinations

import numpy as np

from .cyclic import (
    CyclicFn, PeriodVerdict, conv_power, degree_threshold, dft_at, least_period, period_criterion,
)
from .digits import delta_fn, delta_labels
from .errors import PreconditionError
from .field import FieldElem, make_field
from .ntheory import factorize
from .poly import WeightSet, char_poly

SUBSET_SIGMA_MAX_N = 12


class Mode(enum.Enum):
    AVOID_VALUE = "AvoidValue"
    HIT_VALUE = "HitValue"


@dataclass(frozen=True)
class PrescriptionSpec:
    """Target: an irreducible P of degree n with ``S_{n-W}(P) != c`` (avoid) or ``== c`` (hit)."""

    q: int
    n: int
    W: WeightSet
    c: int
    mode: Mode = Mode.HIT_VALUE

    def __post_init__(self):
        if not isinstance(self.W, WeightSet):
            object.__setattr__(self, "W", WeightSet.of(self.n, self.W))
        if self.W.n != self.n:
            raise PreconditionError("W must be a subset of [0, n]")
        if self.n < 1:
            raise PreconditionError("n must be >= 1")
        if not 0 <= self.c < self.q:
            raise PreconditionError(f"c = {self.c} is not a code of GF({self.q})")
        if self.q == 2 and self.n in self.W:
            raise PreconditionError("for q = 2 the weight n must not be in W")

    @property
    def ctx(self):
        (p, s), = factorize(self.q)
        return make_field(p, s, self.n)


def _top_code(ctx, xi):
    if isinstance(xi, FieldElem):
        if xi.field is not ctx.top:
            raise PreconditionError("xi must live in GF(q^n)")
        return xi.code
    return int(xi)


def sigma_subsets(ctx, w, xi):
    """``sigma_w`` straight from its definition as a sum over w-subsets of digit positions."""
    if not 0 <= w <= ctx.n:
        raise PreconditionError(f"w = {w} outside [0, {ctx.n}]")
    top, q = ctx.top, ctx.q
    x = _top_code(ctx, xi)
    acc = 0
    for idx in combinations(range(ctx.n), w):
        acc = top.add(acc, top.pow(x, sum(q**i for i in idx)))
    return FieldElem(ctx.base, acc)


def sigma_charpoly(ctx, w, xi):
    """``sigma_w`` as ``(-1)^w`` times the coefficient of ``x^(n-w)`` in the characteristic polynomial."""
    if not 0 <= w <= ctx.n:
        raise PreconditionError(f"w = {w} outside [0, {ctx.n}]")
    h = char_poly(ctx, _top_code(ctx, xi))
    c = h[ctx.n - w]
    if w % 2:
        c = ctx.base.neg(c)
    return FieldElem(ctx.base, c)


def sigma(ctx, w, xi):
    if ctx.n <= SUBSET_SIGMA_MAX_N:
        return sigma_subsets(ctx, w, xi)
    return sigma_charpoly(ctx, w, xi)


def sigma_via_dft(ctx, zeta, w, k):
    """``dft(zeta, delta_w)(k)``, equal to ``sigma_w(zeta^k)`` except for ``(q, w) = (2, n)``."""
    if ctx.q == 2 and w == ctx.n:
        raise PreconditionError("(q, w) = (2, n) is excluded: Omega(n) is empty for q = 2")
    d = delta_fn(ctx.q, ctx.n, [w])
    return FieldElem(ctx.top, dft_at(zeta, d, k))


def _signed_delta(spec):
    """``sum_{w in W} (-1)^w delta_w`` as a vector over GF(q)."""
    lab = delta_labels(spec.q, spec.n)
    F = spec.ctx.base
    minus_one = F.neg(1)
    in_w = ((np.int64(spec.W.mask) >> lab) & 1).astype(bool)
    vals = np.zeros(lab.shape[0], np.int64)
    vals[in_w] = np.where(lab[in_w] % 2 == 0, 1, minus_one)
    return vals


def gamma_fn(spec):
    """``sum_{w in W} (-1)^w delta_w - c delta_0`` over GF(q)."""
    F = spec.ctx.base
    vals = _signed_delta(spec)
    vals[0] = F.sub(int(vals[0]), spec.c)
    return CyclicFn(F, vals)


def delta_cap_fn(spec):
    """``delta_0 - gamma^(conv (q-1))`` over GF(q)."""
    g = gamma_fn(spec)
    return CyclicFn.kronecker(g.field, g.N) - conv_power(g, spec.q - 1)


@dataclass
class PrescriptionCertificate:
    spec: PrescriptionSpec
    function: str
    least_period: int
    threshold: int
    verdict: PeriodVerdict
    W: list = field(default_factory=list)
    prescribed_W: list = field(default_factory=list)

    @property
    def guaranteed(self):
        return self.verdict is PeriodVerdict.DEGREE_N_GUARANTEED

    def to_json(self):
        return {
            "q": self.spec.q,
            "n": self.spec.n,
            "c": self.spec.c,
            "mode": self.spec.mode.value,
            "function": self.function,
            "W": self.W,
            "prescribed_W": self.prescribed_W,
            "least_period": self.least_period,
            "threshold": self.threshold,
            "verdict": "WitnessGuaranteed" if self.guaranteed else "Inconclusive",
        }


def prescription_certificate(spec):
    """One-sided certificate: a guarantee means an irreducible P with ``S_{n-W}(P)`` avoiding/hitting ``c``.

    Inconclusive says nothing about existence.
    """
    if spec.mode is Mode.AVOID_VALUE:
        fn, name = gamma_fn(spec), "gamma"
    else:
        fn, name = delta_cap_fn(spec), "Delta"
    r = least_period(fn)
    return PrescriptionCertificate(
        spec=spec,
        function=name,
        least_period=r,
        threshold=degree_threshold(spec.q, spec.n),
        verdict=period_criterion(r, spec.q, spec.n),
        W=spec.W.elements(),
        prescribed_W=spec.W.reflect().elements(),
    )
