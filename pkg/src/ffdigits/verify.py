"""Exhaustive theorem sweeps, witness search, and the DFT-based certificates' harnesses.

Ground truth is always the exhaustive scan over monic irreducibles; the
period-based certificates are only ever checked for soundness against it.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import enum
import time

import numpy as np

from . import kernels
from .cyclic import (
    CyclicFn, PeriodVerdict, conv_power, degree_threshold, dft, idft, least_period, period_criterion,
)
from .digits import delta_labels
from .errors import CapExceeded, PreconditionError
from .field import field_of_order, is_primitive, make_field
from .ntheory import divisors, factorize
from .poly import Poly, WeightSet, has_factor_of_degree, irreducible_table, poly_to_csv

Q2_MAX_N = 14
# Sequence length q^n - 1 for the O(N^2) transform harnesses.
DFT_CAP = 1 << 12


class Relation(enum.Enum):
    EQUAL = "eq"
    NOT_EQUAL = "ne"


# -- exception table ------------------------------------------------------------


class ExceptionTable:
    """The seven ``(c, W)`` pairs with no degree-n irreducible over GF(2) having ``S_W(P) = c``."""

    PATTERNS = (
        (0, "{0}"),
        (0, "{n}"),
        (0, "[0,n]"),
        (0, "[1,n-1]"),
        (1, "{0,n}"),
        (1, "[0,n-1]"),
        (1, "[1,n]"),
    )

    @staticmethod
    def _build(pattern, n):
        if pattern == "{0}":
            return WeightSet.of(n, [0])
        if pattern == "{n}":
            return WeightSet.of(n, [n])
        if pattern == "{0,n}":
            return WeightSet.of(n, [0, n])
        lo, hi = pattern.strip("[]").split(",")
        lo = n - 1 if lo == "n-1" else n if lo == "n" else int(lo)
        hi = n - 1 if hi == "n-1" else n if hi == "n" else int(hi)
        return WeightSet.interval(n, lo, hi)

    @classmethod
    def instantiate(cls, n):
        return [(c, cls._build(pat, n)) for c, pat in cls.PATTERNS]


def forced_exceptions(q, n, relation):
    """Pairs ruled out for every monic P because ``W <= {n}`` makes ``S_W(P)`` constant.

    ``S_W(P)`` is 0 for ``W`` empty and 1 (the leading coefficient) for ``W = {n}``.
    """
    out = []
    for mask, value in ((0, 0), (1 << n, 1)):
        for c in range(q):
            if (c != value) if relation is Relation.EQUAL else (c == value):
                out.append((c, mask))
    return out


# -- reports ---------------------------------------------------------------------


@dataclass
class VerificationReport:
    q: int
    n: int
    scope: str
    cases: list = field(default_factory=list)
    exceptions: list = field(default_factory=list)
    expected_exceptions: list = field(default_factory=list)
    match: bool = False
    counts: dict = field(default_factory=dict)
    wall_time_ms: float = 0.0

    def to_json(self):
        return {
            "params": {"q": self.q, "n": self.n, "scope": self.scope},
            "cases": self.cases,
            "exceptions": self.exceptions,
            "expected_exceptions": self.expected_exceptions,
            "match": self.match,
            "counts": self.counts,
            "wall_time_ms": self.wall_time_ms,
        }

    def csv_rows(self):
        for case in self.cases:
            yield {
                "q": self.q,
                "n": self.n,
                "c": case["c"],
                "W": " ".join(map(str, case["W"])),
                "witness": case["witness"] if case["witness"] is not None else "NONE",
            }


def _mask_list(mask):
    return [w for w in range(mask.bit_length()) if (mask >> w) & 1]


def _case(c, mask, row):
    return {"c": c, "W": _mask_list(mask), "witness": None if row is None else ",".join(map(str, row))}


def _pairs_json(pairs):
    return [{"c": c, "W": _mask_list(mask)} for c, mask in sorted(pairs)]


# -- sweep engine --------------------------------------------------------------------


def _hits_chunk(args):
    q, n, masks = args
    F = field_of_order(q)
    table = irreducible_table(F, n)
    addt = F.tables()[0]
    return kernels.first_hits(table, np.asarray(masks, np.int64), addt, q)


def first_hits(q, n, masks, workers=1):
    """``out[i, v]``: index of the first irreducible with ``S_W(P) = v`` for ``W = masks[i]`` (or -1)."""
    masks = np.asarray(masks, np.int64)
    if workers <= 1 or masks.shape[0] < 2 * workers:
        return _hits_chunk((q, n, masks))
    bounds = np.linspace(0, masks.shape[0], workers + 1).astype(int)
    jobs = [(q, n, masks[a:b]) for a, b in zip(bounds[:-1], bounds[1:])]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_hits_chunk, jobs))
    return np.concatenate(parts, axis=0)


def _witness_index(hits_row, c, relation):
    if relation is Relation.EQUAL:
        idx = int(hits_row[c])
        return idx if idx >= 0 else None
    others = [int(v) for i, v in enumerate(hits_row) if i != c and v >= 0]
    return min(others) if others else None


def _sweep(q, n, masks, relation, workers):
    F = field_of_order(q)
    table = irreducible_table(F, n)
    hits = first_hits(q, n, masks, workers)
    cases, missing = [], []
    for c in range(q):
        for i, mask in enumerate(masks):
            idx = _witness_index(hits[i], c, relation)
            row = None if idx is None else table[idx]
            cases.append(_case(c, int(mask), row))
            if idx is None:
                missing.append((c, int(mask)))
    return table, cases, missing


def _check_n(n, lo=2, hi=None):
    if n < lo:
        raise PreconditionError(f"n must be >= {lo}, got {n}")
    if hi is not None and n > hi:
        raise CapExceeded(f"n = {n} exceeds the sweep cap {hi}")


def verify_theorem_q2(n, workers=1, cap=Q2_MAX_N):
    """All ``(c, W)`` over GF(2): no-witness pairs vs the seven listed exceptions.

    ``(1, {})`` is also expected: the empty sum is always 0.
    """
    _check_n(n, hi=cap)
    t0 = time.perf_counter()
    masks = np.arange(1 << (n + 1), dtype=np.int64)
    table, cases, missing = _sweep(2, n, masks, Relation.EQUAL, workers)
    expected = {(c, W.mask) for c, W in ExceptionTable.instantiate(n)}
    expected |= set(forced_exceptions(2, n, Relation.EQUAL))
    found = set(missing)
    return VerificationReport(
        q=2, n=n, scope="all-W",
        cases=cases,
        exceptions=_pairs_json(found),
        expected_exceptions=_pairs_json(expected),
        match=found == expected,
        counts={"irreducibles": int(table.shape[0]), "cases": len(cases)},
        wall_time_ms=round((time.perf_counter() - t0) * 1000, 3),
    )


def verify_hansen_mullen_q2(n, workers=1):
    """Singletons ``W = {w}``, ``0 <= w < n``: exceptions ``(w, c) = (0, 0)`` and ``(1, 0)`` at n = 2."""
    _check_n(n)
    t0 = time.perf_counter()
    masks = np.array([1 << w for w in range(n)], np.int64)
    table, cases, missing = _sweep(2, n, masks, Relation.EQUAL, workers)
    expected = {(0, 1 << 0)} | ({(0, 1 << 1)} if n == 2 else set())
    found = set(missing)
    return VerificationReport(
        q=2, n=n, scope="singletons",
        cases=cases,
        exceptions=_pairs_json(found),
        expected_exceptions=_pairs_json(expected),
        match=found == expected,
        counts={"irreducibles": int(table.shape[0]), "cases": len(cases)},
        wall_time_ms=round((time.perf_counter() - t0) * 1000, 3),
    )


def verify_theorem_qgt2(q, n, workers=1):
    """Every ``(c, W)`` over GF(q), q > 2, has an irreducible with ``S_W(P) != c``.

    The only misses allowed are the two forced ones, ``(0, {})`` and ``(1, {n})``.
    """
    if q <= 2:
        raise PreconditionError("q must be > 2")
    _check_n(n)
    t0 = time.perf_counter()
    masks = np.arange(1 << (n + 1), dtype=np.int64)
    table, cases, missing = _sweep(q, n, masks, Relation.NOT_EQUAL, workers)
    expected = set(forced_exceptions(q, n, Relation.NOT_EQUAL))
    found = set(missing)
    return VerificationReport(
        q=q, n=n, scope="all-W-not-equal",
        cases=cases,
        exceptions=_pairs_json(found),
        expected_exceptions=_pairs_json(expected),
        match=found == expected,
        counts={"irreducibles": int(table.shape[0]), "cases": len(cases)},
        wall_time_ms=round((time.perf_counter() - t0) * 1000, 3),
    )


def search_witness(q, n, W, c, relation=Relation.EQUAL):
    """First monic irreducible (enumeration order) with ``S_W(P)`` related to ``c``, else None."""
    if not isinstance(W, WeightSet):
        W = WeightSet.of(n, W)
    relation = Relation(relation)
    F = field_of_order(q)
    if not 0 <= c < q:
        raise PreconditionError(f"c = {c} is not a code of GF({q})")
    table = irreducible_table(F, n)
    hits = kernels.first_hits(table, np.array([W.mask], np.int64), F.tables()[0], q)[0]
    idx = _witness_index(hits, c, relation)
    return None if idx is None else Poly(F, tuple(int(v) for v in table[idx]))


# -- harnesses for the period and transform statements -------------------------------------------------------------


def delta_period_hypothesis(q, n, mask):
    """Whether ``S`` (as a mask) meets the hypotheses of the maximal-period statement."""
    if mask == 0:
        return False
    if q == 2 and ((mask >> n) & 1 or mask == (1 << n) - 1):
        return False
    if q == 3 and mask == (1 | (1 << n)):
        return False
    return True


def check_delta_periods(q, n):
    """Least period of every ``delta_S``; returns violations among the admissible ``S``."""
    N = q**n - 1
    lab = delta_labels(q, n)
    masks = np.arange(1, 1 << (n + 1), dtype=np.int64)
    periods = kernels.delta_periods(lab, masks, np.array(divisors(N), np.int64))
    admissible = np.array([delta_period_hypothesis(q, n, int(m)) for m in masks])
    bad = masks[admissible & (periods != N)]
    return {
        "q": q,
        "n": n,
        "N": N,
        "checked": int(admissible.sum()),
        "violations": [_mask_list(int(m)) for m in bad],
        "excluded_periods": {
            " ".join(map(str, _mask_list(int(m)))): int(r)
            for m, r, ok in zip(masks, periods, admissible) if not ok
        },
    }


def check_sigma_dft(q, n):
    """Count mismatches of ``sigma_w(zeta^k)`` against ``dft(zeta, delta_w)(k)`` over all k and admissible w."""
    from .charfun import sigma_charpoly
    from .digits import delta_fn

    (p, s), = factorize(q)
    ctx = make_field(p, s, n)
    zeta = ctx.primitive
    zp = ctx.top.elem(1)
    powers = []
    for _ in range(ctx.N):
        powers.append(zp)
        zp = zp * zeta
    mismatches = 0
    checked = 0
    for w in range(n + 1):
        if q == 2 and w == n:
            continue
        transform = dft(zeta, delta_fn(q, n, [w]).lift(ctx.top))
        for k in range(ctx.N):
            checked += 1
            if sigma_charpoly(ctx, w, powers[k]).code != transform[k]:
                mismatches += 1
    return {"q": q, "n": n, "checked": checked, "mismatches": mismatches}


@dataclass
class FactorCertificate:
    h: str
    q: int
    n: int
    subfield_order: int
    length: int
    least_period: int
    threshold: int
    verdict: str
    cross_check: object = None

    def to_json(self):
        return dict(self.__dict__)


def _ctx_for(q, n):
    (p, s), = factorize(q)
    return make_field(p, s, n)


def certify_factor(q, n, h, cross_check=False):
    """Period test on ``1 - h^(#L^*) mod (x^(q^n-1) - 1)`` for a degree-n irreducible factor of ``h``.

    With ``cross_check`` the certificate also records whether factoring
    ``h`` really finds a degree-n irreducible factor.
    """
    if n < 2:
        raise PreconditionError("n must be >= 2")
    ctx = _ctx_for(q, n)
    if ctx.N > DFT_CAP:
        raise CapExceeded(f"sequence length {ctx.N} exceeds {DFT_CAP}")
    if not h:
        raise PreconditionError("h must be nonzero")
    if h.field is not ctx.base:
        h = Poly(ctx.base, h.coeffs)
    top = ctx.top
    xs = np.arange(1, top.order, dtype=np.int64)
    img = np.zeros_like(xs)
    for a in reversed(h.coeffs):
        img = top.add_vec(top.mul_vec(img, xs), a)
    image = sorted(set(int(v) for v in img))
    # Smallest subfield GF(p^e), e | s n, holding the whole image.
    e = next(e for e in divisors(ctx.s * n) if all(top.frobenius_fixed(v, e) for v in image))
    m = ctx.p**e - 1
    N = ctx.N
    folded = np.zeros(N, np.int64)
    F = ctx.base
    for i, a in enumerate(h.coeffs):
        folded[i % N] = F.add(int(folded[i % N]), a)
    seq = CyclicFn.kronecker(F, N) - conv_power(CyclicFn(F, folded), m)
    r = least_period(seq)
    verdict = period_criterion(r, ctx.q, n)
    return FactorCertificate(
        h=poly_to_csv(h), q=ctx.q, n=n, subfield_order=ctx.p**e, length=N, least_period=r,
        threshold=degree_threshold(ctx.q, n),
        verdict="DegreeNFactorGuaranteed" if verdict is PeriodVerdict.DEGREE_N_GUARANTEED else "Inconclusive",
        cross_check=has_factor_of_degree(h, n) if cross_check else None,
    )


def _random_function(rng, order, degree_of, n):
    kind = rng.integers(5)
    F = np.zeros(order, np.int64)
    if kind == 0:
        return F, "zero"
    if kind == 1:
        F[rng.integers(1, order)] = rng.integers(1, order)
        return F, "single"
    if kind == 2:
        d = int(rng.choice(divisors(n)))
        pool = np.nonzero(d % degree_of == 0)[0][1:]
        size = int(rng.integers(1, pool.shape[0] + 1))
        chosen = rng.choice(pool, size=size, replace=False)
        F[chosen] = rng.integers(1, order, size=size)
        return F, f"subfield-{d}"
    density = rng.random()
    mask = rng.random(order) < density
    F[mask] = rng.integers(1, order, size=int(mask.sum()))
    return F, "random"


def check_connection_lemma(q, n, trials, seed=20240601):
    """Random functions on GF(q^n): checks the three support/period implications and dft/idft period equality."""
    ctx = _ctx_for(q, n)
    if ctx.N > DFT_CAP:
        raise CapExceeded(f"q^n - 1 = {ctx.N} exceeds {DFT_CAP}")
    rng = np.random.default_rng(seed)
    top = ctx.top
    order = top.order
    zeta = ctx.primitive
    zp = kernels.powers(zeta.code, ctx.N, top.kernel_params())
    # degree_of[code]: degree over GF(q); index 0 (the zero element) gets 1.
    degree_of = np.ones(order, np.int64)
    for code in range(1, order):
        for d in divisors(n):
            if ctx.frobenius_code(code, d) == code:
                degree_of[code] = d
                break
    primitive = np.array([code != 0 and is_primitive(ctx, code) for code in range(order)])
    threshold = degree_threshold(ctx.q, n)
    proper = [d for d in divisors(n) if d < n]
    fired = {"i": 0, "ii": 0, "iii": 0}
    violations = []
    for t in range(trials):
        F, kind = _random_function(rng, order, degree_of, n)
        f = CyclicFn(top, F[zp])
        r = least_period(idft(zeta, f))
        r_fwd = least_period(dft(zeta, f))
        supp = np.nonzero(F)[0]
        has_deg_n = bool(np.any(degree_of[supp] == n))
        has_prim = bool(np.any(primitive[supp]))
        problems = []
        if r != r_fwd:
            problems.append("dft/idft periods differ")
        if threshold % r:
            fired["i"] += 1
            if not has_deg_n:
                problems.append("(i)")
        if has_deg_n:
            fired["ii"] += 1
            if any((ctx.q**d - 1) % r == 0 for d in proper):
                problems.append("(ii)")
        if has_prim:
            fired["iii"] += 1
            if r != ctx.N:
                problems.append("(iii)")
        if problems:
            violations.append({"trial": t, "kind": kind, "r": r, "problems": problems})
    return {
        "q": ctx.q, "n": n, "trials": trials, "seed": seed,
        "fired": fired, "violations": violations,
    }
