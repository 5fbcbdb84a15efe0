"""Acceptance suite: each criterion prints one PASS/FAIL line and asserts at its stated tolerance.

Criteria 1 and 3 ask for exception sets that cannot occur as stated. The empty sum is always 0 and
the leading coefficient of a monic polynomial is always 1, so ``(1, {})`` (q = 2) and ``(0, {})``,
``(1, {n})`` (q > 2) can never have witnesses. The literal checks are strict xfails that report
FAIL. Separate tests confirm that the observed sets equal the stated ones plus exactly these forced pairs.

Run directly with ``python3 tests/test_acceptance.py`` to print the summary without pytest.
"""

import functools
import os
import re
import subprocess
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from conftest import sympy_factor_degrees  # noqa: E402
from ffdigits import make_field  # noqa: E402
from ffdigits.cyclic import (  # noqa: E402
    CyclicFn, complement, conv_power, convolve, dft, idft, least_period, permute, reversal, shift,
)
from ffdigits.digits import delta_fn  # noqa: E402
from ffdigits.field import field_of_order  # noqa: E402
from ffdigits.ntheory import divisors  # noqa: E402
from ffdigits.poly import Poly  # noqa: E402
from ffdigits.verify import (  # noqa: E402
    ExceptionTable, Relation, certify_factor, check_connection_lemma, check_delta_periods, check_sigma_dft,
    forced_exceptions, verify_hansen_mullen_q2, verify_theorem_q2, verify_theorem_qgt2,
)

TRIALS = 1000
SEED = 20240601


def report(num, ok, detail):
    line = f"[acceptance {num}] {'PASS' if ok else 'FAIL'}: {detail}"
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print("\n" + line)
    else:
        print(line)


_CAPSYS = None


@pytest.fixture(autouse=True)
def _expose_capsys(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _pairs(rep):
    return {(e["c"], tuple(e["W"])) for e in rep.exceptions}


def _forced(q, n, relation):
    return {(c, tuple(w for w in range(n + 1) if (m >> w) & 1)) for c, m in forced_exceptions(q, n, relation)}


# -- 1: all (c, W) over GF(2) ------------------------------------------------------------------------------------


@functools.lru_cache(None)
def criterion_1():
    rows = []
    for n in range(2, 15):
        found = _pairs(verify_theorem_q2(n))
        seven = {(c, tuple(W.elements())) for c, W in ExceptionTable.instantiate(n)}
        rows.append((n, found, seven, _forced(2, n, Relation.EQUAL)))
    return rows


@pytest.mark.xfail(strict=True, reason="(1, {}) never has a witness: the empty sum is 0")
def test_criterion_1_literal():
    rows = criterion_1()
    extra = sorted({p for _, found, seven, _ in rows for p in found ^ seven})
    ok = all(found == seven for _, found, seven, _ in rows)
    report(1, ok, f"n=2..14 no-witness set vs seven listed exceptions; symmetric difference {extra}")
    assert ok


def test_criterion_1_corrected():
    for n, found, seven, forced in criterion_1():
        assert found == seven | forced, n
        assert found - seven == {(1, ())}, n


# -- 2: singleton W over GF(2) -------------------------------------------------------------------------------------


@functools.lru_cache(None)
def criterion_2():
    bad = []
    for n in range(2, 17):
        rep = verify_hansen_mullen_q2(n)
        want = {(0, (0,))} | ({(0, (1,))} if n == 2 else set())
        if _pairs(rep) != want or not rep.match:
            bad.append(n)
    return bad


def test_criterion_2():
    bad = criterion_2()
    report(2, not bad, f"n=2..16 singleton exceptions are (w,c)=(0,0) plus (1,0) at n=2; mismatched n: {bad}")
    assert not bad


# -- 3: q > 2, relation "not equal" ------------------------------------------------------------------------------

QGT2 = [(q, n) for q in (3, 4, 5, 7, 8, 9) for n in (2, 3, 4)]


@functools.lru_cache(None)
def criterion_3():
    return [(q, n, _pairs(verify_theorem_qgt2(q, n)), _forced(q, n, Relation.NOT_EQUAL)) for q, n in QGT2]


@pytest.mark.xfail(strict=True, reason="(0, {}) and (1, {n}) are forced: S_W(P) is constant for W = {} and W = {n}")
def test_criterion_3_literal():
    rows = criterion_3()
    failing = [(q, n, sorted(found)) for q, n, found, _ in rows if found]
    report(3, not failing, f"{len(rows)} (q,n) cases; cases with failures: {len(failing)}, e.g. {failing[:1]}")
    assert not failing


def test_criterion_3_corrected():
    for q, n, found, forced in criterion_3():
        assert found == forced == {(0, ()), (1, (n,))}, (q, n)


# -- 4: maximal period of delta_S -----------------------------------------------------------------------------------

DELTA_RANGES = [(2, n) for n in range(2, 15)] + [(3, n) for n in range(2, 8)] + [(q, n) for q in (4, 5) for n in range(2, 6)]


@functools.lru_cache(None)
def criterion_4():
    problems = []
    checked = 0
    for q, n in DELTA_RANGES:
        res = check_delta_periods(q, n)
        checked += res["checked"]
        if res["violations"]:
            problems.append((q, n, res["violations"][:3]))
        excl = res["excluded_periods"]
        if q == 3 and excl["0 %d" % n] >= res["N"]:
            problems.append((q, n, "{0,n} reaches the maximum"))
        if q == 2 and excl[" ".join(map(str, range(n)))] >= res["N"]:
            problems.append((q, n, "[0,n-1] reaches the maximum"))
    if least_period(delta_fn(3, 2, [0, 2])) != 4:
        problems.append((3, 2, "least period of delta_{0,2} is not 4"))
    return checked, problems


def test_criterion_4():
    checked, problems = criterion_4()
    report(4, not problems, f"{checked} admissible S maximal; excluded sets fall short; delta_{{0,2}} period 4 (q=3,n=2); problems: {problems}")
    assert not problems


# -- 5: sigma_w against the transform of delta_w -----------------------------------------------------------------


@functools.lru_cache(None)
def criterion_5():
    cases = [(2, n) for n in range(1, 9)] + [(3, n) for n in range(1, 6)]
    results = [check_sigma_dft(q, n) for q, n in cases]
    return sum(r["checked"] for r in results), sum(r["mismatches"] for r in results)


def test_criterion_5():
    checked, mismatches = criterion_5()
    report(5, mismatches == 0, f"q=2 n<=8, q=3 n<=5: {checked} (w,k) values, {mismatches} mismatches")
    assert mismatches == 0


# -- 6: DFT algebra property suite ------------------------------------------------------------------------------

DFT_TOWERS = [(2, 1, 8), (3, 1, 5), (2, 2, 4), (5, 1, 3), (7, 1, 2), (3, 2, 2), (2, 1, 6), (2, 3, 2)]


def _random_setup(rng):
    ctx = make_field(*DFT_TOWERS[int(rng.integers(len(DFT_TOWERS)))])
    N = int(rng.choice([d for d in divisors(ctx.N) if d <= 255]))
    zeta = ctx.primitive ** (ctx.N // N)
    return ctx, N, zeta


def _random_fn(rng, F, N):
    d = rng.random()
    return CyclicFn(F, np.where(rng.random(N) < d, rng.integers(0, F.order, N), 0))


@functools.lru_cache(None)
def criterion_6():
    rng = np.random.default_rng(SEED)
    failures = {"round-trip": 0, "convolution": 0, "power-Q": 0, "symmetries": 0}
    for _ in range(TRIALS):
        ctx, N, zeta = _random_setup(rng)
        f = _random_fn(rng, ctx.top, N)
        if idft(zeta, dft(zeta, f)) != f or dft(zeta, idft(zeta, f)) != f:
            failures["round-trip"] += 1
    for _ in range(TRIALS):
        ctx, N, zeta = _random_setup(rng)
        f, g = _random_fn(rng, ctx.top, N), _random_fn(rng, ctx.top, N)
        if dft(zeta, convolve(f, g)) != dft(zeta, f).pointwise(dft(zeta, g)):
            failures["convolution"] += 1
    for _ in range(TRIALS):
        ctx, N, _ = _random_setup(rng)
        f = _random_fn(rng, ctx.top, N)
        if conv_power(f, ctx.top.order) != f:
            failures["power-Q"] += 1
    for _ in range(TRIALS):
        ctx, N, _ = _random_setup(rng)
        F = ctx.top
        f = _random_fn(rng, F, N)
        r = least_period(f)
        b = CyclicFn(F, rng.integers(0, 2, N))
        ok = (
            least_period(shift(f, int(rng.integers(-2 * N, 2 * N)))) == r
            and least_period(reversal(f)) == r
            and least_period(permute(f, rng.permutation(F.order))) == r
            and least_period(complement(b)) == least_period(b)
        )
        failures["symmetries"] += not ok
    return failures


def test_criterion_6():
    failures = criterion_6()
    ok = not any(failures.values())
    report(6, ok, f"{TRIALS} trials per property at N<=255; failures {failures}")
    assert ok


# -- 7: support and period implications ---------------------------------------------------------------------------


@functools.lru_cache(None)
def criterion_7():
    return [check_connection_lemma(2, n, TRIALS, seed=SEED) for n in (3, 4, 5)]


def test_criterion_7():
    results = criterion_7()
    violations = sum(len(r["violations"]) for r in results)
    fired = [r["fired"] for r in results]
    report(7, violations == 0, f"q=2 n=3,4,5 x {TRIALS} trials; violations {violations}; implications fired {fired}")
    assert violations == 0
    assert all(v > 0 for r in fired for v in r.values())


# -- 8: soundness of the degree-n factor certificate -----------------------------------------------------------


@functools.lru_cache(None)
def criterion_8():
    rng = np.random.default_rng(SEED)
    cases = [(2, 2), (2, 3), (2, 4), (3, 2)]
    total = guaranteed = unsound = 0
    for i in range(600):
        q, n = cases[i % len(cases)]
        F = field_of_order(q)
        deg = int(rng.integers(n, 3 * n + 1))
        h = Poly(F, tuple(int(v) for v in rng.integers(0, q, deg)) + (int(rng.integers(1, q)),))
        total += 1
        if certify_factor(q, n, h).verdict == "DegreeNFactorGuaranteed":
            guaranteed += 1
            if n not in sympy_factor_degrees(h.coeffs, q):
                unsound += 1
    return total, guaranteed, unsound


def test_criterion_8():
    total, guaranteed, unsound = criterion_8()
    report(8, unsound == 0 and total >= 500,
           f"{total} random h; {guaranteed} guaranteed verdicts; {unsound} unsound against factorization")
    assert total >= 500 and guaranteed > 0 and unsound == 0


# -- 9: determinism of the CLI ---------------------------------------------------------------------------------------


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "ffdigits", "verify", "thm-q2", "--n", "2..10", *args],
                          capture_output=True, text=True, timeout=600)
    return re.sub(r'\n\s*"wall_time_ms": [^\n]*', "", proc.stdout)


@functools.lru_cache(None)
def criterion_9():
    a, b = _cli(), _cli()
    w1, w8 = _cli("--workers", "1"), _cli("--workers", "8")
    return a == b and w1 == w8 and a == w1 and len(a) > 0


def test_criterion_9():
    ok = criterion_9()
    report(9, ok, "verify thm-q2 --n 2..10: two runs and --workers 1 vs 8 identical modulo timing")
    assert ok


if __name__ == "__main__":
    for fn in (test_criterion_1_literal, test_criterion_2, test_criterion_3_literal, test_criterion_4, test_criterion_5,
               test_criterion_6, test_criterion_7, test_criterion_8, test_criterion_9):
        try:
            fn()
        except AssertionError:
            pass
