"""The numba kernels and the numpy fallback must agree bit for bit."""

import json
import os
import subprocess
import sys

import pytest

PROBE = r"""
import json
import numpy as np
from ffdigits import backend_name, kernels, make_field
from ffdigits.cyclic import CyclicFn, conv_power, dft, idft, least_period
from ffdigits.digits import delta_labels
from ffdigits.ntheory import divisors
from ffdigits.poly import irreducible_table
from ffdigits.verify import check_connection_lemma, check_delta_periods, certify_factor, verify_theorem_q2, verify_theorem_qgt2
from ffdigits.field import field_of_order
from ffdigits.poly import parse_poly

rng = np.random.default_rng(5)
out = {"backend": backend_name()}
out["tables"] = {f"{q},{n}": irreducible_table(q, n).tolist() for q, n in [(2, 8), (3, 4), (4, 3), (9, 2), (8, 2)]}
for tower in [(2, 1, 6), (3, 2, 2), (5, 1, 2)]:
    ctx = make_field(*tower)
    vals = rng.integers(0, ctx.top.order, ctx.N)
    f = CyclicFn(ctx.top, vals)
    g = dft(ctx.primitive, f)
    out[f"dft{tower}"] = g.values.tolist()
    out[f"idft{tower}"] = idft(ctx.primitive, g).values.tolist()
    out[f"conv{tower}"] = conv_power(f, 5).values.tolist()
    # The table-free kernels, which larger fields use.
    fk = ctx.top.kernel_params()
    out[f"dft-generic{tower}"] = kernels.dft(vals, ctx.primitive.code, fk).tolist()
    out[f"conv-generic{tower}"] = kernels.convolve(vals, vals, fk).tolist()
    assert out[f"dft-generic{tower}"] == out[f"dft{tower}"]
    a = rng.integers(0, ctx.top.order, 300)
    b = rng.integers(0, ctx.top.order, 300)
    out[f"mul{tower}"] = ctx.top.mul_vec(a, b).tolist()
    out[f"add{tower}"] = ctx.top.add_vec(a, b).tolist()
out["q2"] = verify_theorem_q2(7).exceptions
out["qgt2"] = verify_theorem_qgt2(4, 2).exceptions
out["periods"] = check_delta_periods(3, 4)["excluded_periods"]
out["lp"] = [least_period(CyclicFn(make_field(2).base, np.tile([1, 0, 0], 5)))]
out["conn"] = check_connection_lemma(2, 4, 100)["fired"]
out["cert"] = certify_factor(2, 4, parse_poly("x^8+x^4+x^3+x+1", field_of_order(2))).least_period
print(json.dumps(out))
"""


def probe(no_numba):
    env = dict(os.environ, FFDIGITS_NO_NUMBA="1" if no_numba else "0")
    proc = subprocess.run([sys.executable, "-c", PROBE], env=env, capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout.strip().splitlines()[-1])


@pytest.fixture(scope="module")
def both():
    return probe(False), probe(True)


def test_fallback_is_selected(both):
    fast, slow = both
    assert slow["backend"] == "numpy"
    assert fast["backend"] in ("numba", "numpy")


def test_backends_agree(both):
    fast, slow = both
    fast.pop("backend"), slow.pop("backend")
    assert fast.keys() == slow.keys()
    for key in fast:
        assert fast[key] == slow[key], key
