"""Command-line front end: ``ffdigits {field,verify,search,period,certify} ...``.

Exit codes: 0 success or match, 1 a legitimate negative answer (no witness,
inconclusive certificate, sweep mismatch), 2 bad usage.
"""

import argparse
import csv
from dataclasses import dataclass, fields
import io
import json
import os
import re
import shlex
import sys

from .charfun import Mode, PrescriptionSpec, delta_cap_fn, gamma_fn
from .cyclic import least_period
from .digits import delta_fn
from .errors import FFDigitsError
from .field import field_of_order, make_field
from .ntheory import factorize
from .poly import Poly, WeightSet, format_poly, irreducible_table, parse_poly, poly_to_csv
from . import verify as V

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

SWEEPS = ("thm-q2", "hm-q2", "thm-qgt2")
CHECKS = ("delta-periods", "sigma-dft", "connection")
PERIOD_FNS = ("delta", "gamma", "delta-cap")
FORMATS = ("json", "csv", "text")
DEFAULT_SEED = 20240601
DEFAULT_TRIALS = 1000


class UsageError(FFDigitsError):
    pass


# -- argument syntax -------------------------------------------------------------


def _endpoint(tok, n):
    tok = tok.strip()
    if n is not None:
        m = re.fullmatch(r"n(?:-(\d+))?", tok)
        if m:
            return n - int(m.group(1) or 0)
    if not re.fullmatch(r"\d+", tok):
        raise UsageError(f"bad integer {tok!r}")
    return int(tok)


def parse_int_set(text, n=None):
    """``"2..5,8"`` -> ``(2, 3, 4, 5, 8)``; with ``n`` given, ``n`` and ``n-k`` are accepted as endpoints."""
    out = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = _endpoint(lo, n), _endpoint(hi, n)
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            out.update(range(lo, hi + 1))
        else:
            out.add(_endpoint(part, n))
    return tuple(sorted(out))


def parse_weight_set(text, n):
    """W syntax: integers, inclusive ranges ``a..b``, ``all`` = [0,n], ``interior`` = [1,n-1], ``empty``."""
    key = text.strip().lower()
    if key == "all":
        return WeightSet.full(n)
    if key == "interior":
        return WeightSet.interval(n, 1, n - 1)
    if key in ("empty", "none", ""):
        return WeightSet(n, 0)
    elems = parse_int_set(text, n)
    bad = [w for w in elems if w > n]
    if bad:
        raise UsageError(f"weights {bad} are outside [0, {n}]")
    return WeightSet.of(n, elems)


def _fmt_ints(values):
    """Inverse of :func:`parse_int_set` for canonical output: consecutive runs become ``a..b``."""
    parts, run = [], []
    for v in values:
        if run and v == run[-1] + 1:
            run.append(v)
            continue
        if run:
            parts.append(str(run[0]) if len(run) == 1 else f"{run[0]}..{run[-1]}")
        run = [v]
    if run:
        parts.append(str(run[0]) if len(run) == 1 else f"{run[0]}..{run[-1]}")
    return ",".join(parts)


# -- config ------------------------------------------------------------------------


@dataclass(frozen=True)
class CliConfig:
    """Normalised command line; :meth:`argv` gives its canonical form."""

    command: str
    target: str = ""
    q: tuple = ()
    n: tuple = ()
    W: str = ""
    c: int = 0
    relation: str = "eq"
    poly: str = ""
    out: str = ""
    format: str = "json"
    workers: int = 1
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    cross_check: bool = False

    @classmethod
    def from_namespace(cls, ns):
        kw = {f.name: getattr(ns, f.name) for f in fields(cls) if getattr(ns, f.name, None) is not None}
        for key in ("q", "n"):
            if key in kw and isinstance(kw[key], str):
                kw[key] = parse_int_set(kw[key])
        if "W" in kw:
            kw["W"] = kw["W"].strip()
        if "workers" not in kw or kw["workers"] < 1:
            kw["workers"] = os.cpu_count() or 1
        return cls(**kw)

    def argv(self):
        args = [self.command] + ([self.target] if self.target else [])
        if self.q:
            args += ["--q", _fmt_ints(self.q)]
        if self.n:
            args += ["--n", _fmt_ints(self.n)]
        if self.command in ("search", "period"):
            args += ["--W", self.W, "--c", str(self.c)]
        if self.command == "search":
            args += ["--relation", self.relation]
        if self.command == "certify":
            args += ["--poly", self.poly]
            if self.cross_check:
                args.append("--cross-check")
        if self.command in ("verify", "certify", "period", "field"):
            args += ["--format", self.format]
            if self.out:
                args += ["--out", self.out]
        if self.command == "verify":
            args += ["--workers", str(self.workers), "--seed", str(self.seed), "--trials", str(self.trials)]
        return args

    def canonical(self):
        return shlex.join(self.argv())


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ffdigits",
        description="Digit sums of irreducible polynomials over finite fields: sweeps, witnesses, periods.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = sub.add_parser("field", help="describe the tower GF(p) <= GF(q) <= GF(q^n)")
    p.add_argument("--q", required=True)
    p.add_argument("--n", default="1")
    add_output(p)

    p = sub.add_parser("verify", help="exhaustive sweeps and randomized checks")
    p.add_argument("target", choices=SWEEPS + CHECKS)
    p.add_argument("--q", default=None, help="field order(s), e.g. 3,4,5 (default 2)")
    p.add_argument("--n", required=True, help="degree(s), e.g. 2..10")
    p.add_argument("--workers", type=int, default=None, help="process pool size (default: all cores)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    add_output(p)

    p = sub.add_parser("search", help="first irreducible with S_W(P) related to c")
    p.add_argument("--q", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--W", required=True, help="e.g. 0,2 or 1..n-1 or all or interior")
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--relation", choices=("eq", "ne"), default="eq")

    p = sub.add_parser("period", help="least period of delta_W, gamma or Delta")
    p.add_argument("target", choices=PERIOD_FNS)
    p.add_argument("--q", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--W", required=True)
    p.add_argument("--c", type=int, default=0)
    add_output(p)

    p = sub.add_parser("certify", help="period certificate for a degree-n irreducible factor")
    p.add_argument("--q", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--poly", required=True, help='"1,1,0,1" or "x^3+x+1"')
    p.add_argument("--cross-check", action="store_true", dest="cross_check",
                   help="also factor h and record the answer")
    add_output(p)
    return ap


def _single(values, name):
    if len(values) != 1:
        raise UsageError(f"--{name} takes a single value here")
    return values[0]


# -- emitters ----------------------------------------------------------------------


def _dump_json(payload):
    return json.dumps(payload, indent=2) + "\n"


def _dump_csv(rows, header):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _emit(cfg, text):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------------


def cmd_field(cfg):
    q = _single(cfg.q, "q")
    n = _single(cfg.n or (1,), "n")
    (p, s), = factorize(q)
    ctx = make_field(p, s, n)
    mods = []
    for lvl in (l for l in ctx.levels[1:] if l.degree > 1):
        mods.append({"order": lvl.order, "modulus": format_poly(Poly(lvl.base, lvl.modulus))})
    info = {
        "p": p, "s": s, "q": q, "n": n, "order": ctx.top.order,
        "moduli": mods,
        "primitive": str(ctx.primitive),
        "irreducibles": int(irreducible_table(field_of_order(q), n).shape[0]) if n > 1 else q,
    }
    if cfg.format == "json":
        _emit(cfg, _dump_json(info))
    elif cfg.format == "csv":
        _emit(cfg, _dump_csv([{k: v for k, v in info.items() if k != "moduli"}],
                             ["p", "s", "q", "n", "order", "primitive", "irreducibles"]))
    else:
        lines = [f"GF({ctx.top.order}) = GF({q})^{n}, p={p}"]
        lines += [f"  GF({m['order']}): modulus {m['modulus']}" for m in mods]
        lines.append(f"  primitive element: {info['primitive']}")
        lines.append(f"  monic irreducibles of degree {n}: {info['irreducibles']}")
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _run_sweep(target, q, n, workers):
    if target == "thm-q2":
        return V.verify_theorem_q2(n, workers=workers)
    if target == "hm-q2":
        return V.verify_hansen_mullen_q2(n, workers=workers)
    return V.verify_theorem_qgt2(q, n, workers=workers)


def _run_check(target, q, n, cfg):
    if target == "delta-periods":
        res = V.check_delta_periods(q, n)
        return res, not res["violations"]
    if target == "sigma-dft":
        res = V.check_sigma_dft(q, n)
        return res, res["mismatches"] == 0
    res = V.check_connection_lemma(q, n, cfg.trials, seed=cfg.seed)
    return res, not res["violations"]


def cmd_verify(cfg):
    if not cfg.n or min(cfg.n) < 2:
        raise UsageError("n >= 2 required")
    qs = cfg.q or (2,)
    if cfg.target in ("thm-q2", "hm-q2") and qs != (2,):
        raise UsageError(f"{cfg.target} is a GF(2) sweep")
    if cfg.target == "thm-qgt2" and min(qs) <= 2:
        raise UsageError("thm-qgt2 needs q > 2")
    for q in qs:
        if q < 2 or len(factorize(q)) != 1:
            raise UsageError(f"{q} is not a prime power")

    if cfg.target in SWEEPS:
        reports = [_run_sweep(cfg.target, q, n, cfg.workers) for q in qs for n in cfg.n]
        ok = all(r.match for r in reports)
        if cfg.format == "json":
            text = _dump_json({"command": cfg.target, "match": ok, "reports": [r.to_json() for r in reports]})
        elif cfg.format == "csv":
            rows = [row for r in reports for row in r.csv_rows()]
            text = _dump_csv(rows, ["q", "n", "c", "W", "witness"])
        else:
            lines = []
            for r in reports:
                found = " ".join(f"({e['c']},{{{','.join(map(str, e['W']))}}})" for e in r.exceptions)
                lines.append(f"q={r.q} n={r.n} {'match' if r.match else 'MISMATCH'}: "
                             f"{r.counts['irreducibles']} irreducibles, no-witness {found or '-'}")
                if not r.match:
                    want = {(e["c"], tuple(e["W"])) for e in r.expected_exceptions}
                    got = {(e["c"], tuple(e["W"])) for e in r.exceptions}
                    lines.append(f"  unexpected: {sorted(got - want)}  missing: {sorted(want - got)}")
            text = "\n".join(lines) + "\n"
        _emit(cfg, text)
        return EXIT_OK if ok else EXIT_NEGATIVE

    results = []
    ok = True
    for q in qs:
        for n in cfg.n:
            res, good = _run_check(cfg.target, q, n, cfg)
            res["ok"] = good
            ok &= good
            results.append(res)
    if cfg.format == "json":
        text = _dump_json({"command": cfg.target, "ok": ok, "results": results})
    elif cfg.format == "csv":
        scalar = [k for k, v in results[0].items() if not isinstance(v, (dict, list))]
        text = _dump_csv([{k: r[k] for k in scalar} for r in results], scalar)
    else:
        text = "".join(
            f"q={r['q']} n={r['n']} {'ok' if r['ok'] else 'VIOLATIONS'}: "
            + ", ".join(f"{k}={v}" for k, v in r.items() if k not in ("q", "n", "ok") and not isinstance(v, dict))
            + "\n"
            for r in results
        )
    _emit(cfg, text)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_search(cfg):
    q, n = _single(cfg.q, "q"), _single(cfg.n, "n")
    if n < 2:
        raise UsageError("n >= 2 required")
    W = parse_weight_set(cfg.W, n)
    P = V.search_witness(q, n, W, cfg.c, V.Relation(cfg.relation))
    if P is None:
        print("NONE (exhausted)")
        return EXIT_NEGATIVE
    print(format_poly(P))
    print(poly_to_csv(P))
    return EXIT_OK


def cmd_period(cfg):
    q, n = _single(cfg.q, "q"), _single(cfg.n, "n")
    if n < 1:
        raise UsageError("n >= 1 required")
    W = parse_weight_set(cfg.W, n)
    if cfg.target == "delta":
        fn = delta_fn(q, n, W)
    else:
        mode = Mode.AVOID_VALUE if cfg.target == "gamma" else Mode.HIT_VALUE
        spec = PrescriptionSpec(q, n, W, cfg.c, mode)
        fn = gamma_fn(spec) if cfg.target == "gamma" else delta_cap_fn(spec)
    r = least_period(fn)
    info = {"function": cfg.target, "q": q, "n": n, "W": W.elements(), "c": cfg.c,
            "N": fn.N, "least_period": r}
    if cfg.format == "json":
        _emit(cfg, _dump_json(info))
    elif cfg.format == "csv":
        info["W"] = " ".join(map(str, info["W"]))
        _emit(cfg, _dump_csv([info], list(info)))
    else:
        _emit(cfg, f"{r}\n")
    return EXIT_OK


def cmd_certify(cfg):
    q, n = _single(cfg.q, "q"), _single(cfg.n, "n")
    if n < 2:
        raise UsageError("n >= 2 required")
    try:
        h = parse_poly(cfg.poly, field_of_order(q))
    except ValueError as exc:
        raise UsageError(f"bad polynomial: {exc}") from None
    cert = V.certify_factor(q, n, h, cross_check=cfg.cross_check)
    info = cert.to_json()
    if cfg.format == "json":
        _emit(cfg, _dump_json(info))
    elif cfg.format == "csv":
        _emit(cfg, _dump_csv([info], list(info)))
    else:
        extra = "" if cert.cross_check is None else f" (factorization: {'yes' if cert.cross_check else 'no'})"
        _emit(cfg, f"{cert.verdict}: r={cert.least_period} threshold={cert.threshold}{extra}\n")
    return EXIT_OK if cert.verdict == "DegreeNFactorGuaranteed" else EXIT_NEGATIVE


COMMANDS = {
    "field": cmd_field,
    "verify": cmd_verify,
    "search": cmd_search,
    "period": cmd_period,
    "certify": cmd_certify,
}


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = CliConfig.from_namespace(ns)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, FFDigitsError, ValueError) as exc:
        print(f"ffdigits {ns.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
