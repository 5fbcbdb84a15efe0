"""Hot inner loops, compiled with numba when available.

Every public function here has two implementations: a ``_nb_*`` kernel
compiled with ``@njit`` and a ``_np_*`` vectorised numpy version. Which one
runs is fixed at import time by :mod:`ffdigits._accel`; the benchmark in
``benchmarks/bench_kernels.py`` times both.

Field elements are passed around as integer codes. A code of an element of
an extension of degree ``n`` over a base field of order ``q`` is
``sum(a_i * q**i)`` where ``a_i`` are the base codes of its coefficients.
Because the base codes nest the same way down to the prime field, a code is
also the base-``p`` number whose ``D = s*n`` digits are the prime-field
coordinates, so addition is digitwise mod ``p``.

The field parameter tuple ``fk`` is

    (p, D, q, n, addt, mult, negt, modc, modmask)

with ``addt``/``mult``/``negt`` the tables of the base field of order ``q``,
``modc`` the monic modulus (length ``n + 1``, base codes) and ``modmask`` the
modulus as a bit mask when ``q == 2`` (else 0).
"""

import numpy as np

from ._accel import NUMBA_ENABLED, njit

# Irreducibility scans first discard candidates with a root in GF(q) for q up to this.
ROOT_FILTER_MAX_Q = 64

# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------


@njit(cache=True)
def _nb_add(a, b, p, D):
    if p == 2:
        return a ^ b
    r = 0
    pw = 1
    for _ in range(D):
        if a == 0 and b == 0:
            break
        r += ((a % p + b % p) % p) * pw
        a //= p
        b //= p
        pw *= p
    return r


@njit(cache=True)
def _nb_neg(a, p, D):
    if p == 2:
        return a
    r = 0
    pw = 1
    for _ in range(D):
        if a == 0:
            break
        r += ((p - a % p) % p) * pw
        a //= p
        pw *= p
    return r


@njit(cache=True)
def _nb_mul(a, b, fk):
    p, D, q, n, addt, mult, negt, modc, modmask = fk
    if a == 0 or b == 0:
        return 0
    if n == 1:
        return mult[a, b]
    if q == 2:
        r = 0
        top = 1 << n
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= modmask
        return r
    da = np.zeros(n, np.int64)
    db = np.zeros(n, np.int64)
    for i in range(n):
        da[i] = a % q
        a //= q
        db[i] = b % q
        b //= q
    prod = np.zeros(2 * n - 1, np.int64)
    for i in range(n):
        ai = da[i]
        if ai == 0:
            continue
        for j in range(n):
            bj = db[j]
            if bj != 0:
                prod[i + j] = addt[prod[i + j], mult[ai, bj]]
    for k in range(2 * n - 2, n - 1, -1):
        lead = prod[k]
        if lead == 0:
            continue
        for t in range(n):
            c = modc[t]
            if c != 0:
                prod[k - n + t] = addt[prod[k - n + t], negt[mult[lead, c]]]
    r = 0
    for i in range(n - 1, -1, -1):
        r = r * q + prod[i]
    return r


@njit(cache=True)
def _nb_pow(a, e, fk):
    r = 1
    while e > 0:
        if e & 1:
            r = _nb_mul(r, a, fk)
        a = _nb_mul(a, a, fk)
        e >>= 1
    return r


@njit(cache=True)
def _nb_mul_vec(a, b, fk):
    out = np.empty(a.shape[0], np.int64)
    for i in range(a.shape[0]):
        out[i] = _nb_mul(a[i], b[i], fk)
    return out


@njit(cache=True)
def _nb_add_vec(a, b, fk):
    p = fk[0]
    D = fk[1]
    out = np.empty(a.shape[0], np.int64)
    for i in range(a.shape[0]):
        out[i] = _nb_add(a[i], b[i], p, D)
    return out


@njit(cache=True)
def _nb_neg_vec(a, fk):
    p = fk[0]
    D = fk[1]
    out = np.empty(a.shape[0], np.int64)
    for i in range(a.shape[0]):
        out[i] = _nb_neg(a[i], p, D)
    return out


@njit(cache=True)
def _nb_powers(z, count, fk):
    out = np.empty(count, np.int64)
    acc = 1
    for i in range(count):
        out[i] = acc
        acc = _nb_mul(acc, z, fk)
    return out


@njit(cache=True)
def _nb_dft(vals, zeta, fk):
    p = fk[0]
    D = fk[1]
    N = vals.shape[0]
    out = np.empty(N, np.int64)
    w = 1
    for i in range(N):
        acc = 0
        pw = 1
        for j in range(N):
            v = vals[j]
            if v != 0:
                acc = _nb_add(acc, _nb_mul(v, pw, fk), p, D)
            pw = _nb_mul(pw, w, fk)
        out[i] = acc
        w = _nb_mul(w, zeta, fk)
    return out


@njit(cache=True)
def _nb_dft_at(vals, zeta, i, fk):
    p = fk[0]
    D = fk[1]
    w = _nb_pow(zeta, i, fk)
    acc = 0
    pw = 1
    for j in range(vals.shape[0]):
        v = vals[j]
        if v != 0:
            acc = _nb_add(acc, _nb_mul(v, pw, fk), p, D)
        pw = _nb_mul(pw, w, fk)
    return acc


@njit(cache=True)
def _nb_dft_tab(vals, zp, addt, mult):
    # Table-driven transform: zp[k] = zeta^k, addt/mult are full tables of the value field.
    N = vals.shape[0]
    out = np.zeros(N, np.int64)
    for i in range(N):
        acc = 0
        k = 0
        for j in range(N):
            v = vals[j]
            if v != 0:
                acc = addt[acc, mult[v, zp[k]]]
            k += i
            if k >= N:
                k -= N
        out[i] = acc
    return out


@njit(cache=True)
def _nb_convolve_tab(f, g, addt, mult):
    N = f.shape[0]
    out = np.zeros(N, np.int64)
    for j in range(N):
        a = f[j]
        if a == 0:
            continue
        for k in range(N):
            b = g[k]
            if b != 0:
                idx = j + k
                if idx >= N:
                    idx -= N
                out[idx] = addt[out[idx], mult[a, b]]
    return out


@njit(cache=True)
def _nb_convolve(f, g, fk):
    p = fk[0]
    D = fk[1]
    N = f.shape[0]
    out = np.zeros(N, np.int64)
    for j in range(N):
        a = f[j]
        if a == 0:
            continue
        for k in range(N):
            b = g[k]
            if b != 0:
                idx = j + k
                if idx >= N:
                    idx -= N
                out[idx] = _nb_add(out[idx], _nb_mul(a, b, fk), p, D)
    return out


@njit(cache=True)
def _nb_is_period(vals, r):
    N = vals.shape[0]
    for i in range(N - r):
        if vals[i] != vals[i + r]:
            return False
    return True


@njit(cache=True)
def _nb_least_period(vals, divs):
    for d in divs:
        if _nb_is_period(vals, d):
            return d
    return vals.shape[0]


@njit(cache=True)
def _nb_delta_periods(labels, masks, divs):
    N = labels.shape[0]
    out = np.empty(masks.shape[0], np.int64)
    for m in range(masks.shape[0]):
        mask = masks[m]
        result = N
        for d in divs:
            ok = True
            for i in range(N - d):
                if ((mask >> labels[i]) & 1) != ((mask >> labels[i + d]) & 1):
                    ok = False
                    break
            if ok:
                result = d
                break
        out[m] = result
    return out


@njit(cache=True)
def _nb_first_hits(coefs, masks, addt, q):
    # coefs: (M, n+1) base codes, row order = enumeration order.
    M = coefs.shape[0]
    width = coefs.shape[1]
    out = np.full((masks.shape[0], q), -1, np.int64)
    for m in range(masks.shape[0]):
        mask = masks[m]
        found = 0
        for i in range(M):
            s = 0
            for w in range(width):
                if (mask >> w) & 1:
                    s = addt[s, coefs[i, w]]
            if out[m, s] < 0:
                out[m, s] = i
                found += 1
                if found == q:
                    break
    return out


@njit(cache=True)
def _nb_poly_mulmod_into(a, b, f, out, prod, addt, mult, negt):
    # out <- a*b mod monic f (len n+1); a, b, out have length n, prod is 2n-1 scratch.
    n = f.shape[0] - 1
    prod[:] = 0
    for i in range(n):
        if a[i] == 0:
            continue
        for j in range(n):
            if b[j] != 0:
                prod[i + j] = addt[prod[i + j], mult[a[i], b[j]]]
    for k in range(2 * n - 2, n - 1, -1):
        lead = prod[k]
        if lead == 0:
            continue
        for t in range(n):
            if f[t] != 0:
                prod[k - n + t] = addt[prod[k - n + t], negt[mult[lead, f[t]]]]
    out[:] = prod[:n]


@njit(cache=True)
def _nb_poly_frob_into(g, f, q, out, tmp, prod, addt, mult, negt):
    # out <- g**q mod f, left-to-right square-and-multiply (the leading bit costs nothing).
    top = 1
    while top * 2 <= q:
        top *= 2
    out[:] = g
    bit = top // 2
    while bit > 0:
        _nb_poly_mulmod_into(out, out, f, tmp, prod, addt, mult, negt)
        if q & bit:
            _nb_poly_mulmod_into(tmp, g, f, out, prod, addt, mult, negt)
        else:
            out[:] = tmp
        bit //= 2


@njit(cache=True)
def _nb_poly_gcd_is_one(a, f, addt, mult, negt, invt):
    # gcd(a, f) == 1 with a of length n (deg < n), f monic of degree n.
    n = f.shape[0] - 1
    u = f.copy()
    v = np.zeros(n + 1, np.int64)
    v[:n] = a
    du = n
    dv = n - 1
    while dv >= 0 and v[dv] == 0:
        dv -= 1
    while dv >= 0:
        # u <- u mod v
        inv_lead = invt[v[dv]]
        while du >= dv:
            c = mult[u[du], inv_lead]
            if c != 0:
                shift = du - dv
                for t in range(dv + 1):
                    if v[t] != 0:
                        u[t + shift] = addt[u[t + shift], negt[mult[c, v[t]]]]
            du -= 1
            while du >= 0 and u[du] == 0:
                du -= 1
        u, v = v, u
        du, dv = dv, du
    return du == 0


@njit(cache=True)
def _nb_has_root(f, q, addt, mult):
    n = f.shape[0] - 1
    for a in range(q):
        acc = f[n]
        for i in range(n - 1, -1, -1):
            acc = addt[mult[acc, a], f[i]]
        if acc == 0:
            return True
    return False


@njit(cache=True)
def _nb_irreducible_flags(cands, q, addt, mult, negt, invt, cofactors):
    # cands: (M, n+1) monic candidates; cofactors: n // l for primes l | n.
    M = cands.shape[0]
    n = cands.shape[1] - 1
    out = np.zeros(M, np.bool_)
    x = np.zeros(n, np.int64)
    if n > 1:
        x[1] = 1
    pows = np.zeros((n + 1, n), np.int64)
    tmp = np.zeros(n, np.int64)
    prod = np.zeros(max(2 * n - 1, 1), np.int64)
    for m in range(M):
        f = cands[m]
        if n == 1:
            out[m] = True
            continue
        if f[0] == 0 or (q <= ROOT_FILTER_MAX_Q and _nb_has_root(f, q, addt, mult)):
            continue
        pows[0] = x
        for k in range(1, n + 1):
            _nb_poly_frob_into(pows[k - 1], f, q, pows[k], tmp, prod, addt, mult, negt)
        ok = True
        for t in range(n):
            if pows[n, t] != x[t]:
                ok = False
                break
        if not ok:
            continue
        for c in cofactors:
            diff = pows[c].copy()
            diff[1] = addt[diff[1], negt[1]]
            if not _nb_poly_gcd_is_one(diff, f, addt, mult, negt, invt):
                ok = False
                break
        out[m] = ok
    return out


# ---------------------------------------------------------------------------
# numpy fallbacks
# ---------------------------------------------------------------------------


def _np_prime_digits(a, p, D):
    a = np.asarray(a, dtype=np.int64)
    digits = np.empty(a.shape + (D,), np.int64)
    rest = a.copy()
    for k in range(D):
        digits[..., k] = rest % p
        rest //= p
    return digits


def _np_from_prime_digits(digits, p):
    D = digits.shape[-1]
    out = np.zeros(digits.shape[:-1], np.int64)
    for k in range(D - 1, -1, -1):
        out = out * p + digits[..., k]
    return out


def _np_add_vec(a, b, fk):
    p, D = fk[0], fk[1]
    a = np.asarray(a, np.int64)
    b = np.asarray(b, np.int64)
    if p == 2:
        return a ^ b
    return _np_from_prime_digits((_np_prime_digits(a, p, D) + _np_prime_digits(b, p, D)) % p, p)


def _np_neg_vec(a, fk):
    p, D = fk[0], fk[1]
    a = np.asarray(a, np.int64)
    if p == 2:
        return a.copy()
    return _np_from_prime_digits((-_np_prime_digits(a, p, D)) % p, p)


def _np_sum(a, fk):
    p, D = fk[0], fk[1]
    a = np.asarray(a, np.int64)
    if a.size == 0:
        return 0
    if p == 2:
        return int(np.bitwise_xor.reduce(a))
    return int(_np_from_prime_digits(_np_prime_digits(a, p, D).sum(axis=0) % p, p))


def _np_mul_vec(a, b, fk):
    p, D, q, n, addt, mult, negt, modc, modmask = fk
    a = np.asarray(a, np.int64)
    b = np.asarray(b, np.int64)
    a, b = np.broadcast_arrays(a, b)
    if n == 1:
        return mult[a, b]
    if q == 2:
        r = np.zeros(a.shape, np.int64)
        x = a.copy()
        top = 1 << n
        for bit in range(n):
            sel = ((b >> bit) & 1).astype(bool)
            r[sel] ^= x[sel]
            x <<= 1
            over = (x & top) != 0
            x[over] ^= modmask
        return r
    da = np.empty(a.shape + (n,), np.int64)
    db = np.empty(b.shape + (n,), np.int64)
    ra, rb = a.copy(), b.copy()
    for i in range(n):
        da[..., i] = ra % q
        ra //= q
        db[..., i] = rb % q
        rb //= q
    prod = np.zeros(a.shape + (2 * n - 1,), np.int64)
    for i in range(n):
        for j in range(n):
            prod[..., i + j] = addt[prod[..., i + j], mult[da[..., i], db[..., j]]]
    for k in range(2 * n - 2, n - 1, -1):
        lead = prod[..., k]
        for t in range(n):
            prod[..., k - n + t] = addt[prod[..., k - n + t], negt[mult[lead, modc[t]]]]
    out = np.zeros(a.shape, np.int64)
    for i in range(n - 1, -1, -1):
        out = out * q + prod[..., i]
    return out


def _np_pow(a, e, fk):
    r = np.int64(1)
    base = np.int64(a)
    while e > 0:
        if e & 1:
            r = _np_mul_vec(r, base, fk)[()]
        base = _np_mul_vec(base, base, fk)[()]
        e >>= 1
    return int(r)


def _np_powers(z, count, fk):
    out = np.empty(count, np.int64)
    # Doubling: powers [0, k) times z^k gives [k, 2k).
    if count == 0:
        return out
    out[0] = 1
    filled = 1
    step = int(z)
    while filled < count:
        take = min(filled, count - filled)
        out[filled : filled + take] = _np_mul_vec(out[:take], step, fk)
        filled += take
        step = int(_np_mul_vec(step, step, fk)[()])
    return out


def _np_dft(vals, zeta, fk):
    N = vals.shape[0]
    zp = _np_powers(zeta, N, fk)
    j = np.arange(N, dtype=np.int64)
    nz = vals != 0
    vj, jj = vals[nz], j[nz]
    out = np.empty(N, np.int64)
    for i in range(N):
        out[i] = _np_sum(_np_mul_vec(vj, zp[(i * jj) % N], fk), fk)
    return out


def _np_dft_at(vals, zeta, i, fk):
    N = vals.shape[0]
    w = _np_pow(zeta, i, fk)
    wp = _np_powers(w, N, fk)
    return _np_sum(_np_mul_vec(vals, wp, fk), fk)


def _np_reduce_tab(terms, addt):
    # Fold the columns of a 2-d array of codes with the addition table.
    acc = np.zeros(terms.shape[0], np.int64)
    for j in range(terms.shape[1]):
        acc = addt[acc, terms[:, j]]
    return acc


def _np_dft_tab(vals, zp, addt, mult):
    N = vals.shape[0]
    nz = np.nonzero(vals)[0]
    if nz.shape[0] == 0:
        return np.zeros(N, np.int64)
    idx = (np.arange(N, dtype=np.int64)[:, None] * nz[None, :]) % N
    return _np_reduce_tab(mult[vals[nz][None, :], zp[idx]], addt)


def _np_convolve_tab(f, g, addt, mult):
    N = f.shape[0]
    nz = np.nonzero(f)[0]
    if nz.shape[0] == 0:
        return np.zeros(N, np.int64)
    # Row i collects f(j) g(i - j) over the support of f.
    idx = (np.arange(N, dtype=np.int64)[:, None] - nz[None, :]) % N
    return _np_reduce_tab(mult[f[nz][None, :], g[idx]], addt)


def _np_convolve(f, g, fk):
    N = f.shape[0]
    out = np.zeros(N, np.int64)
    k = np.arange(N, dtype=np.int64)
    for j in np.nonzero(f)[0]:
        terms = _np_mul_vec(f[j], g, fk)
        idx = (j + k) % N
        out[idx] = _np_add_vec(out[idx], terms, fk)
    return out


def _np_least_period(vals, divs):
    for d in divs:
        if np.array_equal(vals[:-d] if d < vals.shape[0] else vals[:0], vals[d:]):
            return int(d)
    return int(vals.shape[0])


def _np_delta_periods(labels, masks, divs):
    out = np.empty(masks.shape[0], np.int64)
    for m, mask in enumerate(masks):
        bits = (np.int64(mask) >> labels) & 1
        out[m] = _np_least_period(bits, divs)
    return out


def _np_first_hits(coefs, masks, addt, q):
    M, width = coefs.shape
    out = np.full((masks.shape[0], q), -1, np.int64)
    order = np.arange(M, dtype=np.int64)
    for m, mask in enumerate(masks):
        s = np.zeros(M, np.int64)
        for w in range(width):
            if (int(mask) >> w) & 1:
                s = addt[s, coefs[:, w]]
        vals, first = np.unique(s, return_index=True)
        out[m, vals] = order[first]
    return out


def _np_poly_mulmod_batch(a, b, f, addt, mult, negt):
    # Row-wise a*b mod f for (M, n) arrays with per-row monic moduli f (M, n+1).
    n = f.shape[1] - 1
    M = a.shape[0]
    prod = np.zeros((M, 2 * n - 1), np.int64)
    for i in range(n):
        for j in range(n):
            prod[:, i + j] = addt[prod[:, i + j], mult[a[:, i], b[:, j]]]
    for k in range(2 * n - 2, n - 1, -1):
        lead = prod[:, k]
        for t in range(n):
            prod[:, k - n + t] = addt[prod[:, k - n + t], negt[mult[lead, f[:, t]]]]
    return prod[:, :n]


def _np_poly_frob_batch(g, f, q, addt, mult, negt):
    n = f.shape[1] - 1
    r = np.zeros_like(g)
    r[:, 0] = 1
    base = g.copy()
    e = q
    while e > 0:
        if e & 1:
            r = _np_poly_mulmod_batch(r, base, f, addt, mult, negt)
        e >>= 1
        if e > 0:
            base = _np_poly_mulmod_batch(base, base, f, addt, mult, negt)
    return r


def _py_gcd_is_one(a, f, addt, mult, negt, invt):
    u = [int(c) for c in f]
    v = [int(c) for c in a]
    while u and u[-1] == 0:
        u.pop()
    while v and v[-1] == 0:
        v.pop()
    while v:
        inv_lead = int(invt[v[-1]])
        while len(u) >= len(v):
            c = int(mult[u[-1], inv_lead])
            shift = len(u) - len(v)
            for t, vt in enumerate(v):
                u[t + shift] = int(addt[u[t + shift], negt[mult[c, vt]]])
            while u and u[-1] == 0:
                u.pop()
        u, v = v, u
    return len(u) == 1


def _np_irreducible_flags(cands, q, addt, mult, negt, invt, cofactors):
    M, width = cands.shape
    n = width - 1
    if n == 1:
        return np.ones(M, bool)
    out = np.zeros(M, bool)
    keep = cands[:, 0] != 0
    if q <= ROOT_FILTER_MAX_Q:
        for a in range(1, q):
            acc = cands[:, n].copy()
            for i in range(n - 1, -1, -1):
                acc = addt[mult[acc, a], cands[:, i]]
            keep &= acc != 0
    live = np.nonzero(keep)[0]
    f = cands[live]
    x = np.zeros((live.shape[0], n), np.int64)
    x[:, 1] = 1
    g = x.copy()
    pows = [x]
    for _ in range(n):
        g = _np_poly_frob_batch(g, f, q, addt, mult, negt)
        pows.append(g)
    passed = np.all(pows[n] == x, axis=1)
    for row in np.nonzero(passed)[0]:
        ok = True
        for c in cofactors:
            diff = pows[c][row].copy()
            diff[1] = addt[diff[1], negt[1]]
            if not _py_gcd_is_one(diff, f[row], addt, mult, negt, invt):
                ok = False
                break
        out[live[row]] = ok
    return out


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def _as_i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


if NUMBA_ENABLED:

    def mul_vec(a, b, fk):
        a, b = np.broadcast_arrays(_as_i64(a), _as_i64(b))
        return _nb_mul_vec(_as_i64(a.ravel()), _as_i64(b.ravel()), fk).reshape(a.shape)

    def add_vec(a, b, fk):
        a, b = np.broadcast_arrays(_as_i64(a), _as_i64(b))
        return _nb_add_vec(_as_i64(a.ravel()), _as_i64(b.ravel()), fk).reshape(a.shape)

    def neg_vec(a, fk):
        a = _as_i64(a)
        return _nb_neg_vec(a.ravel(), fk).reshape(a.shape)

    def powers(z, count, fk):
        return _nb_powers(int(z), int(count), fk)

    def dft(vals, zeta, fk):
        return _nb_dft(_as_i64(vals), int(zeta), fk)

    def dft_at(vals, zeta, i, fk):
        return int(_nb_dft_at(_as_i64(vals), int(zeta), int(i), fk))

    def convolve(f, g, fk):
        return _nb_convolve(_as_i64(f), _as_i64(g), fk)

    def dft_tab(vals, zp, addt, mult):
        return _nb_dft_tab(_as_i64(vals), _as_i64(zp), _as_i64(addt), _as_i64(mult))

    def convolve_tab(f, g, addt, mult):
        return _nb_convolve_tab(_as_i64(f), _as_i64(g), _as_i64(addt), _as_i64(mult))

    def least_period(vals, divs):
        return int(_nb_least_period(_as_i64(vals), _as_i64(divs)))

    def delta_periods(labels, masks, divs):
        return _nb_delta_periods(_as_i64(labels), _as_i64(masks), _as_i64(divs))

    def first_hits(coefs, masks, addt, q):
        return _nb_first_hits(_as_i64(coefs), _as_i64(masks), _as_i64(addt), int(q))

    def irreducible_flags(cands, q, addt, mult, negt, invt, cofactors):
        return _nb_irreducible_flags(
            _as_i64(cands), int(q), _as_i64(addt), _as_i64(mult), _as_i64(negt),
            _as_i64(invt), _as_i64(cofactors),
        )

else:

    def mul_vec(a, b, fk):
        return _np_mul_vec(a, b, fk)

    def add_vec(a, b, fk):
        return _np_add_vec(a, b, fk)

    def neg_vec(a, fk):
        return _np_neg_vec(a, fk)

    def powers(z, count, fk):
        return _np_powers(z, count, fk)

    def dft(vals, zeta, fk):
        return _np_dft(_as_i64(vals), int(zeta), fk)

    def dft_at(vals, zeta, i, fk):
        return int(_np_dft_at(_as_i64(vals), int(zeta), int(i), fk))

    def convolve(f, g, fk):
        return _np_convolve(_as_i64(f), _as_i64(g), fk)

    def dft_tab(vals, zp, addt, mult):
        return _np_dft_tab(_as_i64(vals), _as_i64(zp), addt, mult)

    def convolve_tab(f, g, addt, mult):
        return _np_convolve_tab(_as_i64(f), _as_i64(g), addt, mult)

    def least_period(vals, divs):
        return _np_least_period(_as_i64(vals), divs)

    def delta_periods(labels, masks, divs):
        return _np_delta_periods(_as_i64(labels), _as_i64(masks), divs)

    def first_hits(coefs, masks, addt, q):
        return _np_first_hits(_as_i64(coefs), _as_i64(masks), _as_i64(addt), int(q))

    def irreducible_flags(cands, q, addt, mult, negt, invt, cofactors):
        return _np_irreducible_flags(
            _as_i64(cands), int(q), _as_i64(addt), _as_i64(mult), _as_i64(negt),
            _as_i64(invt), list(cofactors),
        )
