"""Scalar hot kernels: curve group orders, modular arithmetic, squarefree kernels.

Every function here is written against int64 semantics so the same source runs
under numba.njit (default lane) or as plain Python (FROBMATCH_PURE_PYTHON=1).
Overflow discipline: all moduli are < 2**31, every product has both factors
reduced below 2**32 first, so intermediates stay under 2**63 on the jit lane.
"""

import math

import numpy as np

from .accel import jit

# Largest prime modulus the jit lane accepts (keeps products inside int64).
MAX_KERNEL_PRIME = 2**31 - 1


@jit
def isqrt64(n):
    if n <= 0:
        return 0
    x = int(math.sqrt(n))
    while x > 0 and x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@jit
def powmod(b, e, m):
    b %= m
    r = 1
    while e > 0:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


@jit
def invmod(a, m):
    # extended Euclid; caller guarantees gcd(a, m) == 1
    a %= m
    old_r, r = a, m
    old_s, s = 1, 0
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % m


@jit
def gcd64(a, b):
    while b != 0:
        a, b = b, a % b
    return a


@jit
def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    t = powmod(a, (p - 1) // 2, p)
    if t == 1:
        return 1
    return -1


@jit
def sqrt_mod(a, p):
    """Tonelli-Shanks; a must be a QR mod the odd prime p."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return powmod(a, (p + 1) // 4, p)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m = s
    c = powmod(z, q, p)
    t = powmod(a, q, p)
    r = powmod(a, (q + 1) // 2, p)
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = powmod(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return r


@jit
def minstd(state):
    # Park-Miller; state in [1, 2**31 - 2]
    return state * 48271 % 2147483647


@jit
def mix_seed(curve_seed, p):
    s = (curve_seed + p * 2654435761) % 2147483646
    return s + 1


# ---------------------------------------------------------------------------
# Affine group law on y^2 = x^3 + A x + B over F_p. Points are (x, y, inf)
# triples with inf in {0, 1}; the identity is (0, 0, 1).
# ---------------------------------------------------------------------------


@jit
def ec_add(x1, y1, i1, x2, y2, i2, A, p):
    if i1 == 1:
        return x2, y2, i2
    if i2 == 1:
        return x1, y1, i1
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return 0, 0, 1
        num = (3 * (x1 * x1 % p) + A) % p
        den = 2 * y1 % p
    else:
        num = (y2 - y1) % p
        den = (x2 - x1) % p
    lam = num * invmod(den, p) % p
    x3 = (lam * lam - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return x3, y3, 0


@jit
def ec_mul(k, x, y, inf, A, p):
    rx, ry, ri = 0, 0, 1
    bx, by, bi = x, y, inf
    while k > 0:
        if k & 1:
            rx, ry, ri = ec_add(rx, ry, ri, bx, by, bi, A, p)
        bx, by, bi = ec_add(bx, by, bi, bx, by, bi, A, p)
        k >>= 1
    return rx, ry, ri


@jit
def _factor_distinct(n, out):
    cnt = 0
    m = n
    if m % 2 == 0:
        out[cnt] = 2
        cnt += 1
        while m % 2 == 0:
            m //= 2
    if m % 3 == 0:
        out[cnt] = 3
        cnt += 1
        while m % 3 == 0:
            m //= 3
    f = 5
    while f * f <= m:
        if m % f == 0:
            out[cnt] = f
            cnt += 1
            while m % f == 0:
                m //= f
        g = f + 2
        if m % g == 0:
            out[cnt] = g
            cnt += 1
            while m % g == 0:
                m //= g
        f += 6
    if m > 1:
        out[cnt] = m
        cnt += 1
    return cnt


@jit
def _exact_point_order(m, px, py, A, p):
    # m is an annihilator of P; strip primes while m/q still annihilates
    order = m
    fbuf = np.empty(16, np.int64)
    nf = _factor_distinct(m, fbuf)
    for idx in range(nf):
        q = fbuf[idx]
        while order % q == 0:
            _, _, inf = ec_mul(order // q, px, py, 0, A, p)
            if inf == 1:
                order //= q
            else:
                break
    return order


@jit
def _bsgs_annihilators(px, py, A, p, lo, width, tout):
    """All t in [0, width] with (lo + t) * P = O, written ascending into tout.

    Matches form an arithmetic progression with step ord(P); tout may truncate
    but always holds the first matches, which is enough to recover the step.
    Returns the number of entries written.
    """
    s = isqrt64(width) + 1
    keys = np.empty(s, np.int64)
    bx, by, bi = 0, 0, 1
    for i in range(s):
        if bi == 1:
            keys[i] = -1
        else:
            keys[i] = bx * p + by
        bx, by, bi = ec_add(bx, by, bi, px, py, 0, A, p)
    order_idx = np.argsort(keys)
    skeys = np.empty(s, np.int64)
    for i in range(s):
        skeys[i] = keys[order_idx[i]]

    lx, ly, li = ec_mul(lo, px, py, 0, A, p)
    # target = -(lo * P)
    tx, ty, ti = lx, (p - ly) % p, li
    sx, sy, si = ec_mul(s, px, py, 0, A, p)
    msx, msy, msi = sx, (p - sy) % p, si

    gx, gy, gi = tx, ty, ti
    cnt = 0
    jmax = width // s + 1
    for j in range(jmax + 1):
        if gi == 1:
            key = -1
        else:
            key = gx * p + gy
        a, b = 0, s
        while a < b:
            mid = (a + b) // 2
            if skeys[mid] < key:
                a = mid + 1
            else:
                b = mid
        while a < s and skeys[a] == key:
            t = order_idx[a] + j * s
            if t <= width and cnt < tout.shape[0]:
                tout[cnt] = t
                cnt += 1
            a += 1
        gx, gy, gi = ec_add(gx, gy, gi, msx, msy, msi, A, p)
    sub = tout[:cnt]
    sub.sort()
    return cnt


@jit
def _sample_point(A, B, p, state):
    # returns (x, y, new_state); x = -1 if sampling failed
    for _ in range(256):
        state = minstd(state)
        xc = state % p
        rhs = ((xc * xc % p) * xc + A * xc + B) % p
        if rhs == 0:
            return xc, 0, state
        if legendre(rhs, p) == 1:
            return xc, sqrt_mod(rhs, p), state
    return -1, -1, state


@jit
def _lcm_orders(px, py, A, p, lo, width, running, tbuf):
    cnt = _bsgs_annihilators(px, py, A, p, lo, width, tbuf)
    if cnt == 0:
        return -1
    if cnt >= 2:
        d = tbuf[1] - tbuf[0]
    else:
        d = _exact_point_order(lo + tbuf[0], px, py, A, p)
    return running // gcd64(running, d) * d


@jit
def order_bsgs(A, B, p, seed, max_points=10):
    """Group order of y^2 = x^3 + A x + B over F_p via Shanks/Mestre.

    Accumulates the lcm of random point orders; if that leaves several
    candidates in the Hasse window, combines with point orders on the
    quadratic twist (N + N_tw = 2p + 2). Returns the order, or -1 if still
    ambiguous after the retry budget, or -2 on an internal inconsistency.
    """
    half = isqrt64(4 * p)
    lo = p + 1 - half
    hi = p + 1 + half
    width = hi - lo
    state = seed % 2147483646 + 1
    tbuf = np.empty(8, np.int64)

    m_curve = 1
    for _ in range(max_points):
        px, py, state = _sample_point(A % p, B % p, p, state)
        if px < 0:
            continue
        m_curve = _lcm_orders(px, py, A % p, p, lo, width, m_curve, tbuf)
        if m_curve < 0:
            return -2
        k1 = (lo + m_curve - 1) // m_curve
        k2 = hi // m_curve
        if k1 == k2:
            return k1 * m_curve

    # twist phase
    d = 2
    while legendre(d, p) != -1:
        d += 1
    d2 = d * d % p
    a_tw = A % p * d2 % p
    b_tw = B % p * d2 % p * d % p
    m_twist = 1
    for _ in range(max_points):
        px, py, state = _sample_point(a_tw, b_tw, p, state)
        if px < 0:
            continue
        m_twist = _lcm_orders(px, py, a_tw, p, lo, width, m_twist, tbuf)
        if m_twist < 0:
            return -2
        # N = k * m_curve in [lo, hi] with 2p + 2 - N = 0 (mod m_twist)
        g = gcd64(m_curve, m_twist)
        if (2 * p + 2) % g != 0:
            continue
        mt = m_twist // g
        k0 = (2 * p + 2) // g % mt * invmod(m_curve // g % mt, mt) % mt if mt > 1 else 0
        kmin = (lo + m_curve - 1) // m_curve
        k = kmin + (k0 - kmin) % mt if mt > 1 else kmin
        found = -1
        nfound = 0
        while k * m_curve <= hi:
            found = k * m_curve
            nfound += 1
            k += mt
        if nfound == 1:
            return found
    return -1


@jit
def order_naive(b2, b4, b6, p):
    """Exact order for p > 3 by a quadratic-character table over the
    completed-square cubic 4x^3 + b2 x^2 + 2 b4 x + b6."""
    chi = np.full(p, -1, np.int8)
    chi[0] = 0
    for r in range(1, p):
        chi[r * r % p] = 1
    b2 %= p
    b4 %= p
    b6 %= p
    total = p + 1
    for x in range(p):
        t = (4 * x + b2) % p
        t = (t * x + 2 * b4) % p
        t = (t * x + b6) % p
        total += chi[t]
    return total


def order_naive_np(b2, b4, b6, p):
    """Vectorized twin of order_naive (pure-numpy lane)."""
    x = np.arange(p, dtype=np.int64)
    chi = np.full(p, -1, dtype=np.int64)
    chi[0] = 0
    nz = x[1:]
    chi[(nz * nz) % p] = 1
    rhs = ((4 * x + b2 % p) % p * x + 2 * (b4 % p)) % p
    rhs = (rhs * x + b6 % p) % p
    return int(p + 1 + chi[rhs].sum())


# ---------------------------------------------------------------------------
# Squarefree kernels. The caller supplies a trial-prime table reaching
# isqrt(max |n|); the residual cofactor is then 1 or prime. A slow plain
# trial-division tail keeps the function exact even with a short table.
# ---------------------------------------------------------------------------


@jit
def sf_kernel_one(n, primes):
    sign = 1
    m = n
    if m < 0:
        sign = -1
        m = -m
    k = 1
    i = 0
    np_ = primes.shape[0]
    broke = False
    while i < np_:
        q = primes[i]
        if q * q > m:
            broke = True
            break
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            if e & 1:
                k *= q
        i += 1
    if m > 1:
        if broke:
            k *= m  # no factor <= sqrt(m): prime
        else:
            r = isqrt64(m)
            if r * r == m:
                pass  # perfect square contributes nothing
            else:
                if np_ == 0 and m % 2 == 0:
                    e = 0
                    while m % 2 == 0:
                        m //= 2
                        e += 1
                    if e & 1:
                        k *= 2
                f = primes[np_ - 1] + 1 if np_ > 0 else 3
                if f % 2 == 0:
                    f += 1
                while f * f <= m:
                    if m % f == 0:
                        e = 0
                        while m % f == 0:
                            m //= f
                            e += 1
                        if e & 1:
                            k *= f
                        r = isqrt64(m)
                        if r * r == m:
                            m = 1
                            break
                    f += 2
                if m > 1:
                    k *= m
    return sign * k


@jit
def sf_kernel_batch(ns, primes, out):
    for i in range(ns.shape[0]):
        out[i] = sf_kernel_one(ns[i], primes)
    return out


def sf_kernel_np(ns, primes):
    """Vectorized squarefree kernels (pure-numpy lane).

    Requires the prime table to reach isqrt(max |ns|)."""
    m = np.abs(np.asarray(ns, dtype=np.int64)).copy()
    if m.size == 0:
        return m
    sign = np.where(np.asarray(ns) < 0, -1, 1).astype(np.int64)
    k = np.ones_like(m)
    mx = int(m.max())
    covered = False
    for q in primes:
        q = int(q)
        if q * q > mx:
            covered = True
            break
        mask = m % q == 0
        if not mask.any():
            continue
        e = np.zeros_like(m)
        while mask.any():
            m[mask] //= q
            e[mask] += 1
            mask = m % q == 0
        k[(e & 1) == 1] *= q
        mx = int(m.max())
        if q * q > mx:
            covered = True
            break
    if not covered and (m > 1).any():
        raise ValueError("prime table too small for sf_kernel_np inputs")
    left = m > 1
    k[left] *= m[left]
    return sign * k
