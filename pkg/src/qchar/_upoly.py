"""Dense univariate polynomials over Q or F_p.

Polynomials are lists of coefficients, constant term first, with no
trailing zeros.  Every function takes the coefficient domain ``K`` first;
a domain only needs ``norm`` (canonical form of a scalar) and ``inv``.
"""
from __future__ import annotations

import random
from fractions import Fraction


class QQ:
    name = "Q"

    @staticmethod
    def norm(x):
        return Fraction(x)

    @staticmethod
    def inv(x):
        return 1 / Fraction(x)


class GF:
    def __init__(self, p: int):
        self.p = p
        self.name = f"F{p}"

    def norm(self, x):
        return x % self.p

    def inv(self, x):
        return pow(x, -1, self.p)


def strip(f):
    while f and not f[-1]:
        f.pop()
    return f


def normalize(K, f):
    return strip([K.norm(c) for c in f])


def add(K, f, g):
    n = max(len(f), len(g))
    return strip([K.norm((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) for i in range(n)])


def sub(K, f, g):
    n = max(len(f), len(g))
    return strip([K.norm((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) for i in range(n)])


def mul(K, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return normalize(K, out)


def divmod_(K, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], strip(r)
    q = [0] * (len(r) - dg)
    lc_inv = K.inv(g[-1])
    for i in range(len(r) - 1 - dg, -1, -1):
        c = K.norm(r[i + dg] * lc_inv)
        if c:
            q[i] = c
            for j, b in enumerate(g):
                r[i + j] = K.norm(r[i + j] - c * b)
    return strip(q), strip(r[:dg])


def rem(K, f, g):
    return divmod_(K, f, g)[1]


def monic(K, f):
    if not f:
        return []
    inv = K.inv(f[-1])
    return [K.norm(c * inv) for c in f]


def gcd(K, f, g):
    while g:
        f, g = g, rem(K, f, g)
    return monic(K, f)


def gcdex(K, f, g):
    """Return (s, t, h) with s*f + t*g = h = monic gcd(f, g)."""
    r0, r1 = list(f), list(g)
    s0, s1 = [K.norm(1)], []
    t0, t1 = [], [K.norm(1)]
    while r1:
        q, r = divmod_(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(K, s0, mul(K, q, s1))
        t0, t1 = t1, sub(K, t0, mul(K, q, t1))
    if not r0:
        return [], [], []
    c = K.inv(r0[-1])
    return ([K.norm(x * c) for x in s0], [K.norm(x * c) for x in t0],
            [K.norm(x * c) for x in r0])


def powmod(K, f, n, g):
    result = [K.norm(1)]
    base = rem(K, f, g)
    while n:
        if n & 1:
            result = rem(K, mul(K, result, base), g)
        n >>= 1
        if n:
            base = rem(K, mul(K, base, base), g)
    return result


def equal_degree_factors(K: GF, f, d: int, rng: random.Random):
    """Cantor-Zassenhaus splitting of a squarefree monic f over F_p whose
    irreducible factors all have degree d."""
    n = len(f) - 1
    if n <= d:
        return [f]
    p = K.p
    while True:
        a = strip([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # absolute trace F_{2^d} -> F_2 in every component
            t = a
            b = a
            for _ in range(d - 1):
                t = rem(K, mul(K, t, t), f)
                b = add(K, b, t)
        else:
            b = sub(K, powmod(K, a, (p**d - 1) // 2, f), [1])
        h = gcd(K, f, b)
        if 0 < len(h) - 1 < n:
            other = divmod_(K, f, h)[0]
            return (equal_degree_factors(K, h, d, rng)
                    + equal_degree_factors(K, monic(K, other), d, rng))
