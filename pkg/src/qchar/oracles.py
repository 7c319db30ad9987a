"""Independent cross-checks: Freudenthal's formula and Lucas' theorem.

Nothing here touches Laurent polynomials or path space.  The Freudenthal
oracle also derives its own invariant form from the Cartan matrix instead
of reusing the quantum symmetrizer.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rootsystem import RootSystem


class NotDominant(ValueError):
    pass


@dataclass(frozen=True)
class InnerProductData:
    """``form[i][j] = (alpha_i, alpha_j)`` on the root lattice.

    With cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)
    we get ``form[i][j] = half_len[j] * cartan[i][j]`` where
    ``half_len[j] = (alpha_j, alpha_j)/2``.
    """
    form: tuple[tuple[int, ...], ...]
    half_len: tuple[int, ...]
    rho: tuple[int, ...]

    @classmethod
    def of(cls, rs: RootSystem) -> "InnerProductData":
        a = rs.cartan
        n = len(a)
        half = [Fraction(0)] * n
        for s in range(n):
            if half[s]:
                continue
            half[s] = Fraction(1)
            stack = [s]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if i != j and a[i][j] and not half[j]:
                        # half[j] * a[i][j] == half[i] * a[j][i]
                        half[j] = half[i] * a[j][i] / a[i][j]
                        stack.append(j)
        scale = math.lcm(*(h.denominator for h in half))
        ints = [int(h * scale) for h in half]
        g = math.gcd(*ints)
        half_len = tuple(x // g for x in ints)
        form = tuple(tuple(half_len[j] * a[i][j] for j in range(n)) for i in range(n))
        assert all(form[i][j] == form[j][i] for i in range(n) for j in range(n))
        return cls(form, half_len, (1,) * n)

    def weight_root_pairing(self, mu: Sequence[int], c: Sequence[int]) -> int:
        """(mu, sum_j c_j alpha_j) for mu in fundamental coordinates."""
        return sum(mu[j] * self.half_len[j] * c[j] for j in range(len(c)))


def _to_root_coords(rs: RootSystem, mu: Sequence[int]) -> list[Fraction]:
    n = rs.rank
    m = [[Fraction(rs.cartan[i][j]) for i in range(n)] + [Fraction(mu[j])] for j in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


class _Freudenthal:
    def __init__(self, rs: RootSystem, lam: Sequence[int]):
        self.rs = rs
        self.ip = InnerProductData.of(rs)
        self.lam = tuple(lam)
        self.n = rs.rank
        self.roots = rs.positive_roots
        lr = [x + 1 for x in self.lam]
        self.top = self._norm(lr)
        self.memo: dict[tuple[int, ...], int] = {}

    def _norm(self, mu: Sequence[int]) -> Fraction:
        c = _to_root_coords(self.rs, mu)
        return sum(Fraction(mu[j] * self.ip.half_len[j]) * c[j] for j in range(self.n))

    def weight(self, c: Sequence[int]) -> tuple[int, ...]:
        """lam - sum c_i alpha_i in fundamental coordinates."""
        a = self.rs.cartan
        return tuple(self.lam[j] - sum(c[i] * a[i][j] for i in range(self.n)) for j in range(self.n))

    def mult(self, c: tuple[int, ...]) -> int:
        """Multiplicity of lam - sum c_i alpha_i (c >= 0)."""
        if not any(c):
            return 1
        got = self.memo.get(c)
        if got is not None:
            return got
        mu = self.weight(c)
        den = self.top - self._norm([x + 1 for x in mu])
        if den <= 0:
            self.memo[c] = 0
            return 0
        total = 0
        for beta in self.roots:
            k = 1
            while True:
                cc = tuple(ci - k * bi for ci, bi in zip(c, beta))
                if any(x < 0 for x in cc):
                    break
                m = self.mult(cc)
                if m:
                    # (mu + k beta, beta)
                    total += m * self.ip.weight_root_pairing(self.weight(cc), beta)
                k += 1
        val = Fraction(2 * total) / den
        assert val.denominator == 1 and val >= 0, f"Freudenthal produced {val}"
        self.memo[c] = int(val)
        return int(val)


def freudenthal_multiplicity(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Classical multiplicity of mu in the simple module of highest weight lam (char 0)."""
    if any(x < 0 for x in lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    c = _to_root_coords(rs, [a - b for a, b in zip(lam, mu)])
    if any(x.denominator != 1 or x < 0 for x in c):
        return 0
    return _Freudenthal(rs, lam).mult(tuple(int(x) for x in c))


def freudenthal_table(rs: RootSystem, lam: Sequence[int], height_bound: Sequence[int]) -> dict:
    """All multiplicities with lam - mu inside the box; shares one recursion memo."""
    if any(x < 0 for x in lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    f = _Freudenthal(rs, lam)
    return {f.weight(c): f.mult(c) for c in itertools.product(*(range(b + 1) for b in height_bound))}


def lucas_predictor(p: int, m: int, n: int) -> int:
    """1 if binom(m, n) is nonzero mod p, else 0."""
    if m < 0 or n < 0:
        raise ValueError("lucas_predictor needs m, n >= 0")
    while m or n:
        if n % p > m % p:
            return 0
        m //= p
        n //= p
    return 1
