"""Cartan data for finite root systems.

Convention (used everywhere in this package)::

    cartan[i][j] = <alpha_i, alpha_j^vee>

so row i of the Cartan matrix is the simple root alpha_i written in
fundamental-weight coordinates.  This is the transpose of the convention
found in many textbooks.  The symmetrizer d solves
``d[i] * cartan[i][j] == d[j] * cartan[j][i]`` with minimal positive
integers on each component.

Weights are integer tuples in fundamental-weight coordinates (coordinate j
is <mu, alpha_j^vee>); root vectors are integer tuples of coefficients over
the simple roots.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Sequence

Weight = tuple[int, ...]
RootVector = tuple[int, ...]


class NotFiniteType(ValueError):
    pass


class NotSymmetrizable(ValueError):
    pass


def _a(n):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


def _named_cartan(name: str) -> list[list[int]]:
    kind, n = name[0], int(name[1:])
    m = _a(n)
    if kind == "A":
        return m
    if kind == "B":
        # last simple root short
        m[n - 2][n - 1], m[n - 1][n - 2] = -2, -1
        return m
    if kind == "C":
        # last simple root long
        m[n - 2][n - 1], m[n - 1][n - 2] = -1, -2
        return m
    if kind == "D":
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 2
        for i in range(n - 2):
            m[i][i + 1] = m[i + 1][i] = -1
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        return m
    if kind == "F":
        m[1][2], m[2][1] = -2, -1
        return m
    if kind == "G":
        return [[2, -1], [-3, 2]]
    raise KeyError(name)


NAMED_SYSTEMS = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2")


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [list(map(Fraction, row)) for row in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def _symmetrizer(cartan: list[list[int]]) -> tuple[int, ...]:
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        component, stack = [start], [start]
        d[start] = Fraction(1)
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                want = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = want
                    component.append(j)
                    stack.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable(f"inconsistent symmetrizer at ({i}, {j})")
        scale = math.lcm(*(d[i].denominator for i in component))
        ints = [int(d[i] * scale) for i in component]
        g = math.gcd(*ints)
        for i, x in zip(component, ints):
            d[i] = Fraction(x // g)
    return tuple(int(x) for x in d)


def _components(cartan) -> list[list[int]]:
    n = len(cartan)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j]:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class RootSystem:
    name: str
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def __str__(self):
        return self.name

    # -- weights ----------------------------------------------------------

    def pairing(self, mu: Sequence[int], j: int) -> int:
        """<mu, alpha_j^vee>."""
        return mu[j]

    def simple_root_as_weight(self, i: int) -> Weight:
        return self.cartan[i]

    def root_to_weight(self, c: Sequence[int]) -> Weight:
        """sum_i c[i] alpha_i in fundamental coordinates."""
        n = self.rank
        return tuple(sum(c[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def root_decompose(self, nu: Sequence[int]) -> RootVector | None:
        """Nonnegative integer c with sum c_i alpha_i == nu, or None."""
        n = self.rank
        # solve cartan^T c = nu over Q
        m = [[Fraction(self.cartan[i][j]) for i in range(n)] + [Fraction(nu[j])] for j in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col])
            m[col], m[piv] = m[piv], m[col]
            inv = 1 / m[col][col]
            m[col] = [x * inv for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        sol = [m[i][n] for i in range(n)]
        if any(x.denominator != 1 or x < 0 for x in sol):
            return None
        return tuple(int(x) for x in sol)

    def leq(self, mu: Sequence[int], lam: Sequence[int]) -> bool:
        """Dominance order mu <= lam."""
        return self.root_decompose(tuple(a - b for a, b in zip(lam, mu))) is not None

    # -- roots ------------------------------------------------------------

    def reflect_root(self, i: int, c: Sequence[int]) -> RootVector:
        n = self.rank
        k = sum(c[j] * self.cartan[j][i] for j in range(n))
        out = list(c)
        out[i] -= k
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[RootVector, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    gamma = self.reflect_root(i, beta)
                    if all(x >= 0 for x in gamma) and any(gamma) and gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        return tuple(sorted(found, key=lambda c: (sum(c), c)))


def from_cartan(cartan: Sequence[Sequence[int]], name: str = "custom") -> RootSystem:
    m = [list(map(int, row)) for row in cartan]
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise NotFiniteType("Cartan matrix must be square and nonempty")
    for i in range(n):
        if m[i][i] != 2:
            raise NotFiniteType(f"diagonal entry {i} is {m[i][i]}, expected 2")
        for j in range(n):
            if i != j and (m[i][j] > 0 or (m[i][j] == 0) != (m[j][i] == 0)):
                raise NotFiniteType(f"entries ({i}, {j}) do not form a generalized Cartan matrix")
    d = _symmetrizer(m)
    for subset in itertools.chain.from_iterable(itertools.combinations(range(n), k) for k in range(1, n + 1)):
        if _det([[m[i][j] for j in subset] for i in subset]) <= 0:
            raise NotFiniteType(f"principal minor on {list(subset)} is not positive")
    if any(x not in (1, 2, 3) for x in d):
        raise NotSymmetrizable(f"symmetrizer {d} has entries outside {{1, 2, 3}}")
    for comp in _components(m):
        if not any(d[i] == 1 for i in comp):  # pragma: no cover - minimal scaling guarantees it
            raise NotSymmetrizable("component without a symmetrizer entry 1")
    return RootSystem(name, tuple(map(tuple, m)), d)


def load_root_system(source) -> RootSystem:
    """Build a root system from a name (``"B2"``), a Cartan matrix, a dict
    ``{"cartan": [[...]]}``, or a path to such a JSON file."""
    if isinstance(source, RootSystem):
        return source
    if isinstance(source, dict):
        return from_cartan(source["cartan"], source.get("name", "custom"))
    if isinstance(source, (str, Path)):
        s = str(source)
        if s in NAMED_SYSTEMS:
            return from_cartan(_named_cartan(s), s)
        path = Path(s)
        if path.suffix == ".json" or path.exists():
            with open(path) as fh:
                doc = json.load(fh)
            return from_cartan(doc["cartan"], doc.get("name", path.stem))
        raise KeyError(f"unknown root system {s!r}; expected one of {', '.join(NAMED_SYSTEMS)} or a JSON file")
    return from_cartan(source)
