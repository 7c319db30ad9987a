"""Gram matrices of the contravariant form on path space.

For paths delta, gamma of equal height the raw value is
``b_lam(delta, gamma) = epsilon_{reversed(delta)}(gamma)``; the operator
applied first is epsilon_{delta_1}, which gives the recursion

    raw(delta, gamma) = sum_{i : gamma_i = delta_1}
        [<lam - gamma_{i+1} - ... - gamma_l, delta_1^vee>]_{delta_1}
        * raw(delta minus first entry, gamma minus entry i)

Dividing by delta! * gamma! gives the entries of the Gram matrix in the
divided-power basis; these are always Laurent polynomials.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .laurent import ONE, ZERO, LaurentPoly, exact_div, qint
from .pathspace import Path, enumerate_paths, height, parse_path, path_factorial, render_path
from .rootsystem import RootSystem, RootVector, Weight


class HeightMismatch(ValueError):
    pass


class GramSession:
    """Memo table for one (root system, lambda).

    Keys are unordered path pairs (the form is symmetric).  Lookups and
    inserts are single dict operations, so concurrent use from threads can
    at worst recompute a value, never store an inconsistent one.
    """

    def __init__(self, rs: RootSystem, lam: Sequence[int]):
        self.rs = rs
        self.lam: Weight = tuple(lam)
        self.memo: dict[tuple[Path, Path], LaurentPoly] = {((), ()): ONE}
        self._fact: dict[Path, LaurentPoly] = {}

    def factorial(self, path: Path) -> LaurentPoly:
        f = self._fact.get(path)
        if f is None:
            f = self._fact[path] = path_factorial(self.rs, path)
        return f

    def raw(self, delta: Path, gamma: Path) -> LaurentPoly:
        key = (delta, gamma) if delta <= gamma else (gamma, delta)
        val = self.memo.get(key)
        if val is not None:
            return val
        if len(delta) != len(gamma):
            return ZERO
        rs, lam = self.rs, self.lam
        beta = delta[0]
        rest = delta[1:]
        d = rs.d[beta]
        k = lam[beta]
        total = ZERO
        for i in range(len(gamma) - 1, -1, -1):
            g = gamma[i]
            if g == beta:
                c = qint(k, d)
                if c:
                    sub = self.raw(rest, gamma[:i] + gamma[i + 1:])
                    if sub:
                        total = total + c * sub
            k -= rs.cartan[g][beta]
        self.memo[key] = total
        return total

    def entry(self, delta: Path, gamma: Path) -> LaurentPoly:
        return exact_div(self.raw(delta, gamma), self.factorial(delta) * self.factorial(gamma))


def _check_heights(rs: RootSystem, delta, gamma):
    if height(delta, rs.rank) != height(gamma, rs.rank):
        raise HeightMismatch(f"paths {render_path(delta)} and {render_path(gamma)} have different heights")


def gram_raw(rs: RootSystem, lam: Sequence[int], delta: Sequence[int], gamma: Sequence[int],
             session: GramSession | None = None) -> LaurentPoly:
    _check_heights(rs, delta, gamma)
    session = session or GramSession(rs, lam)
    return session.raw(tuple(delta), tuple(gamma))


def gram_entry(rs: RootSystem, lam: Sequence[int], delta: Sequence[int], gamma: Sequence[int],
               session: GramSession | None = None) -> LaurentPoly:
    _check_heights(rs, delta, gamma)
    session = session or GramSession(rs, lam)
    return session.entry(tuple(delta), tuple(gamma))


@dataclass
class GramMatrix:
    system: str
    lam: Weight
    height: RootVector
    paths: list[Path]
    entries: list[list[LaurentPoly]] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.paths)

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "lambda": list(self.lam),
            "height": list(self.height),
            "paths": [render_path(p) for p in self.paths],
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "GramMatrix":
        return cls(
            system=doc["system"],
            lam=tuple(doc["lambda"]),
            height=tuple(doc["height"]),
            paths=[parse_path(p) for p in doc["paths"]],
            entries=[[LaurentPoly.parse(x) for x in row] for row in doc["entries"]],
        )


def gram_matrix(rs: RootSystem, lam: Sequence[int], nu: Sequence[int],
                session: GramSession | None = None) -> GramMatrix:
    session = session or GramSession(rs, lam)
    paths = enumerate_paths(nu)
    n = len(paths)
    rows: list[list[LaurentPoly]] = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = session.entry(paths[i], paths[j])
    return GramMatrix(rs.name, tuple(lam), tuple(nu), paths, rows)
