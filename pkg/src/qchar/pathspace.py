"""Simple root paths and the operators epsilon_alpha / phi_alpha on them.

A path is a tuple of simple-root indices.  A :class:`PathVector` is a finite
linear combination of paths of one height with coefficients in
Z[v, v^-1] and one common denominator, so that elements of the rational
path space can be handled without rational-function arithmetic.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .laurent import ONE, LaurentPoly, NonExactDivision, exact_div, qfact, qint
from .rootsystem import RootSystem, RootVector, Weight

Path = tuple[int, ...]


def height(path: Sequence[int], rank: int) -> RootVector:
    c = [0] * rank
    for i in path:
        c[i] += 1
    return tuple(c)


def render_path(path: Sequence[int]) -> str:
    return "[" + ",".join(map(str, path)) + "]"


def parse_path(text: str) -> Path:
    body = text.strip().removeprefix("[").removesuffix("]").strip()
    return tuple(int(x) for x in body.split(",")) if body else ()


def enumerate_paths(nu: Sequence[int]) -> list[Path]:
    """All paths of height nu in lexicographic order."""
    if any(x < 0 for x in nu):
        raise ValueError(f"height {tuple(nu)} has negative entries")
    counts = list(nu)
    total = sum(counts)
    out: list[Path] = []
    prefix: list[int] = []

    def rec() -> None:
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for i, k in enumerate(counts):
            if k:
                counts[i] -= 1
                prefix.append(i)
                rec()
                prefix.pop()
                counts[i] += 1

    rec()
    return out


def runs(path: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Maximal runs of equal entries as (index, length)."""
    i = 0
    while i < len(path):
        j = i
        while j < len(path) and path[j] == path[i]:
            j += 1
        yield path[i], j - i
        i = j


def path_factorial(rs: RootSystem, path: Sequence[int]) -> LaurentPoly:
    out = ONE
    for a, s in runs(path):
        out = out * qfact(s, rs.d[a])
    return out


class PathVector:
    """sum_delta (terms[delta] / denom) * delta."""

    __slots__ = ("terms", "denom")

    def __init__(self, terms: Mapping[Path, LaurentPoly] | None = None, denom: LaurentPoly = ONE):
        if not denom:
            raise ZeroDivisionError("zero denominator")
        self.terms = {p: c for p, c in (terms or {}).items() if c}
        self.denom = denom
        self._normalize()

    @classmethod
    def basis(cls, path: Sequence[int]) -> "PathVector":
        return cls({tuple(path): ONE})

    def _normalize(self) -> None:
        if self.denom == ONE:
            return
        if not self.terms:
            self.denom = ONE
            return
        try:
            divided = {p: exact_div(c, self.denom) for p, c in self.terms.items()}
        except NonExactDivision:
            return
        self.terms, self.denom = divided, ONE

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c: LaurentPoly) -> "PathVector":
        return PathVector({p: c * x for p, x in self.terms.items()}, self.denom)

    def divide(self, c: LaurentPoly) -> "PathVector":
        return PathVector(self.terms, self.denom * c)

    def __add__(self, other: "PathVector") -> "PathVector":
        if self.denom == other.denom:
            terms = dict(self.terms)
            for p, c in other.terms.items():
                terms[p] = terms.get(p, 0) + c
            return PathVector(terms, self.denom)
        terms = {p: c * other.denom for p, c in self.terms.items()}
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c * self.denom
        return PathVector(terms, self.denom * other.denom)

    def __neg__(self):
        return PathVector({p: -c for p, c in self.terms.items()}, self.denom)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, PathVector):
            return NotImplemented
        keys = self.terms.keys() | other.terms.keys()
        zero = LaurentPoly()
        return all(self.terms.get(p, zero) * other.denom == other.terms.get(p, zero) * self.denom
                   for p in keys)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        body = " + ".join(f"({c})*{render_path(p)}" for p, c in sorted(self.terms.items()))
        return body if self.denom == ONE else f"[{body}] / ({self.denom})"

    __repr__ = __str__


def _as_vector(x) -> PathVector:
    return x if isinstance(x, PathVector) else PathVector.basis(x)


def _epsilon_path(rs: RootSystem, lam: Weight, alpha: int, path: Path) -> Iterable[tuple[Path, LaurentPoly]]:
    d = rs.d[alpha]
    # <lam - (delta_{i+1} + ... + delta_l), alpha^vee>, accumulated from the right
    k = lam[alpha]
    for i in range(len(path) - 1, -1, -1):
        b = path[i]
        if b == alpha:
            c = qint(k, d)
            if c:
                yield path[:i] + path[i + 1:], c
        k -= rs.cartan[b][alpha]


def epsilon_apply(rs: RootSystem, lam: Weight, alpha: int, x) -> PathVector:
    x = _as_vector(x)
    terms: dict[Path, LaurentPoly] = {}
    for path, coeff in x.terms.items():
        for new, c in _epsilon_path(rs, lam, alpha, path):
            terms[new] = terms.get(new, 0) + c * coeff
    return PathVector(terms, x.denom)


def phi_apply(alpha: int, n: int, x) -> PathVector:
    x = _as_vector(x)
    pre = (alpha,) * n
    return PathVector({pre + p: c for p, c in x.terms.items()}, x.denom)


def epsilon_divided(rs: RootSystem, lam: Weight, alpha: int, n: int, x) -> PathVector:
    """epsilon_alpha^n / [n]!_alpha."""
    x = _as_vector(x)
    for _ in range(n):
        x = epsilon_apply(rs, lam, alpha, x)
    return x.divide(qfact(n, rs.d[alpha]))


def phi_divided(rs: RootSystem, alpha: int, n: int, x) -> PathVector:
    return phi_apply(alpha, n, x).divide(qfact(n, rs.d[alpha]))


def epsilon_path_operator(rs: RootSystem, lam: Weight, ops: Sequence[int], x) -> PathVector:
    """epsilon_{ops} = epsilon_{ops[0]} o ... o epsilon_{ops[-1]}."""
    x = _as_vector(x)
    for a in reversed(ops):
        x = epsilon_apply(rs, lam, a, x)
    return x


def divided_basis(rs: RootSystem, path: Sequence[int]) -> PathVector:
    """<delta> = delta / delta!."""
    return PathVector({tuple(path): ONE}, path_factorial(rs, path))


def divided_coordinates(rs: RootSystem, x: PathVector) -> dict[Path, LaurentPoly]:
    """Coordinates of x in the basis <delta>; NonExactDivision if x is not in
    the integral lattice spanned by the <delta>."""
    return {p: exact_div(c * path_factorial(rs, p), x.denom) for p, c in x.terms.items()}
