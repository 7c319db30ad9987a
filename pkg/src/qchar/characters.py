"""Weight multiplicities of L(lambda) as ranks of specialized Gram matrices."""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import operator
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from . import _upoly as up
from .coefficients import Field, QuotientField
from .gram import GramMatrix, GramSession, gram_matrix
from .laurent import LaurentPoly
from .rootsystem import RootSystem, RootVector, Weight


def field_rank(field: Field, rows: list[list]) -> int:
    """Rank of a matrix of field elements (rows are copied, not modified)."""
    if not rows:
        return 0
    if field.characteristic == 0:
        return _rank_char0(field, rows)
    return _gauss_rank(field, rows)


def _gauss_rank(field: Field, rows: list[list]) -> int:
    """Plain elimination with field inverses and first-nonzero pivots."""
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    is_zero, mul, sub = field.is_zero, field.mul, field.sub
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if not is_zero(m[r][c])), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.invert(m[rank][c])
        prow = m[rank]
        for r in range(rank + 1, nrows):
            if not is_zero(m[r][c]):
                f = mul(m[r][c], inv)
                row = m[r]
                for k in range(c, ncols):
                    if not is_zero(prow[k]):
                        row[k] = sub(row[k], mul(f, prow[k]))
        rank += 1
        if rank == nrows:
            break
    return rank


# -- characteristic 0: fraction-free elimination ----------------------------
#
# Over Q and Q[v]/(sigma_l) every row is first scaled to integer
# coefficients, then Bareiss elimination runs in Z resp. Z[v]/(sigma_l).
# Intermediate entries are minors of the input, so every division is exact
# and no rational arithmetic is needed.


def _row_to_int(row: list[list[Fraction]]) -> list[list[int]]:
    den = math.lcm(*(c.denominator for x in row for c in x))
    return [[int(c * den) for c in x] for x in row]


def _rank_char0(field: Field, rows: list[list]) -> int:
    if isinstance(field, QuotientField):
        modulus = [int(c) for c in field.modulus]
        return _bareiss_cyclotomic(modulus, [_row_to_int([list(x) for x in row]) for row in rows])
    ints = [[x[0] for x in _row_to_int([[Fraction(y)] for y in row])] for row in rows]
    return _bareiss(ints, operator.mul, operator.sub, _divexact_int, 1, 0)


def _divexact_int(x: int, d: int) -> int:
    q, r = divmod(x, d)
    assert not r, "inexact Bareiss division"
    return q


def _bareiss(m: list[list], mul, sub, divexact, one, zero) -> int:
    """Fraction-free rank; ``m`` is modified in place."""
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, one
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow, p = m[rank], m[rank][c]
        for r in range(rank + 1, nrows):
            row, a = m[r], m[r][c]
            for k in range(c + 1, ncols):
                val = sub(mul(p, row[k]), mul(a, prow[k])) if a else mul(p, row[k])
                row[k] = divexact(val, prev) if prev != one else val
            row[c] = zero
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _bareiss_cyclotomic(modulus: list[int], rows: list[list[list[int]]]) -> int:
    deg = len(modulus) - 1
    zero = (0,) * deg
    one = (1,) + (0,) * (deg - 1)

    def reduce(out: list[int]) -> tuple:
        # modulus is monic
        for i in range(len(out) - 1, deg - 1, -1):
            c = out[i]
            if c:
                off = i - deg
                for j in range(deg + 1):
                    if modulus[j]:
                        out[off + j] -= c * modulus[j]
        return tuple(out[:deg])

    def mul(a: tuple, b: tuple) -> tuple:
        out = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return reduce(out)

    def sub(a: tuple, b: tuple) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    inverses: dict[tuple, tuple[tuple, int]] = {}

    def divexact(x: tuple, d: tuple) -> tuple:
        hit = inverses.get(d)
        if hit is None:
            s, _t, g = up.gcdex(up.QQ, up.strip([Fraction(c) for c in d]), [Fraction(c) for c in modulus])
            s = [c / g[0] for c in s]
            n = math.lcm(*(c.denominator for c in s)) if s else 1
            hit = inverses[d] = (tuple(int(c * n) for c in s) + (0,) * (deg - len(s)), n)
        adj, n = hit
        return tuple(_divexact_int(c, n) for c in mul(x, adj))

    m = [[tuple(x) + (0,) * (deg - len(x)) for x in row] for row in rows]
    # zero is encoded as () so that the elimination loop can test truthiness
    m = [[x if any(x) else () for x in row] for row in m]

    def mul0(a, b):
        return mul(a, b) if a and b else ()

    def sub0(a, b):
        if not b:
            return a
        r = sub(a or zero, b)
        return r if any(r) else ()

    def div0(x, d):
        return divexact(x, d) if x else ()

    return _bareiss(m, mul0, sub0, div0, one, ())


def matrix_rank(field: Field, m: GramMatrix | Sequence[Sequence[LaurentPoly]]) -> int:
    entries = m.entries if isinstance(m, GramMatrix) else m
    return field_rank(field, [[field.specialize(x) for x in row] for row in entries])


def weight_multiplicity(field: Field, rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                        session: GramSession | None = None) -> int:
    """dim L(lam)_mu over the given (K, q)."""
    nu = rs.root_decompose(tuple(a - b for a, b in zip(lam, mu)))
    if nu is None:
        return 0
    if session is None or session.lam != tuple(lam):
        session = GramSession(rs, lam)
    return matrix_rank(field, gram_matrix(rs, lam, nu, session))


@dataclass
class MultiplicityTable:
    system: str
    field: str
    lam: Weight
    height_bound: RootVector | None
    entries: dict[Weight, int] = dc_field(default_factory=dict)

    def __getitem__(self, mu) -> int:
        return self.entries[tuple(mu)]

    def to_dict(self) -> dict:
        doc = {
            "system": self.system,
            "field": self.field,
            "lambda": list(self.lam),
            "mults": [{"mu": list(mu), "dim": n} for mu, n in self.entries.items()],
        }
        if self.height_bound is not None:
            doc["height_bound"] = list(self.height_bound)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "MultiplicityTable":
        hb = doc.get("height_bound")
        return cls(doc["system"], doc["field"], tuple(doc["lambda"]),
                   tuple(hb) if hb is not None else None,
                   {tuple(e["mu"]): e["dim"] for e in doc["mults"]})

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"mu{i}" for i in range(len(self.lam))] + ["dim"])
        for mu, n in self.entries.items():
            w.writerow(list(mu) + [n])
        return buf.getvalue()


def character_table(field: Field, rs: RootSystem, lam: Sequence[int], height_bound: Sequence[int],
                    session: GramSession | None = None) -> MultiplicityTable:
    if any(x < 0 for x in height_bound):
        raise ValueError("height bound must be nonnegative")
    lam = tuple(lam)
    if session is None or session.lam != lam:
        session = GramSession(rs, lam)
    table = MultiplicityTable(rs.name, str(field.spec), lam, tuple(height_bound))
    for c in itertools.product(*(range(b + 1) for b in height_bound)):
        mu = tuple(a - b for a, b in zip(lam, rs.root_to_weight(c)))
        table.entries[mu] = matrix_rank(field, gram_matrix(rs, lam, c, session))
    return table
