"""Exact arithmetic in Z[v, v^-1].

Laurent polynomials are stored sparsely as ``{exponent: coefficient}`` with
Python ints, so coefficients never overflow.  Quantum integers, factorials
and Gaussian binomials live here, together with cyclotomic polynomials and
reduction modulo them.
"""
from __future__ import annotations

import functools
import re
from typing import Iterable, Mapping


class NonExactDivision(ArithmeticError):
    """Raised when a quotient of Laurent polynomials is not a Laurent polynomial."""


class LaurentPoly:
    """An element of Z[v, v^-1].

    Instances are immutable and hashable.  Zero coefficients are never
    stored, so two polynomials are equal iff their coefficient maps are.

    >>> v = LaurentPoly.v()
    >>> str((v + v**-1) ** 2)
    'v^2 + 2 + v^-2'
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {e: c for e, c in coeffs.items() if c} if coeffs else {}
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict) -> "LaurentPoly":
        # d must already be free of zero coefficients
        p = object.__new__(cls)
        p._c = d
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exp: coeff} if coeff else {})

    @classmethod
    def v(cls) -> "LaurentPoly":
        return cls._wrap({1: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._wrap({0: c} if c else {})

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return sorted(self._c.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    @property
    def min_exp(self) -> int:
        return min(self._c)

    @property
    def max_exp(self) -> int:
        return max(self._c)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_unit(self) -> bool:
        """True for the units +-v^k of Z[v, v^-1]."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def value_at_one(self) -> int:
        return sum(self._c.values())

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._c:
            return self
        d = dict(self._c)
        for e, c in other._c.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return LaurentPoly._wrap(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._wrap({})
            return LaurentPoly._wrap({e: c * other for e, c in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        d: dict[int, int] = {}
        get = d.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                d[e] = get(e, 0) + ca * cb
        return LaurentPoly._wrap({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise NonExactDivision(f"{self} is not invertible in Z[v, v^-1]")
            ((e, c),) = self._c.items()
            return LaurentPoly.monomial(e * n, c ** (-n))
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly._wrap({e + k: c for e, c in self._c.items()})

    def subs_power(self, d: int) -> "LaurentPoly":
        """Substitute v -> v^d."""
        if d == 1:
            return self
        return LaurentPoly._wrap({e * d: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        return LaurentPoly._wrap({-e: c for e, c in self._c.items()})

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "v" if e == 1 else f"v^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    _TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*(\*)?\s*)?(v(?:\s*\^\s*([+-]?\d+))?)?\s*")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``; also accepts ``2v`` and ``v^+3``."""
        s = text.strip()
        if s == "0":
            return cls()
        if not s:
            raise ValueError("empty polynomial string")
        pos, first = 0, True
        d: dict[int, int] = {}
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            sign, digits, _star, var, exp = m.groups()
            if m.end() == pos or (digits is None and var is None):
                raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
            if sign is None and not first:
                raise ValueError(f"missing '+' or '-' in {text!r} at position {pos}")
            c = int(digits) if digits is not None else 1
            if sign == "-":
                c = -c
            e = 0 if var is None else (int(exp) if exp is not None else 1)
            d[e] = d.get(e, 0) + c
            pos, first = m.end(), False
        return cls(d)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.v()


class IntPoly:
    """A polynomial in v with integer coefficients and nonnegative exponents.

    Coefficients are stored densely from the constant term upwards with the
    leading coefficient nonzero; the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly(dict(enumerate(self.coeffs)))

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "IntPoly":
        if p and p.min_exp < 0:
            raise ValueError(f"{p} has negative exponents")
        if not p:
            return cls(())
        return cls(p.coeff(e) for e in range(p.max_exp + 1))

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return str(self.to_laurent())

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


# -- quantum numbers --------------------------------------------------------


@functools.lru_cache(maxsize=None)
def qint(n: int, d: int = 1) -> LaurentPoly:
    """The quantum integer [n] in the variable v^d."""
    if d < 1:
        raise ValueError("d must be positive")
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    n = abs(n)
    return LaurentPoly._wrap({d * (n - 1 - 2 * k): sign for k in range(n)})


@functools.lru_cache(maxsize=None)
def qfact(n: int, d: int = 1) -> LaurentPoly:
    if n < 0:
        raise ValueError("qfact needs n >= 0")
    if n == 0:
        return ONE
    return qfact(n - 1, d) * qint(n, d)


@functools.lru_cache(maxsize=None)
def qbinom(n: int, r: int, d: int = 1) -> LaurentPoly:
    """Gaussian binomial [n]...[n-r+1] / [r]!, always in Z[v, v^-1]."""
    if r < 0:
        raise ValueError("qbinom needs r >= 0")
    num = ONE
    for k in range(r):
        num = num * qint(n - k, d)
    try:
        return exact_div(num, qfact(r, d))
    except NonExactDivision as exc:  # pragma: no cover - would be an arithmetic bug
        raise AssertionError(f"qbinom({n}, {r}, {d}) not integral") from exc


# -- division ---------------------------------------------------------------


def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    lo = p.min_exp
    arr = [0] * (p.max_exp - lo + 1)
    for e, c in p.items():
        arr[e - lo] = c
    return lo, arr


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with a == q * b, raising NonExactDivision if none exists."""
    if not b:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not a:
        return ZERO
    if len(b) == 1:
        ((eb, cb),) = b.items()
        out = {}
        for e, c in a.items():
            qc, r = divmod(c, cb)
            if r:
                raise NonExactDivision(f"{a} is not divisible by {b}")
            out[e - eb] = qc
        return LaurentPoly._wrap(out)
    la, A = _dense(a)
    lb, B = _dense(b)
    da, db = len(A) - 1, len(B) - 1
    if da < db:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    lc = B[-1]
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = A[i + db]
        if not c:
            continue
        qc, r = divmod(c, lc)
        if r:
            raise NonExactDivision(f"{a} is not divisible by {b}")
        q[i] = qc
        for j, bj in enumerate(B):
            if bj:
                A[i + j] -= qc * bj
    if any(A):
        raise NonExactDivision(f"{a} is not divisible by {b}")
    return LaurentPoly._wrap({i + la - lb: c for i, c in enumerate(q) if c})


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    try:
        exact_div(a, b)
    except NonExactDivision:
        return False
    return True


# -- cyclotomic polynomials -------------------------------------------------


def divisors(n: int) -> list[int]:
    small = [k for k in range(1, int(n**0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


@functools.lru_cache(maxsize=None)
def cyclotomic(l: int) -> IntPoly:
    """The l-th cyclotomic polynomial sigma_l."""
    if l < 1:
        raise ValueError("cyclotomic index must be positive")
    num = LaurentPoly({l: 1, 0: -1})
    den = ONE
    for k in divisors(l)[:-1]:
        den = den * cyclotomic(k).to_laurent()
    return IntPoly.from_laurent(exact_div(num, den))


def mod_cyclotomic(p: LaurentPoly, l: int) -> IntPoly:
    """Canonical representative of p in Z[v]/(sigma_l), of degree < phi(l).

    Exponents are first folded modulo l, which is allowed because
    v^l = 1 modulo sigma_l.
    """
    sigma = cyclotomic(l).coeffs
    deg = len(sigma) - 1
    arr = [0] * l
    for e, c in p.items():
        arr[e % l] += c
    # sigma is monic, so reduction stays in Z
    for i in range(l - 1, deg - 1, -1):
        c = arr[i]
        if c:
            off = i - deg
            for j, s in enumerate(sigma):
                if s:
                    arr[off + j] -= c * s
    return IntPoly(arr[:deg])
