"""Coefficient fields (K, q) and the specialization Z[v, v^-1] -> K, v -> q.

Supported pairs:

* ``Q@1``                     Q with q = 1
* ``F<p>@1``                  F_p with q = 1
* ``Q@zeta<l>``               Q[v]/(sigma_l), q = class of v
* ``F<p>@zeta<l>``            F_p[v]/(g) for an irreducible factor g of sigma_l mod p
* ``F<p>@zeta<l>[g=c0,c1,..]`` same, with g pinned (coefficients low to high)

Field elements are plain Python values (``Fraction``, ``int`` or tuples of
those); the field object carries the arithmetic.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import _upoly as up
from .laurent import LaurentPoly, cyclotomic


class InvalidSpec(ValueError):
    pass


class FieldSpecSyntaxError(InvalidSpec):
    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos, self.expected = text, pos, expected
        super().__init__(f"bad field spec {text!r} at position {pos}: expected {expected}")


class DivisionByZero(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    q_kind: str  # "one" | "primitive_root" | "explicit"
    l: int | None = None
    g: tuple[int, ...] | None = None

    def __str__(self) -> str:
        base = "Q" if self.characteristic == 0 else f"F{self.characteristic}"
        if self.q_kind == "one":
            return f"{base}@1"
        s = f"{base}@zeta{self.l}"
        if self.q_kind == "explicit":
            s += "[g=" + ",".join(map(str, self.g)) + "]"
        return s


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


def parse_field_spec(text: str) -> FieldSpec:
    s = text
    pos = 0

    def expect(tok: str, what: str | None = None):
        nonlocal pos
        if not s.startswith(tok, pos):
            raise FieldSpecSyntaxError(text, pos, what or repr(tok))
        pos += len(tok)

    def integer(signed: bool = False) -> int:
        nonlocal pos
        start = pos
        if signed and pos < len(s) and s[pos] == "-":
            pos += 1
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start or s[start:pos] == "-":
            raise FieldSpecSyntaxError(text, start, "an integer")
        return int(s[start:pos])

    if s.startswith("Q", pos):
        pos += 1
        char = 0
    elif s.startswith("F", pos):
        pos += 1
        char = integer()
    else:
        raise FieldSpecSyntaxError(text, pos, "'Q' or 'F<p>'")
    expect("@")
    if s.startswith("1", pos):
        pos += 1
        kind, l, g = "one", None, None
    elif s.startswith("zeta", pos):
        pos += 4
        l = integer()
        kind, g = "primitive_root", None
        if char and s.startswith("[", pos):
            pos += 1
            expect("g=")
            coeffs = [integer(signed=True)]
            while s.startswith(",", pos):
                pos += 1
                coeffs.append(integer(signed=True))
            expect("]", "',' or ']'")
            kind, g = "explicit", tuple(coeffs)
    else:
        raise FieldSpecSyntaxError(text, pos, "'1' or 'zeta<l>'")
    if pos != len(s):
        raise FieldSpecSyntaxError(text, pos, "end of input")
    return FieldSpec(char, kind, l, g)


def multiplicative_order(p: int, l: int) -> int:
    if l == 1:
        return 1
    d, x = 1, p % l
    while x != 1:
        x = x * p % l
        d += 1
    return d


class Field:
    """Common interface.  Subclasses define the element representation."""

    spec: FieldSpec
    zero: object
    one: object
    q: object
    degree: int = 1

    def __str__(self):
        return str(self.spec)

    def __repr__(self):
        return f"<Field {self.spec}>"

    @property
    def characteristic(self) -> int:
        return self.spec.characteristic

    def is_zero(self, x) -> bool:
        return x == self.zero

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def invert(self, x):
        if self.is_zero(x):
            raise DivisionByZero(f"cannot invert zero in {self.spec}")
        return self._inv(x)

    @property
    def q_is_one(self) -> bool:
        return self.q == self.one

    def pow(self, x, n: int):
        if n < 0:
            x, n = self.invert(x), -n
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, x)
            n >>= 1
            if n:
                x = self.mul(x, x)
        return r


class RationalField(Field):
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.zero, self.one, self.q = Fraction(0), Fraction(1), Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def specialize(self, p: LaurentPoly):
        return Fraction(p.value_at_one())


class PrimeField(Field):
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.characteristic
        self.zero, self.one, self.q = 0, 1, 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def specialize(self, p: LaurentPoly):
        return p.value_at_one() % self.p


class QuotientField(Field):
    """K[v]/(modulus) for an irreducible modulus dividing v^l - 1.

    Elements are tuples of length ``degree`` (constant term first).
    """

    def __init__(self, spec: FieldSpec, K, modulus: list, l: int):
        self.spec = spec
        self.K = K
        self.modulus = list(modulus)
        self.l = l
        self.degree = len(modulus) - 1
        self.zero = self._pack([])
        self.one = self._pack([K.norm(1)])
        self.q = self._pack(up.rem(K, [K.norm(0), K.norm(1)], self.modulus))

    def _pack(self, f):
        f = list(f) + [self.K.norm(0)] * (self.degree - len(f))
        return tuple(f)

    def _unpack(self, x):
        return up.strip(list(x))

    def from_int(self, n):
        return self._pack(up.normalize(self.K, [n]))

    def add(self, a, b):
        return tuple(self.K.norm(x + y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.K.norm(-x) for x in a)

    def mul(self, a, b):
        return self._pack(up.rem(self.K, up.mul(self.K, self._unpack(a), self._unpack(b)), self.modulus))

    def _inv(self, a):
        s, _t, h = up.gcdex(self.K, self._unpack(a), self.modulus)
        assert h == [self.K.norm(1)], "modulus is not irreducible"
        return self._pack(up.rem(self.K, s, self.modulus))

    def specialize(self, p: LaurentPoly):
        # q^l = 1 in K, so exponents fold modulo l
        arr = [0] * self.l
        for e, c in p.items():
            arr[e % self.l] += c
        return self._pack(up.rem(self.K, up.normalize(self.K, arr), self.modulus))


def _sigma_mod(K, l: int) -> list:
    return up.normalize(K, list(cyclotomic(l).coeffs))


def make_field(spec: FieldSpec | str) -> Field:
    if isinstance(spec, str):
        spec = parse_field_spec(spec)
    p = spec.characteristic
    if p and not _is_prime(p):
        raise InvalidSpec(f"characteristic {p} is not prime")
    if spec.q_kind == "one":
        return PrimeField(spec) if p else RationalField(spec)
    l = spec.l
    if l is None or l < 1:
        raise InvalidSpec("root of unity order must be positive")
    if p == 0:
        if spec.q_kind == "explicit":
            raise InvalidSpec("an explicit modulus is only supported in positive characteristic")
        return QuotientField(spec, up.QQ, _sigma_mod(up.QQ, l), l)
    if math.gcd(p, l) != 1:
        raise InvalidSpec(f"no primitive {l}-th root of unity in characteristic {p}: gcd({p}, {l}) != 1")
    K = up.GF(p)
    sigma = _sigma_mod(K, l)
    d = multiplicative_order(p, l)
    if spec.q_kind == "explicit":
        g = up.normalize(K, list(spec.g))
        if len(g) < 2:
            raise InvalidSpec("explicit modulus must be nonconstant mod p")
        g = up.monic(K, g)
        if up.rem(K, sigma, g):
            raise InvalidSpec(f"g does not divide sigma_{l} mod {p}")
        # sigma_l is squarefree mod p with all irreducible factors of degree d
        if len(g) - 1 != d:
            raise InvalidSpec(f"g is reducible: irreducible factors of sigma_{l} mod {p} have degree {d}")
        return QuotientField(spec, K, g, l)
    factors = up.equal_degree_factors(K, sigma, d, random.Random(0))
    g = min(factors, key=lambda f: tuple(reversed(f)))
    return QuotientField(spec, K, g, l)


def specialize(field: Field, p: LaurentPoly):
    return field.specialize(p)


def invert(field: Field, x):
    return field.invert(x)
