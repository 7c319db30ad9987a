"""Instance checks for periodicity and the supporting identities.

Every check returns a :class:`CheckReport` with outcome ``pass``, ``fail``
or ``hypothesis-unsatisfied``; failures always carry a rendered witness.

Validity of l.  The congruence [n + l*k]_alpha == [n]_alpha mod sigma_l
needs sigma_l to be coprime to v_alpha - v_alpha^-1, i.e. l must not divide
2*d_alpha.  The matrix congruence additionally divides by path factorials,
so sigma_l must not divide [t]_alpha for any run length t that occurs,
i.e. l must not divide 2*d_alpha*t for 1 <= t <= c_alpha(nu).  For odd l
coprime to every d_alpha both conditions reduce to l > c_alpha(nu).
Instances outside this range are reported as hypothesis-unsatisfied
unless ``force`` is set, in which case the comparison is run and its
outcome recorded.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

from .characters import weight_multiplicity
from .coefficients import Field
from .gram import gram_matrix
from .laurent import ZERO, LaurentPoly, cyclotomic, mod_cyclotomic, qbinom, qint
from .pathspace import PathVector, enumerate_paths, epsilon_divided, height, phi_divided, render_path
from .rootsystem import RootSystem

PASS = "pass"
FAIL = "fail"
UNSAT = "hypothesis-unsatisfied"
OUTCOMES = (PASS, FAIL, UNSAT)


@dataclass
class CheckReport:
    name: str
    instance: dict
    outcome: str
    witness: str | None = None

    def __post_init__(self):
        if self.outcome == FAIL and not self.witness:
            raise ValueError("a failing report needs a witness")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "CheckReport":
        return cls(**json.loads(line))

    @property
    def passed(self) -> bool:
        return self.outcome == PASS


def summarize(reports: Iterable[CheckReport]) -> dict[str, int]:
    counts = dict.fromkeys(OUTCOMES, 0)
    for r in reports:
        counts[r.outcome] += 1
    return counts


def validity_obstruction(rs: RootSystem, l: int, nu: Sequence[int] | None = None) -> str | None:
    """Why l is outside the range where the cyclotomic congruences are
    guaranteed, or None if it is inside."""
    for a, d in enumerate(rs.d):
        if (2 * d) % l == 0:
            return f"l={l} divides 2*d_{a}={2 * d}"
        if nu is not None:
            for t in range(2, nu[a] + 1):
                if (2 * d * t) % l == 0:
                    return f"sigma_{l} divides the path factorial factor [{t}]_{a} (l | 2*d_{a}*{t})"
    return None


def _fmt(w) -> str:
    return ",".join(map(str, w))


def _shift(w, l, g):
    return tuple(x + l * y for x, y in zip(w, g))


def check_qint_periodicity(rs: RootSystem, lam, gamma, l: int, force: bool = False) -> CheckReport:
    lam, gamma = tuple(lam), tuple(gamma)
    inst = {"system": rs.name, "lambda": list(lam), "gamma": list(gamma), "l": l, "force": force}
    name = "qint_periodicity"
    if not any(gamma):
        return CheckReport(name, inst, PASS)
    why = validity_obstruction(rs, l)
    if why and not force:
        return CheckReport(name, inst, UNSAT, why)
    shifted = _shift(lam, l, gamma)
    for a in range(rs.rank):
        d = rs.d[a]
        diff = qint(shifted[a], d) - qint(lam[a], d)
        r = mod_cyclotomic(diff, l)
        if not r.is_zero():
            return CheckReport(name, inst, FAIL,
                               f"alpha={a}: [{shifted[a]}]_{a} - [{lam[a]}]_{a} = {diff} "
                               f"== {r} mod sigma_{l}")
    return CheckReport(name, inst, PASS)


def check_matrix_congruence(rs: RootSystem, lam, gamma, l: int, nu, force: bool = False) -> CheckReport:
    lam, gamma, nu = tuple(lam), tuple(gamma), tuple(nu)
    inst = {"system": rs.name, "lambda": list(lam), "gamma": list(gamma), "l": l,
            "height": list(nu), "force": force}
    name = "matrix_congruence"
    if not any(gamma):
        return CheckReport(name, inst, PASS)
    if not force:
        if any(c >= l for c in nu):
            return CheckReport(name, inst, UNSAT, f"l={l} is not larger than every coefficient of {nu}")
        why = validity_obstruction(rs, l, nu)
        if why:
            return CheckReport(name, inst, UNSAT, why)
    shifted = _shift(lam, l, gamma)
    a0 = gram_matrix(rs, lam, nu)
    a1 = gram_matrix(rs, shifted, nu)
    for i, p in enumerate(a0.paths):
        for j in range(i, len(a0.paths)):
            diff = a1.entries[i][j] - a0.entries[i][j]
            r = mod_cyclotomic(diff, l)
            if not r.is_zero():
                return CheckReport(name, inst, FAIL,
                                   f"entry ({render_path(p)}, {render_path(a0.paths[j])}): "
                                   f"{a1.entries[i][j]} - ({a0.entries[i][j]}) == {r} mod sigma_{l}")
    return CheckReport(name, inst, PASS)


def check_periodicity_theorem(field: Field, rs: RootSystem, lam, mu, gamma, l: int | None = None,
                              force: bool = False) -> CheckReport:
    """dim L(lam)_mu == dim L(lam + l*gamma)_{mu + l*gamma}.

    With q = 1 in characteristic p this is the l = p^r statement, which is
    checked without the validity filter.
    """
    lam, mu, gamma = tuple(lam), tuple(mu), tuple(gamma)
    if l is None:
        l = field.spec.l
    if l is None:
        raise ValueError(f"field {field.spec} has no root of unity order; pass l explicitly")
    inst = {"system": rs.name, "field": str(field.spec), "lambda": list(lam), "mu": list(mu),
            "gamma": list(gamma), "l": l, "force": force}
    name = "periodicity_theorem"
    if not any(gamma):
        return CheckReport(name, inst, PASS)
    nu = rs.root_decompose(tuple(a - b for a, b in zip(lam, mu)))
    if nu is None:
        return CheckReport(name, inst, UNSAT, "mu is not <= lambda")
    if any(c >= l for c in nu):
        return CheckReport(name, inst, UNSAT, f"l={l} is not larger than every coefficient of {nu}")
    if not field.is_zero(field.specialize(cyclotomic(l).to_laurent())):
        return CheckReport(name, inst, UNSAT, f"sigma_{l}(q) != 0 in {field.spec}")
    if not field.q_is_one and not force:
        why = validity_obstruction(rs, l, nu)
        if why:
            return CheckReport(name, inst, UNSAT, why)
    d0 = weight_multiplicity(field, rs, lam, mu)
    d1 = weight_multiplicity(field, rs, _shift(lam, l, gamma), _shift(mu, l, gamma))
    if d0 != d1:
        return CheckReport(name, inst, FAIL, f"dim L({_fmt(lam)})_({_fmt(mu)}) = {d0} but "
                           f"dim L({_fmt(_shift(lam, l, gamma))})_({_fmt(_shift(mu, l, gamma))}) = {d1}")
    inst["dim"] = d0
    return CheckReport(name, inst, PASS)


def _qbinom_or_zero(n: int, r: int) -> LaurentPoly:
    return qbinom(n, r) if r >= 0 else ZERO


def check_qbinom_identity(a: int, b: int, c: int) -> CheckReport:
    """[a] [b over c] == [a-c] [b-1 over c] + [a+b-c] [b-1 over c-1]."""
    inst = {"a": a, "b": b, "c": c}
    if c < 0:
        return CheckReport("qbinom_identity", inst, UNSAT, "c must be nonnegative")
    lhs = qint(a) * qbinom(b, c)
    rhs = qint(a - c) * qbinom(b - 1, c) + qint(a + b - c) * _qbinom_or_zero(b - 1, c - 1)
    if lhs != rhs:
        return CheckReport("qbinom_identity", inst, FAIL, f"lhs = {lhs}, rhs = {rhs}")
    return CheckReport("qbinom_identity", inst, PASS)


def commutation_sides(rs: RootSystem, lam, alpha: int, beta: int, m: int, n: int, path) -> tuple[PathVector, PathVector]:
    """Both sides of the divided-power commutation relation applied to a path."""
    lam, path = tuple(lam), tuple(path)
    x = PathVector.basis(path)
    lhs = epsilon_divided(rs, lam, alpha, m, phi_divided(rs, beta, n, x))
    if alpha != beta:
        return lhs, phi_divided(rs, beta, n, epsilon_divided(rs, lam, alpha, m, x))
    # <mu, alpha^vee> for the weight mu = lam - ht(path) of x
    ht = height(path, rs.rank)
    k = lam[alpha] - sum(ht[j] * rs.cartan[j][alpha] for j in range(rs.rank))
    d = rs.d[alpha]
    rhs = PathVector()
    for r in range(min(m, n) + 1):
        term = phi_divided(rs, alpha, n - r, epsilon_divided(rs, lam, alpha, m - r, x))
        rhs = rhs + term.scale(qbinom(k + m - n, r, d))
    return lhs, rhs


def check_commutation(rs: RootSystem, lam, alpha: int, beta: int, m: int, n: int, path) -> CheckReport:
    inst = {"system": rs.name, "lambda": list(lam), "alpha": alpha, "beta": beta, "m": m, "n": n,
            "path": render_path(path)}
    if m < 1 or n < 1:
        return CheckReport("commutation", inst, UNSAT, "m and n must be positive")
    lhs, rhs = commutation_sides(rs, lam, alpha, beta, m, n, path)
    if lhs != rhs:
        return CheckReport("commutation", inst, FAIL, f"lhs = {lhs}; rhs = {rhs}")
    return CheckReport("commutation", inst, PASS)


# -- random instance batteries ---------------------------------------------


def _rand_vec(rng: random.Random, n: int, lo: int, hi: int) -> tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(n))


def periodicity_instances(rs: RootSystem, field: Field, count: int, rng: random.Random,
                          l: int | None = None, max_height: int = 3, lam_bound: int = 6,
                          gamma_bound: int = 2, force: bool = False) -> list[tuple]:
    l = l if l is not None else field.spec.l
    out = []
    for _ in range(count):
        lam = _rand_vec(rng, rs.rank, -lam_bound, lam_bound)
        c = _rand_vec(rng, rs.rank, 0, min(l - 1, max_height))
        mu = tuple(a - b for a, b in zip(lam, rs.root_to_weight(c)))
        gamma = _rand_vec(rng, rs.rank, -gamma_bound, gamma_bound)
        out.append((field, rs, lam, mu, gamma, l, force))
    return out


def congruence_instances(rs: RootSystem, count: int, rng: random.Random, ls: Sequence[int] = (3, 4, 5, 6, 7),
                         max_height: int = 3, lam_bound: int = 6, gamma_bound: int = 2,
                         force: bool = False) -> list[tuple]:
    out = []
    for _ in range(count):
        l = rng.choice(list(ls))
        lam = _rand_vec(rng, rs.rank, -lam_bound, lam_bound)
        gamma = _rand_vec(rng, rs.rank, -gamma_bound, gamma_bound)
        nu = _rand_vec(rng, rs.rank, 0, max_height)
        out.append((rs, lam, gamma, l, nu, force))
    return out


def identity_instances(count: int, rng: random.Random) -> list[tuple]:
    return [(rng.randint(-20, 20), rng.randint(-20, 20), rng.randint(0, 10)) for _ in range(count)]


def commutation_instances(rs: RootSystem, rng: random.Random, max_len: int = 5, max_mn: int = 3,
                          lam_bound: int = 6, count: int | None = None) -> list[tuple]:
    """Every path of length <= max_len with every (alpha, beta, m, n), one random
    lambda per path; or ``count`` random draws from that set."""
    paths = [p for k in range(max_len + 1)
             for nu in _compositions(k, rs.rank) for p in enumerate_paths(nu)]
    paths.sort(key=lambda p: (len(p), p))
    combos = [(a, b, m, n) for a in range(rs.rank) for b in range(rs.rank)
              for m in range(1, max_mn + 1) for n in range(1, max_mn + 1)]
    if count is None:
        out = []
        for p in paths:
            lam = _rand_vec(rng, rs.rank, -lam_bound, lam_bound)
            out.extend((rs, lam, a, b, m, n, p) for a, b, m, n in combos)
        return out
    out = []
    for _ in range(count):
        p = rng.choice(paths)
        a, b, m, n = rng.choice(combos)
        out.append((rs, _rand_vec(rng, rs.rank, -lam_bound, lam_bound), a, b, m, n, p))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _star(args):
    fn, a = args
    return fn(*a)


def run_checks(check: Callable[..., CheckReport], instances: Sequence[tuple], jobs: int = 1) -> list[CheckReport]:
    """Run a check over argument tuples; results come back in input order."""
    if jobs <= 1 or len(instances) < 2:
        return [check(*a) for a in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_star, [(check, a) for a in instances], chunksize=max(1, len(instances) // (4 * jobs))))
