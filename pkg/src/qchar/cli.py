"""Command-line front end.

Weights are given in fundamental-weight coordinates, comma separated:
``--lambda 1,1`` is lambda = w1 + w2, *not* alpha1 + alpha2.  Heights
(``--height``) are nonnegative coefficients on the simple roots.

Examples::

    qchar mult --system A2 --field F3@1 --lambda 1,1 --mu 0,0
    qchar table --system B2 --field Q@zeta5 --lambda 2,1 --height 3,3 --format csv
    qchar gram --system A2 --lambda 1,1 --height 1,1 --format json
    qchar verify identities --samples 100 --seed 7
    qchar verify periodicity --system A2 --field Q@zeta5 --samples 50
    qchar selftest

Exit status: 0 on success, 1 if any check fails, 2 on usage or spec errors.
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import verify as vf
from .characters import MultiplicityTable, character_table, weight_multiplicity
from .coefficients import InvalidSpec, make_field
from .gram import gram_matrix
from .oracles import freudenthal_table, lucas_predictor
from .pathspace import render_path
from .rootsystem import load_root_system

FIELD_HELP = "coefficient field: Q@1 | F<p>@1 | Q@zeta<l> | F<p>@zeta<l>[g=c0,c1,...] (g low to high)"
SYSTEM_HELP = "named type (A1..A4, B2, B3, C3, D4, F4, G2) or path to a JSON file {\"cartan\": [[...]]}"


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qchar", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    def system(p, required=True):
        p.add_argument("--system", required=required, help=SYSTEM_HELP)

    p = sub.add_parser("mult", parents=[common], help="dimension of one weight space")
    system(p)
    p.add_argument("--field", required=True, help=FIELD_HELP)
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    p.add_argument("--mu", type=_int_list, required=True)

    p = sub.add_parser("table", parents=[common], help="weight multiplicities in a height box")
    system(p)
    p.add_argument("--field", required=True, help=FIELD_HELP)
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    p.add_argument("--height", type=_int_list, required=True,
                   help="bound on the simple-root coefficients of lambda - mu")

    p = sub.add_parser("gram", parents=[common], help="dump a Gram matrix")
    system(p)
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    p.add_argument("--height", type=_int_list, required=True, help="simple-root coefficients of the height")

    p = sub.add_parser("verify", parents=[common], help="run a randomized check battery (JSON lines)")
    p.add_argument("kind", choices=("periodicity", "congruence", "identities", "commutation", "qint"))
    system(p, required=False)
    p.add_argument("--field", help=FIELD_HELP + " (periodicity)")
    p.add_argument("--l", type=_positive, help="order l (defaults to the field's; congruence draws from 3..7)")
    p.add_argument("--samples", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-height", type=int, default=3, help="per-root height cap for random instances (<= 5)")
    p.add_argument("--force", action="store_true", help="run instances outside the validity range")

    p = sub.add_parser("selftest", parents=[common], help="oracle agreement suites")
    p.add_argument("--quick", action="store_true", help="smaller instance ranges")
    return parser


def _load_system(spec: str | None):
    if spec is None:
        raise UsageError("--system is required for this command")
    try:
        return load_root_system(spec)
    except (KeyError, ValueError, OSError) as e:
        raise UsageError(f"bad --system {spec!r}: {e}") from None


def _check_rank(rs, **vectors):
    for name, v in vectors.items():
        if v is not None and len(v) != rs.rank:
            raise UsageError(f"--{name} has {len(v)} coordinates but {rs.name} has rank {rs.rank}")


def _emit_table(table: MultiplicityTable, fmt: str, out) -> None:
    table.entries = dict(sorted(table.entries.items()))
    if fmt == "json":
        print(table.to_json(), file=out)
    elif fmt == "csv":
        out.write(table.to_csv())
    else:
        for mu, n in table.entries.items():
            print(",".join(map(str, mu)), n, file=out)


def cmd_mult(args, out) -> int:
    rs = _load_system(args.system)
    _check_rank(rs, **{"lambda": args.lam, "mu": args.mu})
    field = make_field(args.field)
    n = weight_multiplicity(field, rs, args.lam, args.mu)
    if args.format == "json":
        print(json.dumps({"system": rs.name, "field": str(field.spec), "lambda": list(args.lam),
                          "mu": list(args.mu), "dim": n}), file=out)
    elif args.format == "csv":
        print("dim", n, sep="\n", file=out)
    else:
        print(n, file=out)
    return 0


def _table_row(args):
    field, rs, lam, c = args
    mu = tuple(a - b for a, b in zip(lam, rs.root_to_weight(c)))
    return mu, weight_multiplicity(field, rs, lam, mu)


def cmd_table(args, out) -> int:
    rs = _load_system(args.system)
    _check_rank(rs, **{"lambda": args.lam, "height": args.height})
    if any(x < 0 for x in args.height):
        raise UsageError("--height must be nonnegative")
    field = make_field(args.field)
    if args.jobs == 1:
        table = character_table(field, rs, args.lam, args.height)
    else:
        work = [(field, rs, args.lam, c) for c in itertools.product(*(range(b + 1) for b in args.height))]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = dict(pool.map(_table_row, work))
        table = MultiplicityTable(rs.name, str(field.spec), args.lam, args.height, rows)
    _emit_table(table, args.format, out)
    return 0


def cmd_gram(args, out) -> int:
    rs = _load_system(args.system)
    _check_rank(rs, **{"lambda": args.lam, "height": args.height})
    if any(x < 0 for x in args.height):
        raise UsageError("--height must be nonnegative")
    g = gram_matrix(rs, args.lam, args.height)
    if args.format == "json":
        print(g.to_json(), file=out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["path"] + [render_path(p) for p in g.paths])
        for p, row in zip(g.paths, g.entries):
            w.writerow([render_path(p)] + [str(x) for x in row])
    else:
        for p, row in zip(g.paths, g.entries):
            print(render_path(p), " | ".join(str(x) for x in row), sep="  ", file=out)
    return 0


def _instances(args, rng: random.Random):
    kind = args.kind
    if kind == "identities":
        return vf.check_qbinom_identity, vf.identity_instances(args.samples, rng)
    rs = _load_system(args.system or ("A2" if kind != "qint" else "A1"))
    if not 0 <= args.max_height <= 5:
        raise UsageError("--max-height must be between 0 and 5")
    if kind == "commutation":
        return vf.check_commutation, vf.commutation_instances(rs, rng, count=args.samples)
    if kind == "congruence":
        ls = (args.l,) if args.l else (3, 4, 5, 6, 7)
        return vf.check_matrix_congruence, vf.congruence_instances(
            rs, args.samples, rng, ls=ls, max_height=args.max_height, force=args.force)
    if kind == "qint":
        ls = (args.l,) if args.l else (2, 3, 4, 5, 6, 7)
        inst = []
        for _ in range(args.samples):
            lam = tuple(rng.randint(-6, 6) for _ in range(rs.rank))
            gamma = tuple(rng.randint(-2, 2) for _ in range(rs.rank))
            inst.append((rs, lam, gamma, rng.choice(ls), args.force))
        return vf.check_qint_periodicity, inst
    # periodicity
    if not args.field:
        raise UsageError("verify periodicity needs --field")
    field = make_field(args.field)
    l = args.l or field.spec.l
    if l is None:
        raise UsageError(f"field {field.spec} fixes no order l; pass --l (a power of the characteristic)")
    return vf.check_periodicity_theorem, vf.periodicity_instances(
        rs, field, args.samples, rng, l=l, max_height=args.max_height, force=args.force)


def cmd_verify(args, out) -> int:
    rng = random.Random(args.seed)
    check, instances = _instances(args, rng)
    reports = vf.run_checks(check, instances, args.jobs)
    for r in reports:
        print(r.to_json(), file=out)
    counts = vf.summarize(reports)
    print(json.dumps({"summary": counts, "seed": args.seed, "kind": args.kind}, sort_keys=True), file=out)
    return 1 if counts[vf.FAIL] else 0


def selftest(quick: bool = False, out=sys.stdout) -> int:
    """Pipeline vs. Freudenthal (char 0) and vs. Lucas (rank 1, char p)."""
    q1 = make_field("Q@1")
    failures = 0
    bound = 2 if quick else 3
    for name in ("A1", "A2", "B2", "G2"):
        rs = load_root_system(name)
        lams = [(a,) for a in range(3)] if rs.rank == 1 else [(a, b) for a in range(3) for b in range(3)]
        box = (bound,) * rs.rank
        bad = 0
        for lam in lams:
            want = freudenthal_table(rs, lam, box)
            got = character_table(q1, rs, lam, box).entries
            bad += sum(want[mu] != got[mu] for mu in want)
        failures += bad
        print(f"freudenthal {name}: {'ok' if not bad else f'{bad} mismatches'}", file=out)
    a1 = load_root_system("A1")
    top = 10 if quick else 16
    for p in (2, 3, 5):
        field = make_field(f"F{p}@1")
        bad = sum(weight_multiplicity(field, a1, (m,), (m - 2 * n,)) != lucas_predictor(p, m, n)
                  for m in range(top + 1) for n in range(m + 1))
        failures += bad
        print(f"lucas p={p}: {'ok' if not bad else f'{bad} mismatches'}", file=out)
    return 1 if failures else 0


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.command == "mult":
            return cmd_mult(args, out)
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "gram":
            return cmd_gram(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        return selftest(args.quick, out)
    except (UsageError, InvalidSpec) as e:
        print(f"qchar {args.command}: {e}", file=err)
        return 2


def main() -> None:
    sys.exit(run())
