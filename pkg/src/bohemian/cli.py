"""Command-line interface: ``bohemian <command> [flags]``.

Every command writes one machine-readable result to stdout (JSON, JSONL or
CSV) and nothing else, so identical flags give byte-identical output.
Progress and timings go to stderr.

Exit codes: 0 success, 2 bad input, 3 verification mismatch, 4 over budget.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional

from . import compositions, maxheight
from .charpoly import charpoly_oracle, charpoly_result
from .core import (
    POPULATIONS,
    FamilySpec,
    Population,
    SubdiagAngle,
    matrix_from_json,
    parse_scalar,
    scalar_to_json,
    to_dense,
)
from .enumeration import (
    PREDICATES,
    BudgetExceeded,
    EnumerationPlan,
    charpoly_database,
    default_budget,
    enumerate_family,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4

FAMILIES = {
    "full": ("full", False),
    "uh": ("upper_hessenberg", False),
    "zh": ("upper_hessenberg", True),
    "uht": ("uh_toeplitz", False),
}

# options whose values may start with "-" (e.g. "--pop -1,0,1")
_DASH_VALUE_OPTS = ("--pop", "--subdiag")


class InputError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def _err(msg: str) -> None:
    print(f"bohemian: {msg}", file=sys.stderr)


def _height_json(h):
    return h.value if h.is_integer else f"sqrt({h.sq})"


def parse_population(text: str) -> Population:
    if text in POPULATIONS:
        return POPULATIONS[text]
    try:
        return Population.parse(text)
    except ValueError as exc:
        raise InputError(f"bad population {text!r}: {exc}") from None


def parse_subdiag(text: Optional[str], n: int):
    if text is None:
        return SubdiagAngle(0)
    try:
        angles = [SubdiagAngle.from_value(parse_scalar(v)) for v in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad subdiagonal {text!r}: {exc}") from None
    if len(angles) == 1:
        return angles[0]
    if len(angles) != n - 1:
        raise InputError(f"--subdiag needs 1 or {n - 1} units, got {len(angles)}")
    return tuple(angles)


def family_from_args(args) -> FamilySpec:
    shape, zero_diag = FAMILIES[args.family]
    zero_diag = zero_diag or getattr(args, "zero_diagonal", False)
    try:
        return FamilySpec(shape, args.n, parse_population(args.pop),
                          parse_subdiag(args.subdiag, args.n), zero_diag)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _add_family_flags(p: argparse.ArgumentParser, default_family: str = "uh") -> None:
    p.add_argument("--family", choices=sorted(FAMILIES), default=default_family,
                   help="full: all n*n entries; uh: upper Hessenberg; zh: upper Hessenberg "
                        "with zero diagonal; uht: upper Hessenberg Toeplitz")
    p.add_argument("--n", type=int, required=True, help="dimension")
    p.add_argument("--pop", default="-1,0,1",
                   help="comma-separated entries such as -1,0,1 or 0,i,-i, or a named "
                        f"population ({', '.join(POPULATIONS)}); default -1,0,1")
    p.add_argument("--subdiag", default=None,
                   help="subdiagonal unit (1, i, -1, -i), or n-1 comma-separated units; default 1")
    p.add_argument("--zero-diagonal", action="store_true", help="fix the diagonal at 0")


def _read_matrix(args):
    try:
        if args.file:
            with open(args.file) as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        return matrix_from_json(json.loads(text))
    except OSError as exc:
        raise InputError(f"cannot read matrix: {exc}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed matrix JSON: {exc}") from None


def cmd_charpoly(args) -> int:
    m = _read_matrix(args)
    res = charpoly_result(m)
    out = {"coeffs": [scalar_to_json(c) for c in res.poly.coeffs],
           "height": _height_json(res.char_height), "mu": res.mu}
    code = EXIT_OK
    if args.oracle:
        ref = charpoly_oracle(to_dense(m))
        out["oracle_agrees"] = ref == res.poly
        if ref != res.poly:
            _err(f"recurrence {res.poly} disagrees with determinant oracle {ref}")
            code = EXIT_MISMATCH
    _emit(out)
    return code


def _progress(done, total, _res):
    print(f"shard {done}/{total}", file=sys.stderr)


def cmd_enumerate(args) -> int:
    family = family_from_args(args)
    preds = [p for p in args.predicates.split(",") if p]
    budget = None if not args.long_run else family.cardinality
    if args.budget is not None and not args.long_run:
        budget = args.budget
    try:
        plan = EnumerationPlan(family, frozenset(preds), jobs=args.jobs,
                               partitions=args.partitions or args.jobs, budget=budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        res = enumerate_family(plan, progress=_progress)
    except BudgetExceeded as exc:
        _err(str(exc))
        return EXIT_BUDGET
    out = {"family": family.describe(), **res.to_json(), "seed": None}
    _emit(out)
    print(f"elapsed_s {res.elapsed:.3f}", file=sys.stderr)
    return EXIT_OK


def wilson_interval(k: int, n: int, z: float = 1.959963984540054):
    if n == 0:
        return None
    p = k / n
    denom = 1 + z * z / n
    centre = (p + z * z / (2 * n)) / denom
    half = z * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom
    return [max(0.0, centre - half), min(1.0, centre + half)]


def cmd_sample(args) -> int:
    family = family_from_args(args)
    if args.samples < 0:
        raise InputError("--samples must be >= 0")
    try:
        plan = EnumerationPlan(family, frozenset({args.predicate}), mode="sampled",
                               samples=args.samples, seed=args.seed, jobs=args.jobs,
                               partitions=args.partitions or args.jobs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    res = enumerate_family(plan, progress=_progress)
    k = res.counts.get(args.predicate, 0)
    n = res.total
    out = {"family": family.describe(), "predicate": args.predicate, "samples": n,
           "seed": args.seed, "count": k, "fraction": k / n if n else None,
           "ci95": wilson_interval(k, n)}
    _emit(out)
    print(f"elapsed_s {res.elapsed:.3f}", file=sys.stderr)
    return EXIT_OK


def cmd_maxheight(args) -> int:
    if args.n_max < 2:
        raise InputError("--n-max must be >= 2")
    if args.precision < 10:
        raise InputError("--precision must be >= 10")
    rows = maxheight.asymptotic_series(args.n_max, args.precision)
    text = maxheight.series_csv(rows)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = [r.n for r in rows if r.n >= 2 and not r.fib_lower < r.tau < r.fib_upper]
    if bad:
        _err(f"Fibonacci bounds fail at n = {bad}")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_identities(args) -> int:
    if args.n_max < 0:
        raise InputError("--n-max must be >= 0")
    report = maxheight.run_identities(args.n_max)
    for name, ok, detail in report:
        _emit({"identity": name, "ok": ok, "n_max": args.n_max, "failure": detail})
    return EXIT_OK if all(ok for _, ok, _ in report) else EXIT_MISMATCH


def cmd_compositions(args) -> int:
    if args.n < 0:
        raise InputError("--n must be >= 0")
    mp = compositions.composition_poly(args.n)
    out = {"n": args.n, "poly": mp.to_json(), "monomials": len(mp), "compositions": mp.total()}
    if args.list:
        try:
            out["list"] = compositions.compositions_oracle(args.n)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    _emit(out)
    return EXIT_OK


def cmd_db_export(args) -> int:
    family = family_from_args(args)
    budget = family.cardinality if args.long_run else args.budget
    try:
        records = charpoly_database(family, budget=budget, jobs=args.jobs,
                                    partitions=args.partitions or args.jobs)
    except BudgetExceeded as exc:
        _err(str(exc))
        return EXIT_BUDGET
    lines = []
    for r in records:
        lines.append(json.dumps({
            "coeffs": [scalar_to_json(c) for c in r["poly"].coeffs],
            "height": _height_json(r["height"]),
            "mu": r["mu"],
            "matrix_count": r["matrix_count"],
            "example_matrix_index": r["example_matrix_index"],
        }) + "\n")
    if args.out:
        with open(args.out, "w") as fh:
            fh.writelines(lines)
        _emit({"family": family.describe(), "records": len(records), "out": args.out})
    else:
        sys.stdout.writelines(lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bohemian",
                                     description="Exact computations on Bohemian matrix families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="characteristic polynomial of one matrix (JSON)")
    p.add_argument("--file", help="read the matrix from this file instead of stdin")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the determinant oracle; exit 3 on mismatch")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("enumerate", help="exhaustive predicate counts over a family")
    _add_family_flags(p)
    p.add_argument("--predicates", default="singular",
                   help=f"comma-separated subset of {','.join(PREDICATES)}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--partitions", type=int, default=None, help="index-space shards (default: jobs)")
    p.add_argument("--budget", type=int, default=None,
                   help=f"max family size (default {default_budget()}, env BOHEMIAN_BUDGET)")
    p.add_argument("--long-run", action="store_true", help="lift the budget")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="Monte Carlo estimate of one predicate")
    _add_family_flags(p, default_family="full")
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--predicate", default="singular",
                   choices=[q for q in PREDICATES if q not in ("distinct_charpolys",
                                                               "max_char_height_attained")])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--partitions", type=int, default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("maxheight", help="tau_n, mu_n, bounds and C_n as CSV")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--precision", type=int, default=50, help="decimal digits")
    p.add_argument("--csv", default=None, help="write here instead of stdout")
    p.set_defaults(func=cmd_maxheight)

    p = sub.add_parser("identities", help="coefficient identity sweeps")
    p.add_argument("--n-max", type=int, default=30)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("compositions", help="composition polynomial p_{n,0}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="also list every composition")
    p.set_defaults(func=cmd_compositions)

    p = sub.add_parser("db-export", help="distinct characteristic polynomials as JSONL")
    _add_family_flags(p)
    p.add_argument("--out", default=None, help="JSONL path (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--partitions", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--long-run", action="store_true")
    p.set_defaults(func=cmd_db_export)
    return parser


def _join_dash_values(argv: List[str]) -> List[str]:
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _DASH_VALUE_OPTS and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_dash_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        _err("--jobs must be >= 1")
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
