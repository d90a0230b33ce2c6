"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 verification diff,
3 internal invariant violation or computation failure.

Parabolics are written as block compositions for the classical
families (``--p 2,2`` or ``--p 2,2,2,2'`` with a stroke) and as the
removed simple roots for the exceptional ones (``--p a1,a5``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .blockmodel import generic_orbit_complexity
from .classifier import (
    DEFAULT_RANGES,
    EXCEPTIONAL_FAMILIES,
    classify,
    enumerate_pairs,
    row_record,
    verify_tables,
)
from .complexity import complexity, pair_complexity
from .oracle import dimension_check, tensor_oracle
from .parabolic import (
    ParabolicError,
    classical_system_id,
    parse_composition,
    parse_removed_roots,
)
from .rootsys import RootSystemError, system_id
from .sections import (
    decompose_example1,
    decompose_example2,
    decompose_example2_engine,
    eps_to_fundamental,
    example1_closed_form,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DIFF = 2
EXIT_INTERNAL = 3

ALL_FAMILIES = ("SL", "SO", "Sp") + EXCEPTIONAL_FAMILIES


class UsageError(ValueError):
    pass


@dataclass
class Emitter:
    fmt: str

    def records(self, records: list[dict]) -> None:
        if self.fmt == "json":
            for rec in records:
                print(json.dumps(rec, sort_keys=True))
        elif self.fmt == "tsv":
            if not records:
                return
            keys = list(records[0].keys())
            print("\t".join(keys))
            for rec in records:
                print("\t".join(_tsv_cell(rec.get(k)) for k in keys))
        else:
            for rec in records:
                print("  ".join(f"{k}={_tsv_cell(v)}" for k, v in rec.items()))


def _tsv_cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _parse_spec(family: str, n: int | None, text: str):
    if family in EXCEPTIONAL_FAMILIES:
        return parse_removed_roots(system_id(family), text)
    if n is None:
        raise UsageError(f"--n is required for family {family}")
    return parse_composition(family, n, text)


def _group(family: str, n: int | None):
    if family in EXCEPTIONAL_FAMILIES:
        return system_id(family)
    if n is None:
        raise UsageError(f"--n is required for family {family}")
    return classical_system_id(family, n)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_complexity(args) -> int:
    group = _group(args.family, args.n)
    p = _parse_spec(args.family, args.n, args.p)
    q = _parse_spec(args.family, args.n, args.q)
    print(complexity(group, p, q, tie_break=args.tie_break))
    return EXIT_OK


def cmd_classify(args) -> int:
    rows = classify(args.family, args.n, cmax=args.cmax, tie_break=args.tie_break)
    rows.sort(key=lambda r: (r.complexity, r.pair.sort_key()))
    Emitter(args.format).records([row_record(args.family, args.n, r) for r in rows])
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    families = [args.family] if args.family else list(ALL_FAMILIES)
    tasks = []
    for family in families:
        if family in EXCEPTIONAL_FAMILIES:
            tasks.append((family, None))
        elif args.n:
            tasks.extend((family, n) for n in _parse_range(args.n))
        else:
            lo, hi = DEFAULT_RANGES[family]
            tasks.extend(
                (family, n)
                for n in range(lo, hi + 1)
                if family == "SL" or _valid_size(family, n)
            )
    if args.jobs > 1:
        import multiprocessing as mp

        with mp.Pool(args.jobs) as pool:
            reports = pool.starmap(verify_tables, tasks)
    else:
        reports = [verify_tables(f, n) for f, n in tasks]
    bad = False
    for rep in reports:
        for line in rep.lines():
            print(line)
        bad = bad or not rep.empty
    return EXIT_DIFF if bad else EXIT_OK


def _valid_size(family: str, n: int) -> bool:
    try:
        classical_system_id(family, n)
        return True
    except ParabolicError:
        return False


def cmd_decompose(args) -> int:
    if args.dataset == "example1":
        terms = decompose_example1(args.l, args.p, args.q)
        closed = example1_closed_form(args.l, args.p, args.q)
        group = classical_system_id("Sp", 2 * args.l)
    else:
        m1, m2, m3 = args.m
        terms = decompose_example2_engine(args.q1, args.q2, args.q3, m1, m2, m3)
        closed = decompose_example2(args.q1, args.q2, args.q3, m1, m2, m3)
        group = classical_system_id("SL", args.q1 + args.q2 + args.q3)
    ek = sorted((t.highest_weight, t.multiplicity) for t in terms)
    ck = sorted((t.highest_weight, t.multiplicity) for t in closed)
    if ek != ck:
        print("internal error: engine and closed form disagree", file=sys.stderr)
        return EXIT_INTERNAL
    records = [
        {"weight": list(eps_to_fundamental(group, w)), "multiplicity": m}
        for w, m in ek
    ]
    Emitter(args.format).records(records)
    return EXIT_OK


def cmd_oracle(args) -> int:
    group = _group(args.family, args.n)
    lam = tuple(int(x) for x in args.lam.split(","))
    mu = tuple(int(x) for x in args.mu.split(","))
    terms = tensor_oracle(group, lam, mu, method=args.method)
    if not dimension_check(group, lam, mu, terms):
        print("internal error: dimension conservation failed", file=sys.stderr)
        return EXIT_INTERNAL
    Emitter(args.format).records(
        [{"weight": list(t.highest_weight), "multiplicity": t.multiplicity} for t in terms]
    )
    return EXIT_OK


def _oracle_check_one(task) -> tuple[int, list[str]]:
    pair, seed0, seeds, cap = task
    ce = pair_complexity(pair)
    bad = []
    for seed in range(seed0, seed0 + seeds):
        co = generic_orbit_complexity(pair.p, pair.q, seed=seed, samples=3, n_cap=cap)
        if co != ce:
            bad.append(f"({pair.p} | {pair.q}) engine={ce} oracle={co} seed={seed}")
    return len(bad), bad


def cmd_oracle_check(args) -> int:
    family, n = args.family, args.n
    if family in EXCEPTIONAL_FAMILIES:
        raise UsageError("oracle-check applies to the classical families")
    classical_system_id(family, n)
    pairs = enumerate_pairs(family, n)
    tasks = [(pair, args.seed, args.seeds, args.cap) for pair in pairs]
    if args.jobs > 1:
        import multiprocessing as mp

        with mp.Pool(args.jobs) as pool:
            results = pool.map(_oracle_check_one, tasks)
    else:
        results = [_oracle_check_one(t) for t in tasks]
    mismatches = 0
    for count, lines in results:
        mismatches += count
        for line in lines:
            print(f"disagreement: {family}_{n} {line}", file=sys.stderr)
    print(f"{family}_{n}: {len(pairs)} orbits x {args.seeds} seeds, {mismatches} disagreements")
    return EXIT_INTERNAL if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dfv",
        description="Complexity of double flag varieties and tensor decompositions",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, need_n: bool = True):
        p.add_argument("--family", required=True, choices=ALL_FAMILIES)
        if need_n:
            p.add_argument("--n", type=int, default=None, help="matrix size (classical families)")
        p.add_argument("--format", default="pretty", choices=("json", "tsv", "pretty"))
        p.add_argument("--tie-break", default="lex", choices=("lex", "revlex"))
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    p = sub.add_parser("complexity", help="complexity of one pair of parabolics")
    add_common(p)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("classify", help="all pairs of complexity <= cmax")
    add_common(p)
    p.add_argument("--cmax", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-tables", help="diff the classification against the bundled tables")
    p.add_argument("--family", default=None, choices=ALL_FAMILIES)
    p.add_argument("--n", default=None, help="size or range, e.g. 8 or 4..10")
    p.add_argument("--format", default="pretty", choices=("json", "tsv", "pretty"))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("decompose", help="tensor decompositions from bundled divisor data")
    dsub = p.add_subparsers(dest="dataset", required=True)
    p1 = dsub.add_parser("example1", help="Sp pair (1, 2l-2, 1) x (l, l)")
    p1.add_argument("--l", type=int, required=True)
    p1.add_argument("--p", type=int, required=True)
    p1.add_argument("--q", type=int, required=True)
    p1.add_argument("--format", default="pretty", choices=("json", "tsv", "pretty"))
    p1.set_defaults(func=cmd_decompose, dataset="example1")
    p2 = dsub.add_parser("example2", help="SL pair (3, n-3) x (q1, q2, q3)")
    p2.add_argument("--q1", type=int, required=True)
    p2.add_argument("--q2", type=int, required=True)
    p2.add_argument("--q3", type=int, required=True)
    p2.add_argument("--m", type=lambda s: tuple(int(x) for x in s.split(",")), required=True,
                    help="m1,m2,m3")
    p2.add_argument("--format", default="pretty", choices=("json", "tsv", "pretty"))
    p2.set_defaults(func=cmd_decompose, dataset="example2")

    p = sub.add_parser("oracle", help="tensor product of two irreducibles")
    add_common(p)
    p.add_argument("--lam", required=True, help="fundamental coordinates, e.g. 1,0")
    p.add_argument("--mu", required=True)
    p.add_argument("--method", default="peel", choices=("peel", "reflection", "lr"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("oracle-check", help="stripping engine vs matrix oracle agreement")
    add_common(p)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--cap", type=int, default=20, help="largest matrix size the oracle accepts")
    p.set_defaults(func=cmd_oracle_check)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ParabolicError, RootSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # computation failure: distinct exit code
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
