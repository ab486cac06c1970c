"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import bench
from .constraint import ORIENTATIONS, gs_lists_by_constraint
from .egs import egs_female, egs_male, full_gs_lists
from .instance import InstanceError, generate_random, generate_random_smi, load_instance, render_instance
from .oracle import enumerate_stable_bruteforce, is_stable
from .search import ScoreTables, enumerate_all, sex_equal_objective, solve_sex_equal

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_scores(path: str, n: int) -> list[list[int]]:
    rows = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            try:
                rows.append([int(t) for t in s.split()])
            except ValueError:
                raise InstanceError(f"{path}: non-integer score", lineno) from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InstanceError(f"{path}: expected {n} rows of {n} scores")
    return rows


def cmd_gs_lists(args) -> int:
    inst = load_instance(args.file)
    orientation = "full" if args.full else args.orientation
    if args.via == "egs":
        lists = {"male": egs_male, "female": egs_female, "full": full_gs_lists}[orientation](inst)
    else:
        lists = gs_lists_by_constraint(inst, orientation)
    if args.format == "json":
        print(json.dumps({"men": {str(k): v for k, v in lists.men.items()},
                          "women": {str(k): v for k, v in lists.women.items()}}))
    else:
        sys.stdout.write(lists.render())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    inst = load_instance(args.file)
    result = enumerate_all(inst)
    ordered = sorted(result.matchings, key=lambda m: m.pairs)
    if args.format == "json":
        print(json.dumps({"solutions": len(ordered), "fails": result.fails, "nodes": result.nodes,
                          "matchings": [list(map(list, m.pairs)) for m in ordered]}))
    else:
        for m in ordered:
            print(m)
        print(f"# solutions={len(ordered)} fails={result.fails} nodes={result.nodes}")
    return EXIT_OK


def cmd_sex_equal(args) -> int:
    inst = load_instance(args.file)
    scores = None
    if args.m_scores or args.w_scores:
        if not (args.m_scores and args.w_scores):
            raise InstanceError("--m-scores and --w-scores must be given together")
        scores = ScoreTables.from_rows(_read_scores(args.m_scores, inst.n), _read_scores(args.w_scores, inst.n))
    r = solve_sex_equal(inst, scores)
    if args.format == "json":
        print(json.dumps({"matching": list(map(list, r.matching.pairs)), "d": r.objective,
                          "sumM": r.sum_m, "sumW": r.sum_w, "nodes": r.stats.nodes}))
    else:
        print(r.matching)
        print(f"# d={r.objective} sumM={r.sum_m} sumW={r.sum_w} nodes={r.stats.nodes}")
    return EXIT_OK


def cmd_generate(args) -> int:
    gen = generate_random_smi if args.smi else generate_random
    if args.count == 1 and args.out is None:
        sys.stdout.write(render_instance(gen(args.n, args.seed)))
        return EXIT_OK
    out = args.out or "."
    os.makedirs(out, exist_ok=True)
    for k in range(args.count):
        seed = args.seed + k
        path = os.path.join(out, f"sm_n{args.n}_s{seed}{'_smi' if args.smi else ''}.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write(render_instance(gen(args.n, seed)))
        print(path)
    return EXIT_OK


def verify_instance(inst) -> list[str]:
    """Solver-versus-reference discrepancies for one instance."""
    problems = []
    for orient, ref in (("male", egs_male), ("female", egs_female), ("full", full_gs_lists)):
        if gs_lists_by_constraint(inst, orient) != ref(inst):
            problems.append(f"{orient} GS-lists differ from EGS")
    result = enumerate_all(inst)
    oracle = enumerate_stable_bruteforce(inst)
    if set(result.matchings) != oracle or len(result.matchings) != len(oracle):
        problems.append(f"enumeration found {len(result.matchings)} matchings, oracle {len(oracle)}")
    if result.fails:
        problems.append(f"enumeration failed {result.fails} times")
    for m in result.matchings:
        if not is_stable(inst, m)[0]:
            problems.append(f"unstable matching {m}")
    if not inst.smi:
        scores = ScoreTables.unweighted(inst)
        best = min(sex_equal_objective(inst, m, scores)[2] for m in oracle)
        got = solve_sex_equal(inst).objective
        if got != best:
            problems.append(f"sex-equal objective {got}, oracle {best}")
    return problems


def cmd_verify(args) -> int:
    gen = generate_random_smi if args.smi else generate_random
    checked = failed = 0
    for n in range(args.n_min, args.n_max + 1):
        for k in range(args.seeds):
            seed = args.seed + k
            problems = verify_instance(gen(n, seed))
            checked += 1
            if problems:
                failed += 1
                for p in problems:
                    print(f"n={n} seed={seed}: {p}")
    if failed:
        print(f"{failed} of {checked} instances failed")
        return EXIT_VERIFY
    print(f"all passed ({checked} instances)")
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = bench.run_bench(args.n, args.count, args.seed, sex_equal=not args.skip_se, workers=args.workers)
    fmt = "table" if args.table else args.format
    sys.stdout.write(bench.render(rows, fmt))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stablecp", description="Stable marriage by constraint propagation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gs-lists", help="print GS-lists of an instance")
    g.add_argument("file")
    g.add_argument("--via", choices=("constraint", "egs"), default="constraint")
    g.add_argument("--orientation", choices=ORIENTATIONS, default="full")
    g.add_argument("--full", action="store_true", help="same as --orientation=full")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(func=cmd_gs_lists)

    e = sub.add_parser("enumerate", help="list every stable matching")
    e.add_argument("file")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("sex-equal", help="find a sex-equal stable matching")
    s.add_argument("file")
    s.add_argument("--m-scores", help="n rows: man i's scores for women 1..n")
    s.add_argument("--w-scores", help="n rows: woman j's scores for men 1..n")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_sex_equal)

    gen = sub.add_parser("generate", help="write random instances")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--smi", action="store_true", help="incomplete lists, each pair kept with p=0.5")
    gen.add_argument("--out", help="output directory (default: stdout for a single instance)")
    gen.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check solver against the references on random instances")
    v.add_argument("--n-min", type=int, default=2)
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--seeds", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--smi", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time the model on random instances")
    b.add_argument("--n", type=int, nargs="+", default=[100, 200, 400])
    b.add_argument("--count", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--format", choices=("csv", "table", "json"), default="csv")
    b.add_argument("--table", action="store_true", help="same as --format=table")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--skip-se", action="store_true", help="skip the sex-equal column")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, OSError, ValueError) as exc:
        print(f"stablecp: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
