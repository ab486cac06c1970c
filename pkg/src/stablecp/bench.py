"""Benchmark harness: GS-lists, all solutions and sex-equal timing on random instances.

CSV columns (stable):

    kind        "run" for one instance, "mean" for the per-n aggregate
    n, seed     instance size and generator seed ("" on mean rows)
    build_s     building the male-oriented model
    ac_s        male-oriented root propagation (the GS-lists)
    full_ac_s   gender-free model build plus root propagation
    all_s       gender-free model build plus enumeration of all stable matchings
    se_s        sex-equal branch and bound to proven optimality ("" if skipped)
    solutions   number of stable matchings
    proposals   proposals made during male-oriented root propagation
    removals    values removed during male-oriented root propagation

Times are wall-clock seconds from ``time.perf_counter``.
"""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .constraint import StableMarriageConstraint
from .instance import generate_random
from .kernel import Solver
from .search import enumerate_all, solve_sex_equal

__all__ = ["COLUMNS", "MAX_N", "bench_one", "run_bench", "render"]

COLUMNS = ["kind", "n", "seed", "build_s", "ac_s", "full_ac_s", "all_s", "se_s",
           "solutions", "proposals", "removals"]
MAX_N = 5000


def bench_one(n: int, seed: int, sex_equal: bool = True) -> dict:
    inst = generate_random(n, seed)

    t0 = time.perf_counter()
    solver = Solver()
    c = StableMarriageConstraint(solver, inst, "male", enhanced=False)
    t1 = time.perf_counter()
    if not solver.propagate():
        raise RuntimeError(f"root propagation failed for n={n} seed={seed}")
    t2 = time.perf_counter()
    row = {"kind": "run", "n": n, "seed": seed, "build_s": t1 - t0, "ac_s": t2 - t1,
           "proposals": c.proposals, "removals": solver.removals}

    t0 = time.perf_counter()
    full = Solver()
    StableMarriageConstraint(full, inst, "full")
    full.propagate()
    row["full_ac_s"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    result = enumerate_all(inst)
    row["all_s"] = time.perf_counter() - t0
    row["solutions"] = len(result)

    if sex_equal:
        t0 = time.perf_counter()
        solve_sex_equal(inst)
        row["se_s"] = time.perf_counter() - t0
    else:
        row["se_s"] = ""
    return row


def _job(args):
    return bench_one(*args)


def run_bench(ns: Sequence[int], count: int, seed: int = 0, sex_equal: bool = True,
              workers: int = 1) -> list[dict]:
    """Per-run rows followed by one mean row per ``n``. Run ``k`` of each size uses ``seed + k``."""
    for n in ns:
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n={n} outside 1..{MAX_N}")
    jobs = [(n, seed + k, sex_equal) for n in ns for k in range(count)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            runs = list(pool.map(_job, jobs))
    else:
        runs = [_job(j) for j in jobs]
    rows = list(runs)
    for n in ns:
        group = [r for r in runs if r["n"] == n]
        mean = {"kind": "mean", "n": n, "seed": ""}
        for col in COLUMNS[3:]:
            vals = [r[col] for r in group if r[col] != ""]
            mean[col] = sum(vals) / len(vals) if vals else ""
        rows.append(mean)
    return rows


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.4f}"
    return str(v)


def render(rows: list[dict], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "table":
        cells = [COLUMNS] + [[_fmt(r[c]) for c in COLUMNS] for r in rows]
        widths = [max(len(row[k]) for row in cells) for k in range(len(COLUMNS))]
        lines = ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({c: _fmt(r[c]) for c in COLUMNS})
    return buf.getvalue()
