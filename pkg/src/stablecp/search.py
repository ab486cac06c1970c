"""Search over the stable marriage model: enumeration of all stable matchings
and branch-and-bound for the sex-equal problem."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .constraint import StableMarriageConstraint
from .instance import Instance
from .kernel import Failure, Solver
from .matching import Matching

__all__ = [
    "Enumeration",
    "ScoreTables",
    "SexEqualResult",
    "build_model",
    "enumerate_all",
    "iter_solutions",
    "solve_sex_equal",
    "sex_equal_objective",
]


@dataclass
class SearchStats:
    nodes: int = 0
    fails: int = 0
    solutions: int = 0
    pruned: int = 0


@dataclass
class Enumeration:
    matchings: list[Matching]
    fails: int
    nodes: int

    def __len__(self):
        return len(self.matchings)


def build_model(inst: Instance, order_seed: int | None = None) -> tuple[Solver, StableMarriageConstraint]:
    solver = Solver(order_seed)
    return solver, StableMarriageConstraint(solver, inst, "full", enhanced=True)


def _extract(c: StableMarriageConstraint) -> Matching:
    inst = c.instance
    p = inst.punctuation
    pairs = []
    for i in range(1, inst.n + 1):
        w = inst.mpl[i][c.x[i].lo]
        if w != p:
            pairs.append((i, w))
    return Matching.from_pairs(inst.n, pairs)


def _next_var(c: StableMarriageConstraint):
    for v in c.x[1:]:
        if v.lo != v.hi:
            return v
    for v in c.y[1:]:
        if v.lo != v.hi:
            return v
    return None


def iter_solutions(solver: Solver, c: StableMarriageConstraint, stats: SearchStats,
                   prune: Callable[[], bool] | None = None) -> Iterator[Matching]:
    """Depth-first search yielding each solution once.

    Men are branched in index order, left on ``x[i] = min`` (his best
    remaining partner), right on ``x[i] != min``. If every man is bound but
    some woman is not, she is branched the same way. ``prune`` is consulted
    after each successful propagation; returning True cuts the node.
    """
    frames = []  # (mark, var, value) for every open left branch
    ok = solver.propagate()
    if not ok:
        stats.fails += 1
    while True:
        if ok and prune is not None and prune():
            stats.pruned += 1
            ok = False
        elif ok:
            var = _next_var(c)
            if var is None:
                stats.solutions += 1
                yield _extract(c)
                ok = False
            else:
                stats.nodes += 1
                a = var.lo
                frames.append((solver.push(), var, a))
                try:
                    var.set_val(a)
                    ok = solver.propagate()
                except Failure:
                    ok = False
                if not ok:
                    stats.fails += 1
                continue
        if not frames:
            return
        mark, var, a = frames.pop()
        solver.pop(mark)
        try:
            var.remove(a)
            ok = solver.propagate()
        except Failure:
            ok = False
        if not ok:
            stats.fails += 1


def enumerate_all(inst: Instance, order_seed: int | None = None) -> Enumeration:
    """All stable matchings in discovery order, with search statistics."""
    solver, c = build_model(inst, order_seed)
    stats = SearchStats()
    found = list(iter_solutions(solver, c, stats))
    return Enumeration(found, stats.fails, stats.nodes)


class ScoreTables:
    """Per-person scores: ``m_score[i][j]`` is man *i*'s score for woman *j*.

    Rows are 1-based and padded like the instance tables. Scores must order
    partners exactly as the preference lists do.
    """

    def __init__(self, m_score: Sequence[Sequence[int]], w_score: Sequence[Sequence[int]]):
        self.m_score = [tuple(r) for r in m_score]
        self.w_score = [tuple(r) for r in w_score]

    @classmethod
    def from_rows(cls, m_rows: Sequence[Sequence[int]], w_rows: Sequence[Sequence[int]]) -> "ScoreTables":
        """Unpadded rows: ``m_rows[i-1][j-1]`` is man *i*'s score for woman *j*."""
        return cls([()] + [(0, *r) for r in m_rows], [()] + [(0, *r) for r in w_rows])

    @classmethod
    def unweighted(cls, inst: Instance) -> "ScoreTables":
        n = inst.n
        return cls([()] + [inst.mPw[i][: n + 1] for i in range(1, n + 1)],
                   [()] + [inst.wPm[j][: n + 1] for j in range(1, n + 1)])

    def validate(self, inst: Instance) -> None:
        n = inst.n
        for side, table, pl in (("man", self.m_score, inst.mpl), ("woman", self.w_score, inst.wpl)):
            if len(table) != n + 1 or any(len(table[i]) != n + 1 for i in range(1, n + 1)):
                raise ValueError(f"{side} score table must be {n}x{n}")
            for i in range(1, n + 1):
                ordered = [table[i][pl[i][a]] for a in range(1, n + 1)]
                for a in range(n - 1):
                    if ordered[a] >= ordered[a + 1]:
                        raise ValueError(
                            f"{side} {i}: scores are not consistent with the preference order "
                            f"(rank {a + 1} scores {ordered[a]}, rank {a + 2} scores {ordered[a + 1]})")


def sex_equal_objective(inst: Instance, m: Matching, scores: ScoreTables) -> tuple[int, int, int]:
    """``(sumM, sumW, |sumM - sumW|)`` for a perfect matching."""
    sum_m = sum(scores.m_score[i][w] for i, w in m.pairs)
    sum_w = sum(scores.w_score[w][i] for i, w in m.pairs)
    return sum_m, sum_w, abs(sum_m - sum_w)


@dataclass
class SexEqualResult:
    matching: Matching
    objective: int
    sum_m: int
    sum_w: int
    stats: SearchStats = field(default_factory=SearchStats)


def solve_sex_equal(inst: Instance, scores: ScoreTables | None = None) -> SexEqualResult:
    """Stable matching minimizing ``|sumM - sumW|`` by branch and bound.

    Each score depends on a rank variable through a table that is monotone
    in the rank, so the score sums are bounded by reading the tables at the
    domain bounds. A node is cut when the interval of ``sumM - sumW`` cannot
    contain a value better than the incumbent. Among equally good matchings
    the first one found is returned.
    """
    if inst.smi:
        raise ValueError("sex-equal optimisation requires a complete instance")
    scores = scores or ScoreTables.unweighted(inst)
    scores.validate(inst)
    n = inst.n
    # score tables re-indexed by rank
    ms = [None] + [[0] + [scores.m_score[i][inst.mpl[i][a]] for a in range(1, n + 1)] for i in range(1, n + 1)]
    ws = [None] + [[0] + [scores.w_score[j][inst.wpl[j][b]] for b in range(1, n + 1)] for j in range(1, n + 1)]
    solver, c = build_model(inst)
    stats = SearchStats()
    best: list = [None, None]  # objective, matching

    def prune() -> bool:
        if best[0] is None:
            return False
        lo_m = hi_m = lo_w = hi_w = 0
        for i in range(1, n + 1):
            x = c.x[i]
            lo_m += ms[i][x.lo]
            hi_m += ms[i][x.hi]
            y = c.y[i]
            lo_w += ws[i][y.lo]
            hi_w += ws[i][y.hi]
        bound = max(0, lo_m - hi_w, lo_w - hi_m)
        return bound >= best[0]

    for m in iter_solutions(solver, c, stats, prune):
        _, _, d = sex_equal_objective(inst, m, scores)
        if best[0] is None or d < best[0]:
            best[0], best[1] = d, m
            if d == 0:
                break
    sum_m, sum_w, d = sex_equal_objective(inst, best[1], scores)
    return SexEqualResult(best[1], d, sum_m, sum_w, stats)
