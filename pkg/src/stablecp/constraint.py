"""The n-ary stable marriage constraint.

Man *i* is the variable ``x[i]`` and woman *j* is ``y[j]``; a value is a
preference rank, so ``x[i] = a`` marries man *i* to ``mpl[i][a]``.

The propagation is written once for a proposing side and a receiving side
(:class:`_Direction`). The male orientation has men propose, the female
orientation swaps the roles, and the gender-free orientation runs both at
once, which yields the full GS-lists in a single fixpoint.
"""
from __future__ import annotations

from dataclasses import dataclass

from .instance import Instance
from .kernel import ON_INST, ON_MAX, ON_MIN, ON_REM, IntVar, Solver

__all__ = ["GSLists", "StableMarriageConstraint", "ORIENTATIONS"]

ORIENTATIONS = ("male", "female", "full")


@dataclass(frozen=True)
class GSLists:
    """Reduced preference lists keyed by 1-based person index."""

    men: dict[int, tuple[int, ...]]
    women: dict[int, tuple[int, ...]]

    def render(self) -> str:
        out = ["men"]
        out += [f"{i}: {' '.join(map(str, self.men[i]))}".rstrip() for i in sorted(self.men)]
        out.append("women")
        out += [f"{j}: {' '.join(map(str, self.women[j]))}".rstrip() for j in sorted(self.women)]
        return "\n".join(out) + "\n"

    def swapped(self) -> "GSLists":
        return GSLists(self.women, self.men)


class _Direction:
    """One proposing orientation: ``props`` propose to ``recs``."""

    def __init__(self, solver, props, recs, ppl, pP, rpl, rP, length, punct, enhanced):
        n = len(props) - 1
        self.props = props
        self.recs = recs
        self.ppl = ppl
        self.pP = pP
        self.rpl = rpl
        self.rP = rP
        self.length = length
        self.punct = punct
        self.enhanced = enhanced
        self.lb = [None] + [solver.reversible(1) for _ in range(n)]
        self.ub = [None] + [solver.reversible(length) for _ in range(n)]
        self.proposals = 0
        self._last = [0] * (n + 1)

    def wire(self, solver: Solver) -> None:
        n = len(self.props) - 1
        for i in range(1, n + 1):
            solver.watch(self.props[i], ON_MIN, self.delta_min, i)
            solver.watch(self.recs[i], ON_MAX, self.delta_max, i)
            if self.enhanced:
                solver.watch(self.props[i], ON_REM, self.remove_value, i)
                solver.watch(self.props[i], ON_INST, self.inst, i)

    def delta_min(self, i: int) -> None:
        lo = self.props[i].lo
        pl = self.ppl[i]
        j = pl[lo]
        if j != self.punct:
            self.recs[j].set_max(self.rP[j][i])
            if self._last[i] != lo:
                self._last[i] = lo
                self.proposals += 1
        if self.enhanced:
            lb = self.lb[i]
            # heads removed by anything other than a rejection
            for k in range(lb.value, lo):
                j = pl[k]
                if j != self.punct:
                    self.recs[j].set_max(self.rP[j][i] - 1)
            lb.set(lo)

    def delta_max(self, j: int) -> None:
        hi = self.recs[j].hi
        ub = self.ub[j]
        top = ub.value
        if top <= hi:
            return
        pl = self.rpl[j]
        props = self.props
        pP = self.pP
        punct = self.punct
        for k in range(hi + 1, top + 1):
            i = pl[k]
            if i != punct:
                props[i].remove(pP[i][j])
        ub.set(hi)

    def remove_value(self, i: int, a: int) -> None:
        j = self.ppl[i][a]
        if j != self.punct:
            self.recs[j].remove(self.rP[j][i])

    def inst(self, i: int) -> None:
        x = self.props[i]
        a = x.lo
        if a != x.hi:
            return
        pl = self.ppl[i]
        recs = self.recs
        rP = self.rP
        punct = self.punct
        for k in range(1, a):
            j = pl[k]
            if j != punct:
                recs[j].set_max(rP[j][i] - 1)
        j = pl[a]
        if j != punct:
            recs[j].set_val(rP[j][i])
        for k in range(a + 1, self.length + 1):
            j = pl[k]
            if j != punct:
                recs[j].remove(rP[j][i])

    def fiance(self, j: int) -> int | None:
        i = self.rpl[j][self.recs[j].hi]
        return None if i == self.punct else i


class StableMarriageConstraint:
    """Post the stable marriage constraint for ``instance`` on ``solver``.

    ``orientation`` is ``"male"``, ``"female"`` or ``"full"`` (gender-free).
    With ``enhanced=False`` only the three original methods are wired
    (init, deltaMin without the lower-bound sweep, deltaMax); the fixpoint
    is then exactly the oriented GS-lists but the model is not safe under
    external domain changes. ``enhanced=True`` adds inst, removeValue and the
    lower-bound sweep, which search requires.
    """

    def __init__(self, solver: Solver, instance: Instance, orientation: str = "full",
                 enhanced: bool = True):
        if orientation not in ORIENTATIONS:
            raise ValueError(f"unknown orientation {orientation!r}")
        self.solver = solver
        self.instance = instance
        self.orientation = orientation
        self.enhanced = enhanced
        n = instance.n
        L = instance.length
        self.x: list[IntVar | None] = [None] + [solver.int_var(1, L, f"x{i}") for i in range(1, n + 1)]
        self.y: list[IntVar | None] = [None] + [solver.int_var(1, L, f"y{j}") for j in range(1, n + 1)]
        p = instance.punctuation
        self.male = self.female = None
        if orientation in ("male", "full"):
            self.male = _Direction(solver, self.x, self.y, instance.mpl, instance.mPw,
                                   instance.wpl, instance.wPm, L, p, enhanced)
            self.male.wire(solver)
        if orientation in ("female", "full"):
            self.female = _Direction(solver, self.y, self.x, instance.wpl, instance.wPm,
                                     instance.mpl, instance.mPw, L, p, enhanced)
            self.female.wire(solver)
        self.init()

    @property
    def directions(self) -> list[_Direction]:
        return [d for d in (self.male, self.female) if d is not None]

    def init(self) -> None:
        """Cap SMI domains at the punctuation rank and schedule every proposal."""
        inst = self.instance
        if inst.smi:
            p = inst.punctuation
            for i in range(1, inst.n + 1):
                self.x[i].set_max(inst.mPw[i][p])
                self.y[i].set_max(inst.wPm[i][p])
        for d in self.directions:
            for i in range(1, inst.n + 1):
                self.solver.schedule(d.delta_min, i)

    @property
    def proposals(self) -> int:
        return sum(d.proposals for d in self.directions)

    def fiance(self, j: int) -> int | None:
        """Woman *j*'s current engagement: her least preferred remaining man."""
        i = self.instance.wpl[j][self.y[j].hi]
        return None if i == self.instance.punctuation else i

    def gs_lists(self) -> GSLists:
        """Current domains read back as reduced preference lists."""
        inst = self.instance
        p = inst.punctuation
        men = {i: tuple(inst.mpl[i][a] for a in self.x[i].values() if inst.mpl[i][a] != p)
               for i in range(1, inst.n + 1)}
        women = {j: tuple(inst.wpl[j][b] for b in self.y[j].values() if inst.wpl[j][b] != p)
                 for j in range(1, inst.n + 1)}
        return GSLists(men, women)

    def domains(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(v.values()) for v in self.x[1:] + self.y[1:])


def gs_lists_by_constraint(instance: Instance, orientation: str = "full",
                           order_seed: int | None = None) -> GSLists:
    """GS-lists from the root fixpoint. The oriented variants use the
    original three-method constraint so both sides match the oriented
    Gale-Shapley lists."""
    solver = Solver(order_seed)
    c = StableMarriageConstraint(solver, instance, orientation, enhanced=orientation == "full")
    if not solver.propagate():
        raise RuntimeError("root propagation failed")
    return c.gs_lists()
