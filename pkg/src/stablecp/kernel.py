"""A small propagation kernel: integer variables, a deduplicating call stack,
domain events and trailed backtracking.

Domains are an interval ``[lo, hi]`` plus a presence bitmap for interior
holes. Removing a bound slides it inward past holes, so every operation is
amortized O(1) per value removed. Undo records are only written while a
choice point is open, which keeps root propagation free of trailing cost.
"""
from __future__ import annotations

import random
from typing import Callable

__all__ = [
    "ON_MIN",
    "ON_MAX",
    "ON_REM",
    "ON_INST",
    "EVENT_NAMES",
    "Failure",
    "IntVar",
    "ReversibleInt",
    "Solver",
]

ON_MIN, ON_MAX, ON_REM, ON_INST = range(4)
EVENT_NAMES = ("ON_MIN", "ON_MAX", "ON_REM", "ON_INST")


class Failure(Exception):
    """A domain wipeout. Aborts the current propagation."""


class IntVar:
    """Finite integer variable over ``lo..hi`` (``lo >= 0``)."""

    __slots__ = ("solver", "id", "name", "lo", "hi", "size", "present", "watchers", "initial_size")

    def __init__(self, solver: "Solver", lo: int, hi: int, id: int, name: str | None = None):
        if lo < 0 or hi < lo:
            raise ValueError(f"bad initial domain {lo}..{hi}")
        self.solver = solver
        self.id = id
        self.name = name or f"v{id}"
        self.lo = lo
        self.hi = hi
        self.size = self.initial_size = hi - lo + 1
        # one spare slot above hi keeps sliding loops in range
        self.present = bytearray(b"\x01") * (hi + 2)
        self.watchers: tuple[list, list, list, list] = ([], [], [], [])

    def __repr__(self):
        return f"{self.name}{self.values()}"

    def __contains__(self, a: int) -> bool:
        return self.lo <= a <= self.hi and bool(self.present[a])

    def values(self) -> list[int]:
        present = self.present
        return [a for a in range(self.lo, self.hi + 1) if present[a]]

    @property
    def is_bound(self) -> bool:
        return self.lo == self.hi

    def get_min(self) -> int:
        return self.lo

    def get_max(self) -> int:
        return self.hi

    def get_val(self) -> int:
        if self.lo != self.hi:
            raise RuntimeError(f"get_val on unbound variable {self.name}")
        return self.lo

    def set_max(self, a: int) -> bool:
        """Restrict the domain to values ``<= a``. Returns True if it changed."""
        hi = self.hi
        if a >= hi:
            return False
        lo = self.lo
        s = self.solver
        if a < lo:
            raise Failure(self)
        if s.depth:
            s.trail.append((self, lo, hi, self.size, -1))
        present = self.present
        while not present[a]:
            a -= 1
        self.size -= present.count(1, a + 1, hi + 1)
        self.hi = a
        s._fire(self, ON_MAX, a)
        if a == lo:
            s._fire(self, ON_INST, a)
        return True

    def set_min(self, a: int) -> bool:
        lo = self.lo
        if a <= lo:
            return False
        hi = self.hi
        s = self.solver
        if a > hi:
            raise Failure(self)
        if s.depth:
            s.trail.append((self, lo, hi, self.size, -1))
        present = self.present
        while not present[a]:
            a += 1
        self.size -= present.count(1, lo, a)
        self.lo = a
        s._fire(self, ON_MIN, a)
        if a == hi:
            s._fire(self, ON_INST, a)
        return True

    def remove(self, a: int) -> bool:
        """Remove value ``a`` if present. Returns True if it changed."""
        lo = self.lo
        hi = self.hi
        if a < lo or a > hi:
            return False
        present = self.present
        if not present[a]:
            return False
        s = self.solver
        if lo == hi:
            raise Failure(self)
        if s.depth:
            s.trail.append((self, lo, hi, self.size, a))
        present[a] = 0
        self.size -= 1
        if a == lo:
            a += 1
            while not present[a]:
                a += 1
            self.lo = a
            s._fire(self, ON_MIN, a)
            if a == hi:
                s._fire(self, ON_INST, a)
        elif a == hi:
            a -= 1
            while not present[a]:
                a -= 1
            self.hi = a
            s._fire(self, ON_MAX, a)
            if a == lo:
                s._fire(self, ON_INST, a)
        elif self.watchers[2] or s.event_log is not None:
            s._fire(self, ON_REM, a)
        return True

    def set_val(self, a: int) -> bool:
        """Instantiate to ``a``. Fails if ``a`` is not in the domain."""
        lo = self.lo
        hi = self.hi
        if a < lo or a > hi or not self.present[a]:
            raise Failure(self)
        if lo == hi:
            return False
        s = self.solver
        if s.depth:
            s.trail.append((self, lo, hi, self.size, -1))
        self.size = 1
        self.lo = self.hi = a
        if a != lo:
            s._fire(self, ON_MIN, a)
        if a != hi:
            s._fire(self, ON_MAX, a)
        s._fire(self, ON_INST, a)
        return True


class ReversibleInt:
    """An integer restored on backtracking."""

    __slots__ = ("solver", "value")

    def __init__(self, solver: "Solver", value: int):
        self.solver = solver
        self.value = value

    def __repr__(self):
        return f"ReversibleInt({self.value})"

    def set(self, v: int) -> None:
        old = self.value
        if v != old:
            s = self.solver
            if s.depth:
                s.trail.append((self, old))
            self.value = v


class Solver:
    """Variables, trail and call stack for one propagation problem.

    Constraints register methods on variable events with :meth:`watch`. A
    scheduled call is the tuple ``(method, arg)``, or ``(method, arg, value)``
    for ``ON_REM`` watchers, and is pending at most once. Pending calls run
    LIFO unless ``order_seed`` is given, in which case they run in a seeded
    random order.
    """

    def __init__(self, order_seed: int | None = None):
        self.vars: list[IntVar] = []
        self.trail: list[tuple] = []
        self.depth = 0
        self._marks: list[int] = []
        self._stack: list[tuple] = []
        self._pending: set[tuple] = set()
        self._rng = random.Random(order_seed) if order_seed is not None else None
        self.executed = 0
        self.failures = 0
        self.event_log: list[tuple[int, int, int]] | None = None

    def int_var(self, lo: int, hi: int, name: str | None = None) -> IntVar:
        v = IntVar(self, lo, hi, len(self.vars), name)
        self.vars.append(v)
        return v

    @property
    def removals(self) -> int:
        """Values currently removed from all domains."""
        return sum(v.initial_size - v.size for v in self.vars)

    def reversible(self, value: int) -> ReversibleInt:
        return ReversibleInt(self, value)

    def watch(self, var: IntVar, event: int, method: Callable, arg) -> None:
        var.watchers[event].append((method, arg))

    def _fire(self, var: IntVar, event: int, value: int) -> None:
        if self.event_log is not None:
            self.event_log.append((var.id, event, value))
        ws = var.watchers[event]
        if not ws:
            return
        pending = self._pending
        stack = self._stack
        if event == ON_REM:
            for m, arg in ws:
                call = (m, arg, value)
                if call not in pending:
                    pending.add(call)
                    stack.append(call)
        else:
            for call in ws:
                if call not in pending:
                    pending.add(call)
                    stack.append(call)

    def schedule(self, method: Callable, *args) -> None:
        call = (method, *args)
        if call not in self._pending:
            self._pending.add(call)
            self._stack.append(call)

    def discard_pending(self) -> None:
        self._stack.clear()
        self._pending.clear()

    @property
    def pending(self) -> list[tuple]:
        return list(self._stack)

    def propagate(self) -> bool:
        """Run pending calls to fixpoint. Returns False on wipeout."""
        stack = self._stack
        pending = self._pending
        rng = self._rng
        try:
            while stack:
                if rng is not None and len(stack) > 1:
                    k = rng.randrange(len(stack))
                    stack[k], stack[-1] = stack[-1], stack[k]
                call = stack.pop()
                pending.discard(call)
                self.executed += 1
                if len(call) == 2:
                    call[0](call[1])
                else:
                    call[0](call[1], call[2])
        except Failure:
            stack.clear()
            pending.clear()
            self.failures += 1
            return False
        return True

    def push(self) -> int:
        """Open a choice point and return its mark (the new depth)."""
        self._marks.append(len(self.trail))
        self.depth += 1
        return self.depth

    def pop(self, mark: int | None = None) -> None:
        """Undo everything since the most recent choice point."""
        if not self._marks:
            raise RuntimeError("pop without a matching push")
        if mark is not None and mark != self.depth:
            raise RuntimeError("choice points must be popped in LIFO order")
        top = self._marks.pop()
        trail = self.trail
        while len(trail) > top:
            rec = trail.pop()
            if len(rec) == 2:
                rec[0].value = rec[1]
            else:
                var, lo, hi, size, hole = rec
                var.lo = lo
                var.hi = hi
                var.size = size
                if hole >= 0:
                    var.present[hole] = 1
        self.depth -= 1
        self._stack.clear()
        self._pending.clear()
