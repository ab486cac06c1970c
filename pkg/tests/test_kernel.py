import random

import pytest

from stablecp.kernel import ON_INST, ON_MAX, ON_MIN, ON_REM, Failure, Solver


def logged(lo=1, hi=6):
    s = Solver()
    s.event_log = []
    return s, s.int_var(lo, hi)


def events(s):
    return [(ev, val) for _, ev, val in s.event_log]


def test_set_max_shrinks():
    s, v = logged()
    assert v.set_max(3)
    assert v.values() == [1, 2, 3]
    assert events(s) == [(ON_MAX, 3)]


def test_set_max_above_is_noop():
    s, v = logged()
    assert not v.set_max(9)
    assert v.values() == [1, 2, 3, 4, 5, 6]
    assert events(s) == []


def test_remove_slides_bound_past_hole():
    s, v = logged(2, 5)
    v.remove(4)
    s.event_log.clear()
    v.remove(3)
    assert v.values() == [2, 5]
    assert events(s) == [(ON_REM, 3)]
    s.event_log.clear()
    v.remove(2)
    assert v.values() == [5]
    assert events(s) == [(ON_MIN, 5), (ON_INST, 5)]
    assert v.get_val() == 5


def test_set_val():
    s, v = logged()
    v.set_val(4)
    assert v.values() == [4]
    assert events(s) == [(ON_MIN, 4), (ON_MAX, 4), (ON_INST, 4)]
    with pytest.raises(Failure):
        v.set_val(3)


def test_wipeouts():
    s, v = logged(1, 3)
    with pytest.raises(Failure):
        v.set_max(0)
    v.set_max(1)
    with pytest.raises(Failure):
        v.remove(1)
    assert v.values() == [1]


def test_get_val_requires_bound():
    _, v = logged()
    with pytest.raises(RuntimeError):
        v.get_val()


def test_empty_stack_is_ok():
    assert Solver().propagate()


def test_schedule_dedups_pending_calls():
    s = Solver()
    calls = []
    s.schedule(calls.append, 1)
    s.schedule(calls.append, 1)
    s.schedule(calls.append, 2)
    assert len(s.pending) == 2
    assert s.propagate()
    assert sorted(calls) == [1, 2]


def test_event_dedup_through_watchers():
    s = Solver()
    v = s.int_var(1, 6)
    calls = []
    s.watch(v, ON_MAX, calls.append, "max")
    v.set_max(5)
    v.set_max(4)
    assert s.pending == [(calls.append, "max")]
    s.propagate()
    assert calls == ["max"]


def test_rem_watchers_receive_value():
    s = Solver()
    v = s.int_var(1, 6)
    seen = []
    s.watch(v, ON_REM, lambda arg, a: seen.append((arg, a)), "v")
    v.remove(3)
    v.remove(4)
    s.propagate()
    assert sorted(seen) == [("v", 3), ("v", 4)]


def test_failure_discards_stack():
    s = Solver()
    v = s.int_var(1, 3)
    ran = []
    s.schedule(ran.append, "late")
    s.schedule(v.set_max, 0)
    assert not s.propagate()
    assert ran == []
    assert s.pending == []
    assert s.failures == 1


def test_push_pop_restores_domain():
    s = Solver()
    v = s.int_var(1, 6)
    mark = s.push()
    v.set_max(3)
    s.pop(mark)
    assert v.values() == [1, 2, 3, 4, 5, 6]


def test_reversible_int():
    s = Solver()
    r = s.reversible(5)
    s.push()
    r.set(2)
    assert r.value == 2
    s.pop()
    assert r.value == 5


def test_nested_choice_points():
    s = Solver()
    v = s.int_var(1, 6)
    r = s.reversible(1)
    m1 = s.push()
    v.remove(3)
    r.set(7)
    m2 = s.push()
    v.remove(1)
    v.set_max(4)
    r.set(9)
    s.pop(m2)
    assert v.values() == [1, 2, 4, 5, 6] and r.value == 7
    s.pop(m1)
    assert v.values() == [1, 2, 3, 4, 5, 6] and r.value == 1


def test_pop_without_push():
    with pytest.raises(RuntimeError):
        Solver().pop()


def test_pop_out_of_order():
    s = Solver()
    m1 = s.push()
    s.push()
    with pytest.raises(RuntimeError):
        s.pop(m1)


def _replay(lo, hi, log):
    dom = set(range(lo, hi + 1))
    for ev, val in log:
        if ev == ON_MIN:
            dom = {a for a in dom if a >= val}
        elif ev == ON_MAX:
            dom = {a for a in dom if a <= val}
        elif ev == ON_REM:
            dom.discard(val)
    return dom


def test_event_completeness_fuzz():
    rng = random.Random(11)
    for _ in range(200):
        s = Solver()
        s.event_log = []
        v = s.int_var(1, 20)
        for _ in range(500):
            before_lo, before_hi, before = v.lo, v.hi, v.values()
            start = len(s.event_log)
            op = rng.randrange(3)
            a = rng.randint(0, 21)
            try:
                if op == 0:
                    v.remove(a)
                elif op == 1:
                    v.set_max(a)
                else:
                    v.set_val(a) if rng.random() < 0.05 else v.set_min(a)
            except Failure:
                assert v.values() == before
                break
            new = [ev for _, ev, _ in s.event_log[start:]]
            assert new.count(ON_MIN) == (v.lo > before_lo)
            assert new.count(ON_MAX) == (v.hi < before_hi)
            assert new.count(ON_REM) == (v.lo == before_lo and v.hi == before_hi and len(v.values()) < len(before))
            assert new.count(ON_INST) == (v.lo == v.hi and before_lo != before_hi)
            assert v.size == len(v.values())
            assert _replay(1, 20, [(e, x) for _, e, x in s.event_log]) == set(v.values())
