import pytest

from stablecp.instance import encode_smi, from_lists, generate_random_smi
from stablecp.matching import Matching
from stablecp.oracle import OracleRefused, enumerate_stable_bruteforce, is_stable

from conftest import MAN_OPTIMAL, WOMAN_OPTIMAL


def test_man_optimal_is_stable(golden):
    assert is_stable(golden, Matching(6, MAN_OPTIMAL)) == (True, None)


def test_identity_is_blocked_by_m3_w4(golden):
    identity = Matching.from_pairs(6, [(i, i) for i in range(1, 7)])
    assert is_stable(golden, identity) == (False, (3, 4))


def test_n1():
    inst = from_lists([[1]], [[1]])
    assert is_stable(inst, Matching.from_pairs(1, [(1, 1)]))[0]
    assert enumerate_stable_bruteforce(inst) == {Matching.from_pairs(1, [(1, 1)])}


def test_golden_stable_set(golden):
    stable = enumerate_stable_bruteforce(golden)
    assert Matching(6, MAN_OPTIMAL) in stable
    assert Matching(6, WOMAN_OPTIMAL) in stable
    assert len(stable) == 3


def test_identical_orders_unique():
    inst = from_lists([[2, 4, 1, 3]] * 4, [[3, 1, 4, 2]] * 4)
    assert len(enumerate_stable_bruteforce(inst)) == 1


def test_brute_force_matches_plain_filter(golden):
    import itertools

    brute = {
        Matching.from_pairs(6, enumerate(p, 1))
        for p in itertools.permutations(range(1, 7))
        if is_stable(golden, Matching.from_pairs(6, enumerate(p, 1)))[0]
    }
    assert brute == enumerate_stable_bruteforce(golden)


def test_cap():
    inst = from_lists([[1, 2]] * 2, [[1, 2]] * 2)
    with pytest.raises(OracleRefused):
        enumerate_stable_bruteforce(inst, cap=1)


def test_malformed_matchings(golden):
    with pytest.raises(ValueError):
        Matching.from_pairs(6, [(1, 1), (2, 1)])
    with pytest.raises(ValueError):
        is_stable(golden, Matching.from_pairs(6, [(1, 1)]))


def test_smi_unmatched_blocking():
    # man 1 and woman 1 accept each other and nobody else; leaving both single is unstable
    inst = encode_smi([[1], [2]], [[1], [2]], 2)
    assert is_stable(inst, Matching.from_pairs(2, [(2, 2)])) == (False, (1, 1))
    assert enumerate_stable_bruteforce(inst) == {Matching.from_pairs(2, [(1, 1), (2, 2)])}


def test_smi_rejects_unacceptable_pair():
    inst = encode_smi([[1], [2]], [[1], [2]], 2)
    with pytest.raises(ValueError, match="not mutually acceptable"):
        is_stable(inst, Matching.from_pairs(2, [(1, 2)]))


def test_smi_matched_people_are_fixed():
    # every stable matching of an SMI instance matches the same people
    for seed in range(100):
        inst = generate_random_smi(2 + seed % 6, seed)
        stable = enumerate_stable_bruteforce(inst)
        assert stable
        men = {frozenset(m for m, _ in s.pairs) for s in stable}
        assert len(men) == 1
