"""Brute-force ground truth for small instances."""
from __future__ import annotations

from .instance import Instance
from .matching import Matching

__all__ = ["DEFAULT_CAP", "OracleRefused", "is_stable", "enumerate_stable_bruteforce", "check_matching"]

DEFAULT_CAP = 9


class OracleRefused(ValueError):
    pass


def check_matching(inst: Instance, matching: Matching) -> None:
    if matching.n != inst.n:
        raise ValueError(f"matching is for n={matching.n}, instance has n={inst.n}")
    for m, w in matching.pairs:
        if not inst.acceptable(m, w):
            raise ValueError(f"man {m} and woman {w} are not mutually acceptable")
    if not inst.smi and not matching.is_perfect():
        raise ValueError("complete instance requires a perfect matching")


def is_stable(inst: Instance, matching: Matching) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, (man, woman))`` for a blocking pair.

    A man blocks with a woman he finds acceptable and prefers to his partner
    (or to being single) when she likewise prefers him. Men are scanned in
    index order, women in each man's preference order.
    """
    check_matching(inst, matching)
    n = inst.n
    p = inst.punctuation
    wives = matching.wives()
    husbands = matching.husbands()
    for i in range(1, n + 1):
        w = wives[i - 1]
        limit = inst.mPw[i][w if w is not None else p]
        row = inst.mpl[i]
        for r in range(1, min(limit, inst.length + 1)):
            l = row[r]
            if l == p:
                break
            h = husbands[l - 1]
            her = inst.wPm[l][h if h is not None else p]
            if inst.wPm[l][i] < her:
                return False, (i, l)
    return True, None


def enumerate_stable_bruteforce(inst: Instance, cap: int = DEFAULT_CAP) -> set[Matching]:
    """Every stable matching, by depth-first search over men with pruning on
    blocking pairs among the men already placed."""
    n = inst.n
    if n > cap:
        raise OracleRefused(f"n={n} exceeds brute-force cap {cap}")
    p = inst.punctuation
    mPw, wPm = inst.mPw, inst.wPm
    choices = [None] + [list(inst.man_list(i)) + ([None] if inst.smi else []) for i in range(1, n + 1)]
    wife = [None] * (n + 1)
    used = [False] * (n + 1)
    out: set[Matching] = set()

    def rank_m(i, w):
        return mPw[i][w if w is not None else p]

    def compatible(i, w):
        # pairs among men 1..i must not block each other
        for k in range(1, i):
            l = wife[k]
            if w is not None and mPw[k][w] < rank_m(k, l) and wPm[w][k] < wPm[w][i]:
                return False
            if l is not None and mPw[i][l] < rank_m(i, w) and wPm[l][i] < wPm[l][k]:
                return False
        return True

    def dfs(i):
        if i > n:
            m = Matching.from_pairs(n, [(k, wife[k]) for k in range(1, n + 1) if wife[k] is not None])
            if is_stable(inst, m)[0]:
                out.add(m)
            return
        for w in choices[i]:
            if w is not None and used[w]:
                continue
            if not compatible(i, w):
                continue
            wife[i] = w
            if w is not None:
                used[w] = True
            dfs(i + 1)
            if w is not None:
                used[w] = False
            wife[i] = None

    dfs(1)
    return out
