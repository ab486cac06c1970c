"""Extended Gale-Shapley, used as the independent reference for GS-lists."""
from __future__ import annotations

import random
from typing import Sequence

from .constraint import GSLists
from .instance import Instance

__all__ = ["EGSResult", "extended_gale_shapley", "egs_male", "egs_female", "full_gs_lists", "male_proposals"]


class EGSResult:
    __slots__ = ("proposer_lists", "receiver_lists", "engaged", "proposals")

    def __init__(self, proposer_lists, receiver_lists, engaged, proposals):
        self.proposer_lists = proposer_lists
        self.receiver_lists = receiver_lists
        # engaged[w] = proposer currently engaged to receiver w, or 0
        self.engaged = engaged
        self.proposals = proposals


def extended_gale_shapley(proposers: Sequence[Sequence[int]], receivers: Sequence[Sequence[int]],
                          rng: random.Random | None = None) -> EGSResult:
    """Run EGS with ``proposers`` proposing.

    Both arguments are 1-based: ``proposers[0]`` is ignored and
    ``proposers[m]`` is the (possibly already reduced) list of *m*. The free
    list is a stack; with ``rng`` the next free proposer is drawn at random.
    """
    n = len(proposers) - 1
    plist = [list(p) for p in proposers]
    rlist = [list(r) for r in receivers]
    # proposer side: arbitrary deletions, tracked by flags and a moving head
    alive = [bytearray(b"\x01") * len(p) for p in plist]
    head = [0] * (n + 1)
    ppos = [None] * (n + 1)
    for m in range(1, n + 1):
        ppos[m] = {w: k for k, w in enumerate(plist[m])}
    # receiver side: only ever truncated after the engaged proposer
    tail = [len(r) for r in rlist]
    rpos = [None] * (n + 1)
    for w in range(1, n + 1):
        rpos[w] = {m: k for k, m in enumerate(rlist[w])}
    engaged = [0] * (n + 1)
    proposals = 0

    free = list(range(n, 0, -1))
    while free:
        if rng is not None:
            k = rng.randrange(len(free))
            free[k], free[-1] = free[-1], free[k]
        m = free.pop()
        h = head[m]
        al = alive[m]
        while h < len(al) and not al[h]:
            h += 1
        head[m] = h
        if h == len(al):
            continue  # list exhausted: m stays single
        w = plist[m][h]
        proposals += 1
        p = engaged[w]
        if p:
            free.append(p)
        engaged[w] = m
        rl = rlist[w]
        cut = rpos[w][m] + 1
        for k in range(cut, tail[w]):
            p = rl[k]
            alive[p][ppos[p][w]] = 0
        tail[w] = cut
    prop_out = {m: tuple(w for k, w in enumerate(plist[m]) if alive[m][k]) for m in range(1, n + 1)}
    rec_out = {w: tuple(rlist[w][: tail[w]]) for w in range(1, n + 1)}
    return EGSResult(prop_out, rec_out, engaged, proposals)


def _lists(inst: Instance) -> tuple[list, list]:
    men = [()] + [inst.man_list(i) for i in range(1, inst.n + 1)]
    women = [()] + [inst.woman_list(j) for j in range(1, inst.n + 1)]
    return men, women


def egs_male(inst: Instance, rng: random.Random | None = None) -> GSLists:
    """Male-oriented GS-lists."""
    men, women = _lists(inst)
    r = extended_gale_shapley(men, women, rng)
    return GSLists(r.proposer_lists, r.receiver_lists)


def egs_female(inst: Instance, rng: random.Random | None = None) -> GSLists:
    men, women = _lists(inst)
    r = extended_gale_shapley(women, men, rng)
    return GSLists(r.receiver_lists, r.proposer_lists)


def full_gs_lists(inst: Instance) -> GSLists:
    """Female-oriented EGS run on the male-oriented GS-lists."""
    male = egs_male(inst)
    n = inst.n
    women = [()] + [male.women[j] for j in range(1, n + 1)]
    men = [()] + [male.men[i] for i in range(1, n + 1)]
    r = extended_gale_shapley(women, men)
    return GSLists(r.receiver_lists, r.proposer_lists)


def male_proposals(inst: Instance) -> int:
    men, women = _lists(inst)
    return extended_gale_shapley(men, women).proposals
