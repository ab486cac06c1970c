from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .instance import Instance

__all__ = ["Matching"]


@dataclass(frozen=True)
class Matching:
    """A set of (man, woman) pairs, kept sorted so equal matchings compare equal.

    Men and women absent from ``pairs`` are unmatched (SMI only).
    """

    n: int
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Matching":
        pairs = tuple(sorted((int(m), int(w)) for m, w in pairs))
        men, women = set(), set()
        for m, w in pairs:
            if not (1 <= m <= n and 1 <= w <= n):
                raise ValueError(f"pair ({m}, {w}) out of range 1..{n}")
            if m in men:
                raise ValueError(f"man {m} matched twice")
            if w in women:
                raise ValueError(f"woman {w} matched twice")
            men.add(m)
            women.add(w)
        return cls(n, pairs)

    @classmethod
    def from_wives(cls, wives: Iterable[int | None]) -> "Matching":
        """``wives[i-1]`` is man *i*'s partner or None."""
        wives = list(wives)
        return cls.from_pairs(len(wives), [(i, w) for i, w in enumerate(wives, 1) if w is not None])

    def wife(self, i: int) -> int | None:
        for m, w in self.pairs:
            if m == i:
                return w
        return None

    def wives(self) -> list[int | None]:
        out: list[int | None] = [None] * self.n
        for m, w in self.pairs:
            out[m - 1] = w
        return out

    def husbands(self) -> list[int | None]:
        out: list[int | None] = [None] * self.n
        for m, w in self.pairs:
            out[w - 1] = m
        return out

    def is_perfect(self) -> bool:
        return len(self.pairs) == self.n

    def man_ranks(self, inst: Instance) -> list[int]:
        """Rank of each man's partner; an unmatched man gets the punctuation rank."""
        wives = self.wives()
        p = inst.punctuation
        return [inst.mPw[i][w if w is not None else p] for i, w in enumerate(wives, 1)]

    def woman_ranks(self, inst: Instance) -> list[int]:
        husbands = self.husbands()
        p = inst.punctuation
        return [inst.wPm[j][m if m is not None else p] for j, m in enumerate(husbands, 1)]

    def __str__(self):
        return " ".join(f"({m},{w})" for m, w in self.pairs)
