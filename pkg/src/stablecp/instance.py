"""Stable marriage instances: parsing, rendering, generation and SMI encoding.

All person indices and preference ranks are 1-based. The preference tables
stored on an :class:`Instance` are padded with a leading ``0`` in every row
(and an empty row 0) so that ``inst.mpl[i][j]`` reads exactly as man *i*'s
*j*-th choice.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Instance",
    "InstanceError",
    "build_inverse",
    "invert_row",
    "encode_smi",
    "from_lists",
    "generate_random",
    "generate_random_smi",
    "parse_instance",
    "render_instance",
    "load_instance",
]


class InstanceError(ValueError):
    """Malformed instance data. ``line`` is the 1-based source line, if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.reason = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


Rows = tuple[tuple[int, ...], ...]


def _pad(rows: Iterable[Sequence[int]]) -> Rows:
    return ((),) + tuple((0, *row) for row in rows)


def invert_row(row: Sequence[int]) -> tuple[int, ...]:
    """Inverse of a permutation of ``1..len(row)``: ``inv[row[j]] = j``."""
    inv = [0] * len(row)
    for j, v in enumerate(row, 1):
        inv[v - 1] = j
    return tuple(inv)


def build_inverse(prefs: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-wise inverse of an unpadded preference matrix."""
    return [invert_row(row) for row in prefs]


def _pad_inverse(rows: Rows) -> Rows:
    prefs = np.array([r[1:] for r in rows[1:]], dtype=np.int64)
    inv = np.empty_like(prefs)
    ranks = np.broadcast_to(np.arange(1, prefs.shape[1] + 1), prefs.shape)
    np.put_along_axis(inv, prefs - 1, ranks, axis=1)
    return _pad(inv.tolist())


def _check_permutation(row: Sequence[int], size: int, what: str, line: int | None = None) -> None:
    if len(row) != size:
        raise InstanceError(f"{what}: expected {size} values, got {len(row)}", line)
    if sorted(row) == list(range(1, size + 1)):
        return
    seen = set()
    for v in row:
        if not 1 <= v <= size:
            raise InstanceError(f"{what}: value {v} out of range 1..{size}", line)
        if v in seen:
            raise InstanceError(f"{what}: duplicate value {v}", line)
        seen.add(v)


@dataclass(frozen=True)
class Instance:
    """An immutable SM or SMI instance with both preference tables and their inverses.

    For complete instances each row has length ``n``; for SMI instances each
    row has length ``n + 1`` and contains the punctuation value ``n + 1``,
    after which people are unacceptable.
    """

    n: int
    mpl: Rows
    wpl: Rows
    smi: bool = False
    mPw: Rows = field(init=False, repr=False, compare=False)
    wPm: Rows = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InstanceError("n must be positive")
        size = self.length
        for side, rows in (("man", self.mpl), ("woman", self.wpl)):
            if len(rows) != self.n + 1:
                raise InstanceError(f"expected {self.n} {side} rows, got {len(rows) - 1}")
            for i in range(1, self.n + 1):
                _check_permutation(rows[i][1:], size, f"{side} {i}")
        object.__setattr__(self, "mPw", _pad_inverse(self.mpl))
        object.__setattr__(self, "wPm", _pad_inverse(self.wpl))
        if self.smi:
            p = self.n + 1
            for i in range(1, self.n + 1):
                for j in range(1, self.n + 1):
                    if (self.mPw[i][j] < self.mPw[i][p]) != (self.wPm[j][i] < self.wPm[j][p]):
                        raise InstanceError(f"asymmetric acceptability between man {i} and woman {j}")

    @property
    def length(self) -> int:
        """Length of every preference row (``n``, or ``n + 1`` under SMI)."""
        return self.n + 1 if self.smi else self.n

    @property
    def punctuation(self) -> int:
        """The punctuation value ``n + 1``. Never a person index."""
        return self.n + 1

    def man_list(self, i: int) -> tuple[int, ...]:
        """Man *i*'s acceptable women in preference order."""
        return _acceptable(self.mpl[i], self.punctuation)

    def woman_list(self, j: int) -> tuple[int, ...]:
        return _acceptable(self.wpl[j], self.punctuation)

    def acceptable(self, i: int, j: int) -> bool:
        if not self.smi:
            return True
        return self.mPw[i][j] < self.mPw[i][self.punctuation]

    def swapped(self) -> "Instance":
        """The same instance with the roles of men and women exchanged."""
        return Instance(self.n, self.wpl, self.mpl, self.smi)


def _acceptable(row: Sequence[int], punct: int) -> tuple[int, ...]:
    out = []
    for v in row[1:]:
        if v == punct:
            break
        out.append(v)
    return tuple(out)


def from_lists(men: Sequence[Sequence[int]], women: Sequence[Sequence[int]]) -> Instance:
    """Complete instance from unpadded rows (``men[i-1]`` is man *i*'s list)."""
    return Instance(len(men), _pad(men), _pad(women))


def _smi_row(acc: Sequence[int], n: int) -> list[int]:
    rest = sorted(set(range(1, n + 1)) - set(acc))
    return [*acc, n + 1, *rest]


def encode_smi(men: Sequence[Sequence[int]], women: Sequence[Sequence[int]], n: int | None = None) -> Instance:
    """Encode incomplete lists with the punctuation value ``n + 1``.

    Each output row is the acceptable prefix, then ``n + 1``, then everybody
    else in ascending index order. Acceptability must be mutual.
    """
    if n is None:
        n = len(men)
    if len(men) != n or len(women) != n:
        raise InstanceError(f"expected {n} lists per side")
    for side, lists in (("man", men), ("woman", women)):
        for i, acc in enumerate(lists, 1):
            if len(set(acc)) != len(acc):
                raise InstanceError(f"{side} {i}: duplicate value")
            for v in acc:
                if not 1 <= v <= n:
                    raise InstanceError(f"{side} {i}: value {v} out of range 1..{n}")
    wsets = [set(w) for w in women]
    msets = [set(m) for m in men]
    for i, acc in enumerate(men, 1):
        for j in acc:
            if i not in wsets[j - 1]:
                raise InstanceError(f"man {i} finds woman {j} acceptable but not vice versa")
    for j, acc in enumerate(women, 1):
        for i in acc:
            if j not in msets[i - 1]:
                raise InstanceError(f"woman {j} finds man {i} acceptable but not vice versa")
    return Instance(n, _pad(_smi_row(m, n) for m in men), _pad(_smi_row(w, n) for w in women), smi=True)


def generate_random(n: int, seed: int) -> Instance:
    """Uniform random complete instance.

    Uses ``numpy.random.default_rng(seed)`` (PCG64). The ``2n`` rows are drawn
    in order (men 1..n, then women 1..n), each as ``rng.permutation(n) + 1``,
    which is a Fisher-Yates shuffle of ``0..n-1``.
    """
    if n < 1:
        raise InstanceError("n must be positive")
    rng = np.random.default_rng(seed)
    rows = [(rng.permutation(n) + 1).tolist() for _ in range(2 * n)]
    return Instance(n, _pad(rows[:n]), _pad(rows[n:]))


def generate_random_smi(n: int, seed: int, p: float = 0.5) -> Instance:
    """Random SMI instance: a random complete instance with each (man, woman)
    pair kept acceptable with probability ``p`` (same decision for both sides).

    The acceptability matrix is drawn from the same generator after the rows.
    """
    if n < 1:
        raise InstanceError("n must be positive")
    rng = np.random.default_rng(seed)
    rows = [(rng.permutation(n) + 1).tolist() for _ in range(2 * n)]
    keep = rng.random((n, n)) < p
    men = [[j for j in rows[i] if keep[i, j - 1]] for i in range(n)]
    women = [[i for i in rows[n + j] if keep[i - 1, j]] for j in range(n)]
    return encode_smi(men, women, n)


def parse_instance(text: str) -> Instance:
    """Parse the text instance format.

    Line 1 holds ``n``, an optional line ``SMI`` follows, then ``n`` men's
    rows and ``n`` women's rows. Rows may carry a ``k:`` label. Blank lines
    and lines starting with ``#`` are skipped. In SMI files a row lists only
    the acceptable people; ``-`` denotes an empty list.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        lines.append((lineno, s))
    if not lines:
        raise InstanceError("empty input")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise InstanceError(f"expected n, got {head!r}", lineno) from None
    if n < 1:
        raise InstanceError("n must be positive", lineno)
    body = lines[1:]
    smi = bool(body) and body[0][1].upper() == "SMI"
    if smi:
        body = body[1:]
    if len(body) != 2 * n:
        where = body[-1][0] if body else lineno
        raise InstanceError(f"expected {2 * n} preference rows, got {len(body)}", where)

    rows = []
    for k, (ln, s) in enumerate(body):
        if ":" in s:
            label, s = s.split(":", 1)
            if label.strip() != str(k % n + 1):
                raise InstanceError(f"row label {label.strip()!r} out of order", ln)
            s = s.strip()
        if smi and s == "-":
            rows.append((ln, []))
            continue
        try:
            row = [int(t) for t in s.split()]
        except ValueError:
            raise InstanceError("non-integer value", ln) from None
        rows.append((ln, row))

    what = ("man", "woman")
    if not smi:
        for k, (ln, row) in enumerate(rows):
            _check_permutation(row, n, f"{what[k // n]} {k % n + 1}", ln)
        return Instance(n, _pad(r for _, r in rows[:n]), _pad(r for _, r in rows[n:]))

    for k, (ln, row) in enumerate(rows):
        who = f"{what[k // n]} {k % n + 1}"
        seen = set()
        for v in row:
            if not 1 <= v <= n:
                raise InstanceError(f"{who}: value {v} out of range 1..{n}", ln)
            if v in seen:
                raise InstanceError(f"{who}: duplicate value {v}", ln)
            seen.add(v)
    men = [r for _, r in rows[:n]]
    women = [r for _, r in rows[n:]]
    for i, acc in enumerate(men, 1):
        for j in acc:
            if i not in women[j - 1]:
                raise InstanceError(f"inconsistent SMI acceptability: man {i} lists woman {j} but not vice versa",
                                    rows[i - 1][0])
    for j, acc in enumerate(women, 1):
        for i in acc:
            if j not in men[i - 1]:
                raise InstanceError(f"inconsistent SMI acceptability: woman {j} lists man {i} but not vice versa",
                                    rows[n + j - 1][0])
    return encode_smi(men, women, n)


def render_instance(inst: Instance) -> str:
    out = [str(inst.n)]
    if inst.smi:
        out.append("SMI")
        for i in range(1, inst.n + 1):
            out.append(" ".join(map(str, inst.man_list(i))) or "-")
        for j in range(1, inst.n + 1):
            out.append(" ".join(map(str, inst.woman_list(j))) or "-")
    else:
        out.extend(" ".join(map(str, r[1:])) for r in inst.mpl[1:])
        out.extend(" ".join(map(str, r[1:])) for r in inst.wpl[1:])
    return "\n".join(out) + "\n"


def load_instance(path) -> Instance:
    with open(path, encoding="utf-8") as f:
        return parse_instance(f.read())
