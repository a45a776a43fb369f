"""Permutation statistics on colored words.

All functions here are pure and work one element at a time.  The bulk
enumeration in :mod:`colormahon.kernel` recomputes the same quantities
with numpy and is tested against these.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import ColoredPermutation, ColoredWord, format_word


def inv(perm: Sequence[int]) -> int:
    """Number of pairs i < j with perm[i] > perm[j]."""
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def des_set(w: ColoredWord) -> frozenset[int]:
    """Positions i (1-based) where letter i is larger than letter i+1."""
    r = w.ranks()
    return frozenset(i for i in range(1, len(r)) if r[i - 1] > r[i])


def maj(w: ColoredWord) -> int:
    return sum(des_set(w))


def col(w: ColoredWord) -> int:
    return sum(w.colors)


def fmaj(w: ColoredWord) -> int:
    return w.c * maj(w) + col(w)


def length_L(pi: ColoredWord) -> int:
    """Length ``col + c * sum_{t_j != 0} #{i < j : pi_i < pi_j} + inv``.

    The middle count compares plain values, ignoring colors.
    """
    vals = pi.values
    middle = 0
    for j, t in enumerate(pi.colors):
        if t:
            vj = vals[j]
            middle += sum(1 for i in range(j) if vals[i] < vj)
    return col(pi) + pi.c * middle + inv(vals)


def inv_tilde(pi: ColoredWord) -> int:
    return pi.c * inv(pi.values) + col(pi)


def subcedants_excedants(w: ColoredWord, ambient_n: int | None = None):
    """Split positions of ``w`` into (subcedants, excedants, fixed points).

    Position j is a subcedant when its letter is below the uncolored letter
    j, a fixed point when it holds uncolored j, and an excedant otherwise.
    Ranks are taken against ``ambient_n`` (default: the word's own).
    """
    n = w.ambient_n if ambient_n is None else ambient_n
    c = w.c
    sub, exc, fix = [], [], []
    for j, (v, t) in enumerate(zip(w.values, w.colors), start=1):
        if v == j and t == 0:
            fix.append(j)
        elif (c - 1 - t) * n + v < (c - 1) * n + j:
            sub.append(j)
        else:
            exc.append(j)
    return frozenset(sub), frozenset(exc), frozenset(fix)


@dataclass(frozen=True)
class StatRow:
    word: ColoredPermutation
    L: int
    fmaj: int
    inv_tilde: int
    maj: int
    col: int
    des: frozenset[int]

    @classmethod
    def of(cls, pi: ColoredPermutation) -> "StatRow":
        d = des_set(pi)
        m = sum(d)
        co = col(pi)
        return cls(pi, length_L(pi), pi.c * m + co, inv_tilde(pi), m, co, d)

    CSV_HEADER = ("word", "L", "fmaj", "inv_tilde", "maj", "col", "des")

    def csv_fields(self) -> list[str]:
        return [format_word(self.word), str(self.L), str(self.fmaj),
                str(self.inv_tilde), str(self.maj), str(self.col),
                ";".join(str(i) for i in sorted(self.des))]

    def as_dict(self) -> dict:
        return {"word": format_word(self.word), "L": self.L, "fmaj": self.fmaj,
                "inv_tilde": self.inv_tilde, "maj": self.maj, "col": self.col,
                "des": sorted(self.des)}
