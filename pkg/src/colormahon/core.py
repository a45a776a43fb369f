"""Colored permutations of G_{c,n}: representation, parsing, order, enumeration.

A colored permutation is stored as two parallel tuples, ``values`` (a
permutation of 1..n) and ``colors`` (integers in 0..c-1).  Position ``j``
(1-based) holds the letter ``values[j-1]`` with color ``colors[j-1]``.

Letters are compared in the order

    1^[c-1] < ... < n^[c-1] < ... < 1^[1] < ... < n^[1] < 1 < ... < n

i.e. a larger color is smaller, and within one color the value decides.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_BUDGET = 10**7

_TOKEN = re.compile(r"(\d+)(?:\[(\d+)\])?")


class WordError(ValueError):
    """Raised for malformed or invalid colored words."""


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed the element budget."""


@dataclass(frozen=True)
class ColoredLetter:
    value: int
    color: int = 0


@dataclass(frozen=True)
class GroupParams:
    c: int
    n: int

    def __post_init__(self):
        if self.c < 1:
            raise ValueError(f"number of colors must be >= 1, got {self.c}")
        if self.n < 0:
            raise ValueError(f"degree must be >= 0, got {self.n}")

    @property
    def size(self) -> int:
        return group_size(self.c, self.n)


def group_size(c: int, n: int) -> int:
    return c**n * math.factorial(n)


def letter_rank(letter: ColoredLetter, params: GroupParams) -> int:
    """Position of ``letter`` in the total order on colored letters (0-based).

    >>> letter_rank(ColoredLetter(1, 3), GroupParams(4, 5))
    0
    >>> letter_rank(ColoredLetter(5, 0), GroupParams(4, 5))
    19
    """
    return _rank(letter.value, letter.color, params.c, params.n)


def _rank(value: int, color: int, c: int, n: int) -> int:
    return (c - 1 - color) * n + (value - 1)


class ColoredWord:
    """Word of colored letters with distinct values drawn from 1..ambient_n."""

    __slots__ = ("values", "colors", "c", "ambient_n")

    def __init__(self, values: Iterable[int], colors: Iterable[int], c: int,
                 ambient_n: int):
        values = tuple(values)
        colors = tuple(colors)
        if len(values) != len(colors):
            raise WordError("values and colors differ in length")
        if c < 1:
            raise WordError(f"number of colors must be >= 1, got {c}")
        if len(set(values)) != len(values):
            raise WordError(f"repeated value in {values}")
        for v in values:
            if not 1 <= v <= ambient_n:
                raise WordError(f"value {v} outside 1..{ambient_n}")
        for t in colors:
            if not 0 <= t < c:
                raise WordError(f"color {t} outside 0..{c - 1}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "ambient_n", ambient_n)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (ColoredWord, (self.values, self.colors, self.c, self.ambient_n))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[ColoredLetter]:
        return (ColoredLetter(v, t) for v, t in zip(self.values, self.colors))

    @property
    def letters(self) -> tuple[ColoredLetter, ...]:
        return tuple(self)

    def ranks(self) -> tuple[int, ...]:
        """Letter ranks in the total order, computed against ``ambient_n``."""
        c, n = self.c, self.ambient_n
        return tuple(_rank(v, t, c, n) for v, t in zip(self.values, self.colors))

    def _key(self):
        return (type(self).__name__, self.values, self.colors, self.c, self.ambient_n)

    def __eq__(self, other):
        if not isinstance(other, ColoredWord):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}({format_word(self)!r}, c={self.c})"


class ColoredPermutation(ColoredWord):
    """An element of G_{c,n}; the values are exactly 1..n."""

    __slots__ = ()

    def __init__(self, values: Iterable[int], colors: Iterable[int] | None = None,
                 c: int = 1):
        values = tuple(values)
        if colors is None:
            colors = (0,) * len(values)
        super().__init__(values, colors, c, len(values))
        if sorted(values) != list(range(1, len(values) + 1)):
            raise WordError(f"{values} is not a permutation of 1..{len(values)}")

    def __reduce__(self):
        return (ColoredPermutation, (self.values, self.colors, self.c))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def params(self) -> GroupParams:
        return GroupParams(self.c, self.n)

    @classmethod
    def identity(cls, c: int, n: int) -> "ColoredPermutation":
        return cls(range(1, n + 1), (0,) * n, c)


def parse_word(text: str, params: GroupParams) -> ColoredPermutation:
    """Parse ``"2[3] 1[1] 3 4[2] 5"`` style text into a colored permutation."""
    tokens = text.split()
    values, colors = [], []
    for tok in tokens:
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise WordError(f"malformed token {tok!r}")
        values.append(int(m.group(1)))
        colors.append(int(m.group(2) or 0))
    if len(values) != params.n:
        raise WordError(f"expected {params.n} letters, got {len(values)}")
    for v in values:
        if not 1 <= v <= params.n:
            raise WordError(f"value {v} outside 1..{params.n}")
    if len(set(values)) != len(values):
        raise WordError(f"repeated value in {text!r}")
    for t in colors:
        if t >= params.c:
            raise WordError(f"color {t} not below c={params.c}")
    return ColoredPermutation(values, colors, params.c)


def format_word(word: ColoredWord) -> str:
    return " ".join(f"{v}[{t}]" if t else str(v)
                    for v, t in zip(word.values, word.colors))


def _unrank_permutation(index: int, n: int) -> list[int]:
    pool = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        q, index = divmod(index, math.factorial(i - 1))
        out.append(pool.pop(q))
    return out


def permutations_from(n: int, start: int = 0) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..n in lexicographic order, starting at index ``start``."""
    if start == 0:
        yield from itertools.permutations(range(1, n + 1))
        return
    if start >= math.factorial(n):
        return
    perm = _unrank_permutation(start, n)
    while True:
        yield tuple(perm)
        # next lexicographic permutation
        i = n - 2
        while i >= 0 and perm[i] > perm[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while perm[j] < perm[i]:
            j -= 1
        perm[i], perm[j] = perm[j], perm[i]
        perm[i + 1:] = reversed(perm[i + 1:])


def color_vectors(c: int, n: int) -> Iterator[tuple[int, ...]]:
    """All color vectors; t_1 varies fastest, t_n is the most significant digit."""
    for digits in itertools.product(range(c), repeat=n):
        yield digits[::-1]


def check_budget(c: int, n: int, budget: int | None) -> int:
    size = group_size(c, n)
    if budget is not None and size > budget:
        raise BudgetExceeded(f"|G_{{{c},{n}}}| = {size} exceeds budget {budget}")
    return size


def enumerate_group(params: GroupParams, start: int = 0, stop: int | None = None,
                    budget: int | None = DEFAULT_BUDGET) -> Iterator[ColoredPermutation]:
    """Yield the elements of G_{c,n} with indices in ``[start, stop)``.

    Underlying permutations come in lexicographic order; for each of them the
    ``c**n`` color vectors follow as base-c counters with ``t_n`` most
    significant.  Element ``i`` therefore has permutation index
    ``i // c**n`` and color index ``i % c**n``.
    """
    c, n = params.c, params.n
    size = check_budget(c, n, budget)
    stop = size if stop is None else min(stop, size)
    if start >= stop:
        return
    block = c**n
    colorings = list(color_vectors(c, n))
    first_perm, offset = divmod(start, block)
    index = start
    for perm in permutations_from(n, first_perm):
        for colors in colorings[offset:]:
            if index >= stop:
                return
            yield ColoredPermutation(perm, colors, c)
            index += 1
        offset = 0


def inverse(pi: ColoredPermutation, keep_colors: bool = False) -> ColoredPermutation:
    """Group inverse: if i maps to pi_i^[t_i], the inverse maps pi_i to i^[-t_i].

    With ``keep_colors`` the color travels unchanged (pi_i maps to i^[t_i]).
    That variant is not a group inverse for c >= 3, but it is the one that
    leaves ``inv_tilde`` invariant; the group inverse only does so for c <= 2.
    """
    n, c = pi.n, pi.c
    values = [0] * n
    colors = [0] * n
    for i, (v, t) in enumerate(zip(pi.values, pi.colors), start=1):
        values[v - 1] = i
        colors[v - 1] = t if keep_colors else (c - t) % c
    return ColoredPermutation(values, colors, c)


def fixed_points(pi: ColoredWord) -> frozenset[int]:
    """Positions j holding the uncolored letter j.

    A letter j^[t] with t != 0 at position j is not a fixed point.
    """
    return frozenset(j for j, (v, t) in enumerate(zip(pi.values, pi.colors), start=1)
                     if v == j and t == 0)


def is_derangement(pi: ColoredWord) -> bool:
    return not fixed_points(pi)
