"""Derangement parts, the tilde relabeling, shuffles and derangement polynomials."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from . import kernel
from .core import (DEFAULT_BUDGET, ColoredPermutation, ColoredWord, WordError,
                   enumerate_group, fixed_points, GroupParams)
from .qpoly import (IntPolynomial, ZERO, partial_product, poly_to_json,
                    rational_check)
from .stats import subcedants_excedants


def derangement_part(pi: ColoredWord) -> ColoredPermutation:
    """Subword of non-fixed letters, values relabeled by rank, colors kept."""
    fixed = fixed_points(pi)
    kept = [(v, t) for j, (v, t) in enumerate(zip(pi.values, pi.colors), start=1)
            if j not in fixed]
    order = {v: i for i, v in enumerate(sorted(v for v, _ in kept), start=1)}
    return ColoredPermutation([order[v] for v, _ in kept], [t for _, t in kept], pi.c)


def tilde(w: ColoredWord, ambient_n: int) -> ColoredWord:
    """Relabel ``w`` by the class of each letter.

    With s subcedants: the i-th smallest subcedant (by value, ignoring
    color) becomes i with its color kept, the i-th smallest fixed point
    becomes s+i, and the i-th largest excedant becomes ambient_n-i+1.

    Subcedants must keep their relative order.  Numbering them downwards
    (s-i+1) would turn ``3 1 2`` into ``3 2 1`` and change the descent set.
    """
    k = len(w)
    if k > ambient_n:
        raise WordError(f"word of length {k} does not fit ambient degree {ambient_n}")
    sub, exc, fix = subcedants_excedants(w)
    s = len(sub)
    vals = w.values
    new = list(vals)
    for i, j in enumerate(sorted(sub, key=lambda j: vals[j - 1]), start=1):
        new[j - 1] = i
    for i, j in enumerate(sorted(fix), start=1):
        new[j - 1] = s + i
    for i, j in enumerate(sorted(exc, key=lambda j: vals[j - 1], reverse=True), start=1):
        new[j - 1] = ambient_n - i + 1
    return ColoredWord(new, w.colors, w.c, ambient_n)


def phi(pi: ColoredPermutation) -> ColoredWord:
    return tilde(pi, pi.n)


def gamma_word(alpha: ColoredPermutation, n: int) -> ColoredWord:
    """Increasing uncolored word s(alpha)+1, ..., n-e(alpha)."""
    sub, exc, _ = subcedants_excedants(alpha)
    vals = range(len(sub) + 1, n - len(exc) + 1)
    return ColoredWord(vals, [0] * len(vals), alpha.c, n)


def fiber(alpha: ColoredPermutation, n: int) -> Iterator[ColoredPermutation]:
    """All pi in G_{c,n} with derangement part ``alpha``.

    Fixed-value sets are taken in lexicographic order of their complements.
    """
    k = alpha.n
    if k > n:
        raise ValueError(f"derangement of degree {k} exceeds n={n}")
    if fixed_points(alpha):
        raise ValueError(f"{alpha!r} is not a derangement")
    for moved in itertools.combinations(range(1, n + 1), k):
        values = list(range(1, n + 1))
        colors = [0] * n
        for pos, v, t in zip(moved, alpha.values, alpha.colors):
            values[pos - 1] = moved[v - 1]
            colors[pos - 1] = t
        yield ColoredPermutation(values, colors, alpha.c)


def derangements_of(c: int, k: int, budget: int | None = DEFAULT_BUDGET):
    return (p for p in enumerate_group(GroupParams(c, k), budget=budget)
            if not fixed_points(p))


def shuffles(tau: ColoredWord, sigma: ColoredWord) -> Iterator[ColoredWord]:
    """All interleavings of ``tau`` and ``sigma`` keeping both orders."""
    if set(tau.values) & set(sigma.values):
        raise WordError("shuffled words must have disjoint values")
    if tau.c != sigma.c:
        raise WordError("shuffled words must share the number of colors")
    j, k = len(tau), len(sigma)
    ambient = max(tau.ambient_n, sigma.ambient_n)
    ta = list(zip(tau.values, tau.colors))
    sa = list(zip(sigma.values, sigma.colors))
    for slots in itertools.combinations(range(j + k), j):
        slots = set(slots)
        it_t, it_s = iter(ta), iter(sa)
        letters = [next(it_t) if p in slots else next(it_s) for p in range(j + k)]
        yield ColoredWord([v for v, _ in letters], [t for _, t in letters], tau.c, ambient)


# --- derangement polynomials ------------------------------------------------

def d_poly_enumerated(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IntPolynomial:
    """``sum q**fmaj`` over colored derangements of G_{c,n}, by enumeration."""
    return kernel.poly_sum(c, n, kernel.FMAJ, where=kernel.DERANGED, budget=budget)


def d_signed_enumerated(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IntPolynomial:
    """``sum (-1)**L q**fmaj`` over colored derangements, by enumeration."""
    return kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.LENGTH,
                           where=kernel.DERANGED, budget=budget)


def d_even_enumerated(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IntPolynomial:
    """``sum q**fmaj`` over derangements of even length."""
    return kernel.poly_sum(c, n, kernel.FMAJ, where=kernel.EVEN_DERANGED, budget=budget)


def _closed_terms(c: int, n: int) -> list[tuple[int, IntPolynomial, int]]:
    # k-th summand without its ((1-q)/(1+q)) power: (-1)^k q^{c C(k,2)} prod_{i>k} [ci]_q
    out = []
    for k in range(n + 1):
        core = partial_product(c, k + 1, n).shift(c * k * (k - 1) // 2)
        out.append((-1 if k % 2 else 1, core, (n - k + 1) // 2))
    return out


def d_poly_closed(c: int, n: int) -> IntPolynomial:
    acc = ZERO
    for sign, core, _ in _closed_terms(c, n):
        acc = acc + core if sign == 1 else acc - core
    return acc


def _require_even(c: int) -> None:
    if c % 2:
        raise ValueError(f"identity requires even c, got c={c}")


def signed_closed_matches(c: int, n: int, lhs: IntPolynomial) -> bool:
    """Whether ``lhs`` equals the closed form of the signed derangement polynomial."""
    _require_even(c)
    terms = _closed_terms(c, n)
    return rational_check(lhs, terms, (n + 1) // 2)


def even_part_closed_matches(c: int, n: int, lhs: IntPolynomial) -> bool:
    """Whether ``lhs`` equals the closed form of the even-length derangement polynomial.

    The halves are cleared by comparing ``2 * lhs`` against the doubled sum.
    """
    _require_even(c)
    terms = []
    for sign, core, e in _closed_terms(c, n):
        terms.append((sign, core, 0))
        terms.append((sign, core, e))
    return rational_check(lhs * 2, terms, (n + 1) // 2)


def d_count(c: int, n: int) -> int:
    """``sum_k (-1)**k (n!/k!) c**(n-k)``."""
    return sum((-1) ** k * (math.factorial(n) // math.factorial(k)) * c ** (n - k)
               for k in range(n + 1))


def d_counts_split(c: int, n: int) -> tuple[int, int, int]:
    """(even-length count, odd-length count, their difference) for even c."""
    _require_even(c)
    h = sum((-1) ** k * (math.factorial(n) // math.factorial(k)) * c ** (n - k)
            for k in range(n))
    if h % 2:
        raise ArithmeticError(f"inconsistent split: H={h} is odd for c={c}, n={n}")
    sign = -1 if n % 2 else 1
    even, odd = h // 2 + sign, h // 2
    return even, odd, even - odd


@dataclass(frozen=True)
class DerangementPolynomials:
    c: int
    n: int
    plain: IntPolynomial
    signed: IntPolynomial
    even_part: IntPolynomial
    counts: tuple[int, int, int]

    @classmethod
    def compute(cls, c: int, n: int, budget: int | None = DEFAULT_BUDGET):
        plain = d_poly_enumerated(c, n, budget)
        signed = d_signed_enumerated(c, n, budget)
        even = d_even_enumerated(c, n, budget)
        return cls(c, n, plain, signed, even, (plain(1), even(1), plain(1) - even(1)))

    def to_json(self) -> dict:
        return {"c": self.c, "n": self.n, "plain": poly_to_json(self.plain),
                "signed": poly_to_json(self.signed),
                "even_part": poly_to_json(self.even_part),
                "counts": [str(x) for x in self.counts]}
