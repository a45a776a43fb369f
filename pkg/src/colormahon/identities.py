"""Checks of closed-form identities against brute-force enumeration.

Every check returns an :class:`IdentityReport` whose ``lhs`` is computed by
enumerating group elements (or fibers, or shuffles) and whose ``rhs`` comes
from a closed form or, for structural lemmas, from counting the elements
that satisfy the property.  ``passed`` is exactly ``lhs == rhs``.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import kernel
from .core import (DEFAULT_BUDGET, BudgetExceeded, ColoredWord, GroupParams,
                   check_budget, enumerate_group, format_word, group_size)
from .derangements import (d_count, d_counts_split, d_even_enumerated,
                           d_poly_closed, d_poly_enumerated, d_signed_enumerated,
                           derangement_part, derangements_of, fiber, gamma_word,
                           phi, shuffles, tilde,
                           even_part_closed_matches, _closed_terms)
from .qpoly import (BivariateDistribution, IntPolynomial, cleared_sides, format_poly, poly_to_json, q_binomial,
                    q_integer, q_product, substitute_neg)
from .stats import col, des_set, fmaj, length_L, maj


@dataclass
class IdentityReport:
    identity_id: str
    c: int
    n: int
    lhs: IntPolynomial | BivariateDistribution
    rhs: IntPolynomial | BivariateDistribution
    passed: bool
    group_size: int
    elapsed: float = 0.0
    claimed: bool = True
    degenerate: bool = False
    extra: dict = field(default_factory=dict)

    @property
    def hard_failure(self) -> bool:
        return self.claimed and not self.passed

    def to_json(self, timing: bool = False) -> dict:
        def enc(x):
            return x.to_json() if isinstance(x, BivariateDistribution) else poly_to_json(x)

        out = {"identity": self.identity_id, "c": self.c, "n": self.n,
               "pass": self.passed, "claimed": self.claimed,
               "degenerate": self.degenerate, "group_size": self.group_size,
               "lhs": enc(self.lhs), "rhs": enc(self.rhs)}
        if self.extra:
            out["extra"] = self.extra
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else ("FAIL" if self.claimed else "FINDING")
        flags = " (degenerate)" if self.degenerate else ""
        return f"{status:7s} {self.identity_id:20s} c={self.c} n={self.n}{flags}"


class ParityError(ValueError):
    """The identity does not apply to this parity of c."""


def _need_even(identity: str, c: int) -> None:
    if c % 2:
        raise ParityError(f"{identity} needs even c, got c={c}")


def _need_odd(identity: str, c: int) -> None:
    if c % 2 == 0:
        raise ParityError(f"{identity} needs odd c, got c={c}")


def _const(a: int) -> IntPolynomial:
    return IntPolynomial([a])


def _alternating(n: int, first: int) -> tuple[int, ...]:
    # sign of factor i is `first` for odd i and -first for even i
    return tuple(first if i % 2 else -first for i in range(1, n + 1))


# --- Mahonian products over the whole group ---------------------------------

def verify_fmaj_product(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """sum q^fmaj over G_{c,n} against prod [ci]_q."""
    lhs = kernel.poly_sum(c, n, kernel.FMAJ, budget=budget)
    rhs = q_product(c, n)
    return IdentityReport("fmaj-product", c, n, lhs, rhs, lhs == rhs, group_size(c, n))


def verify_biagioli_caselli(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """sum (-1)^L(|pi|) q^fmaj against [c]_q [2c]_{-q} [3c]_q ..."""
    lhs = kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.UNDERLYING_INV, budget=budget)
    rhs = q_product(c, n, _alternating(n, 1))
    return IdentityReport("biagioli-caselli", c, n, lhs, rhs, lhs == rhs, group_size(c, n))


def verify_signed_mahonian_even(c: int, n: int,
                                budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """sum (-1)^L q^fmaj for even c, against the alternating product.

    The same sum is also compared with ``((1-q)/(1+q))^floor((n+1)/2) prod [ci]_q``
    after clearing denominators; the result is in ``extra["rational_form"]``
    and the report only passes if both forms agree.
    """
    _need_even("signed-even", c)
    lhs = kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.LENGTH, budget=budget)
    rhs = q_product(c, n, _alternating(n, -1))
    E = (n + 1) // 2
    left, right = cleared_sides(lhs, [(1, q_product(c, n), E)], E)
    rational_ok = left == right
    ok = lhs == rhs and rational_ok
    return IdentityReport("signed-even", c, n, lhs, rhs, ok, group_size(c, n),
                          extra={"rational_form": rational_ok,
                                 "text": format_poly(lhs)})


def verify_invtilde_even(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """Both sum (-1)^inv~ q^fmaj and sum (-1)^fmaj q^inv~ against prod [ci]_{-q}."""
    _need_even("invtilde-even", c)
    lhs = kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.INV_TILDE, budget=budget)
    swapped = kernel.poly_sum(c, n, kernel.INV_TILDE, sign=kernel.FMAJ, budget=budget)
    rhs = substitute_neg(q_product(c, n))
    ok = lhs == rhs and swapped == rhs
    return IdentityReport("invtilde-even", c, n, lhs, rhs, ok, group_size(c, n),
                          extra={"swapped_matches": swapped == rhs})


def invtilde_odd_rhs(c: int, n: int) -> IntPolynomial:
    if n % 2 == 0:
        return q_product(c, n, _alternating(n, 1))
    # [c]_{-q} * [c]_q [2c]_{-q} ... [(n-1)c]_{-q} * [n]_{q^c}
    return (substitute_neg(q_integer(c)) * q_product(c, n - 1, _alternating(n - 1, 1))
            * q_integer(n).compose_power(c))


def verify_invtilde_odd(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """sum (-1)^inv~ q^fmaj for odd c.

    ``extra["swapped_matches"]`` records whether sum (-1)^fmaj q^inv~ has
    the same form; that is only an observation and does not affect the result.
    """
    _need_odd("invtilde-odd", c)
    lhs = kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.INV_TILDE, budget=budget)
    swapped = kernel.poly_sum(c, n, kernel.INV_TILDE, sign=kernel.FMAJ, budget=budget)
    rhs = invtilde_odd_rhs(c, n)
    return IdentityReport("invtilde-odd", c, n, lhs, rhs, lhs == rhs, group_size(c, n),
                          extra={"swapped_matches": swapped == rhs})


# --- conjecture and the odd-c product search --------------------------------

CONJECTURE_CONFIRMED = frozenset([(c, 2) for c in range(1, 8)] + [(3, 3), (4, 3)])


def conjecture_claimed(c: int, n: int) -> bool:
    # c = 1 is the classical symmetric (inv, maj) distribution
    return c == 1 or (c, n) in CONJECTURE_CONFIRMED or n <= 1


def check_conjecture(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """Compare the (inv~, fmaj) joint distribution with its transpose."""
    dist = kernel.joint_distribution(c, n, kernel.INV_TILDE, kernel.FMAJ, budget=budget)
    flipped = dist.transpose()
    ok = dist == flipped
    extra = {}
    if not ok:
        a, b = dist.asymmetric_witness()
        extra["witness"] = {"t": a, "q": b, "coeff": str(dist[(a, b)]),
                            "transposed_coeff": str(dist[(b, a)])}
    return IdentityReport("conjecture", c, n, dist, flipped, ok, group_size(c, n),
                          claimed=conjecture_claimed(c, n), extra=extra)


def joint_length_fmaj(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> BivariateDistribution:
    return kernel.joint_distribution(c, n, kernel.LENGTH, kernel.FMAJ, budget=budget)


def sign_patterns(n: int) -> Iterable[tuple[int, ...]]:
    return itertools.product((1, -1), repeat=n)


def check_factorial_form(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """Search all 2^n products prod [ic]_{eps_i q} for sum (-1)^L q^fmaj, odd c.

    The claim is that none matches, so ``lhs`` is the number of matching
    patterns and ``rhs`` is zero.  n <= 1 is degenerate (a single factor).
    c = 1 is never claimed: there the sum is inv/maj over S_n, which does
    factor as [1]_q [2]_{-q} [3]_q ...
    """
    _need_odd("factorial-form", c)
    signed = kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.LENGTH, budget=budget)
    matches = [p for p in sign_patterns(n) if q_product(c, n, p) == signed]
    degenerate = n <= 1
    claimed = not degenerate and 3 <= c <= 7 and n <= 3
    return IdentityReport("factorial-form", c, n, _const(len(matches)), _const(0),
                          not matches, group_size(c, n), claimed=claimed,
                          degenerate=degenerate,
                          extra={"signed": format_poly(signed),
                                 "matching_patterns": ["".join("+" if e > 0 else "-" for e in p)
                                                       for p in matches]})


# --- fibers of the derangement part -----------------------------------------

def _fiber_budget(c: int, n: int, budget: int | None) -> int:
    # every fiber element is an element of G_{c,n}; fibers partition the group
    return check_budget(c, n, budget)


def verify_fiber_sums(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """For every derangement alpha of degree k <= n, the fmaj sum over its fiber
    equals q^fmaj(alpha) [n k]_{q^c}.  lhs counts fibers, rhs counts matching ones."""
    size = _fiber_budget(c, n, budget)
    total = good = 0
    first_bad = None
    for k in range(n + 1):
        binom = q_binomial(n, k, c)
        for alpha in derangements_of(c, k, budget):
            got = IntPolynomial.from_terms((fmaj(p), 1) for p in fiber(alpha, n))
            total += 1
            if got == binom.shift(fmaj(alpha)):
                good += 1
            elif first_bad is None:
                first_bad = format_word(alpha)
    extra = {"fibers": total}
    if first_bad is not None:
        extra["first_failure"] = first_bad
    return IdentityReport("wachs-fiber", c, n, _const(total), _const(good), total == good,
                          size, extra=extra)


def verify_signed_fiber_sums(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """Signed fiber sums for even c: sum (-1)^L q^fmaj over the fiber of alpha
    equals (-1)^L(alpha) q^fmaj(alpha) [n k]_{q^c}."""
    _need_even("signed-fiber", c)
    size = _fiber_budget(c, n, budget)
    total = good = 0
    first_bad = None
    for k in range(n + 1):
        binom = q_binomial(n, k, c)
        for alpha in derangements_of(c, k, budget):
            got = IntPolynomial.from_terms(((fmaj(p), -1 if length_L(p) % 2 else 1)
                                            for p in fiber(alpha, n)))
            want = binom.shift(fmaj(alpha)) * (-1 if length_L(alpha) % 2 else 1)
            total += 1
            if got == want:
                good += 1
            elif first_bad is None:
                first_bad = format_word(alpha)
    extra = {"fibers": total}
    if first_bad is not None:
        extra["first_failure"] = first_bad
    return IdentityReport("signed-fiber", c, n, _const(total), _const(good), total == good,
                          size, extra=extra)


def _count_property(identity: str, c: int, n: int, items, prop: Callable,
                    size: int, **kw) -> IdentityReport:
    total = good = 0
    first_bad = None
    for x in items:
        total += 1
        if prop(x):
            good += 1
        elif first_bad is None:
            first_bad = format_word(x)
    extra = {"checked": total}
    if first_bad is not None:
        extra["first_failure"] = first_bad
    return IdentityReport(identity, c, n, _const(total), _const(good), total == good,
                          size, extra=extra, **kw)


def verify_dp_parity(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """L(pi) and L(dp(pi)) have the same parity for even c."""
    _need_even("dp-parity", c)
    return _count_property(
        "dp-parity", c, n, enumerate_group(GroupParams(c, n), budget=budget),
        lambda p: (length_L(p) - length_L(derangement_part(p))) % 2 == 0,
        group_size(c, n))


def verify_tilde_descents(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """tilde(pi) has the same descent set and color sum as pi, for all pi."""
    def ok(p):
        t = tilde(p, n)
        return des_set(t) == des_set(p) and col(t) == col(p)
    return _count_property("tilde-descents", c, n,
                           enumerate_group(GroupParams(c, n), budget=budget), ok,
                           group_size(c, n))


def phi_fiber_ok(alpha, n: int) -> bool:
    """phi maps the fiber of ``alpha`` bijectively onto the shuffles of
    tilde(alpha) with gamma, preserving descents and colors."""
    domain = list(fiber(alpha, n))
    image = [phi(p) for p in domain]
    target = set(shuffles(tilde(alpha, n), gamma_word(alpha, n)))
    if len(set(image)) != len(image) or set(image) != target:
        return False
    return all(des_set(p) == des_set(w) and col(p) == col(w) and fmaj(p) == fmaj(w)
               for p, w in zip(domain, image))


def verify_phi_bijection(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    size = _fiber_budget(c, n, budget)
    alphas = itertools.chain.from_iterable(derangements_of(c, k, budget)
                                           for k in range(n + 1))
    return _count_property("phi-bijection", c, n, alphas, lambda a: phi_fiber_ok(a, n), size)


# --- shuffles ---------------------------------------------------------------

def _standardize(ranks: tuple[int, ...]) -> tuple[int, ...]:
    order = {r: i for i, r in enumerate(sorted(ranks))}
    return tuple(order[r] for r in ranks)


@lru_cache(maxsize=None)
def _shuffle_maj_multiset(pattern_tau: tuple[int, ...], pattern_sigma: tuple[int, ...]):
    # maj only sees the relative order of the letters, so the shuffle sum is a
    # function of the standardized pair.  Dynamic program over interleavings:
    # state (a, b, last) after placing a letters of tau and b of sigma, where
    # a descent at position a+b adds q^(a+b).
    j, k = len(pattern_tau), len(pattern_sigma)
    size = j * k + (j + k) * (j + k - 1) // 2 + 1
    table: dict[tuple[int, int, int], list[int]] = {}
    if j:
        table[(1, 0, 0)] = [1] + [0] * (size - 1)
    if k:
        table[(0, 1, 1)] = [1] + [0] * (size - 1)
    if not j and not k:
        return IntPolynomial([1])
    for total in range(1, j + k):
        for a in range(max(0, total - k), min(j, total) + 1):
            b = total - a
            for last in (0, 1):
                cur = table.pop((a, b, last), None)
                if cur is None:
                    continue
                prev = pattern_tau[a - 1] if last == 0 else pattern_sigma[b - 1]
                for nxt, na, nb in ((0, a + 1, b), (1, a, b + 1)):
                    if na > j or nb > k:
                        continue
                    letter = pattern_tau[na - 1] if nxt == 0 else pattern_sigma[nb - 1]
                    shift = total if prev > letter else 0
                    dst = table.setdefault((na, nb, nxt), [0] * size)
                    for e, v in enumerate(cur):
                        if v:
                            dst[e + shift] += v
    acc = [0] * size
    for key, poly in table.items():
        for e, v in enumerate(poly):
            acc[e] += v
    return IntPolynomial(acc)


def shuffle_pairs(c: int, m: int) -> Iterable[tuple[ColoredWord, ColoredWord]]:
    """All pairs (tau, sigma) of colored words whose values split 1..m."""
    values = range(1, m + 1)
    for j in range(m + 1):
        for left in itertools.combinations(values, j):
            right = [v for v in values if v not in left]
            for tp in itertools.permutations(left):
                for tc in itertools.product(range(c), repeat=j):
                    tau = ColoredWord(tp, tc, c, m)
                    for sp in itertools.permutations(right):
                        for sc in itertools.product(range(c), repeat=m - j):
                            yield tau, ColoredWord(sp, sc, c, m)


def shuffle_pair_count(c: int, m: int) -> int:
    return (m + 1) * group_size(c, m)


def _side_words(values, c: int, m: int) -> list[tuple]:
    # (values, colors, ranks, maj, col) for every colored arrangement of values
    out = []
    for vs in itertools.permutations(values):
        for ts in itertools.product(range(c), repeat=len(vs)):
            ranks = tuple((c - 1 - t) * m + v - 1 for v, t in zip(vs, ts))
            d = sum(i for i in range(1, len(ranks)) if ranks[i - 1] > ranks[i])
            out.append((vs, ts, ranks, d, sum(ts)))
    return out


@lru_cache(maxsize=None)
def _shuffle_fmaj_core(pattern_tau: tuple[int, ...], pattern_sigma: tuple[int, ...],
                       c: int) -> IntPolynomial:
    return _shuffle_maj_multiset(pattern_tau, pattern_sigma).compose_power(c)


def _verify_shuffles(identity: str, c: int, m: int, colored: bool,
                     budget: int | None) -> IdentityReport:
    size = shuffle_pair_count(c, m)
    if budget is not None and size > budget:
        raise BudgetExceeded(f"{size} shuffle pairs exceed budget {budget}")
    total = good = 0
    first_bad = None
    values = range(1, m + 1)
    for j in range(m + 1):
        k = m - j
        binom = q_binomial(m, k, c) if colored else q_binomial(m, k)
        for left in itertools.combinations(values, j):
            right = [v for v in values if v not in left]
            sigmas = _side_words(right, c, m)
            for tv, tc, rt, dt, ct in _side_words(left, c, m):
                for sv, sc, rs, ds, cs in sigmas:
                    pattern = _standardize(rt + rs)
                    if colored:
                        # fmaj(w) = c*maj(w) + col(tau) + col(sigma) for every shuffle w
                        got = _shuffle_fmaj_core(pattern[:j], pattern[j:], c).shift(ct + cs)
                        want = binom.shift(c * (dt + ds) + ct + cs)
                    else:
                        got = _shuffle_maj_multiset(pattern[:j], pattern[j:])
                        want = binom.shift(dt + ds)
                    total += 1
                    if got == want:
                        good += 1
                    elif first_bad is None:
                        first_bad = (f"{format_word(ColoredWord(tv, tc, c, m))} | "
                                     f"{format_word(ColoredWord(sv, sc, c, m))}")
    extra = {"pairs": total}
    if first_bad is not None:
        extra["first_failure"] = first_bad
    return IdentityReport(identity, c, m, _const(total), _const(good), total == good,
                          size, extra=extra)


def verify_shuffle_maj(c: int, m: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """sum over shuffles of q^maj = q^(maj tau + maj sigma) [m k]_q, all pairs of length m."""
    return _verify_shuffles("shuffle-maj", c, m, False, budget)


def verify_shuffle_fmaj(c: int, m: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """sum over shuffles of q^fmaj = q^(fmaj tau + fmaj sigma) [m k]_{q^c}."""
    return _verify_shuffles("shuffle-fmaj", c, m, True, budget)


def shuffle_sum_direct(tau: ColoredWord, sigma: ColoredWord, statistic: Callable) -> IntPolynomial:
    """Shuffle generating function computed by listing every shuffle."""
    return IntPolynomial.from_terms((statistic(w), 1) for w in shuffles(tau, sigma))


# --- derangement polynomials and counts -------------------------------------

def verify_derangement_closed(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    lhs = d_poly_enumerated(c, n, budget)
    rhs = d_poly_closed(c, n)
    return IdentityReport("derangement-closed", c, n, lhs, rhs, lhs == rhs, group_size(c, n))


def d_signed_closed_check(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """Signed derangement polynomial against its closed form, cleared by (1+q)^E.

    ``lhs``/``rhs`` hold the two cleared sides.
    """
    _need_even("signed-derangement", c)
    signed = d_signed_enumerated(c, n, budget)
    left, right = cleared_sides(signed, _closed_terms(c, n), (n + 1) // 2)
    return IdentityReport("signed-derangement", c, n, left, right, left == right,
                          group_size(c, n), extra={"signed": format_poly(signed)})


def even_part_check(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """2 * (even-length derangement polynomial) = plain + signed, and it matches
    its closed form after clearing (1+q)^E."""
    _need_even("even-part", c)
    even = d_even_enumerated(c, n, budget)
    plain = d_poly_enumerated(c, n, budget)
    signed = d_signed_enumerated(c, n, budget)
    lhs = even * 2
    rhs = plain + signed
    closed_ok = even_part_closed_matches(c, n, even)
    split_ok = d_counts_split(c, n)[0] == even(1)
    ok = lhs == rhs and closed_ok and split_ok
    return IdentityReport("even-part", c, n, lhs, rhs, ok, group_size(c, n),
                          extra={"closed_form": closed_ok, "count_at_q1": split_ok})


def verify_derangement_count(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    counted = kernel.poly_sum(c, n, kernel.FMAJ, where=kernel.DERANGED, budget=budget)(1)
    formula = d_count(c, n)
    return IdentityReport("derangement-count", c, n, _const(counted), _const(formula),
                          counted == formula, group_size(c, n))


def verify_parity_difference(c: int, n: int, budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    """Even-length minus odd-length derangements equals (-1)^n for even c.

    ``lhs`` is the enumerated (even, odd) pair, ``rhs`` the counting formula's.
    """
    _need_even("parity-difference", c)
    signed_total = d_signed_enumerated(c, n, budget)(1)
    total = d_poly_enumerated(c, n, budget)(1)
    even, odd = (total + signed_total) // 2, (total - signed_total) // 2
    f_even, f_odd, diff = d_counts_split(c, n)
    lhs = IntPolynomial([even, odd])
    rhs = IntPolynomial([f_even, f_odd])
    ok = lhs == rhs and even - odd == (-1) ** n == diff
    return IdentityReport("parity-difference", c, n, lhs, rhs, ok, group_size(c, n),
                          extra={"difference": even - odd})


# --- suite ------------------------------------------------------------------

@dataclass(frozen=True)
class IdentitySpec:
    identity_id: str
    check: Callable[..., IdentityReport]
    parity: str | None = None   # "even", "odd" or None

    def applies(self, c: int) -> bool:
        if self.parity == "even":
            return c % 2 == 0
        if self.parity == "odd":
            return c % 2 == 1
        return True


IDENTITIES: tuple[IdentitySpec, ...] = (
    IdentitySpec("fmaj-product", verify_fmaj_product),
    IdentitySpec("biagioli-caselli", verify_biagioli_caselli),
    IdentitySpec("signed-even", verify_signed_mahonian_even, "even"),
    IdentitySpec("invtilde-even", verify_invtilde_even, "even"),
    IdentitySpec("invtilde-odd", verify_invtilde_odd, "odd"),
    IdentitySpec("wachs-fiber", verify_fiber_sums),
    IdentitySpec("signed-fiber", verify_signed_fiber_sums, "even"),
    IdentitySpec("dp-parity", verify_dp_parity, "even"),
    IdentitySpec("derangement-closed", verify_derangement_closed),
    IdentitySpec("signed-derangement", d_signed_closed_check, "even"),
    IdentitySpec("even-part", even_part_check, "even"),
    IdentitySpec("derangement-count", verify_derangement_count),
    IdentitySpec("parity-difference", verify_parity_difference, "even"),
    IdentitySpec("tilde-descents", verify_tilde_descents),
    IdentitySpec("phi-bijection", verify_phi_bijection),
    IdentitySpec("shuffle-maj", verify_shuffle_maj),
    IdentitySpec("shuffle-fmaj", verify_shuffle_fmaj),
    IdentitySpec("conjecture", check_conjecture),
    IdentitySpec("factorial-form", check_factorial_form, "odd"),
)

BY_ID = {s.identity_id: s for s in IDENTITIES}


def run_identity(identity_id: str, c: int, n: int,
                 budget: int | None = DEFAULT_BUDGET) -> IdentityReport:
    spec = BY_ID[identity_id]
    if not spec.applies(c):
        raise ParityError(f"{identity_id} needs {spec.parity} c, got c={c}")
    start = time.perf_counter()
    report = spec.check(c, n, budget)
    report.elapsed = time.perf_counter() - start
    return report


@dataclass(frozen=True)
class SuiteConfig:
    c_range: tuple[int, ...] = (1, 2, 3, 4)
    n_range: tuple[int, ...] = (1, 2, 3, 4)
    budget: int = DEFAULT_BUDGET
    identities: tuple[str, ...] | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.identities is not None:
            unknown = [i for i in self.identities if i not in BY_ID]
            if unknown:
                raise KeyError(f"unknown identity id(s): {', '.join(unknown)}")

    def cells(self) -> list[tuple[str, int, int]]:
        """(identity, c, n) cells in report order, skipping parity mismatches
        and cells whose group exceeds the budget."""
        selected = [s for s in IDENTITIES
                    if self.identities is None or s.identity_id in self.identities]
        out = []
        for spec in selected:
            for c in self.c_range:
                if not spec.applies(c):
                    continue
                for n in self.n_range:
                    if _cell_size(spec.identity_id, c, n) <= self.budget:
                        out.append((spec.identity_id, c, n))
        return out


def _cell_size(identity_id: str, c: int, n: int) -> int:
    if identity_id.startswith("shuffle-"):
        return shuffle_pair_count(c, n)
    return group_size(c, n)


def _run_cell(args) -> IdentityReport:
    identity_id, c, n, budget = args
    return run_identity(identity_id, c, n, budget)


def run_suite(config: SuiteConfig) -> list[IdentityReport]:
    """Run every selected cell; the report order never depends on ``jobs``."""
    work = [(i, c, n, config.budget) for i, c, n in config.cells()]
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            return list(pool.map(_run_cell, work))
    return [_run_cell(w) for w in work]


def all_passed(reports: Iterable[IdentityReport]) -> bool:
    return not any(r.hard_failure for r in reports)
