"""Bulk enumeration of G_{c,n} with numpy.

For each underlying permutation (lexicographic order) the statistics of
all ``c**n`` colorings are computed at once, in the same element order as
:func:`colormahon.core.enumerate_group`.  Results are reduced into exact
integer polynomials; partial results over disjoint permutation ranges can
be added together in any order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .core import DEFAULT_BUDGET, check_budget, permutations_from
from .qpoly import BivariateDistribution, IntPolynomial
from .stats import inv as inv_count


@lru_cache(maxsize=32)
def color_matrix(c: int, n: int) -> np.ndarray:
    """Row k holds the k-th color vector (t_1 least significant digit)."""
    idx = np.arange(c**n, dtype=np.int64)
    powers = c ** np.arange(n, dtype=np.int64)
    mat = (idx[:, None] // powers[None, :]) % c
    mat.setflags(write=False)
    return mat


@dataclass(frozen=True)
class Block:
    """Statistics of all colorings of one underlying permutation."""

    c: int
    n: int
    perm: tuple[int, ...]
    colors: np.ndarray
    inv: int
    col: np.ndarray
    maj: np.ndarray
    fmaj: np.ndarray
    L: np.ndarray
    inv_tilde: np.ndarray
    derangement: np.ndarray


def _block(c: int, n: int, perm: tuple[int, ...]) -> Block:
    T = color_matrix(c, n)
    sigma = np.asarray(perm, dtype=np.int64)
    inv_sigma = inv_count(perm)
    col = T.sum(axis=1)
    # smaller[j] = #{i < j : sigma_i < sigma_j}
    smaller = np.array([int((sigma[:j] < sigma[j]).sum()) for j in range(n)], dtype=np.int64)
    L = col + c * ((T != 0).astype(np.int64) @ smaller) + inv_sigma
    if n > 1:
        ranks = (c - 1 - T) * n + (sigma - 1)
        descents = ranks[:, :-1] > ranks[:, 1:]
        maj = descents.astype(np.int64) @ np.arange(1, n, dtype=np.int64)
    else:
        maj = np.zeros(T.shape[0], dtype=np.int64)
    fmaj = c * maj + col
    own = sigma == np.arange(1, n + 1)
    fixed = (T == 0) & own[None, :]
    derangement = ~fixed.any(axis=1)
    return Block(c, n, tuple(perm), T, inv_sigma, col, maj, fmaj, L,
                 c * inv_sigma + col, derangement)


def iter_blocks(c: int, n: int, perm_start: int = 0, perm_stop: int | None = None,
                budget: int | None = DEFAULT_BUDGET):
    check_budget(c, n, budget)
    total = math.factorial(n)
    perm_stop = total if perm_stop is None else min(perm_stop, total)
    for k, perm in enumerate(permutations_from(n, perm_start), start=perm_start):
        if k >= perm_stop:
            break
        yield _block(c, n, perm)


Stat = Callable[[Block], np.ndarray]


def _signed_counts(exps: np.ndarray, parity: np.ndarray | None) -> np.ndarray:
    if exps.size == 0:
        return np.zeros(1, dtype=np.int64)
    if parity is None:
        return np.bincount(exps)
    odd = (parity % 2).astype(bool)
    size = int(exps.max()) + 1
    return (np.bincount(exps[~odd], minlength=size)
            - np.bincount(exps[odd], minlength=size))


def poly_sum(c: int, n: int, exponent: Stat, sign: Stat | None = None,
             where: Stat | None = None, perm_start: int = 0,
             perm_stop: int | None = None,
             budget: int | None = DEFAULT_BUDGET) -> IntPolynomial:
    """``sum (-1)**sign(pi) * q**exponent(pi)`` over selected elements."""
    acc: list[int] = []
    for b in iter_blocks(c, n, perm_start, perm_stop, budget):
        exps = exponent(b)
        parity = sign(b) if sign is not None else None
        if where is not None:
            mask = where(b)
            exps = exps[mask]
            parity = parity[mask] if parity is not None else None
        counts = _signed_counts(exps, parity)
        if len(counts) > len(acc):
            acc.extend([0] * (len(counts) - len(acc)))
        for e, v in enumerate(counts.tolist()):
            acc[e] += v
    return IntPolynomial(acc)


def joint_distribution(c: int, n: int, t_stat: Stat, q_stat: Stat,
                       where: Stat | None = None, perm_start: int = 0,
                       perm_stop: int | None = None,
                       budget: int | None = DEFAULT_BUDGET) -> BivariateDistribution:
    """``sum t**t_stat(pi) q**q_stat(pi)`` as a sparse distribution."""
    dist = BivariateDistribution()
    for b in iter_blocks(c, n, perm_start, perm_stop, budget):
        a, q = t_stat(b), q_stat(b)
        if where is not None:
            mask = where(b)
            a, q = a[mask], q[mask]
        if a.size == 0:
            continue
        pairs, counts = np.unique(np.stack([a, q], axis=1), axis=0, return_counts=True)
        for (x, y), k in zip(pairs.tolist(), counts.tolist()):
            dist.accumulate(x, y, k)
    return dist


def FMAJ(b: Block) -> np.ndarray:
    return b.fmaj


def LENGTH(b: Block) -> np.ndarray:
    return b.L


def INV_TILDE(b: Block) -> np.ndarray:
    return b.inv_tilde


def UNDERLYING_INV(b: Block) -> np.ndarray:
    return np.full(b.col.shape, b.inv, dtype=np.int64)


def DERANGED(b: Block) -> np.ndarray:
    return b.derangement


def EVEN_DERANGED(b: Block) -> np.ndarray:
    return b.derangement & (b.L % 2 == 0)
