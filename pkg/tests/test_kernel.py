import math

import numpy as np
import pytest

from colormahon import kernel
from colormahon.core import GroupParams, enumerate_group, is_derangement
from colormahon.qpoly import IntPolynomial
from colormahon.stats import fmaj, inv_tilde, length_L, maj, col


@pytest.mark.parametrize("c, n", [(1, 3), (2, 3), (3, 3), (4, 2), (2, 4), (3, 1), (2, 0)])
def test_blocks_match_scalar_statistics(c, n):
    elements = iter(enumerate_group(GroupParams(c, n)))
    count = 0
    for b in kernel.iter_blocks(c, n):
        for k in range(c**n):
            pi = next(elements)
            assert pi.values == b.perm
            assert tuple(b.colors[k].tolist()) == pi.colors
            assert b.L[k] == length_L(pi)
            assert b.fmaj[k] == fmaj(pi)
            assert b.maj[k] == maj(pi)
            assert b.col[k] == col(pi)
            assert b.inv_tilde[k] == inv_tilde(pi)
            assert bool(b.derangement[k]) == is_derangement(pi)
            count += 1
    assert count == c**n * math.factorial(n)


def test_color_matrix_order():
    m = kernel.color_matrix(3, 2)
    assert m.tolist()[:4] == [[0, 0], [1, 0], [2, 0], [0, 1]]
    assert not m.flags.writeable


def _scalar_poly(c, n, stat, sign=None, keep=lambda p: True):
    acc = {}
    for pi in enumerate_group(GroupParams(c, n)):
        if keep(pi):
            s = -1 if sign is not None and sign(pi) % 2 else 1
            acc[stat(pi)] = acc.get(stat(pi), 0) + s
    return IntPolynomial.from_terms(acc)


@pytest.mark.parametrize("c, n", [(2, 3), (3, 3), (4, 2)])
def test_poly_sum_against_scalar(c, n):
    assert kernel.poly_sum(c, n, kernel.FMAJ) == _scalar_poly(c, n, fmaj)
    assert kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.LENGTH) == \
        _scalar_poly(c, n, fmaj, sign=length_L)
    assert kernel.poly_sum(c, n, kernel.FMAJ, where=kernel.DERANGED) == \
        _scalar_poly(c, n, fmaj, keep=is_derangement)


@pytest.mark.parametrize("c, n", [(2, 4), (3, 3)])
def test_chunks_merge(c, n):
    total = math.factorial(n)
    whole = kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.LENGTH)
    cuts = [0, 1, total // 3, total // 2, total]
    parts = [kernel.poly_sum(c, n, kernel.FMAJ, sign=kernel.LENGTH, perm_start=a, perm_stop=b)
             for a, b in zip(cuts, cuts[1:])]
    assert sum(reversed(parts), IntPolynomial()) == whole
    dist = kernel.joint_distribution(c, n, kernel.INV_TILDE, kernel.FMAJ)
    merged = kernel.joint_distribution(c, n, kernel.INV_TILDE, kernel.FMAJ, perm_stop=2)
    merged.merge(kernel.joint_distribution(c, n, kernel.INV_TILDE, kernel.FMAJ, perm_start=2))
    assert merged == dist
    assert dist.total() == c**n * total


def test_empty_selection():
    assert kernel.poly_sum(1, 1, kernel.FMAJ, where=kernel.DERANGED).is_zero()
    assert kernel.joint_distribution(1, 1, kernel.FMAJ, kernel.FMAJ,
                                     where=kernel.DERANGED).total() == 0


def test_underlying_inv_selector():
    b = next(kernel.iter_blocks(2, 2, perm_start=1))
    assert b.perm == (2, 1)
    assert np.array_equal(kernel.UNDERLYING_INV(b), np.ones(4, dtype=np.int64))
