import itertools

import pytest

from colormahon.core import (ColoredPermutation, ColoredWord, GroupParams,
                             enumerate_group, format_word, inverse, parse_word)
from colormahon.stats import (StatRow, col, des_set, fmaj, inv, inv_tilde,
                              length_L, maj, subcedants_excedants)

RUNNING = parse_word("2[3] 1[1] 3 4[2] 5", GroupParams(4, 5))


def w(text, c, n):
    return parse_word(text, GroupParams(c, n))


def test_inv():
    assert inv((2, 1, 3, 4, 5)) == 1
    assert inv((1, 2, 3)) == 0
    assert inv(tuple(range(6, 0, -1))) == 15


def test_running_example():
    assert des_set(RUNNING) == {3}
    assert maj(RUNNING) == 3
    assert col(RUNNING) == 6
    assert fmaj(RUNNING) == 18
    assert length_L(RUNNING) == 19


@pytest.mark.parametrize("text, c, n, expected", [
    ("2[2] 1[3]", 4, 2, {"des": {1}, "fmaj": 9, "col": 5}),
    ("1[3] 2[3]", 4, 2, {"col": 6, "fmaj": 6}),
    ("2[1] 1", 4, 2, {"fmaj": 1}),
    ("1[3] 2[1]", 4, 2, {"L": 8}),
    ("2[3] 1[2]", 4, 2, {"inv_tilde": 9}),
    ("2 1[1]", 3, 2, {"inv_tilde": 4}),
])
def test_table_examples(text, c, n, expected):
    row = StatRow.of(w(text, c, n))
    for key, val in expected.items():
        assert getattr(row, key) == val


def test_identity_is_zero():
    for c, n in [(1, 3), (3, 2), (4, 4)]:
        row = StatRow.of(ColoredPermutation.identity(c, n))
        assert (row.L, row.fmaj, row.inv_tilde, row.maj, row.col) == (0, 0, 0, 0, 0)
        assert row.des == frozenset()


def test_empty_word():
    row = StatRow.of(ColoredPermutation.identity(1, 0))
    assert (row.L, row.fmaj, row.inv_tilde) == (0, 0, 0)


@pytest.mark.parametrize("name, c, n", [("g4_2", 4, 2), ("g3_2", 3, 2)])
def test_small_tables_word_keyed(tables, name, c, n):
    ref = tables[name]
    seen = {}
    for pi in enumerate_group(GroupParams(c, n)):
        row = StatRow.of(pi)
        seen[format_word(pi)] = {"L": row.L, "fmaj": row.fmaj, "inv_tilde": row.inv_tilde}
    assert seen == ref


def _naive_des(pi):
    # compare letters directly by the stated chain: bigger color is smaller
    def key(v, t):
        return (-t, v)
    letters = list(zip(pi.values, pi.colors))
    return {i + 1 for i in range(len(letters) - 1) if key(*letters[i]) > key(*letters[i + 1])}


@pytest.mark.parametrize("c", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_flag_major_decomposition(c, n):
    for pi in enumerate_group(GroupParams(c, n)):
        d = _naive_des(pi)
        assert des_set(pi) == d
        assert fmaj(pi) == c * sum(d) + sum(pi.colors)
        assert inv_tilde(pi) == c * inv(pi.values) + sum(pi.colors)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_symmetric_group_specialization(n):
    for pi in enumerate_group(GroupParams(1, n)):
        assert fmaj(pi) == maj(pi)
        assert length_L(pi) == inv(pi.values)


def _colored_inversions(pi):
    # independent count of L: pairs i<j with pi_i > pi_j, plus for each colored
    # letter j its color and c times the smaller values to its left
    c = pi.c
    total = 0
    for j, (v, t) in enumerate(zip(pi.values, pi.colors)):
        total += sum(1 for i in range(j) if pi.values[i] > v)
        if t:
            total += t + c * sum(1 for i in range(j) if pi.values[i] < v)
    return total


def test_length_by_second_count():
    for c, n in [(2, 3), (3, 3), (4, 3)]:
        for pi in enumerate_group(GroupParams(c, n)):
            assert length_L(pi) == _colored_inversions(pi)


@pytest.mark.parametrize("c, n", [(c, n) for c in range(1, 5) for n in range(1, 5)])
def test_inv_tilde_invariant_under_color_keeping_inverse(c, n):
    for pi in enumerate_group(GroupParams(c, n)):
        assert inv_tilde(pi) == inv_tilde(inverse(pi, keep_colors=True))


@pytest.mark.parametrize("c, n", [(c, n) for c in (1, 2) for n in range(1, 5)])
def test_inv_tilde_invariant_under_group_inverse_small_c(c, n):
    for pi in enumerate_group(GroupParams(c, n)):
        assert inv_tilde(pi) == inv_tilde(inverse(pi))


@pytest.mark.parametrize("c", [3, 4])
def test_group_inverse_changes_inv_tilde(c):
    # negating colors turns col into sum (c - t) over colored letters
    pi = w("1[1]", c, 1)
    assert inv_tilde(pi) == 1
    assert inv_tilde(inverse(pi)) == c - 1
    bad = [p for p in enumerate_group(GroupParams(c, 2)) if inv_tilde(p) != inv_tilde(inverse(p))]
    assert bad and all(sum(p.colors) != sum((c - t) % c for t in p.colors) for p in bad)


def test_subcedants_example():
    pi = w("2 1[1] 3 4[2] 5 7 6[2]", 3, 7)
    sub, exc, fix = subcedants_excedants(pi)
    letters = lambda pos: {format_word(ColoredWord([pi.values[j - 1]], [pi.colors[j - 1]], 3, 7))
                           for j in pos}
    assert letters(sub) == {"1[1]", "4[2]", "6[2]"}
    assert letters(exc) == {"2", "7"}
    assert letters(fix) == {"3", "5"}


def test_subcedants_identity():
    sub, exc, fix = subcedants_excedants(ColoredPermutation.identity(3, 4))
    assert sub == exc == frozenset()
    assert fix == {1, 2, 3, 4}


@pytest.mark.parametrize("c, n", [(2, 3), (3, 3), (4, 3), (2, 4)])
def test_subcedant_partition(c, n):
    for pi in enumerate_group(GroupParams(c, n)):
        sub, exc, fix = subcedants_excedants(pi)
        assert len(sub) + len(exc) + len(fix) == n
        assert not (sub & exc or sub & fix or exc & fix)
        for j in range(1, n + 1):
            if pi.values[j - 1] == j and pi.colors[j - 1] != 0:
                assert j in sub
        for j in exc:
            assert pi.colors[j - 1] == 0


def test_fmaj_is_mahonian():
    from colormahon.qpoly import IntPolynomial, q_product
    for c, n in itertools.product(range(1, 5), range(0, 5)):
        got = IntPolynomial.from_terms((fmaj(p), 1) for p in enumerate_group(GroupParams(c, n)))
        assert got == q_product(c, n)


def test_statrow_csv():
    row = StatRow.of(RUNNING)
    assert row.csv_fields() == ["2[3] 1[1] 3 4[2] 5", "19", "18", "10", "3", "6", "3"]
    row = StatRow.of(w("3 2 1", 1, 3))
    assert row.csv_fields()[-1] == "1;2"
