import json

import pytest

from colormahon.identities import (BY_ID, CONJECTURE_CONFIRMED, IDENTITIES,
                                   IdentityReport, ParityError, SuiteConfig,
                                   all_passed, check_conjecture,
                                   check_factorial_form, d_signed_closed_check,
                                   even_part_check, invtilde_odd_rhs,
                                   run_identity, run_suite, sign_patterns,
                                   verify_biagioli_caselli, verify_fmaj_product,
                                   verify_invtilde_even, verify_invtilde_odd,
                                   verify_signed_mahonian_even)
from colormahon.qpoly import IntPolynomial, q_integer, q_product, substitute_neg


def poly(terms):
    return IntPolynomial.from_terms(terms)


def test_fmaj_product_examples():
    r = verify_fmaj_product(4, 2)
    assert r.passed and r.lhs.degree == 10 and r.group_size == 32
    r = verify_fmaj_product(1, 3)
    assert r.passed and r.rhs == q_integer(1) * q_integer(2) * q_integer(3)
    assert verify_fmaj_product(3, 3).passed


def test_biagioli_caselli_examples():
    r = verify_biagioli_caselli(3, 2)
    assert r.passed and r.rhs == q_product(3, 2, (1, -1))
    r = verify_biagioli_caselli(1, 1)
    assert r.passed and r.lhs == IntPolynomial([1])
    assert verify_biagioli_caselli(4, 3).passed


def test_signed_even_examples():
    r = verify_signed_mahonian_even(4, 2)
    assert r.passed
    assert r.lhs == poly({0: 1, 2: 1, 8: -1, 10: -1})
    for n in range(1, 5):
        r = verify_signed_mahonian_even(2, n)
        assert r.passed
        assert r.rhs == q_product(2, n, tuple(-1 if i % 2 else 1 for i in range(1, n + 1)))
    assert verify_signed_mahonian_even(2, 1).lhs == IntPolynomial([1, -1])
    with pytest.raises(ParityError):
        verify_signed_mahonian_even(3, 2)


def test_signed_even_two_forms_agree():
    for c in (2, 4):
        for n in range(1, 5):
            assert verify_signed_mahonian_even(c, n).extra["rational_form"] is True


def test_invtilde_even_examples():
    for c, n in [(2, 2), (4, 2)]:
        r = verify_invtilde_even(c, n)
        assert r.passed and r.extra["swapped_matches"] is True
    assert verify_invtilde_even(2, 1).lhs == substitute_neg(q_integer(2))
    with pytest.raises(ParityError):
        verify_invtilde_even(1, 2)


def test_invtilde_odd_examples():
    r = verify_invtilde_odd(3, 2)
    assert r.passed
    assert r.lhs == poly({0: 1, 2: 1, 3: -1, 4: 1, 5: -1, 7: -1})
    for n in range(1, 6):
        r = verify_invtilde_odd(1, n)
        assert r.passed
        assert r.rhs == q_product(1, n, tuple(1 if i % 2 else -1 for i in range(1, n + 1)))
    assert verify_invtilde_odd(3, 3).passed
    with pytest.raises(ParityError):
        verify_invtilde_odd(2, 2)


def test_invtilde_odd_rhs_odd_n_branch():
    # [c]_{-q} [c]_q [2c]_{-q} [3c]_q ... [(n-1)c]_{-q} [n]_{q^c}, here n = 3
    c = 3
    expected = (substitute_neg(q_integer(c)) * q_integer(c) * substitute_neg(q_integer(2 * c))
                * q_integer(3).compose_power(c))
    assert invtilde_odd_rhs(c, 3) == expected


def test_conjecture_examples():
    for c in range(1, 8):
        assert check_conjecture(c, 2).passed
    assert check_conjecture(3, 3).passed and check_conjecture(4, 3).passed
    for n in range(1, 6):
        r = check_conjecture(1, n)
        assert r.passed and r.claimed
    assert (5, 2) in CONJECTURE_CONFIRMED and (3, 4) not in CONJECTURE_CONFIRMED


def test_conjecture_unconfirmed_cell_is_not_claimed():
    r = check_conjecture(3, 4)
    assert not r.claimed
    assert not r.hard_failure


def test_factorial_form_examples():
    for c in (3, 5):
        r = check_factorial_form(c, 2)
        assert r.passed and r.claimed and r.extra["matching_patterns"] == []
    r = check_factorial_form(1, 1)
    assert r.degenerate and not r.claimed
    # [1]_q = [1]_{-q}, so both single-factor patterns match
    assert r.extra["matching_patterns"] == ["+", "-"]
    with pytest.raises(ParityError):
        check_factorial_form(2, 2)


def test_factorial_form_at_one_color_matches():
    # over S_n the signed sum does factor, so c = 1 is reported and not claimed;
    # the first factor [1] ignores its sign
    for n in (2, 3):
        r = check_factorial_form(1, n)
        assert not r.passed and not r.claimed and not r.hard_failure
        tail = "".join("+-"[i % 2] for i in range(1, n))
        assert r.extra["matching_patterns"] == ["+" + tail, "-" + tail]


def test_sign_patterns():
    pats = list(sign_patterns(3))
    assert len(pats) == len(set(pats)) == 8
    assert list(sign_patterns(0)) == [()]


def test_derangement_reports():
    for c, n in [(2, 2), (4, 2), (2, 4)]:
        assert d_signed_closed_check(c, n).passed
        assert even_part_check(c, n).passed
    with pytest.raises(ParityError):
        d_signed_closed_check(3, 2)
    with pytest.raises(ParityError):
        even_part_check(1, 2)


@pytest.mark.parametrize("identity", [s.identity_id for s in IDENTITIES])
def test_each_identity_small_grid(identity):
    spec = BY_ID[identity]
    for c in (1, 2, 3):
        if not spec.applies(c):
            with pytest.raises(ParityError):
                run_identity(identity, c, 2)
            continue
        for n in (1, 2, 3):
            r = run_identity(identity, c, n)
            assert not r.hard_failure, r.summary()
            assert r.identity_id == identity and (r.c, r.n) == (c, n)
            assert r.elapsed >= 0


def test_report_json_and_summary():
    r = run_identity("signed-even", 4, 2)
    data = r.to_json()
    assert "elapsed" not in data
    assert data["lhs"] == [[0, "1"], [2, "1"], [8, "-1"], [10, "-1"]]
    assert data["pass"] is True
    json.dumps(data)
    assert "elapsed" in r.to_json(timing=True)
    assert r.summary().startswith("PASS")
    conj = run_identity("conjecture", 2, 2).to_json()
    assert all(len(e) == 3 for e in conj["lhs"])


def test_failed_report_is_hard_failure():
    r = IdentityReport("x", 1, 1, IntPolynomial([1]), IntPolynomial([2]), False, 1)
    assert r.hard_failure
    assert not all_passed([r])
    r.claimed = False
    assert all_passed([r])
    assert r.summary().startswith("FINDING")


def test_run_suite_empty_grid():
    assert run_suite(SuiteConfig(c_range=(), n_range=())) == []


def test_run_suite_filter():
    reports = run_suite(SuiteConfig(c_range=(1, 2, 3), n_range=(1, 2),
                                    identities=("invtilde-odd",)))
    assert [(r.identity_id, r.c, r.n) for r in reports] == \
        [("invtilde-odd", 1, 1), ("invtilde-odd", 1, 2), ("invtilde-odd", 3, 1),
         ("invtilde-odd", 3, 2)]


def test_suite_config_validation():
    with pytest.raises(KeyError):
        SuiteConfig(identities=("nope",))
    with pytest.raises(ValueError):
        SuiteConfig(budget=0)


def test_suite_skips_cells_over_budget():
    cells = SuiteConfig(c_range=(4,), n_range=(2, 3), budget=100,
                        identities=("fmaj-product",)).cells()
    assert cells == [("fmaj-product", 4, 2)]


def test_parallel_matches_sequential():
    base = dict(c_range=(1, 2, 3), n_range=(1, 2, 3),
                identities=("fmaj-product", "conjecture", "wachs-fiber", "shuffle-fmaj"))
    seq = run_suite(SuiteConfig(**base))
    par = run_suite(SuiteConfig(jobs=3, **base))
    assert [r.to_json() for r in seq] == [r.to_json() for r in par]


def test_default_suite_passes():
    reports = run_suite(SuiteConfig())
    assert all_passed(reports)
    assert len({r.identity_id for r in reports}) == len(IDENTITIES)



def test_shuffle_dynamic_program_matches_listing():
    import itertools
    from colormahon.core import ColoredWord
    from colormahon.derangements import shuffles
    from colormahon.identities import _shuffle_maj_multiset
    from colormahon.stats import maj
    for m in range(0, 7):
        for j in range(m + 1):
            for perm in itertools.permutations(range(m)):
                tau, sigma = perm[:j], perm[j:]
                listed = IntPolynomial.from_terms(
                    (maj(w), 1) for w in shuffles(ColoredWord([r + 1 for r in tau], [0] * j, 1, m),
                                                  ColoredWord([r + 1 for r in sigma], [0] * (m - j),
                                                              1, m)))
                assert _shuffle_maj_multiset(tau, sigma) == listed


def test_shuffle_weights_longer_uncolored_words():
    for identity in ("shuffle-maj", "shuffle-fmaj"):
        r = run_identity(identity, 1, 7)
        assert r.passed and r.extra["pairs"] == 8 * 5040
