import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eisenstats import (
    BoxParams,
    CountOverflowError,
    DegenerateBoxError,
    build_tables,
    count_H_exact,
    count_H_main_term,
    count_coprime,
    count_eisenstein_exact,
    count_multiples,
    count_simultaneous,
    enumerate_box,
    moment_report,
    sum_psi_exact,
    sum_psi_sq_exact,
    total_polys,
    truncated_eisenstein_count,
)
from eisenstats.poly import trial_factor


def test_box_params_validation():
    with pytest.raises(ValueError):
        BoxParams(1, 10)
    with pytest.raises(ValueError):
        BoxParams(2, 0)


def test_count_multiples_examples():
    assert count_multiples(2, 2) == 3  # {-2, 0, 2}
    assert count_multiples(7, 3) == 1  # {0}
    assert count_multiples(1, 5) == 11


def test_count_coprime_examples(tables10k):
    assert count_coprime(2, 2, tables10k) == 2  # {-1, 1}
    assert count_coprime(6, 6, tables10k) == 4  # {+-1, +-5}
    assert count_coprime(1, 3, tables10k) == 7  # zero counts when s = 1


def test_count_coprime_rejects_non_squarefree(tables10k):
    with pytest.raises(ValueError):
        count_coprime(4, 10, tables10k)


_SQUAREFREE = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 21, 30, 42, 105, 210]


@given(st.sampled_from(_SQUAREFREE), st.integers(min_value=0, max_value=250))
def test_count_coprime_matches_gcd_count(s, K):
    t = _tables()
    brute = sum(1 for k in range(-K, K + 1) if math.gcd(k, s) == 1)
    assert count_coprime(s, K, t) == brute


_T = None


def _tables():
    global _T
    if _T is None:
        _T = build_tables(10**4)
    return _T


def test_count_H_exact_examples(tables10k):
    # Derived by brute force below; frozen values from the same oracle.
    assert count_H_exact(2, BoxParams(2, 2), tables10k) == 12
    assert count_H_exact(7, BoxParams(2, 3), tables10k) == 0
    assert count_H_exact(6, BoxParams(2, 6), tables10k) == 24
    assert count_simultaneous(BoxParams(2, 2), [2]) == 12
    assert count_simultaneous(BoxParams(2, 6), [2, 3]) == 24


def test_count_H_exact_matches_enumeration(tables10k):
    for d in (2, 3):
        for H in (1, 2, 5, 8):
            box = BoxParams(d, H)
            for s in (2, 3, 5, 6, 7, 10, 14, 15):
                primes = [p for p, _ in trial_factor(s)]
                assert count_H_exact(s, box, tables10k) == count_simultaneous(
                    box, primes
                ), (d, H, s)


def test_count_H_main_term_examples():
    assert count_H_main_term(2, BoxParams(2, 2)) == 4.0
    assert count_H_main_term(2, BoxParams(2, 10**6)) == 5e17


def test_count_H_main_term_relative_error(tables10k):
    # The closed-form count approaches the main term like s^3/H for d = 2.
    mu = tables10k.moebius
    for H in (10**3, 10**4):
        box = BoxParams(2, H)
        for s in range(2, 101):
            if mu[s] == 0:
                continue
            exact = count_H_exact(s, box, tables10k)
            main = count_H_main_term(s, box)
            assert abs(exact - main) / main <= 10.0 * s**3 / H, (s, H)


def test_count_eisenstein_exact_examples(tables10k):
    assert count_eisenstein_exact(BoxParams(2, 1), tables10k) == 0
    assert count_eisenstein_exact(BoxParams(2, 2), tables10k) == 12


def test_exact_counts_match_oracle_small(tables10k):
    for d in (2, 3):
        for H in range(1, 7):
            box = BoxParams(d, H)
            eis, _ = enumerate_box(box)
            assert count_eisenstein_exact(box, tables10k) == eis.total()
            assert sum_psi_exact(box, tables10k) == eis.sum_psi()
            assert sum_psi_sq_exact(box, tables10k) == eis.sum_psi_sq()


def test_sum_psi_examples(tables10k):
    assert sum_psi_exact(BoxParams(2, 1), tables10k) == 0
    assert sum_psi_exact(BoxParams(2, 2), tables10k) == 12
    assert sum_psi_sq_exact(BoxParams(2, 2), tables10k) == 12


def test_sum_psi_sq_semiprime_structure(tables10k):
    # Only semiprime <= 6 is 6 itself.
    box = BoxParams(2, 6)
    expected = sum_psi_exact(box, tables10k) + 2 * count_H_exact(6, box, tables10k)
    assert sum_psi_sq_exact(box, tables10k) == expected


def test_counts_monotone_in_height(tables10k):
    for d in (2, 3):
        prev = (0, 0, 0)
        for H in range(1, 30):
            box = BoxParams(d, H)
            cur = (
                count_eisenstein_exact(box, tables10k),
                sum_psi_exact(box, tables10k),
                sum_psi_sq_exact(box, tables10k),
            )
            assert all(c >= p for c, p in zip(cur, prev))
            prev = cur


def test_bonferroni_truncations_bracket(tables10k):
    for d in (2, 3):
        for H in (10, 30, 100):
            box = BoxParams(d, H)
            full = count_eisenstein_exact(box, tables10k)
            upper = truncated_eisenstein_count(box, tables10k, 1)
            lower = truncated_eisenstein_count(box, tables10k, 2)
            assert lower <= full <= upper


def test_moment_report_exact_rationals(tables10k):
    rep = moment_report(BoxParams(2, 2), tables10k)
    assert rep.empirical_mean == Fraction(1)
    assert rep.empirical_variance == Fraction(0)
    assert rep.total_polys == 100
    assert rep.sum_psi >= rep.count_eisenstein
    assert rep.sum_psi_sq >= rep.sum_psi
    assert rep.count_eisenstein <= rep.total_polys


def test_moment_report_degenerate_box(tables10k):
    with pytest.raises(DegenerateBoxError):
        moment_report(BoxParams(2, 1), tables10k)


def test_total_polys():
    assert total_polys(BoxParams(2, 2)) == 2 * 2 * 5**2
    assert total_polys(BoxParams(3, 10)) == 20 * 21**3


def test_overflow_is_an_error():
    t = build_tables(10**3)
    with pytest.raises(CountOverflowError):
        count_eisenstein_exact(BoxParams(140, 1000), t)
    with pytest.raises(CountOverflowError):
        moment_report(BoxParams(140, 1000), t)


def test_requires_table_coverage(tables10k):
    with pytest.raises(ValueError):
        count_eisenstein_exact(BoxParams(2, 10**5), tables10k)
