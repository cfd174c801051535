from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import partitions as partition_st
from hookcontent.ballots import count_multivote, count_singlevote, enumerate_ssyt, enumerate_syt
from hookcontent.counting import (
    dagger,
    eq1_holds,
    formula_F,
    formula_Fstar,
    fstar_recursion_holds,
    hcf_count,
    hlf_count,
    recursive_C,
    singlevote_matches_fstar,
    theorem1_check,
)
from hookcontent.shapes import conjugate, partitions_up_to
from hookcontent.verify import column_counts


@pytest.mark.parametrize("counts, expected", [((2, 3, 1), 1), ((1, 3), 0), ((0, 0), 1), ((), 1)])
def test_dagger(counts, expected):
    assert dagger(counts) == expected


def test_formula_F_examples():
    assert formula_F(2, (2, 1)) == 2 == count_multivote(2, (2, 1))
    assert formula_F(0, (1,)) == 0
    assert formula_F(1, (1, 1)) == 1 == count_multivote(1, (1, 1))
    assert isinstance(formula_F(2, (2, 1)), Fraction)


def test_formula_F_vanishes_on_dagger_nonmonotone():
    for counts in column_counts(4, 3):
        monotone = all(a >= b for a, b in zip(counts, counts[1:]))
        if dagger(counts) and not monotone:
            for N in range(5):
                assert formula_F(N, counts) == 0


def test_recursive_C_examples():
    assert recursive_C(2, (2, 1)) == 2
    assert recursive_C(4, (0, 0)) == 1
    assert recursive_C(1, (2,)) == 0


def test_recursive_C_matches_dfs_and_shares_memo():
    memo = {}
    for counts in column_counts(4, 3):
        for N in range(6):
            assert recursive_C(N, counts, memo) == count_multivote(N, counts)
    assert memo


@pytest.mark.parametrize(
    "N, counts, flag, brute",
    [(2, (2, 1), 1, 2), (3, (1, 3), 0, 0), (0, (1, 1), 1, 0)],
)
def test_theorem1_examples(N, counts, flag, brute):
    rep = theorem1_check(N, counts)
    assert rep.passed
    assert rep.dagger == flag
    assert rep.brute == brute
    if flag:
        assert rep.formula == brute


def test_theorem1_exhaustive():
    for counts in column_counts(4, 3):
        for N in range(6):
            assert theorem1_check(N, counts).passed, (N, counts)


def test_eq1_identity():
    for counts in column_counts(4, 4):
        if all(n >= 1 for n in counts):
            for N in range(1, 6):
                assert eq1_holds(N, counts)
    with pytest.raises(ValueError):
        eq1_holds(0, (1,))


def test_F_terminal_zero_invariance():
    for counts in column_counts(3, 3):
        for N in range(5):
            base = formula_F(N, counts)
            for k in range(1, 4):
                assert formula_F(N, counts + (0,) * k) == base


@pytest.mark.parametrize("N, p, expected", [(2, (2, 1), 2), (1, (1,), 1), (3, (2, 1), 8)])
def test_hcf_examples(N, p, expected):
    assert hcf_count(N, p) == expected == enumerate_ssyt(N, p)


def test_hcf_matches_F_of_conjugate():
    for p in partitions_up_to(8, include_empty=False):
        for N in range(7):
            assert formula_F(N, conjugate(p)) == hcf_count(N, p)


@pytest.mark.parametrize("p, expected", [((2, 1), 2), ((2, 2), 2), ((1, 1, 1), 1)])
def test_hlf_examples(p, expected):
    assert hlf_count(p) == expected == enumerate_syt(p)


@pytest.mark.parametrize(
    "N, counts, expected", [(3, (2, 1), 2), (2, (1, 1), 1), (1, (1,), 1)]
)
def test_Fstar_examples(N, counts, expected):
    assert formula_Fstar(N, counts) == expected == count_singlevote(N, counts)


def test_Fstar_recursion():
    for lam in partitions_up_to(8, include_empty=False):
        assert fstar_recursion_holds(lam)
        assert singlevote_matches_fstar(lam)


def test_Fstar_uses_all_m_params():
    # the variant dropping m_0 disagrees with the SYT count already for (2,1)
    from math import factorial
    from hookcontent.exact import vandermonde
    from hookcontent.shapes import m_params

    m = m_params((2, 1))
    dropped = Fraction(factorial(3) * vandermonde(m[1:]), factorial(m[1]))
    assert dropped != enumerate_syt(conjugate((2, 1)))
    assert formula_Fstar(3, (2, 1)) == enumerate_syt(conjugate((2, 1)))


@given(partition_st(max_cells=12), st.integers(min_value=0, max_value=9))
def test_hcf_integral_and_nonnegative(p, N):
    value = hcf_count(N, p)
    assert isinstance(value, int) and value >= 0
    assert (value == 0) == (N < len(p))


def test_recursive_C_big_values_exact():
    lam = (6, 5, 3, 3, 1)
    assert recursive_C(12, lam) == formula_F(12, lam) == hcf_count(12, conjugate(lam))
