"""Closed-form counts and the recursions they satisfy.

``formula_F`` is the product formula for multi-vote ballot sequences,
``recursive_C`` evaluates the last-ballot recursion with memoisation, and
``hcf_count`` / ``hlf_count`` are the hook content and hook length
formulas.  The ``*_check`` functions compare these against each other and
against the brute-force counts in :mod:`hookcontent.ballots`.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, prod

from .ballots import DEFAULT_BUDGET, count_multivote, count_singlevote
from .errors import VerificationError
from .exact import as_integer, reciprocal_factorial, vandermonde
from .shapes import (
    as_counts,
    as_partition,
    conjugate,
    content_product,
    content_product_columns,
    hook_product,
    is_weakly_decreasing,
    m_params,
    normalize,
)

__all__ = [
    "BallotFormulaReport",
    "dagger",
    "eq1_holds",
    "formula_F",
    "formula_Fstar",
    "fstar_recursion_holds",
    "hcf_count",
    "hlf_count",
    "recursive_C",
    "singlevote_matches_fstar",
    "theorem1_check",
]


def dagger(counts) -> int:
    """1 when no count exceeds its predecessor by more than one, else 0."""
    counts = as_counts(counts)
    return int(all(a + 1 >= b for a, b in zip(counts, counts[1:])))


def _vandermonde_ratio(counts) -> Fraction:
    m = m_params(counts)
    return Fraction(vandermonde(m), prod(factorial(x) for x in m))


def formula_F(N, counts) -> Fraction:
    """``prod_i (N+i)!/(N+i-n_i)! * V(m)/(m_0!...m_d!)`` as an exact rational."""
    counts = as_counts(counts)
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    value = _vandermonde_ratio(counts)
    for i, n in enumerate(counts):
        value *= factorial(N + i) * reciprocal_factorial(N + i - n)
    return value


def formula_Fstar(N, counts) -> Fraction:
    """``N! * V(m)/(m_0!...m_d!)``; counts standard fillings when ``N = sum(counts)``."""
    counts = as_counts(counts)
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return factorial(N) * _vandermonde_ratio(counts)


def recursive_C(N, counts, memo=None) -> int:
    """Count multi-vote ballot sequences through the last-ballot recursion.

    ``memo`` maps ``(N, normalized counts)`` to results and may be shared
    between calls; a fresh dict is used otherwise.
    """
    counts = as_counts(counts)
    if memo is None:
        memo = {}

    def C(N, counts):
        counts = normalize(counts)
        key = (N, counts)
        if key in memo:
            return memo[key]
        if not is_weakly_decreasing(counts):
            result = 0
        elif N == 0:
            result = int(not counts)
        elif not counts:
            result = 1
        else:
            result = sum(
                C(N - 1, tuple(n - j for n, j in zip(counts, js)))
                for js in product((0, 1), repeat=len(counts))
            )
        memo[key] = result
        return result

    return C(N, counts)


def eq1_holds(N, counts) -> bool:
    """``F(N, n) == sum over j in {0,1}^(d+1) of F(N-1, n-j)``.

    Needs ``N >= 1`` and every count at least 1 so that ``n - j`` stays
    nonnegative.
    """
    counts = as_counts(counts)
    if N < 1 or any(n < 1 for n in counts):
        raise ValueError("needs N >= 1 and every count >= 1")
    rhs = sum(
        (formula_F(N - 1, tuple(n - j for n, j in zip(counts, js)))
         for js in product((0, 1), repeat=len(counts))),
        Fraction(0),
    )
    return formula_F(N, counts) == rhs


def fstar_recursion_holds(counts) -> bool:
    """``F*(N, n) == sum_i F*(N-1, n - e_i)`` with ``N = sum(n)``, all counts >= 1."""
    counts = as_counts(counts)
    if not counts or any(n < 1 for n in counts):
        raise ValueError("needs a nonempty tuple of counts >= 1")
    N = sum(counts)
    rhs = sum(
        (formula_Fstar(N - 1, counts[:i] + (counts[i] - 1,) + counts[i + 1:])
         for i in range(len(counts))),
        Fraction(0),
    )
    return formula_Fstar(N, counts) == rhs


@dataclass(frozen=True)
class BallotFormulaReport:
    N: int
    counts: tuple
    dagger: int
    brute: int
    formula: Fraction
    eq1: bool | None
    passed: bool


def theorem1_check(N, counts, cap=DEFAULT_BUDGET, backend=None) -> BallotFormulaReport:
    """Compare the brute-force ballot count with ``formula_F``.

    With dagger 0 the count must vanish; with dagger 1 it must equal F.
    The one-step identity for F is also checked whenever it applies.
    """
    counts = as_counts(counts)
    flag = dagger(counts)
    brute = count_multivote(N, counts, cap, backend)
    F = formula_F(N, counts)
    eq1 = eq1_holds(N, counts) if N >= 1 and all(n >= 1 for n in counts) else None
    if flag:
        passed = brute == F
    else:
        passed = brute == 0
    passed = passed and eq1 is not False
    return BallotFormulaReport(N, counts, flag, brute, F, eq1, passed)


def hcf_count(N, p) -> int:
    """SSYT count by the hook content formula."""
    p = as_partition(p)
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    contents = content_product(N, p)
    if contents != content_product_columns(N, p):
        raise VerificationError(f"content products disagree for N={N}, shape {p}")
    value = Fraction(contents, hook_product(p))
    try:
        return as_integer(value)
    except ArithmeticError as exc:
        raise VerificationError(f"hook content quotient {value} is not an integer") from exc


def hlf_count(p) -> int:
    """SYT count by the hook length formula, cross-checked against ``formula_Fstar``."""
    p = as_partition(p)
    size = sum(p)
    by_hooks = Fraction(factorial(size), hook_product(p))
    by_vandermonde = formula_Fstar(size, conjugate(p))
    if by_hooks != by_vandermonde:
        raise VerificationError(
            f"hook length routes disagree for {p}: {by_hooks} vs {by_vandermonde}"
        )
    return as_integer(by_hooks)


def singlevote_matches_fstar(counts, cap=DEFAULT_BUDGET) -> bool:
    counts = as_counts(counts)
    N = sum(counts)
    return count_singlevote(N, counts, cap) == formula_Fstar(N, counts)
