"""Exact integer and rational helpers.

Rationals are plain :class:`fractions.Fraction` values, which are always
kept in lowest terms with a positive denominator.  Nothing in this package
touches floating point.
"""
from fractions import Fraction
from itertools import permutations
from math import comb, factorial as _factorial, prod

Exact = Fraction

__all__ = [
    "Exact",
    "as_integer",
    "binomial",
    "factorial",
    "multinomial",
    "permutation_sign",
    "reciprocal_factorial",
    "vandermonde",
    "vandermonde_det",
]


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative integer {k}")
    return _factorial(k)


def reciprocal_factorial(k: int) -> Fraction:
    """Return ``1/k!``, with ``1/k! = 0`` for every negative ``k``.

    This is the single home of the negative-factorial convention; formulas
    whose factorial arguments can go negative must divide through here.
    """
    if k < 0:
        return Fraction(0)
    return Fraction(1, _factorial(k))


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial with negative top {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(parts) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial with negative part in {parts}")
    total = 0
    result = 1
    for p in parts:
        total += p
        result *= comb(total, p)
    return result


def vandermonde(values) -> int:
    """Product of ``a_i - a_j`` over ``i < j``.

    Weakly decreasing input gives a nonnegative value; fewer than two
    values give the empty product 1.
    """
    values = list(values)
    return prod(
        values[i] - values[j]
        for i in range(len(values))
        for j in range(i + 1, len(values))
    )


def permutation_sign(perm) -> int:
    perm = list(perm)
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def vandermonde_det(values) -> int:
    """Vandermonde value by the alternating sum over permutations.

    ``sum_sigma sgn(sigma) prod_i a_i ** (n - sigma(i))``.  Exponential; kept
    as an independent check on :func:`vandermonde`.
    """
    values = list(values)
    n = len(values) - 1
    total = 0
    for perm in permutations(range(len(values))):
        total += permutation_sign(perm) * prod(
            a ** (n - s) for a, s in zip(values, perm)
        )
    return total


def as_integer(value) -> int:
    """Return ``value`` as an int, raising if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator
