"""Young diagrams, hooks and contents.

Partitions are tuples of positive, weakly decreasing integers.  Rows and
columns are indexed from 0; cell ``(r, c)`` lies in row ``r``, column ``c``.
Column-count vectors ``(n_0, ..., n_d)`` are plain tuples of nonnegative
integers with no monotonicity requirement.
"""
from fractions import Fraction
from math import factorial, prod

__all__ = [
    "as_counts",
    "as_partition",
    "cells",
    "conjugate",
    "content_product",
    "content_product_columns",
    "format_shape",
    "hook_length",
    "hook_product",
    "is_weakly_decreasing",
    "m_params",
    "normalize",
    "parse_counts",
    "parse_shape",
    "partitions",
    "partitions_up_to",
    "row_hook_identity",
    "row_hook_sets",
]


def is_weakly_decreasing(seq) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


def as_partition(parts) -> tuple:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts) or not is_weakly_decreasing(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def as_counts(counts) -> tuple:
    counts = tuple(int(c) for c in counts)
    if any(c < 0 for c in counts):
        raise ValueError(f"column counts must be nonnegative: {counts}")
    return counts


def parse_shape(text: str) -> tuple:
    """Parse ``"3,2,1"`` into ``(3, 2, 1)``; the empty string is the empty shape."""
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(tok) for tok in text.split(","))


def parse_counts(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return as_counts(int(tok) for tok in text.split(","))


def format_shape(parts) -> str:
    return ",".join(str(p) for p in parts)


def conjugate(p) -> tuple:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > c) for c in range(p[0]))


def normalize(counts) -> tuple:
    """Strip trailing zeros (C and F do not see them)."""
    counts = tuple(counts)
    end = len(counts)
    while end and counts[end - 1] == 0:
        end -= 1
    return counts[:end]


def m_params(counts) -> tuple:
    """``m_i = n_i + d - i``; strictly decreasing when the counts are."""
    d = len(counts) - 1
    return tuple(n + d - i for i, n in enumerate(counts))


def cells(p):
    for r, length in enumerate(p):
        for c in range(length):
            yield (r, c)


def hook_length(p, cell) -> int:
    r, c = cell
    if not (0 <= r < len(p) and 0 <= c < p[r]):
        raise ValueError(f"cell {cell} is outside the diagram {p}")
    arm = p[r] - c - 1
    leg = sum(1 for below in p[r + 1:] if below > c)
    return arm + leg + 1


def hook_product(p) -> int:
    return prod(hook_length(p, cell) for cell in cells(p))


def content_product(N: int, p) -> int:
    """Product of ``N + col - row`` over the cells of ``p``."""
    return prod(N + c - r for r, c in cells(p))


def content_product_columns(N: int, p) -> int:
    """The same product, column by column: ``prod_i (N+i)! / (N+i-n_i)!``.

    ``n = conjugate(p)``; each column contributes a falling factorial, so
    this never needs a negative factorial.
    """
    total = 1
    for i, n in enumerate(conjugate(p)):
        total *= prod(range(N + i - n + 1, N + i + 1))
    return total


def row_hook_sets(lam, i: int):
    """Return ``(H, K, M)`` for row ``i`` of ``lam = (n_0, ..., n_d)``.

    ``H`` holds the hook lengths in that row, ``K`` the gaps ``m_i - m_j``
    for ``j > i`` and ``M = {1, ..., m_i}``.
    """
    if not 0 <= i < len(lam):
        raise ValueError(f"row {i} is outside the diagram {lam}")
    m = m_params(lam)
    H = {hook_length(lam, (i, c)) for c in range(lam[i])}
    K = {m[i] - m[j] for j in range(i + 1, len(lam))}
    M = set(range(1, m[i] + 1))
    return H, K, M


def row_hook_identity(lam, i: int):
    """Both sides of the row-hook product identity for row ``i``.

    Returns ``(lhs, rhs)``: the product of the row's hook lengths and
    ``m_i! / prod_{j>i} (m_i - m_j)``.
    """
    if not 0 <= i < len(lam):
        raise ValueError(f"row {i} is outside the diagram {lam}")
    m = m_params(lam)
    lhs = Fraction(prod(hook_length(lam, (i, c)) for c in range(lam[i])))
    rhs = Fraction(factorial(m[i]), prod(m[i] - m[j] for j in range(i + 1, len(lam))))
    return lhs, rhs


def partitions(n: int, max_part=None):
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_up_to(max_cells: int, include_empty=True):
    for n in range(0 if include_empty else 1, max_cells + 1):
        yield from partitions(n)
