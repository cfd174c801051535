"""Brute-force enumeration oracles.

Everything here counts by explicit depth-first search and shares no code
with the closed forms in :mod:`hookcontent.counting`.  Each search stops
with :class:`~hookcontent.errors.BudgetExceeded` once it has accepted more
than ``cap`` partial states.
"""
from dataclasses import dataclass

from . import _backend
from ._pykernels import NONE, STRICT, WEAK
from .errors import BudgetExceeded
from .shapes import as_counts, as_partition

DEFAULT_BUDGET = 10**7

__all__ = [
    "DEFAULT_BUDGET",
    "IntersectionReport",
    "count_multivote",
    "count_singlevote",
    "enumerate_colincreasing_labelings",
    "enumerate_colstrict",
    "enumerate_rowweak",
    "enumerate_ssyt",
    "enumerate_syt",
    "in_colstrict",
    "in_rowweak",
    "in_ssyt",
    "intersection_check",
    "iter_colstrict",
    "iter_rowweak",
    "iter_ssyt",
]


def count_multivote(N, counts, cap=DEFAULT_BUDGET, backend=None):
    """Number of multi-vote ballot sequences of length ``N`` with tally ``counts``."""
    counts = as_counts(counts)
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return _backend.get_kernels(backend).count_ballots(N, counts, False, cap)[0]


def count_singlevote(N, counts, cap=DEFAULT_BUDGET, backend=None):
    """Like :func:`count_multivote`, but every ballot names exactly one candidate."""
    counts = as_counts(counts)
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    return _backend.get_kernels(backend).count_ballots(N, counts, True, cap)[0]


class _Rule:
    """Constraint set for filling a diagram cell by cell, row-major."""

    def __init__(self, p, lo, hi, row_rel, col_rel, distinct=False):
        self.shape = p
        self.cells = [(r, c) for r, length in enumerate(p) for c in range(length)]
        index = {cell: k for k, cell in enumerate(self.cells)}
        self.left = [index.get((r, c - 1), -1) for r, c in self.cells]
        self.above = [index.get((r - 1, c), -1) for r, c in self.cells]
        self.lo = [lo(r, c) for r, c in self.cells]
        self.hi = [hi(r, c) for r, c in self.cells]
        self.row_rel = row_rel
        self.col_rel = col_rel
        self.distinct = distinct

    def count(self, cap, backend=None):
        kernels = _backend.get_kernels(backend)
        return kernels.count_fillings(
            self.lo, self.hi, self.left, self.above,
            self.row_rel, self.col_rel, self.distinct, cap,
        )[0]

    def iterate(self, cap=DEFAULT_BUDGET):
        """Yield every filling as a tuple of row tuples."""
        n = len(self.cells)
        vals = [0] * n
        used = set()
        states = 0

        def walk(pos):
            nonlocal states
            if pos == n:
                yield _rows(self.shape, vals)
                return
            lower = self.lo[pos]
            if self.row_rel and self.left[pos] >= 0:
                lower = max(lower, vals[self.left[pos]] + (self.row_rel == STRICT))
            if self.col_rel and self.above[pos] >= 0:
                lower = max(lower, vals[self.above[pos]] + (self.col_rel == STRICT))
            for v in range(lower, self.hi[pos] + 1):
                if self.distinct and v in used:
                    continue
                states += 1
                if states > cap:
                    raise BudgetExceeded(cap)
                vals[pos] = v
                used.add(v)
                yield from walk(pos + 1)
                used.discard(v)

        return walk(0)


def _rows(p, vals):
    out = []
    k = 0
    for length in p:
        out.append(tuple(vals[k:k + length]))
        k += length
    return tuple(out)


def _ssyt_rule(N, p):
    return _Rule(as_partition(p), lambda r, c: 1, lambda r, c: N, WEAK, STRICT)


def _colstrict_rule(N, p):
    return _Rule(as_partition(p), lambda r, c: 1, lambda r, c: N + c, NONE, STRICT)


def _rowweak_rule(N, p):
    # row r (0-based) takes entries r+1, ..., N
    return _Rule(as_partition(p), lambda r, c: r + 1, lambda r, c: N, WEAK, NONE)


def enumerate_ssyt(N, p, cap=DEFAULT_BUDGET, backend=None):
    """Semistandard tableaux of shape ``p`` with entries in ``1..N``."""
    return _ssyt_rule(N, p).count(cap, backend)


def enumerate_syt(p, cap=DEFAULT_BUDGET, backend=None):
    p = as_partition(p)
    size = sum(p)
    rule = _Rule(p, lambda r, c: 1, lambda r, c: size, STRICT, STRICT, distinct=True)
    return rule.count(cap, backend)


def enumerate_colstrict(N, p, cap=DEFAULT_BUDGET, backend=None):
    """Fillings with strictly increasing columns, column ``i`` bounded by ``N + i``."""
    return _colstrict_rule(N, p).count(cap, backend)


def enumerate_rowweak(N, p, cap=DEFAULT_BUDGET, backend=None):
    """Fillings with weakly increasing rows, row ``j`` drawing from ``j+1..N``."""
    return _rowweak_rule(N, p).count(cap, backend)


def enumerate_colincreasing_labelings(p, cap=DEFAULT_BUDGET, backend=None):
    """Labelings by ``1..|p|``, each used once, increasing down every column."""
    p = as_partition(p)
    size = sum(p)
    rule = _Rule(p, lambda r, c: 1, lambda r, c: size, NONE, STRICT, distinct=True)
    return rule.count(cap, backend)


def iter_ssyt(N, p, cap=DEFAULT_BUDGET):
    return _ssyt_rule(N, p).iterate(cap)


def iter_colstrict(N, p, cap=DEFAULT_BUDGET):
    return _colstrict_rule(N, p).iterate(cap)


def iter_rowweak(N, p, cap=DEFAULT_BUDGET):
    return _rowweak_rule(N, p).iterate(cap)


def _columns(filling):
    width = len(filling[0]) if filling else 0
    return [[row[c] for row in filling if len(row) > c] for c in range(width)]


def in_ssyt(filling, N):
    return (
        all(1 <= v <= N for row in filling for v in row)
        and all(a <= b for row in filling for a, b in zip(row, row[1:]))
        and all(a < b for col in _columns(filling) for a, b in zip(col, col[1:]))
    )


def in_colstrict(filling, N):
    cols = _columns(filling)
    return all(
        1 <= v <= N + i for i, col in enumerate(cols) for v in col
    ) and all(a < b for col in cols for a, b in zip(col, col[1:]))


def in_rowweak(filling, N):
    return all(
        j + 1 <= v <= N for j, row in enumerate(filling) for v in row
    ) and all(a <= b for row in filling for a, b in zip(row, row[1:]))


@dataclass(frozen=True)
class IntersectionReport:
    N: int
    shape: tuple
    ssyt: int
    colstrict: int
    rowweak: int
    intersection: int
    passed: bool


def intersection_check(N, p, cap=DEFAULT_BUDGET):
    """Check set-wise that the SSYT of ``p`` are exactly the fillings that are
    both column-strict (column bound ``N+i``) and row-weak (row floor ``j+1``).

    The SSYT set is materialised; the smaller of the other two families is
    streamed and filtered by membership in the larger one.
    """
    p = as_partition(p)
    n_col = enumerate_colstrict(N, p, cap)
    n_row = enumerate_rowweak(N, p, cap)
    ssyt = set(iter_ssyt(N, p, cap))
    if n_row <= n_col:
        both = {f for f in iter_rowweak(N, p, cap) if in_colstrict(f, N)}
    else:
        both = {f for f in iter_colstrict(N, p, cap) if in_rowweak(f, N)}
    passed = both == ssyt and all(in_colstrict(f, N) and in_rowweak(f, N) for f in ssyt)
    return IntersectionReport(N, p, len(ssyt), n_col, n_row, len(both), passed)

