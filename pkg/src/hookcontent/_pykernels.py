"""Pure-Python search kernels.

Reference behaviour for the compiled kernels in ``_kernels.pyx``: both must
return the same ``(count, states)`` pair for the same input, where
``states`` counts every partial assignment the search accepts.
"""
from itertools import product

from .errors import BudgetExceeded

NONE, WEAK, STRICT = 0, 1, 2


def ballot_moves(width, single):
    if single:
        return [tuple(int(i == k) for i in range(width)) for k in range(width)]
    return list(product((0, 1), repeat=width))


def count_ballots(N, target, single, cap):
    """Count lists of ``N`` 0/1 vectors whose prefix sums stay weakly
    decreasing and whose total is ``target``.

    ``single`` restricts every vector to exactly one 1.
    """
    width = len(target)
    moves = ballot_moves(width, single)
    cur = [0] * width
    states = 0
    count = 0

    def walk(step):
        nonlocal states, count
        if step == N:
            if all(cur[i] == target[i] for i in range(width)):
                count += 1
            return
        left = N - step - 1
        for move in moves:
            ok = True
            prev = None
            for i in range(width):
                new = cur[i] + move[i]
                if new > target[i] or target[i] - new > left:
                    ok = False
                    break
                if prev is not None and new > prev:
                    ok = False
                    break
                prev = new
            if not ok:
                continue
            states += 1
            if states > cap:
                raise BudgetExceeded(cap)
            for i in range(width):
                cur[i] += move[i]
            walk(step + 1)
            for i in range(width):
                cur[i] -= move[i]

    walk(0)
    return count, states


def count_fillings(lo, hi, left, above, row_rel, col_rel, distinct, cap):
    """Count fillings of a flattened, row-major list of cells.

    Cell ``k`` takes values in ``[lo[k], hi[k]]``.  ``left[k]`` and
    ``above[k]`` index its neighbours (-1 when absent); ``row_rel`` and
    ``col_rel`` say how a value compares with them (``NONE``, ``WEAK`` for
    >=, ``STRICT`` for >).  ``distinct`` forbids repeated values.
    """
    ncell = len(lo)
    vals = [0] * ncell
    used = set()
    states = 0
    count = 0

    def walk(pos):
        nonlocal states, count
        if pos == ncell:
            count += 1
            return
        lower = lo[pos]
        if row_rel and left[pos] >= 0:
            lower = max(lower, vals[left[pos]] + (row_rel == STRICT))
        if col_rel and above[pos] >= 0:
            lower = max(lower, vals[above[pos]] + (col_rel == STRICT))
        for v in range(lower, hi[pos] + 1):
            if distinct and v in used:
                continue
            states += 1
            if states > cap:
                raise BudgetExceeded(cap)
            vals[pos] = v
            if distinct:
                used.add(v)
                walk(pos + 1)
                used.discard(v)
            else:
                walk(pos + 1)

    walk(0)
    return count, states
