# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels; same contract as ``_pykernels``."""
from libc.stdlib cimport malloc, calloc, free

from .errors import BudgetExceeded
from ._pykernels import ballot_moves

ctypedef unsigned long long u64

cdef u64 CAP_CEILING = (<u64>1) << 62


cdef struct BallotCtx:
    int N
    int width
    int nmoves
    int* moves
    int* target
    int* cur
    u64 states
    u64 cap
    u64 count


cdef int _ballot_walk(BallotCtx* ctx, int step) nogil:
    cdef int i, k, new, prev, ok, left, r
    cdef int width = ctx.width
    cdef int* move
    if step == ctx.N:
        for i in range(width):
            if ctx.cur[i] != ctx.target[i]:
                return 0
        ctx.count += 1
        return 0
    left = ctx.N - step - 1
    for k in range(ctx.nmoves):
        move = ctx.moves + k * width
        ok = 1
        prev = -1
        for i in range(width):
            new = ctx.cur[i] + move[i]
            if new > ctx.target[i] or ctx.target[i] - new > left:
                ok = 0
                break
            if i > 0 and new > prev:
                ok = 0
                break
            prev = new
        if not ok:
            continue
        ctx.states += 1
        if ctx.states > ctx.cap:
            return 1
        for i in range(width):
            ctx.cur[i] += move[i]
        r = _ballot_walk(ctx, step + 1)
        for i in range(width):
            ctx.cur[i] -= move[i]
        if r:
            return r
    return 0


def count_ballots(int N, target, bint single, cap):
    cdef BallotCtx ctx
    cdef int i, k, r
    moves = ballot_moves(len(target), single)
    ctx.N = N
    ctx.width = len(target)
    ctx.nmoves = len(moves)
    ctx.states = 0
    ctx.count = 0
    ctx.cap = <u64>min(cap, CAP_CEILING)
    ctx.moves = <int*>malloc(max(1, ctx.nmoves * ctx.width) * sizeof(int))
    ctx.target = <int*>malloc(max(1, ctx.width) * sizeof(int))
    ctx.cur = <int*>calloc(max(1, ctx.width), sizeof(int))
    if ctx.moves == NULL or ctx.target == NULL or ctx.cur == NULL:
        free(ctx.moves); free(ctx.target); free(ctx.cur)
        raise MemoryError()
    try:
        for k in range(ctx.nmoves):
            for i in range(ctx.width):
                ctx.moves[k * ctx.width + i] = moves[k][i]
        for i in range(ctx.width):
            ctx.target[i] = target[i]
        with nogil:
            r = _ballot_walk(&ctx, 0)
        if r:
            raise BudgetExceeded(cap)
        return int(ctx.count), int(ctx.states)
    finally:
        free(ctx.moves); free(ctx.target); free(ctx.cur)


cdef struct FillCtx:
    int ncell
    int* lo
    int* hi
    int* left
    int* above
    int row_rel
    int col_rel
    int distinct
    char* used
    int* vals
    u64 states
    u64 cap
    u64 count


cdef int _fill_walk(FillCtx* ctx, int pos) nogil:
    cdef int lower, v, r, nb
    if pos == ctx.ncell:
        ctx.count += 1
        return 0
    lower = ctx.lo[pos]
    nb = ctx.left[pos]
    if ctx.row_rel and nb >= 0:
        v = ctx.vals[nb] + (1 if ctx.row_rel == 2 else 0)
        if v > lower:
            lower = v
    nb = ctx.above[pos]
    if ctx.col_rel and nb >= 0:
        v = ctx.vals[nb] + (1 if ctx.col_rel == 2 else 0)
        if v > lower:
            lower = v
    v = lower
    while v <= ctx.hi[pos]:
        if ctx.distinct and ctx.used[v]:
            v += 1
            continue
        ctx.states += 1
        if ctx.states > ctx.cap:
            return 1
        ctx.vals[pos] = v
        if ctx.distinct:
            ctx.used[v] = 1
        r = _fill_walk(ctx, pos + 1)
        if ctx.distinct:
            ctx.used[v] = 0
        if r:
            return r
        v += 1
    return 0


def count_fillings(lo, hi, left, above, int row_rel, int col_rel, bint distinct, cap):
    cdef FillCtx ctx
    cdef int i, r, n = len(lo)
    cdef int top = max([0] + list(hi))
    if n and min(lo) < 0:
        raise ValueError("cell values must be nonnegative")
    ctx.ncell = n
    ctx.row_rel = row_rel
    ctx.col_rel = col_rel
    ctx.distinct = distinct
    ctx.states = 0
    ctx.count = 0
    ctx.cap = <u64>min(cap, CAP_CEILING)
    ctx.lo = <int*>malloc(max(1, n) * sizeof(int))
    ctx.hi = <int*>malloc(max(1, n) * sizeof(int))
    ctx.left = <int*>malloc(max(1, n) * sizeof(int))
    ctx.above = <int*>malloc(max(1, n) * sizeof(int))
    ctx.vals = <int*>calloc(max(1, n), sizeof(int))
    ctx.used = <char*>calloc(top + 2, sizeof(char))
    try:
        if (ctx.lo == NULL or ctx.hi == NULL or ctx.left == NULL
                or ctx.above == NULL or ctx.vals == NULL or ctx.used == NULL):
            raise MemoryError()
        for i in range(n):
            ctx.lo[i] = lo[i]
            ctx.hi[i] = hi[i]
            ctx.left[i] = left[i]
            ctx.above[i] = above[i]
        with nogil:
            r = _fill_walk(&ctx, 0)
        if r:
            raise BudgetExceeded(cap)
        return int(ctx.count), int(ctx.states)
    finally:
        free(ctx.lo); free(ctx.hi); free(ctx.left); free(ctx.above)
        free(ctx.vals); free(ctx.used)
