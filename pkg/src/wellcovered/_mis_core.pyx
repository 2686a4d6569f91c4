# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled enumeration kernel.

Same algorithm and visit order as ``_mis_fallback``; see that module for the
description.  Graphs arrive as sequences of per-vertex adjacency masks and
must fit in 64 bits.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define WC_POPCNT(x) __builtin_popcountll(x)
    #define WC_CTZ(x) __builtin_ctzll(x)
    #else
    static int WC_POPCNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    static int WC_CTZ(unsigned long long x) {
        int c = 0;
        while (!(x & 1ULL)) { x >>= 1; ++c; }
        return c;
    }
    #endif
    """
    int WC_POPCNT(uint64_t x) nogil
    int WC_CTZ(uint64_t x) nogil

DEF MODE_COLLECT = 0
DEF MODE_COUNT = 1
DEF MODE_SUMMARY = 2
DEF MODE_WC = 3


cdef class _Ctx:
    cdef uint64_t closed[64]
    cdef int mode
    cdef long long count
    cdef int first_size
    cdef int min_size
    cdef int max_size
    cdef uint64_t min_wit
    cdef uint64_t max_wit
    cdef list out


cdef int _emit(_Ctx ctx, uint64_t s):
    cdef int size = WC_POPCNT(s)
    if ctx.mode == MODE_COLLECT:
        ctx.out.append(s)
    elif ctx.mode == MODE_COUNT:
        ctx.count += 1
    elif ctx.mode == MODE_SUMMARY:
        if size < ctx.min_size:
            ctx.min_size = size
            ctx.min_wit = s
        if size > ctx.max_size:
            ctx.max_size = size
            ctx.max_wit = s
    else:
        if ctx.first_size < 0:
            ctx.first_size = size
        elif size != ctx.first_size:
            return 1
    return 0


cdef int _rec(_Ctx ctx, uint64_t s, uint64_t p, uint64_t x):
    cdef int best, c, v, pivot
    cdef uint64_t m, branch, bu, cu
    if p == 0:
        if x == 0:
            return _emit(ctx, s)
        return 0
    best = 65
    pivot = 0
    m = p | x
    while m:
        v = WC_CTZ(m)
        c = WC_POPCNT(ctx.closed[v] & p)
        if c < best:
            best = c
            pivot = v
            if c == 0:
                break
        m &= m - 1
    if best == 0:
        return 0
    branch = ctx.closed[pivot] & p
    while branch:
        v = WC_CTZ(branch)
        bu = (<uint64_t>1) << v
        cu = ctx.closed[v]
        if _rec(ctx, s | bu, p & ~cu, x & ~cu):
            return 1
        p &= ~bu
        x |= bu
        branch &= branch - 1
    return 0


cdef _Ctx _make_ctx(adj, int mode):
    cdef _Ctx ctx = _Ctx()
    cdef int n = len(adj)
    cdef int v
    if n > 64:
        raise ValueError("kernel limited to 64 vertices")
    for v in range(n):
        ctx.closed[v] = <uint64_t>adj[v] | ((<uint64_t>1) << v)
    ctx.mode = mode
    ctx.count = 0
    ctx.first_size = -1
    ctx.min_size = 65
    ctx.max_size = -1
    ctx.min_wit = 0
    ctx.max_wit = 0
    ctx.out = []
    return ctx


cdef uint64_t _full(int n):
    if n == 0:
        return 0
    return (<uint64_t>0) - 1 if n == 64 else ((<uint64_t>1) << n) - 1


def maximal_independent_sets(adj):
    """All maximal independent sets as masks, in deterministic visit order."""
    cdef _Ctx ctx = _make_ctx(adj, MODE_COLLECT)
    _rec(ctx, 0, _full(len(adj)), 0)
    return ctx.out


def count_maximal_independent_sets(adj):
    cdef _Ctx ctx = _make_ctx(adj, MODE_COUNT)
    _rec(ctx, 0, _full(len(adj)), 0)
    return ctx.count


def independence_summary(adj):
    """(i, alpha, min witness, max witness) from a full enumeration."""
    cdef _Ctx ctx = _make_ctx(adj, MODE_SUMMARY)
    _rec(ctx, 0, _full(len(adj)), 0)
    return ctx.min_size, ctx.max_size, ctx.min_wit, ctx.max_wit


def well_covered_size(adj):
    """Common maximal-set size if well-covered, else -1; stops at the second size."""
    cdef _Ctx ctx = _make_ctx(adj, MODE_WC)
    if _rec(ctx, 0, _full(len(adj)), 0):
        return -1
    return ctx.first_size


def direct_product_adj(adj_g, adj_h):
    """Adjacency of the direct product under index (g, h) -> g*nH + h."""
    cdef int ng = len(adj_g)
    cdef int nh = len(adj_h)
    cdef int g, h
    cdef uint64_t row_g, row_h, neighbor_layers, row, m
    if ng * nh > 64:
        raise ValueError("product exceeds 64 vertices")
    out = []
    for g in range(ng):
        row_g = <uint64_t>adj_g[g]
        neighbor_layers = 0
        m = row_g
        while m:
            neighbor_layers |= (<uint64_t>1) << (WC_CTZ(m) * nh)
            m &= m - 1
        for h in range(nh):
            row_h = <uint64_t>adj_h[h]
            row = 0
            m = row_h
            while m:
                row |= neighbor_layers << WC_CTZ(m)
                m &= m - 1
            out.append(row)
    return out
