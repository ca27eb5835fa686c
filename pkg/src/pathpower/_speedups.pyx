# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels for graphs that fit in 64-bit masks.

Same contracts as pathpower._kernels_py; the dispatcher in
pathpower._kernels picks whichever is available and applicable.
"""

import time

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int pp_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int pp_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int pp_popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1ULL; ++c; }
        return c;
    }
    static inline int pp_ctz64(unsigned long long x) {
        int c = 0;
        while (!(x & 1ULL)) { x >>= 1; ++c; }
        return c;
    }
    #endif
    """
    int pp_popcount64(unsigned long long x) nogil
    int pp_ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

def scan_min_induced_degree(adj, int target, int stop_at=1, long long max_nodes=-1,
                            double time_limit=0.0, int lead=-1):
    """See pathpower._kernels_py.scan_min_induced_degree."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    if target <= 0 or target > n:
        raise ValueError(f"subset size {target} outside 1..{n}")
    if lead >= 0 and lead > n - target:
        return None, 0, 0, False, False

    cdef double deadline = time.monotonic() + time_limit if time_limit > 0 else 0.0
    cdef bint has_deadline = time_limit > 0

    cdef u64 *adj_c = <u64 *> malloc(n * sizeof(u64))
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int *path = <int *> malloc(target * sizeof(int))
    cdef int *maxes = <int *> malloc(target * sizeof(int))
    if adj_c == NULL or deg == NULL or path == NULL or maxes == NULL:
        free(adj_c); free(deg); free(path); free(maxes)
        raise MemoryError()

    cdef int i
    for i in range(n):
        adj_c[i] = <u64> adj[i]
        deg[i] = 0

    cdef int sentinel = target + 1
    cdef int best = sentinel
    cdef u64 best_mask = 0
    cdef long long nodes = 0
    cdef bint truncated = False
    cdef bint early = False

    cdef u64 chosen = 0
    cdef int last_level = target - 1
    cdef int level = 0
    cdef int v = lead if lead >= 0 else 0
    cdef int hi, w, cm, dv, du
    cdef u64 nb, mm, lsb
    cdef bint placed

    try:
        while True:
            hi = lead if (lead >= 0 and level == 0) else n - target + level
            placed = False
            nb = 0
            dv = 0
            while v <= hi:
                if max_nodes >= 0 and nodes >= max_nodes:
                    truncated = True
                    break
                if has_deadline and (nodes & 2047) == 0 and time.monotonic() > deadline:
                    truncated = True
                    break
                nodes += 1
                nb = adj_c[v] & chosen
                cm = maxes[level - 1] if level else 0
                dv = pp_popcount64(nb)
                if dv > cm:
                    cm = dv
                mm = nb
                while mm:
                    lsb = mm & (~mm + 1)
                    du = deg[pp_ctz64(lsb)] + 1
                    if du > cm:
                        cm = du
                    mm ^= lsb
                if cm >= best:
                    v += 1
                    continue
                if level == last_level:
                    best = cm
                    best_mask = chosen | ((<u64> 1) << v)
                    if stop_at >= 0 and best <= stop_at:
                        early = True
                        break
                    v += 1
                    continue
                placed = True
                break
            if truncated or early:
                break
            if placed:
                deg[v] = dv
                mm = nb
                while mm:
                    lsb = mm & (~mm + 1)
                    deg[pp_ctz64(lsb)] += 1
                    mm ^= lsb
                path[level] = v
                maxes[level] = cm
                chosen |= (<u64> 1) << v
                level += 1
                v += 1
                continue
            if level == 0:
                break
            level -= 1
            w = path[level]
            chosen ^= (<u64> 1) << w
            mm = adj_c[w] & chosen
            while mm:
                lsb = mm & (~mm + 1)
                deg[pp_ctz64(lsb)] -= 1
                mm ^= lsb
            deg[w] = 0
            v = w + 1
    finally:
        free(adj_c); free(deg); free(path); free(maxes)

    if best == sentinel:
        return None, 0, nodes, truncated, early
    return best, int(best_mask), nodes, truncated, early


cdef int _greedy_matching_bound(u64 *adj_c, u64 cand, int count) nogil:
    cdef u64 matched = 0
    cdef int pairs = 0
    cdef u64 mm = cand
    cdef u64 lsb, free_nb, w
    cdef int v
    while mm:
        lsb = mm & (~mm + 1)
        mm ^= lsb
        if matched & lsb:
            continue
        v = pp_ctz64(lsb)
        free_nb = adj_c[v] & cand & ~matched
        if free_nb:
            w = free_nb & (~free_nb + 1)
            matched |= lsb | w
            pairs += 1
            mm &= ~w
    return count - pairs


def solve_max_independent_set(adj, long long max_nodes=-1, double time_limit=0.0,
                              seed_mask=0):
    """See pathpower._kernels_py.solve_max_independent_set."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")

    cdef double deadline = time.monotonic() + time_limit if time_limit > 0 else 0.0
    cdef bint has_deadline = time_limit > 0

    cdef int cap = 2 * n + 16
    cdef u64 *adj_c = <u64 *> malloc(n * sizeof(u64))
    cdef u64 *stack_cand = <u64 *> malloc(cap * sizeof(u64))
    cdef u64 *stack_chosen = <u64 *> malloc(cap * sizeof(u64))
    if adj_c == NULL or stack_cand == NULL or stack_chosen == NULL:
        free(adj_c); free(stack_cand); free(stack_chosen)
        raise MemoryError()

    cdef int i
    for i in range(n):
        adj_c[i] = <u64> adj[i]

    cdef u64 full = ((<u64> 1) << n) - 1 if n < 64 else <u64> 0xFFFFFFFFFFFFFFFF
    cdef u64 best_mask = <u64> seed_mask
    cdef int best = pp_popcount64(best_mask)
    cdef long long nodes = 0
    cdef bint truncated = False

    cdef int sp = 0
    stack_cand[0] = full
    stack_chosen[0] = 0
    sp = 1

    cdef u64 cand, chosen, iso, mm, lsb, bit
    cdef int size, count, pivot, pivot_deg, d, v

    try:
        while sp > 0:
            if max_nodes >= 0 and nodes >= max_nodes:
                truncated = True
                break
            if has_deadline and (nodes & 2047) == 0 and time.monotonic() > deadline:
                truncated = True
                break
            nodes += 1
            sp -= 1
            cand = stack_cand[sp]
            chosen = stack_chosen[sp]

            iso = 0
            mm = cand
            while mm:
                lsb = mm & (~mm + 1)
                if adj_c[pp_ctz64(lsb)] & cand == 0:
                    iso |= lsb
                mm ^= lsb
            if iso:
                chosen |= iso
                cand ^= iso
            if cand == 0:
                size = pp_popcount64(chosen)
                if size > best:
                    best = size
                    best_mask = chosen
                continue

            count = pp_popcount64(cand)
            size = pp_popcount64(chosen)
            if size + _greedy_matching_bound(adj_c, cand, count) <= best:
                continue

            pivot = -1
            pivot_deg = -1
            mm = cand
            while mm:
                lsb = mm & (~mm + 1)
                v = pp_ctz64(lsb)
                d = pp_popcount64(adj_c[v] & cand)
                if d > pivot_deg:
                    pivot_deg = d
                    pivot = v
                mm ^= lsb
            bit = (<u64> 1) << pivot
            if sp + 2 > cap:
                raise RuntimeError("kernel stack overflow")  # cannot happen: depth <= n
            stack_cand[sp] = cand ^ bit
            stack_chosen[sp] = chosen
            sp += 1
            stack_cand[sp] = cand & ~(adj_c[pivot] | bit)
            stack_chosen[sp] = chosen | bit
            sp += 1
    finally:
        free(adj_c); free(stack_cand); free(stack_chosen)

    return best, int(best_mask), nodes, truncated
