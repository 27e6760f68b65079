# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_kernels_py`` exactly (same order, same
reconstruction) for graphs with at most 64 vertices."""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport calloc, free


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _low_index(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline bint _connected(const uint64_t* adj, uint64_t mask) nogil:
    cdef uint64_t seen, frontier, reach, low
    if mask == 0:
        return False
    seen = mask & (~mask + 1)
    frontier = seen
    while frontier:
        reach = 0
        while frontier:
            low = frontier & (~frontier + 1)
            reach |= adj[_low_index(low)]
            frontier ^= low
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


cdef int _load(list src, uint64_t* dst, int n) except -1:
    cdef int i
    for i in range(n):
        dst[i] = <uint64_t>src[i]
    return 0


def mask_is_connected(list adj, mask):
    cdef uint64_t a[64]
    cdef int n = len(adj)
    _load(adj, a, n)
    return bool(_connected(a, <uint64_t>mask))


def count_components(list adj, alive):
    cdef uint64_t a[64]
    cdef int n = len(adj)
    cdef uint64_t rest, seen, frontier, reach, low, live
    cdef int count = 0
    _load(adj, a, n)
    live = <uint64_t>alive
    rest = live
    while rest:
        seen = rest & (~rest + 1)
        frontier = seen
        while frontier:
            reach = 0
            while frontier:
                low = frontier & (~frontier + 1)
                reach |= a[_low_index(low)]
                frontier ^= low
            frontier = reach & live & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def cds_search(list adj, int n, int size, bint connected, bint find_all,
               hit_mask, long long limit):
    cdef uint64_t a[64]
    cdef uint64_t closed[64]
    cdef uint64_t cover_from[65]
    cdef int picks[65]
    cdef uint64_t doms[65]
    cdef uint64_t chosen[65]
    cdef uint64_t full, ndom, nchosen, hit
    cdef int v, depth, remaining
    cdef long long visited = 0
    found = []
    if size < 1 or size > n:
        return found, 0, True
    _load(adj, a, n)
    hit = <uint64_t>hit_mask
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    for v in range(n):
        closed[v] = a[v] | (<uint64_t>1 << v)
    cover_from[n] = 0
    for v in range(n - 1, -1, -1):
        cover_from[v] = cover_from[v + 1] | closed[v]
    doms[0] = 0
    chosen[0] = 0
    depth = 0
    picks[0] = 0
    while depth >= 0:
        v = picks[depth]
        remaining = size - depth - 1
        if v > n - 1 - remaining:
            depth -= 1
            if depth >= 0:
                picks[depth] += 1
            continue
        visited += 1
        if limit > 0 and visited >= limit:
            return found, visited, False
        ndom = doms[depth] | closed[v]
        nchosen = chosen[depth] | (<uint64_t>1 << v)
        if remaining == 0:
            if (ndom == full
                    and (hit == 0 or (nchosen & hit) != 0)
                    and (not connected or _connected(a, nchosen))):
                found.append(int(nchosen))
                if not find_all:
                    return found, visited, True
            picks[depth] += 1
            continue
        if full & ~ndom & ~cover_from[v + 1]:
            picks[depth] += 1
            continue
        doms[depth + 1] = ndom
        chosen[depth + 1] = nchosen
        depth += 1
        picks[depth] = v + 1
    return found, visited, True


def hamiltonian_path(list adj, int n):
    cdef uint64_t a[64]
    cdef uint32_t* table
    cdef uint64_t mask, full, size, reach, low, e, key
    cdef uint32_t ends
    cdef int v
    if n == 0:
        return []
    if n > 32:
        raise ValueError("compiled Hamiltonian kernel supports at most 32 vertices")
    _load(adj, a, n)
    size = <uint64_t>1 << n
    full = size - 1
    table = <uint32_t*>calloc(size, sizeof(uint32_t))
    if table == NULL:
        raise MemoryError()
    try:
        with nogil:
            for v in range(n):
                table[<uint64_t>1 << v] = <uint32_t>1 << v
            for mask in range(1, size):
                ends = table[mask]
                if ends == 0:
                    continue
                reach = 0
                e = ends
                while e:
                    low = e & (~e + 1)
                    reach |= a[_low_index(low)]
                    e ^= low
                reach &= ~mask
                while reach:
                    low = reach & (~reach + 1)
                    key = mask | low
                    table[key] |= <uint32_t>low
                    reach ^= low
        ends = table[full]
        if ends == 0:
            return None
        v = _low_index(ends)
        mask = full
        seq = [v]
        while mask != (<uint64_t>1 << v):
            mask ^= <uint64_t>1 << v
            e = table[mask] & a[v]
            v = _low_index(e)
            seq.append(v)
        return seq
    finally:
        free(table)
