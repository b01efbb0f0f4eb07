# cython: language_level=3, boundscheck=False, wraparound=False
"""Bitmask graph kernels, compiled backend for n <= 64.

Same contracts as kernels_py; the dispatcher in ``twoconn._core`` guarantees
len(adj) <= 64 before calling in here.
"""

from libc.stdint cimport uint64_t

BACKEND = "compiled"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define TWOCONN_CTZ(x) __builtin_ctzll(x)
    #define TWOCONN_POPCNT(x) __builtin_popcountll(x)
    #else
    static int TWOCONN_CTZ(unsigned long long x) {
        int i = 0;
        while (!(x & 1ULL)) { x >>= 1; i++; }
        return i;
    }
    static int TWOCONN_POPCNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1ULL; c++; }
        return c;
    }
    #endif
    """
    int TWOCONN_CTZ(uint64_t x) nogil
    int TWOCONN_POPCNT(uint64_t x) nogil


cdef inline void _load(object adj, uint64_t* arr, int n):
    cdef int i
    for i in range(n):
        arr[i] = <uint64_t> adj[i]


cdef uint64_t _reach(uint64_t* arr, uint64_t sub) nogil:
    cdef uint64_t reach, frontier, nxt, f, b
    if sub == 0:
        return 0
    reach = sub & (~sub + 1)
    frontier = reach
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & (~f + 1)
            nxt |= arr[TWOCONN_CTZ(b)]
            f ^= b
        frontier = nxt & sub & ~reach
        reach |= frontier
    return reach


cdef int _count_components(uint64_t* arr, uint64_t sub) nogil:
    cdef uint64_t rest = sub, start, reach, frontier, nxt, f, b
    cdef int n = 0
    while rest:
        start = rest & (~rest + 1)
        reach = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & (~f + 1)
                nxt |= arr[TWOCONN_CTZ(b)]
                f ^= b
            frontier = nxt & rest & ~reach
            reach |= frontier
        rest &= ~reach
        n += 1
    return n


def is_connected_masks(adj, sub):
    cdef uint64_t arr[64]
    cdef int n = len(adj)
    cdef uint64_t s = <uint64_t> sub
    if s == 0:
        return True
    _load(adj, arr, n)
    return _reach(arr, s) == s


def components_masks(adj, sub):
    cdef uint64_t arr[64]
    cdef int n = len(adj)
    cdef uint64_t rest = <uint64_t> sub, reach
    _load(adj, arr, n)
    comps = []
    while rest:
        reach = _reach(arr, rest)
        # _reach explores from the lowest bit of rest only
        comps.append(int(reach))
        rest &= ~reach
    return comps


def count_components_masks(adj, sub):
    cdef uint64_t arr[64]
    cdef int n = len(adj)
    _load(adj, arr, n)
    return _count_components(arr, <uint64_t> sub)


def cut_vertex_mask(adj, sub):
    cdef uint64_t arr[64]
    cdef int n = len(adj)
    cdef uint64_t s = <uint64_t> sub, out = 0, rem, b
    cdef int base
    _load(adj, arr, n)
    base = _count_components(arr, s)
    rem = s
    while rem:
        b = rem & (~rem + 1)
        rem ^= b
        if _count_components(arr, s ^ b) > base:
            out |= b
    return int(out)


def is_biconnected_masks(adj, sub):
    cdef uint64_t arr[64]
    cdef int n = len(adj)
    cdef uint64_t s = <uint64_t> sub, rem, b
    if TWOCONN_POPCNT(<uint64_t> sub) < 3:
        return False
    _load(adj, arr, n)
    if _reach(arr, s) != s:
        return False
    rem = s
    while rem:
        b = rem & (~rem + 1)
        rem ^= b
        if _reach(arr, s ^ b) != (s ^ b):
            return False
    return True
