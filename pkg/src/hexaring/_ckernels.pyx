# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled implementations of the hot kernels.

Same packed-row conventions and signatures as ``_pykernels``; inputs larger
than the fixed C buffers are delegated to the pure-Python versions.
"""

from itertools import combinations

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

from hexaring import _pykernels as _py

BACKEND = "cython"

cdef enum:
    MAXR = 64
    MAXN = 32
    MAXDEG = 12

ctypedef unsigned char u8
ctypedef unsigned long long u64

pack_row = _py.pack_row
unpack_row = _py.unpack_row
pack_key = _py.pack_key
unpack_key = _py.unpack_key
perm_rank = _py.perm_rank
perm_unrank = _py.perm_unrank


cdef int _rref(u8 (*m)[MAXN], int nrows, int n, int p) noexcept nogil:
    cdef int r = 0, c, i, j, piv, f
    cdef u8 tmp
    for c in range(n):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                tmp = m[r][j]
                m[r][j] = m[piv][j]
                m[piv][j] = tmp
        if m[r][c] != 1:
            for j in range(c, n):
                m[r][j] = (m[r][j] * 2) % 3
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    f = p - f
                    for j in range(c, n):
                        m[i][j] = (m[i][j] + f * m[r][j]) % p
        r += 1
    return r


cdef int _load_rows(object rows, int n, u8 (*m)[MAXN]) except -1:
    cdef int i = 0, j
    cdef u64 row
    for obj in rows:
        row = obj
        for j in range(n):
            m[i][j] = (row >> (2 * (n - 1 - j))) & 3
        i += 1
    return i


cdef object _pack(u8 (*m)[MAXN], int k, int n):
    cdef int i, j
    cdef u64 row, acc = 0
    cdef object key
    if 2 * n * k <= 64:
        for i in range(k):
            row = 0
            for j in range(n):
                row = (row << 2) | m[i][j]
            acc = (acc << (2 * n)) | row
        return acc
    key = 0
    for i in range(k):
        row = 0
        for j in range(n):
            row = (row << 2) | m[i][j]
        key = (key << (2 * n)) | row
    return key


cdef int _unpack(object key, int n, int k, u8 (*m)[MAXN]) except -1:
    cdef int i, j, shift
    cdef u64 acc, row
    cdef u64 mask = ((<u64>1) << (2 * n)) - 1
    if 2 * n * k <= 64:
        acc = key
        for i in range(k - 1, -1, -1):
            row = acc & mask
            acc >>= 2 * n
            for j in range(n):
                m[i][j] = (row >> (2 * (n - 1 - j))) & 3
        return 0
    for i in range(k):
        shift = 2 * n * (k - 1 - i)
        row = (key >> shift) & mask
        for j in range(n):
            m[i][j] = (row >> (2 * (n - 1 - j))) & 3
    return 0


cdef inline void _permute(u8 (*src)[MAXN], u8 (*dst)[MAXN], int k, int n, const int *perm) noexcept nogil:
    cdef int i, j
    for i in range(k):
        for j in range(n):
            dst[i][perm[j]] = src[i][j]


def rref_rows(rows, int n, int p):
    """Packed RREF of the row space spanned by packed ``rows``."""
    rows = list(rows)
    if len(rows) > MAXR or n > MAXN:
        return _py.rref_rows(rows, n, p)
    cdef u8 m[MAXR][MAXN]
    cdef int nrows = _load_rows(rows, n, m)
    cdef int r = _rref(m, nrows, n, p)
    cdef int i, j
    cdef u64 row
    out = []
    for i in range(r):
        row = 0
        for j in range(n):
            row = (row << 2) | m[i][j]
        out.append(row)
    return out


cdef int _perm_to_c(object perm, int n, int *out) except -1:
    cdef int j = 0
    for x in perm:
        out[j] = x
        j += 1
    if j != n:
        raise ValueError("permutation length does not match n")
    return 0


def permute_key(key, int n, int k, int p, perm):
    if k > MAXR or n > MAXN:
        return _py.permute_key(key, n, k, p, perm)
    cdef u8 m[MAXR][MAXN]
    cdef u8 w[MAXR][MAXN]
    cdef int cperm[MAXN]
    _perm_to_c(perm, n, cperm)
    _unpack(key, n, k, m)
    _permute(m, w, k, n, cperm)
    _rref(w, k, n, p)
    return _pack(w, k, n)


def orbit(key, int n, int k, int p, gens):
    """All keys in the orbit of ``key`` under the group generated by ``gens``."""
    if k > MAXR or n > MAXN:
        return _py.orbit(key, n, k, p, gens)
    gens = [tuple(gen) for gen in (gens.tolist() if hasattr(gens, "tolist") else gens)]
    cdef int ng = len(gens)
    cdef int *cg = <int *> malloc(sizeof(int) * MAXN * (ng if ng > 0 else 1))
    cdef u8 m[MAXR][MAXN]
    cdef u8 w[MAXR][MAXN]
    cdef int g
    try:
        for g in range(ng):
            _perm_to_c(gens[g], n, cg + g * MAXN)
        seen = {key}
        frontier = [key]
        while frontier:
            cur = frontier.pop()
            _unpack(cur, n, k, m)
            for g in range(ng):
                _permute(m, w, k, n, cg + g * MAXN)
                _rref(w, k, n, p)
                nxt = _pack(w, k, n)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return list(seen)
    finally:
        free(cg)


def stabilizer(key, int n, int k, int p, perms):
    """Indices of the permutations in ``perms`` that fix the code."""
    if k > MAXR or n > MAXN:
        return _py.stabilizer(key, n, k, p, perms)
    cdef const u8[:, ::1] pv = perms
    cdef u8 m[MAXR][MAXN]
    cdef u8 w[MAXR][MAXN]
    cdef int cperm[MAXN]
    cdef Py_ssize_t idx, count = pv.shape[0]
    cdef int i, j, same
    _unpack(key, n, k, m)
    out = []
    for idx in range(count):
        for j in range(n):
            cperm[j] = pv[idx, j]
        _permute(m, w, k, n, cperm)
        _rref(w, k, n, p)
        same = 1
        for i in range(k):
            for j in range(n):
                if w[i][j] != m[i][j]:
                    same = 0
                    break
            if not same:
                break
        if same:
            out.append(idx)
    return out


cdef int _cmp_rows(u8 (*x)[MAXN], u8 (*y)[MAXN], int k, int n) noexcept nogil:
    cdef int i, j
    for i in range(k):
        for j in range(n):
            if x[i][j] != y[i][j]:
                return -1 if x[i][j] < y[i][j] else 1
    return 0


def pair_max(key_a, int k_a, key_b, int k_b, int n, perms):
    """Greatest ``(binary key, ternary key)`` pair over one simultaneous permutation."""
    if k_a > MAXR or k_b > MAXR or n > MAXN:
        return _py.pair_max(key_a, k_a, key_b, k_b, n, perms)
    cdef const u8[:, ::1] pv = perms
    cdef u8 ma[MAXR][MAXN]
    cdef u8 mb[MAXR][MAXN]
    cdef u8 wa[MAXR][MAXN]
    cdef u8 wb[MAXR][MAXN]
    cdef u8 ba[MAXR][MAXN]
    cdef u8 bb[MAXR][MAXN]
    cdef int cperm[MAXN]
    cdef Py_ssize_t idx, count = pv.shape[0]
    cdef int j, c, have = 0
    _unpack(key_a, n, k_a, ma)
    _unpack(key_b, n, k_b, mb)
    for idx in range(count):
        for j in range(n):
            cperm[j] = pv[idx, j]
        _permute(ma, wa, k_a, n, cperm)
        _rref(wa, k_a, n, 2)
        if have:
            c = _cmp_rows(wa, ba, k_a, n)
            if c < 0:
                continue
        else:
            c = 1
        _permute(mb, wb, k_b, n, cperm)
        _rref(wb, k_b, n, 3)
        if c > 0 or _cmp_rows(wb, bb, k_b, n) > 0:
            memcpy(ba, wa, sizeof(wa))
            memcpy(bb, wb, sizeof(wb))
            have = 1
    return (_pack(ba, k_a, n), _pack(bb, k_b, n))


cdef bint _so(u8 (*m)[MAXN], int k, int n, int p) noexcept nogil:
    cdef int i, j, t, s
    for i in range(k):
        for j in range(i, k):
            s = 0
            for t in range(n):
                s += m[i][t] * m[j][t]
            if s % p:
                return 0
    return 1


def is_self_orthogonal_key(key, int n, int k, int p):
    if k > MAXR or n > MAXN:
        return _py.is_self_orthogonal_key(key, n, k, p)
    cdef u8 m[MAXR][MAXN]
    _unpack(key, n, k, m)
    return bool(_so(m, k, n, p))


def enumerate_rref(int n, int k, int p, bint self_orthogonal=False):
    """Keys of every ``[n, k]`` subspace of GF(p)^n, optionally only the self-orthogonal ones."""
    if k == 0:
        return [0]
    if k > MAXR or n > MAXN:
        return _py.enumerate_rref(n, k, p, self_orthogonal)
    cdef u8 m[MAXR][MAXN]
    cdef int frow[MAXR * MAXN]
    cdef int fcol[MAXR * MAXN]
    cdef int nfree, i, j, t, pos
    cdef bint is_piv[MAXN]
    out = []
    for pivots in combinations(range(n), k):
        memset(m, 0, sizeof(m))
        for j in range(n):
            is_piv[j] = 0
        for i in range(k):
            is_piv[<int> pivots[i]] = 1
        nfree = 0
        for i in range(k):
            m[i][<int> pivots[i]] = 1
            for j in range(<int> pivots[i] + 1, n):
                if not is_piv[j]:
                    frow[nfree] = i
                    fcol[nfree] = j
                    nfree += 1
        while True:
            if not self_orthogonal or _so(m, k, n, p):
                out.append(_pack(m, k, n))
            # odometer over the free entries, last position fastest
            pos = nfree - 1
            while pos >= 0:
                t = m[frow[pos]][fcol[pos]] + 1
                if t < p:
                    m[frow[pos]][fcol[pos]] = t
                    break
                m[frow[pos]][fcol[pos]] = 0
                pos -= 1
            if pos < 0:
                break
    return out


cdef u64 _rank(const int *perm, int n) noexcept nogil:
    cdef u64 r = 0
    cdef int i, j, cnt
    for i in range(n):
        cnt = 0
        for j in range(i + 1, n):
            if perm[j] < perm[i]:
                cnt += 1
        r = r * (n - i) + cnt
    return r


cdef void _unrank(u64 r, int n, int *out) noexcept nogil:
    cdef u64 fact[MAXDEG + 1]
    cdef int avail[MAXDEG]
    cdef int i, j, q, navail = n
    fact[0] = 1
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    for i in range(n):
        avail[i] = i
    for i in range(n - 1, -1, -1):
        q = <int> (r // fact[i])
        r = r % fact[i]
        out[n - 1 - i] = avail[q]
        for j in range(q, navail - 1):
            avail[j] = avail[j + 1]
        navail -= 1


def double_cosets(g1, g2, int n):
    """Mark-and-sweep double coset decomposition ``G1 \\ S_n / G2``.

    Returns the lexicographic ranks of the representatives (the first
    unmarked permutation of each double coset) and the coset sizes.
    """
    if n > MAXDEG or n > 10:
        return _py.double_cosets(g1, g2, n)
    cdef const u8[:, ::1] a = g1
    cdef const u8[:, ::1] b = g2
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0], ia, ib
    cdef u64 total = 1, r, rx, ry, size
    cdef int i
    cdef int sigma[MAXDEG]
    cdef int x[MAXDEG]
    cdef int y[MAXDEG]
    for i in range(2, n + 1):
        total *= i
    cdef u8 *marked = <u8 *> malloc(total)
    if marked == NULL:
        raise MemoryError()
    memset(marked, 0, total)
    reps = []
    sizes = []
    try:
        for r in range(total):
            if marked[r]:
                continue
            _unrank(r, n, sigma)
            size = 0
            for ia in range(na):
                for i in range(n):
                    x[i] = a[ia, sigma[i]]
                rx = _rank(x, n)
                if marked[rx]:
                    continue
                for ib in range(nb):
                    for i in range(n):
                        y[i] = x[b[ib, i]]
                    ry = _rank(y, n)
                    if not marked[ry]:
                        marked[ry] = 1
                        size += 1
            reps.append(r)
            sizes.append(size)
    finally:
        free(marked)
    return reps, sizes
