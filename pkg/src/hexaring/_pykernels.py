"""Pure-Python implementations of the hot kernels.

Codes are handled here in packed form.  A row of length ``n`` over GF(2) or
GF(3) is an int holding entry ``j`` in bits ``2*(n-1-j) .. 2*(n-1-j)+1``, so
integer order on rows is lexicographic order on entries.  A code of dimension
``k`` in reduced row echelon form is the "key" obtained by concatenating its
rows, first row most significant; for fixed ``(n, k)`` integer order on keys
is row-major lexicographic order on generator matrices.

Permutations are tuples of images with ``perm[i]`` the image of ``i``
(0-based).  Permuting a code moves column ``i`` to position ``perm[i]``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

BACKEND = "python"


def _as_perm_list(perms):
    if hasattr(perms, "tolist"):
        return [tuple(p) for p in perms.tolist()]
    return [tuple(p) for p in perms]


def unpack_row(row: int, n: int) -> list[int]:
    return [(row >> (2 * (n - 1 - j))) & 3 for j in range(n)]


def pack_row(entries) -> int:
    row = 0
    for x in entries:
        row = (row << 2) | x
    return row


def pack_key(rows, n: int) -> int:
    key = 0
    width = 2 * n
    for r in rows:
        key = (key << width) | r
    return key


def unpack_key(key: int, n: int, k: int) -> list[int]:
    width = 2 * n
    mask = (1 << width) - 1
    return [(key >> (width * (k - 1 - i))) & mask for i in range(k)]


def _rref_lists(mat: list[list[int]], n: int, p: int) -> list[list[int]]:
    rows = [r for r in mat if any(r)]
    r = 0
    for c in range(n):
        if r == len(rows):
            break
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        if pr[c] != 1:
            # only reachable for p == 3, where 2 is its own inverse
            pr = rows[r] = [(x * 2) % 3 for x in pr]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        r += 1
    return rows[:r]


def rref_rows(rows, n: int, p: int) -> list[int]:
    """Packed RREF of the row space spanned by packed ``rows``."""
    mat = [unpack_row(r, n) for r in rows]
    return [pack_row(r) for r in _rref_lists(mat, n, p)]


def _permute_lists(mat, perm):
    out = []
    for row in mat:
        new = [0] * len(row)
        for j, x in enumerate(row):
            new[perm[j]] = x
        out.append(new)
    return out


def _key_of(mat, n: int) -> int:
    return pack_key([pack_row(r) for r in mat], n)


def _mat_of(key: int, n: int, k: int) -> list[list[int]]:
    return [unpack_row(r, n) for r in unpack_key(key, n, k)]


def permute_key(key: int, n: int, k: int, p: int, perm) -> int:
    mat = _permute_lists(_mat_of(key, n, k), perm)
    return _key_of(_rref_lists(mat, n, p), n)


def orbit(key: int, n: int, k: int, p: int, gens) -> list[int]:
    """All keys in the orbit of ``key`` under the group generated by ``gens``."""
    gens = _as_perm_list(gens)
    seen = {key}
    frontier = [key]
    while frontier:
        cur = frontier.pop()
        mat = _mat_of(cur, n, k)
        for g in gens:
            nxt = _key_of(_rref_lists(_permute_lists(mat, g), n, p), n)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return list(seen)


def stabilizer(key: int, n: int, k: int, p: int, perms) -> list[int]:
    """Indices of the permutations in ``perms`` that fix the code."""
    mat = _mat_of(key, n, k)
    out = []
    for idx, perm in enumerate(_as_perm_list(perms)):
        if _rref_lists(_permute_lists(mat, perm), n, p) == mat:
            out.append(idx)
    return out


def pair_max(key_a: int, k_a: int, key_b: int, k_b: int, n: int, perms) -> tuple[int, int]:
    """Greatest ``(binary key, ternary key)`` pair over one simultaneous permutation."""
    mat_a = _mat_of(key_a, n, k_a)
    mat_b = _mat_of(key_b, n, k_b)
    best = None
    for perm in _as_perm_list(perms):
        ka = _key_of(_rref_lists(_permute_lists(mat_a, perm), n, 2), n)
        if best is not None and ka < best[0]:
            continue
        kb = _key_of(_rref_lists(_permute_lists(mat_b, perm), n, 3), n)
        cand = (ka, kb)
        if best is None or cand > best:
            best = cand
    return best


def _dot(u, v, p: int) -> int:
    return sum(x * y for x, y in zip(u, v)) % p


def is_self_orthogonal_key(key: int, n: int, k: int, p: int) -> bool:
    mat = _mat_of(key, n, k)
    return all(_dot(mat[i], mat[j], p) == 0 for i in range(k) for j in range(i, k))


def enumerate_rref(n: int, k: int, p: int, self_orthogonal: bool = False) -> list[int]:
    """Keys of every ``[n, k]`` subspace of GF(p)^n, optionally only the self-orthogonal ones."""
    out = []
    if k == 0:
        return [0]
    for pivots in combinations(range(n), k):
        pivset = set(pivots)
        row_options = []
        for i, c in enumerate(pivots):
            free = [j for j in range(c + 1, n) if j not in pivset]
            opts = []
            for vals in product(range(p), repeat=len(free)):
                entries = [0] * n
                entries[c] = 1
                for j, v in zip(free, vals):
                    entries[j] = v
                if self_orthogonal and _dot(entries, entries, p):
                    continue
                opts.append((pack_row(entries), entries))
            row_options.append(opts)
        for choice in product(*row_options):
            if self_orthogonal:
                ok = True
                for i in range(k):
                    for j in range(i + 1, k):
                        if _dot(choice[i][1], choice[j][1], p):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
            out.append(pack_key([row for row, _ in choice], n))
    return out


@lru_cache(maxsize=None)
def _perm_index(n: int):
    perms = list(permutations(range(n)))
    return perms, {perm: i for i, perm in enumerate(perms)}


def perm_rank(perm) -> int:
    n = len(perm)
    r = 0
    for i in range(n):
        cnt = 0
        for j in range(i + 1, n):
            if perm[j] < perm[i]:
                cnt += 1
        r = r * (n - i) + cnt
    return r


def perm_unrank(r: int, n: int) -> tuple[int, ...]:
    fact = [1] * (n + 1)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    avail = list(range(n))
    out = []
    for i in range(n - 1, -1, -1):
        q, r = divmod(r, fact[i])
        out.append(avail.pop(q))
    return tuple(out)


def double_cosets(g1, g2, n: int) -> tuple[list[int], list[int]]:
    """Mark-and-sweep double coset decomposition ``G1 \\ S_n / G2``.

    Returns the lexicographic ranks of the representatives (the first
    unmarked permutation of each double coset) and the coset sizes.
    """
    g1 = _as_perm_list(g1)
    g2 = _as_perm_list(g2)
    perms, index = _perm_index(n)
    marked = bytearray(len(perms))
    reps, sizes = [], []
    for r, sigma in enumerate(perms):
        if marked[r]:
            continue
        size = 0
        for a in g1:
            x = tuple(a[s] for s in sigma)
            if marked[index[x]]:
                # x*G2 was already swept in full
                continue
            for b in g2:
                y = index[tuple(x[t] for t in b)]
                if not marked[y]:
                    marked[y] = 1
                    size += 1
        reps.append(r)
        sizes.append(size)
    return reps, sizes
