"""Linear codes over GF(2) and GF(3).

A :class:`GFCode` always holds its generator matrix in reduced row echelon
form, so two codes are equal exactly when their ``(p, n, gen)`` agree.
Equivalence throughout is permutation equivalence (no scaling of
coordinates, also for ternary codes).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from hexaring import kernels
from hexaring._pykernels import _rref_lists
from hexaring.caps import DEFAULT_SUBSPACE_CAP, check_cap, check_degree
from hexaring.errors import FormatError

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=False)
class GFCode:
    p: int
    n: int
    gen: Matrix

    def __post_init__(self):
        if self.p not in (2, 3):
            raise ValueError(f"p must be 2 or 3, got {self.p}")
        if self.n < 1:
            raise ValueError("length must be positive")
        for row in self.gen:
            if len(row) != self.n:
                raise ValueError("generator row has the wrong length")

    @property
    def k(self) -> int:
        return len(self.gen)

    @property
    def key(self) -> int:
        return kernels.pack_key([kernels.pack_row(r) for r in self.gen], self.n)

    @property
    def size(self) -> int:
        return self.p**self.k

    @classmethod
    def from_key(cls, p: int, n: int, k: int, key: int) -> "GFCode":
        rows = kernels.unpack_key(key, n, k)
        return cls(p, n, tuple(tuple(kernels.unpack_row(r, n)) for r in rows))

    def codewords(self) -> Iterator[tuple[int, ...]]:
        for coeffs in product(range(self.p), repeat=self.k):
            word = [0] * self.n
            for c, row in zip(coeffs, self.gen):
                if c:
                    for j, x in enumerate(row):
                        word[j] = (word[j] + c * x) % self.p
            yield tuple(word)

    def __contains__(self, vec) -> bool:
        vec = tuple(x % self.p for x in vec)
        if len(vec) != self.n:
            return False
        return rref(self.p, list(self.gen) + [vec], self.n).k == self.k

    def __str__(self) -> str:
        return format_matrix(self) or "-"


def rref(p: int, matrix: Iterable[Sequence[int]], n: int | None = None) -> GFCode:
    rows = [[x % p for x in row] for row in matrix]
    if n is None:
        if not rows:
            raise ValueError("n is required for an empty matrix")
        n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    return GFCode(p, n, tuple(tuple(r) for r in _rref_lists(rows, n, p)))


def zero_code(p: int, n: int) -> GFCode:
    return GFCode(p, n, ())


def full_space(p: int, n: int) -> GFCode:
    return GFCode(p, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def pivots(C: GFCode) -> list[int]:
    return [row.index(1) for row in C.gen]


def dual(C: GFCode) -> GFCode:
    p, n = C.p, C.n
    piv = pivots(C)
    free = [j for j in range(n) if j not in set(piv)]
    rows = []
    for f in free:
        h = [0] * n
        h[f] = 1
        for i, c in enumerate(piv):
            h[c] = (-C.gen[i][f]) % p
        rows.append(h)
    return rref(p, rows, n)


def dot(u: Sequence[int], v: Sequence[int], p: int) -> int:
    return sum(x * y for x, y in zip(u, v)) % p


def is_self_orthogonal(C: GFCode) -> bool:
    g = C.gen
    return all(dot(g[i], g[j], C.p) == 0 for i in range(C.k) for j in range(i, C.k))


def is_self_dual(C: GFCode) -> bool:
    return 2 * C.k == C.n and is_self_orthogonal(C)


def _rank(p: int, rows: list, n: int) -> int:
    return len(_rref_lists([list(r) for r in rows], n, p))


def is_lcd(C: GFCode) -> bool:
    """True iff ``C`` meets its dual only in zero, via ranks of stacked bases."""
    D = dual(C)
    stacked = _rank(C.p, list(C.gen) + list(D.gen), C.n)
    return C.k + D.k - stacked == 0


def _det_mod(mat: list[list[int]], p: int) -> int:
    m = [row[:] for row in mat]
    size = len(m)
    det = 1
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], p - 2, p)
        for r in range(c + 1, size):
            f = m[r][c] * inv % p
            if f:
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
    return det % p


def is_lcd_gram(C: GFCode) -> bool:
    """LCD test by the Gram determinant ``det(G G^T) != 0``."""
    if C.k == 0:
        return True
    gram = [[dot(r, s, C.p) for s in C.gen] for r in C.gen]
    return _det_mod(gram, C.p) != 0


def cyclic_shift(vec: Sequence[int]) -> tuple[int, ...]:
    return (vec[-1],) + tuple(vec[:-1])


def is_cyclic(C: GFCode) -> bool:
    return all(cyclic_shift(row) in C for row in C.gen)


def weight(vec: Sequence[int]) -> int:
    return sum(1 for x in vec if x)


def min_distance(C: GFCode) -> int | None:
    if C.k == 0:
        return None
    return min(weight(w) for w in C.codewords() if any(w))


def _images(sigma) -> tuple[int, ...]:
    return tuple(getattr(sigma, "images", sigma))


def permute(C: GFCode, sigma) -> GFCode:
    """Move column ``i`` of ``C`` to position ``sigma(i)``."""
    images = _images(sigma)
    if len(images) != C.n:
        raise ValueError(f"permutation on {len(images)} points, code length {C.n}")
    rows = []
    for row in C.gen:
        new = [0] * C.n
        for j, x in enumerate(row):
            new[images[j]] = x
        rows.append(new)
    return rref(C.p, rows, C.n)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


FILTERS = ("all", "self_orthogonal")


def enumerate_keys(p: int, n: int, k: int, filter: str = "all", cap: int | None = None) -> list[int]:
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}")
    if not 0 <= k <= n:
        raise ValueError(f"dimension {k} out of range for length {n}")
    check_cap(gaussian_binomial(n, k, p), DEFAULT_SUBSPACE_CAP if cap is None else cap, "subspace enumeration")
    return kernels.enumerate_rref(n, k, p, filter == "self_orthogonal")


def enumerate_codes(p: int, n: int, k: int, filter: str = "all", cap: int | None = None) -> list[GFCode]:
    """Every ``[n, k]`` code over GF(p) in RREF, optionally only the self-orthogonal ones."""
    return [GFCode.from_key(p, n, k, key) for key in enumerate_keys(p, n, k, filter, cap)]


@lru_cache(maxsize=None)
def symmetric_generators(n: int) -> tuple[tuple[int, ...], ...]:
    """A transposition and an n-cycle, which together generate S_n."""
    if n == 1:
        return ((0,),)
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    return (swap, cycle)


def orbit_keys(C: GFCode) -> list[int]:
    check_degree(C.n)
    return kernels.orbit(C.key, C.n, C.k, C.p, symmetric_generators(C.n))


def canonical_rep(C: GFCode) -> GFCode:
    """Greatest RREF matrix (row-major, 0 < 1 < 2) in the S_n-orbit of ``C``.

    Taking the greatest matrix favours pivots as far left as possible, so
    ``<01>`` becomes ``<10>``.
    """
    return GFCode.from_key(C.p, C.n, C.k, max(orbit_keys(C)))


def canonical_keys(p: int, n: int, k: int, keys: Iterable[int]) -> list[int]:
    """Sorted distinct canonical keys of the given codes.

    Each orbit is expanded once, so a list closed under S_n costs two
    kernel calls per member rather than ``n!``.
    """
    check_degree(n)
    gens = symmetric_generators(n)
    canon: dict[int, int] = {}
    for key in keys:
        if key in canon:
            continue
        members = kernels.orbit(key, n, k, p, gens)
        best = max(members)
        for m in members:
            canon[m] = best
    return sorted(set(canon.values()))


def classify_inequivalent(codes: Sequence[GFCode]) -> list[GFCode]:
    """One canonical representative per permutation-equivalence class, sorted."""
    if not codes:
        return []
    p, n, k = codes[0].p, codes[0].n, codes[0].k
    if any((c.p, c.n, c.k) != (p, n, k) for c in codes):
        raise ValueError("codes must share field, length and dimension")
    return [GFCode.from_key(p, n, k, key) for key in canonical_keys(p, n, k, (c.key for c in codes))]


def parse_matrix(text: str, p: int, n: int | None = None) -> GFCode:
    """Parse rows of contiguous digits (one per line) into a code."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if any(ch not in "012"[:p] for ch in line):
            raise FormatError(f"line {lineno}: {line!r} is not a row over GF({p})")
        rows.append([int(ch) for ch in line])
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise FormatError("ragged matrix rows")
        if n is not None and width != n:
            raise FormatError(f"rows have length {width}, expected {n}")
        return rref(p, rows, width)
    if n is None:
        raise FormatError("empty matrix with unknown length")
    return zero_code(p, n)


def format_matrix(C: GFCode) -> str:
    return "\n".join("".join(str(x) for x in row) for row in C.gen)
