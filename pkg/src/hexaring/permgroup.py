"""Coordinate permutations, automorphism groups and double coset representatives.

Permutations are stored 0-based and rendered 1-based in one-line image
notation.  Composition applies the right factor first:
``(s * t)(i) == s(t(i))``, and ``permute(permute(C, t), s) == permute(C, s * t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from hexaring import kernels
from hexaring.caps import check_degree
from hexaring.errors import FormatError
from hexaring.gfcode import GFCode


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            images = tuple(int(tok) - 1 for tok in text.split())
            return cls(images)
        except ValueError as exc:
            raise FormatError(f"bad permutation {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def rank(self) -> int:
        """Position in the lexicographic order used by :func:`all_permutations`."""
        return kernels.perm_rank(self.images)

    def __str__(self) -> str:
        return " ".join(str(i + 1) for i in self.images)


@dataclass(frozen=True)
class PermGroup:
    n: int
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, sigma: Permutation) -> bool:
        return sigma in self._set

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.elements)

    def as_array(self) -> np.ndarray:
        return np.array([g.images for g in self.elements], dtype=np.uint8).reshape(-1, self.n)

    def check_axioms(self) -> None:
        """Assert identity, closure and inverses by direct computation."""
        elems = self._set
        assert Permutation.identity(self.n) in elems, "identity missing"
        for g in self.elements:
            assert g.inverse() in elems, f"inverse of {g} missing"
            for h in self.elements:
                assert g * h in elems, f"{g} * {h} not in group"
        assert factorial(self.n) % self.order == 0


@dataclass(frozen=True)
class SdrResult:
    reps: tuple[Permutation, ...]
    coset_sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)


def factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def all_permutations(n: int) -> Iterator[Permutation]:
    check_degree(n)
    for images in permutations(range(n)):
        yield Permutation(images)


@lru_cache(maxsize=None)
def perm_table(n: int) -> np.ndarray:
    """All ``n!`` permutations as rows of a uint8 array, lexicographic order."""
    check_degree(n)
    table = np.array(list(permutations(range(n))), dtype=np.uint8).reshape(-1, n)
    table.setflags(write=False)
    return table


def symmetric_group(n: int) -> PermGroup:
    return PermGroup(n, tuple(all_permutations(n)))


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, (Permutation.identity(n),))


def group_from_rows(n: int, rows: np.ndarray) -> PermGroup:
    return PermGroup(n, tuple(Permutation(tuple(int(x) for x in r)) for r in rows))


def automorphism_group(C: GFCode) -> PermGroup:
    """Every coordinate permutation that maps ``C`` onto itself."""
    table = perm_table(C.n)
    idx = kernels.stabilizer(C.key, C.n, C.k, C.p, table)
    return PermGroup(C.n, tuple(Permutation(tuple(int(x) for x in table[i])) for i in idx))


def automorphism_array(C: GFCode) -> np.ndarray:
    table = perm_table(C.n)
    return np.ascontiguousarray(table[kernels.stabilizer(C.key, C.n, C.k, C.p, table)])


def double_coset_sdr(G1: PermGroup | np.ndarray, G2: PermGroup | np.ndarray, n: int) -> SdrResult:
    """One representative per double coset ``G1 * s * G2`` of S_n.

    The representative is the first permutation of the double coset in
    lexicographic order; ``coset_sizes[i]`` is the size of the i-th double coset.
    """
    check_degree(n)
    a = G1.as_array() if isinstance(G1, PermGroup) else G1
    b = G2.as_array() if isinstance(G2, PermGroup) else G2
    ranks, sizes = kernels.double_cosets(np.ascontiguousarray(a), np.ascontiguousarray(b), n)
    reps = tuple(Permutation(kernels.perm_unrank(r, n)) for r in ranks)
    return SdrResult(reps, tuple(sizes))


def double_coset(G1: PermGroup, sigma: Permutation, G2: PermGroup) -> frozenset:
    return frozenset(g * sigma * h for g in G1.elements for h in G2.elements)


def intersection_order(G1: PermGroup, sigma: Permutation, G2: PermGroup) -> int:
    """``|G1 ∩ sigma G2 sigma^-1|``."""
    inv = sigma.inverse()
    conj = {sigma * h * inv for h in G2.elements}
    return sum(1 for g in G1.elements if g in conj)
