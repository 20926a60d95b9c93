"""Codes over H23 and H32 in component form ``C = a*Ca + b*Cb``.

The fast predicates work on the binary component ``Ca`` and the ternary
component ``Cb`` alone.  Each one has a ``*_bruteforce`` twin that expands
the codewords of ``C`` and does the arithmetic from the printed operation
tables; those twins are size-capped and meant for verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from hexaring import gfcode, kernels
from hexaring.caps import check_cap, check_degree
from hexaring.errors import FormatError
from hexaring.gfcode import GFCode, full_space, zero_code
from hexaring.permgroup import perm_table
from hexaring.ring import (
    ADDITION_TABLE,
    ELEMENTS,
    MULTIPLICATION_TABLES,
    SYMBOLS,
    HVector,
    RingId,
    embed,
)


@dataclass(frozen=True)
class HCode:
    ring: RingId
    n: int
    Ca: GFCode
    Cb: GFCode

    def __post_init__(self):
        if self.Ca.p != 2 or self.Cb.p != 3:
            raise ValueError("Ca must be binary and Cb ternary")
        if self.Ca.n != self.n or self.Cb.n != self.n:
            raise ValueError("component lengths must equal n")

    @classmethod
    def from_rows(cls, ring: RingId, n: int, ca_rows=(), cb_rows=()) -> "HCode":
        return cls(ring, n, gfcode.rref(2, ca_rows, n), gfcode.rref(3, cb_rows, n))

    @property
    def ka(self) -> int:
        return self.Ca.k

    @property
    def kb(self) -> int:
        return self.Cb.k

    @property
    def cardinality(self) -> int:
        return 2**self.ka * 3**self.kb

    def codewords(self):
        for x in self.Ca.codewords():
            for y in self.Cb.codewords():
                yield embed(x, y, self.ring)

    def generators(self) -> list[HVector]:
        """Additive generators ``a*x`` for rows of Ca and ``b*y`` for rows of Cb."""
        zero = (0,) * self.n
        return [embed(x, zero, self.ring) for x in self.Ca.gen] + [
            embed(zero, y, self.ring) for y in self.Cb.gen
        ]


def h_dual(C: HCode) -> HCode:
    if C.ring is RingId.H23:
        return HCode(C.ring, C.n, gfcode.dual(C.Ca), full_space(3, C.n))
    return HCode(C.ring, C.n, full_space(2, C.n), gfcode.dual(C.Cb))


def is_self_orthogonal(C: HCode) -> bool:
    if C.ring is RingId.H23:
        return gfcode.is_self_orthogonal(C.Ca)
    return gfcode.is_self_orthogonal(C.Cb)


def is_nice(C: HCode) -> bool:
    by_size = C.cardinality * h_dual(C).cardinality == 6**C.n
    by_structure = (C.kb if C.ring is RingId.H23 else C.ka) == 0
    if by_size != by_structure:
        raise AssertionError(f"niceness criteria disagree for {C}")
    return by_size


def is_qsd(C: HCode) -> bool:
    n = C.n
    by_definition = n % 2 == 0 and is_self_orthogonal(C) and C.cardinality == 6 ** (n // 2)
    if C.ring is RingId.H23:
        by_structure = gfcode.is_self_dual(C.Ca) and 2 * C.kb == n
    else:
        by_structure = 2 * C.ka == n and gfcode.is_self_dual(C.Cb)
    if by_definition != by_structure:
        raise AssertionError(f"QSD criteria disagree for {C}")
    return by_definition


def is_self_dual(C: HCode) -> bool:
    by_dual = h_dual(C) == C
    if C.ring is RingId.H23:
        by_structure = gfcode.is_self_dual(C.Ca) and C.kb == C.n
    else:
        by_structure = C.ka == C.n and gfcode.is_self_dual(C.Cb)
    if by_dual != by_structure:
        raise AssertionError(f"self-duality criteria disagree for {C}")
    return by_dual


def is_lcd(C: HCode) -> bool:
    if C.ring is RingId.H23:
        return gfcode.is_lcd(C.Ca) and C.kb == 0
    return C.ka == 0 and gfcode.is_lcd(C.Cb)


def is_cyclic(C: HCode) -> bool:
    return gfcode.is_cyclic(C.Ca) and gfcode.is_cyclic(C.Cb)


def h_min_distance(C: HCode) -> int | None:
    d = [gfcode.min_distance(X) for X in (C.Ca, C.Cb)]
    d = [x for x in d if x is not None]
    return min(d) if d else None


def permute_both(C: HCode, sigma) -> HCode:
    return HCode(C.ring, C.n, gfcode.permute(C.Ca, sigma), gfcode.permute(C.Cb, sigma))


def h_canonical_rep(C: HCode) -> tuple[GFCode, GFCode]:
    """Greatest ``(Ca, Cb)`` pair over all simultaneous coordinate permutations."""
    check_degree(C.n)
    key_a, key_b = kernels.pair_max(C.Ca.key, C.ka, C.Cb.key, C.kb, C.n, perm_table(C.n))
    return GFCode.from_key(2, C.n, C.ka, key_a), GFCode.from_key(3, C.n, C.kb, key_b)


def equivalent(C1: HCode, C2: HCode) -> bool:
    if C1.ring is not C2.ring or C1.n != C2.n:
        raise ValueError("codes must share ring and length")
    if (C1.ka, C1.kb) != (C2.ka, C2.kb):
        return False
    return h_canonical_rep(C1) == h_canonical_rep(C2)


@dataclass(frozen=True)
class PropertyReport:
    cardinality: int
    min_distance: int | None
    self_orthogonal: bool
    self_dual: bool
    qsd: bool
    nice: bool
    lcd: bool
    cyclic: bool

    FIELDS = ("cardinality", "min_distance", "self_orthogonal", "self_dual", "qsd", "nice", "lcd", "cyclic")

    def render(self) -> str:
        lines = []
        for name in self.FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool):
                value = str(value).lower()
            elif value is None:
                value = "none"
            lines.append(f"{name}: {value}")
        return "\n".join(lines)


def properties(C: HCode) -> PropertyReport:
    return PropertyReport(
        cardinality=C.cardinality,
        min_distance=h_min_distance(C),
        self_orthogonal=is_self_orthogonal(C),
        self_dual=is_self_dual(C),
        qsd=is_qsd(C),
        nice=is_nice(C),
        lcd=is_lcd(C),
        cyclic=is_cyclic(C),
    )


# -- text format ----------------------------------------------------------


def format_hcode(C: HCode) -> str:
    lines = [f"ring: {C.ring}", f"n: {C.n}"]
    for label, X in (("Ca", C.Ca), ("Cb", C.Cb)):
        if X.k == 0:
            lines.append(f"{label}: -")
        else:
            lines.append(f"{label}:")
            lines.extend("".join(map(str, row)) for row in X.gen)
    return "\n".join(lines) + "\n"


def _header(line: str, name: str) -> str:
    prefix = f"{name}:"
    if not line.startswith(prefix):
        raise FormatError(f"expected {prefix!r}, got {line!r}")
    return line[len(prefix):].strip()


def parse_hcode(text: str) -> HCode:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 4:
        raise FormatError("HCode file needs ring, n, Ca and Cb sections")
    ring = RingId.parse(_header(lines[0], "ring"))
    try:
        n = int(_header(lines[1], "n"))
    except ValueError:
        raise FormatError(f"bad length line {lines[1]!r}") from None
    if n < 1:
        raise FormatError("length must be positive")
    pos = 2
    comps = {}
    for label, p, stop in (("Ca", 2, "Cb:"), ("Cb", 3, None)):
        if pos >= len(lines):
            raise FormatError(f"missing {label} section")
        rest = _header(lines[pos], label)
        pos += 1
        rows = []
        if rest == "-":
            pass
        elif rest:
            raise FormatError(f"unexpected text after {label}: {rest!r}")
        else:
            while pos < len(lines) and (stop is None or not lines[pos].startswith(stop)):
                rows.append(lines[pos])
                pos += 1
            if not rows:
                raise FormatError(f"{label} has no rows; write '{label}: -' for the zero code")
        comps[label] = gfcode.parse_matrix("\n".join(rows), p, n)
    if pos != len(lines):
        raise FormatError(f"trailing content: {lines[pos]!r}")
    return HCode(ring, n, comps["Ca"], comps["Cb"])


def read_hcode(path: str | Path) -> HCode:
    return parse_hcode(Path(path).read_text())


def write_hcode(path: str | Path, C: HCode) -> None:
    Path(path).write_text(format_hcode(C))


# -- brute-force twins ----------------------------------------------------

_ADD = np.array([[SYMBOLS.index(ch) for ch in row] for row in ADDITION_TABLE], dtype=np.int8)
_MUL = {
    z: np.array([[SYMBOLS.index(ch) for ch in row] for row in table], dtype=np.int8)
    for z, table in MULTIPLICATION_TABLES.items()
}


@lru_cache(maxsize=8)
def _ambient(n: int) -> np.ndarray:
    """All ``6**n`` vectors as rows of symbol indices."""
    grids = np.indices((6,) * n).reshape(n, -1).T
    return np.ascontiguousarray(grids.astype(np.int8))


def codeword_array(C: HCode) -> np.ndarray:
    """Codewords as rows of symbol indices (``u + 2v`` per coordinate)."""
    check_cap(C.cardinality, what="codeword expansion")
    xs = np.array(list(C.Ca.codewords()), dtype=np.int8).reshape(-1, C.n)
    ys = np.array(list(C.Cb.codewords()), dtype=np.int8).reshape(-1, C.n)
    return (xs[:, None, :] + 2 * ys[None, :, :]).reshape(-1, C.n)


def _ip_table(z: RingId, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    mul = _MUL[z]
    acc = np.zeros((U.shape[0], V.shape[0]), dtype=np.int8)
    for i in range(U.shape[1]):
        acc = _ADD[acc, mul[U[:, i, None], V[None, :, i]]]
    return acc


def as_word_set(rows: np.ndarray) -> frozenset:
    return frozenset(map(tuple, rows.tolist()))


def codeword_set(C: HCode) -> frozenset:
    return as_word_set(codeword_array(C))


def dual_words_bruteforce(C: HCode, cap: int | None = None) -> frozenset:
    """Every vector of ``H_z^n`` orthogonal to every codeword, as index tuples."""
    check_cap(6**C.n, cap, "ambient space scan")
    words = codeword_array(C)
    space = _ambient(C.n)
    keep = []
    block = max(1, (1 << 20) // max(1, words.shape[0]))
    for start in range(0, space.shape[0], block):
        chunk = space[start:start + block]
        ok = ~np.any(_ip_table(C.ring, chunk, words), axis=1)
        keep.append(chunk[ok])
    return as_word_set(np.concatenate(keep))


def h_dual_bruteforce(C: HCode, cap: int | None = None) -> set[HVector]:
    return {HVector(C.ring, tuple(ELEMENTS[i] for i in w)) for w in dual_words_bruteforce(C, cap)}


def is_self_orthogonal_bruteforce(C: HCode) -> bool:
    words = codeword_array(C)
    return not np.any(_ip_table(C.ring, words, words))


def is_nice_bruteforce(C: HCode, cap: int | None = None) -> bool:
    return C.cardinality * len(dual_words_bruteforce(C, cap)) == 6**C.n


def is_self_dual_bruteforce(C: HCode, cap: int | None = None) -> bool:
    return codeword_set(C) == dual_words_bruteforce(C, cap)


def is_lcd_bruteforce(C: HCode, cap: int | None = None) -> bool:
    common = codeword_set(C) & dual_words_bruteforce(C, cap)
    return common == {(0,) * C.n}


def is_cyclic_bruteforce(C: HCode) -> bool:
    words = codeword_set(C)
    return all((w[-1],) + w[:-1] in words for w in words)


def min_distance_bruteforce(C: HCode) -> int | None:
    words = codeword_array(C)
    weights = np.count_nonzero(words, axis=1)
    weights = weights[weights > 0]
    return int(weights.min()) if weights.size else None


def zero_hcode(ring: RingId, n: int) -> HCode:
    return HCode(ring, n, zero_code(2, n), zero_code(3, n))
