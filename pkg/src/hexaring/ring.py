"""Arithmetic in the two non-unital rings of order 6, H23 and H32.

Every element is stored as a pair ``(u, v)`` with ``u`` a residue mod 2 (the
coefficient of ``a``) and ``v`` a residue mod 3 (the coefficient of ``b``), so
that ``r = u*a + v*b``.  Addition is componentwise in both rings.  In H23 the
product keeps only the ``a`` part (``a*a = a``, ``b*b = 0``); in H32 it keeps
only the ``b`` part (``a*a = 0``, ``b*b = b``).

The operation tables are kept verbatim as strings and serve as ground truth:
:func:`verify_tables` checks the closed-form arithmetic against them, and the
additive inverse is read off the addition table.
"""

from __future__ import annotations

import enum
from itertools import product
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from hexaring.errors import FormatError

SYMBOLS = "0abcde"


class RingId(enum.Enum):
    H23 = "H23"
    H32 = "H32"

    @property
    def z(self) -> int:
        return 23 if self is RingId.H23 else 32

    @classmethod
    def parse(cls, text: "str | RingId") -> "RingId":
        if isinstance(text, cls):
            return text
        key = str(text).strip().upper()
        if key in ("23", "32"):
            key = "H" + key
        try:
            return cls(key)
        except ValueError:
            raise FormatError(f"unknown ring {text!r}; expected H23 or H32") from None

    def __str__(self) -> str:
        return self.value


class RingElem(NamedTuple):
    u: int
    v: int

    @property
    def index(self) -> int:
        """Position of the element in the symbol order ``0,a,b,c,d,e``."""
        return self.u + 2 * self.v

    @property
    def symbol(self) -> str:
        return SYMBOLS[self.index]

    @classmethod
    def from_symbol(cls, sym: str) -> "RingElem":
        idx = SYMBOLS.find(sym)
        if idx < 0 or len(sym) != 1:
            raise FormatError(f"invalid ring symbol {sym!r}")
        return ELEMENTS[idx]

    def __str__(self) -> str:
        return self.symbol

    def __repr__(self) -> str:
        return f"RingElem({self.symbol})"


ELEMENTS: tuple[RingElem, ...] = tuple(RingElem(i % 2, i // 2) for i in range(6))
ZERO, A, B, C, D, E = ELEMENTS
J_A: tuple[RingElem, ...] = (ZERO, A)
J_B: tuple[RingElem, ...] = (ZERO, B, D)

# Rows and columns in the order 0,a,b,c,d,e.
ADDITION_TABLE = (
    "0abcde",
    "a0cbed",
    "bcde0a",
    "cbeda0",
    "de0abc",
    "eda0cb",
)
MULTIPLICATION_TABLES = {
    RingId.H23: (
        "000000",
        "0a0a0a",
        "000000",
        "0a0a0a",
        "000000",
        "0a0a0a",
    ),
    RingId.H32: (
        "000000",
        "000000",
        "00bbdd",
        "00bbdd",
        "00ddbb",
        "00ddbb",
    ),
}


def _table_lookup(table: Sequence[str], r: RingElem, s: RingElem) -> RingElem:
    return RingElem.from_symbol(table[r.index][s.index])


def table_add(r: RingElem, s: RingElem) -> RingElem:
    return _table_lookup(ADDITION_TABLE, r, s)


def table_mul(z: RingId, r: RingElem, s: RingElem) -> RingElem:
    return _table_lookup(MULTIPLICATION_TABLES[z], r, s)


def add(r: RingElem, s: RingElem) -> RingElem:
    return ELEMENTS[(r.u ^ s.u) + 2 * ((r.v + s.v) % 3)]


def _scan_negation() -> dict[RingElem, RingElem]:
    neg_of = {}
    for r in ELEMENTS:
        row = ADDITION_TABLE[r.index]
        neg_of[r] = ELEMENTS[row.index("0")]
    return neg_of


_NEG = _scan_negation()


def neg(r: RingElem) -> RingElem:
    return _NEG[r]


def sub(r: RingElem, s: RingElem) -> RingElem:
    return add(r, neg(s))


def mul(z: RingId, r: RingElem, s: RingElem) -> RingElem:
    if z is RingId.H23:
        return ELEMENTS[r.u & s.u]
    return ELEMENTS[2 * ((r.v * s.v) % 3)]


def times(m: int, r: RingElem) -> RingElem:
    """``r`` added to itself ``m`` times (the integer action on the ring)."""
    return ELEMENTS[(m * r.u) % 2 + 2 * ((m * r.v) % 3)]


def verify_tables() -> int:
    """Compare the closed-form operations with the printed tables.

    Returns the number of entries checked; raises ``AssertionError`` on the
    first disagreement.
    """
    checked = 0
    for r in ELEMENTS:
        for s in ELEMENTS:
            got, want = add(r, s), table_add(r, s)
            assert got == want, f"{r}+{s}: closed form {got}, table {want}"
            checked += 1
            for z in RingId:
                got, want = mul(z, r, s), table_mul(z, r, s)
                assert got == want, f"{z}: {r}*{s}: closed form {got}, table {want}"
                checked += 1
    return checked


def render_table(z: RingId | None) -> str:
    """Text rendering of the addition table (``z=None``) or a multiplication table."""
    rows = ADDITION_TABLE if z is None else MULTIPLICATION_TABLES[z]
    op = "+" if z is None else "*"
    lines = [f"{op} | " + " ".join(SYMBOLS), "--+" + "-" * 12]
    for i, row in enumerate(rows):
        lines.append(f"{SYMBOLS[i]} | " + " ".join(row))
    return "\n".join(lines)


@dataclass(frozen=True)
class HVector:
    ring: RingId
    entries: tuple[RingElem, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ValueError("HVector must have length >= 1")
        for x in self.entries:
            if not isinstance(x, RingElem) or x not in ELEMENTS:
                raise ValueError(f"invalid ring element {x!r}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "".join(x.symbol for x in self.entries)

    @classmethod
    def parse(cls, ring: RingId, text: str) -> "HVector":
        """Accept ``"aa0b"`` as well as ``"(a, a, 0, b)"`` or ``"a a 0 b"``."""
        text = "".join(ch for ch in text if ch not in "(), \t")
        if not text:
            raise FormatError("empty vector")
        return cls(ring, tuple(RingElem.from_symbol(ch) for ch in text))

    def __add__(self, other: "HVector") -> "HVector":
        _check_pair(self, other)
        return HVector(self.ring, tuple(add(x, y) for x, y in zip(self.entries, other.entries)))

    def scale(self, r: RingElem) -> "HVector":
        return HVector(self.ring, tuple(mul(self.ring, r, x) for x in self.entries))


def _check_pair(u: HVector, v: HVector) -> None:
    if u.ring is not v.ring:
        raise ValueError(f"ring mismatch: {u.ring} vs {v.ring}")
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")


def embed(x: Sequence[int], y: Sequence[int], ring: RingId = RingId.H23) -> HVector:
    """The vector ``a*x + b*y`` for binary ``x`` and ternary ``y``."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return HVector(ring, tuple(ELEMENTS[(xi % 2) + 2 * (yi % 3)] for xi, yi in zip(x, y)))


def decompose(w: HVector) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(e.u for e in w.entries), tuple(e.v for e in w.entries)


def inner_product(z: RingId, u: HVector, v: HVector) -> RingElem:
    if u.ring is not z or v.ring is not z:
        raise ValueError(f"vectors must be over {z}")
    _check_pair(u, v)
    total = ZERO
    for x, y in zip(u.entries, v.entries):
        total = add(total, mul(z, x, y))
    return total


def vectors(ring: RingId, n: int) -> Iterable[HVector]:
    """All ``6**n`` vectors of length ``n`` in lexicographic symbol order."""
    for combo in product(ELEMENTS, repeat=n):
        yield HVector(ring, combo)
