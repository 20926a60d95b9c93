"""Building-up constructions for self-orthogonal codes over H23 and H32.

Each construction takes a generating set of a self-orthogonal code of length
``n`` and returns a generating set of a self-orthogonal code of length
``n + 2`` or ``n + 3``.

The scalars ``y_i = (x, r_i)`` pair a field vector ``x`` with a ring vector
``r_i``.  Field entries act on ring elements as integer multiples
(``2*r = r + r``), so ``y_i = x_1 r_i1 + ... + x_n r_in`` in the ring.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from hexaring import gfcode, hcode
from hexaring.caps import brute_force_cap, check_cap
from hexaring.errors import PreconditionError
from hexaring.hcode import HCode
from hexaring.ring import (
    D,
    ELEMENTS,
    J_A,
    J_B,
    ZERO,
    HVector,
    RingElem,
    RingId,
    add,
    decompose,
    mul,
    neg,
    times,
)


@dataclass(frozen=True)
class GenSet:
    ring: RingId
    n: int
    rows: tuple[HVector, ...] = ()

    def __post_init__(self):
        for r in self.rows:
            if r.ring is not self.ring or len(r) != self.n:
                raise ValueError(f"row {r} does not match ring {self.ring} and length {self.n}")

    @classmethod
    def parse(cls, ring: RingId, lines: Sequence[str], n: int | None = None) -> "GenSet":
        rows = tuple(HVector.parse(ring, ln) for ln in lines if ln.strip())
        if n is None:
            if not rows:
                raise ValueError("length is required for an empty generating set")
            n = len(rows[0])
        return cls(ring, n, rows)

    def render(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def span_closure(G: GenSet) -> HCode:
    """Component form of the submodule generated by ``G``.

    Because ``3*(x, y) = (x, 0)`` and ``4*(x, y) = (0, y)``, the additive span
    of the rows already splits into the span of their binary parts and the
    span of their ternary parts.
    """
    xs, ys = [], []
    for r in G.rows:
        x, y = decompose(r)
        xs.append(x)
        ys.append(y)
    return HCode(G.ring, G.n, gfcode.rref(2, xs, G.n), gfcode.rref(3, ys, G.n))


def closure_bruteforce(G: GenSet, cap: int | None = None) -> frozenset:
    """Closure of the rows under addition and the six scalar multiplications.

    Returned as a set of symbol-index tuples, comparable with
    :func:`hexaring.hcode.codeword_set`.
    """
    limit = brute_force_cap() if cap is None else cap
    zero = (0,) * G.n
    seen = {zero}
    queue = deque([zero])
    gens = [tuple(e.index for e in r) for r in G.rows]
    add_idx = [[add(ELEMENTS[i], ELEMENTS[j]).index for j in range(6)] for i in range(6)]
    mul_idx = [[mul(G.ring, ELEMENTS[i], ELEMENTS[j]).index for j in range(6)] for i in range(6)]
    while queue:
        w = queue.popleft()
        nexts = [tuple(add_idx[a][b] for a, b in zip(w, g)) for g in gens]
        nexts += [tuple(mul_idx[s][a] for a in w) for s in range(6)]
        for v in nexts:
            if v not in seen:
                seen.add(v)
                check_cap(len(seen), limit, "span closure")
                queue.append(v)
    return frozenset(seen)


def field_dot(x: Sequence[int], r: HVector) -> RingElem:
    """``x_1 r_1 + ... + x_n r_n`` with integer entries of ``x`` acting by repeated addition."""
    total = ZERO
    for xi, ri in zip(x, r.entries):
        total = add(total, times(xi, ri))
    return total


def _scaled(s: RingElem, x: Sequence[int]) -> tuple[RingElem, ...]:
    return tuple(times(xi, s) for xi in x)


def _require_so(G: GenSet) -> None:
    C = span_closure(G)
    if C.cardinality <= brute_force_cap():
        ok = hcode.is_self_orthogonal_bruteforce(C)
    else:
        ok = hcode.is_self_orthogonal(C)
    if not ok:
        raise PreconditionError("the input generating set does not span a self-orthogonal code")


def _check_common(C0: GenSet, ring: RingId, x: Sequence[int], p: int, validate: bool) -> None:
    if C0.ring is not ring:
        raise PreconditionError(f"this construction needs a code over {ring}, got {C0.ring}")
    if len(x) != C0.n:
        raise PreconditionError(f"x has length {len(x)}, code length is {C0.n}")
    if any(not 0 <= xi < p for xi in x):
        raise PreconditionError(f"x must have entries in GF({p})")
    if validate:
        _require_so(C0)


def build_h23_plus2(C0: GenSet, x: Sequence[int], alpha: RingElem, validate: bool = True) -> GenSet:
    """Length ``n + 2`` rows ``(alpha, 0, alpha x)`` and ``(y_i, y_i, r_i)``.

    Requires a binary ``x`` of odd weight and ``alpha`` in ``{0, a}``.  With
    ``validate=False`` the hypotheses are not checked, which is only useful
    to demonstrate what goes wrong without them.
    """
    x = tuple(x)
    _check_common(C0, RingId.H23, x, 2, validate)
    if validate:
        if sum(x) % 2 != 1:
            raise PreconditionError("x must have odd Hamming weight")
        if alpha not in J_A:
            raise PreconditionError(f"alpha must lie in J_a = {{0, a}}, got {alpha}")
    rows = [HVector(RingId.H23, (alpha, ZERO) + _scaled(alpha, x))]
    for r in C0.rows:
        y = field_dot(x, r)
        rows.append(HVector(RingId.H23, (y, y) + r.entries))
    return GenSet(RingId.H23, C0.n + 2, tuple(rows))


def build_h23_plus3(C0: GenSet, x: Sequence[int], beta: RingElem, validate: bool = True) -> GenSet:
    """Length ``n + 3``: three rows carrying ``beta`` and ``beta x``, then ``(2y_i, 2y_i, 2y_i, r_i)``."""
    x = tuple(x)
    _check_common(C0, RingId.H23, x, 3, validate)
    if validate and beta not in J_B:
        raise PreconditionError(f"beta must lie in J_b = {{0, b, d}}, got {beta}")
    bx = _scaled(beta, x)
    rows = []
    for pos in range(3):
        lead = [ZERO, ZERO, ZERO]
        lead[pos] = beta
        rows.append(HVector(RingId.H23, tuple(lead) + bx))
    for r in C0.rows:
        y2 = times(2, field_dot(x, r))
        rows.append(HVector(RingId.H23, (y2, y2, y2) + r.entries))
    return GenSet(RingId.H23, C0.n + 3, tuple(rows))


def h32_case(x: Sequence[int], alpha: RingElem, beta: RingElem, gamma: RingElem) -> str | None:
    """Which hypothesis of the H32 construction holds: ``"i"``, ``"ii"`` or ``None``."""
    z = RingId.H32
    xx = sum(xi * xi for xi in x) % 3
    sq_ab = add(mul(z, alpha, alpha), mul(z, beta, beta))
    sq_c = mul(z, gamma, gamma)
    if xx == 1 and add(sq_ab, sq_c) == ZERO:
        return "i"
    if xx == 2 and add(sq_ab, neg(sq_c)) == ZERO:
        return "ii"
    return None


def build_h32_plus3(
    C0: GenSet,
    x: Sequence[int],
    alpha: RingElem,
    beta: RingElem,
    gamma: RingElem,
    validate: bool = True,
) -> GenSet:
    """Length ``n + 3`` rows ``(alpha, beta, 0, gamma x)`` and ``(y_i, y_i, y_i, r_i)``.

    Needs ``alpha + beta + gamma = 0`` and either ``(x, x) = 1`` with
    ``alpha^2 + beta^2 + gamma^2 = 0`` or ``(x, x) = -1`` with
    ``alpha^2 + beta^2 - gamma^2 = 0``, all squares taken in H32.
    """
    x = tuple(x)
    _check_common(C0, RingId.H32, x, 3, validate)
    if validate:
        if add(add(alpha, beta), gamma) != ZERO:
            raise PreconditionError("alpha + beta + gamma must be 0")
        if h32_case(x, alpha, beta, gamma) is None:
            raise PreconditionError("neither (x,x)=1 with a^2+b^2+c^2=0 nor (x,x)=-1 with a^2+b^2-c^2=0 holds")
    rows = [HVector(RingId.H32, (alpha, beta, ZERO) + _scaled(gamma, x))]
    for r in C0.rows:
        y = field_dot(x, r)
        rows.append(HVector(RingId.H32, (y, y, y) + r.entries))
    return GenSet(RingId.H32, C0.n + 3, tuple(rows))


CONSTRUCTIONS = {
    "h23+2": build_h23_plus2,
    "h23+3": build_h23_plus3,
    "h32+3": build_h32_plus3,
}

__all__ = [
    "CONSTRUCTIONS",
    "D",
    "GenSet",
    "build_h23_plus2",
    "build_h23_plus3",
    "build_h32_plus3",
    "closure_bruteforce",
    "field_dot",
    "h32_case",
    "span_closure",
]
