from itertools import product

import pytest
from hypothesis import given, strategies as st

from hexaring import ring
from hexaring.errors import FormatError
from hexaring.ring import (
    A, B, C, D, E, ELEMENTS, ZERO, HVector, RingElem, RingId,
    add, decompose, embed, inner_product, mul, neg, sub, times,
)

RINGS = list(RingId)
elems = st.sampled_from(ELEMENTS)


def sym(s):
    return RingElem.from_symbol(s)


def vec(z, text):
    return HVector.parse(z, text)


def test_symbols_match_pairs():
    assert [(e.u, e.v) for e in ELEMENTS] == [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)]
    assert "".join(e.symbol for e in ELEMENTS) == "0abcde"
    assert C == add(A, B) and D == times(2, B) and E == add(A, times(2, B))


def test_add_examples():
    assert add(A, B) == C
    assert add(ZERO, E) == E
    assert add(D, D) == B


def test_neg_examples():
    assert neg(ZERO) == ZERO
    assert neg(A) == A
    assert neg(B) == D
    for r in ELEMENTS:
        assert add(r, neg(r)) == ZERO
        assert sub(r, r) == ZERO


def test_mul_examples():
    assert mul(RingId.H23, C, E) == A
    assert mul(RingId.H32, D, D) == B
    for z in RINGS:
        for r in ELEMENTS:
            assert mul(z, r, ZERO) == ZERO


def test_tables_match_closed_form():
    assert ring.verify_tables() == 36 + 72


@pytest.mark.parametrize("z", RINGS)
def test_ring_axioms(z):
    for r, s in product(ELEMENTS, repeat=2):
        assert add(r, s) == add(s, r)
        assert mul(z, r, s) == mul(z, s, r)
    for r, s, t in product(ELEMENTS, repeat=3):
        assert add(add(r, s), t) == add(r, add(s, t))
        assert mul(z, mul(z, r, s), t) == mul(z, r, mul(z, s, t))
        assert mul(z, r, add(s, t)) == add(mul(z, r, s), mul(z, r, t))


@pytest.mark.parametrize("z", RINGS)
def test_no_identity(z):
    for cand in ELEMENTS:
        assert any(mul(z, cand, r) != r for r in ELEMENTS)


def test_presentation_relations():
    h23, h32 = RingId.H23, RingId.H32
    assert mul(h23, A, A) == A and mul(h23, B, B) == ZERO and mul(h23, A, B) == ZERO
    assert times(2, A) == ZERO and times(3, B) == ZERO
    assert mul(h32, A, A) == ZERO and mul(h32, B, B) == B and mul(h32, A, B) == ZERO


def test_embed_examples():
    assert str(embed((1, 1), (0, 0))) == "aa"
    assert str(embed((0, 0), (2, 1))) == "db"
    assert str(embed((1, 0), (1, 0))) == "c0"
    with pytest.raises(ValueError):
        embed((1,), (0, 0))


def test_decompose_examples():
    assert decompose(vec(RingId.H23, "00")) == ((0, 0), (0, 0))
    assert decompose(vec(RingId.H23, "eb")) == ((1, 0), (2, 1))
    assert decompose(vec(RingId.H23, "cc")) == ((1, 1), (1, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_embed_decompose_bijection(n):
    seen = set()
    for w in ring.vectors(RingId.H23, n):
        x, y = decompose(w)
        assert embed(x, y) == w
        seen.add((x, y))
    assert len(seen) == 6**n


def test_inner_product_examples():
    assert inner_product(RingId.H23, vec(RingId.H23, "aa"), vec(RingId.H23, "aa")) == ZERO
    assert inner_product(RingId.H23, vec(RingId.H23, "b0"), vec(RingId.H23, "b0")) == ZERO
    assert inner_product(RingId.H32, vec(RingId.H32, "bbb"), vec(RingId.H32, "bbb")) == ZERO
    with pytest.raises(ValueError):
        inner_product(RingId.H23, vec(RingId.H23, "a"), vec(RingId.H23, "aa"))
    with pytest.raises(ValueError):
        inner_product(RingId.H23, vec(RingId.H23, "a"), vec(RingId.H32, "a"))


def closed_form_ip(z, u, v):
    xu, yu = decompose(u)
    xv, yv = decompose(v)
    if z is RingId.H23:
        return times(sum(p * q for p, q in zip(xu, xv)) % 2, A)
    return times(sum(p * q for p, q in zip(yu, yv)) % 3, B)


@pytest.mark.parametrize("z", RINGS)
def test_inner_product_closed_form_exhaustive(z):
    for n in (1, 2):
        vs = list(ring.vectors(z, n))
        for u, v in product(vs, repeat=2):
            assert inner_product(z, u, v) == closed_form_ip(z, u, v)


@given(z=st.sampled_from(RINGS), data=st.data())
def test_inner_product_closed_form_random(z, data):
    n = data.draw(st.integers(1, 8))
    u = HVector(z, tuple(data.draw(st.lists(elems, min_size=n, max_size=n))))
    v = HVector(z, tuple(data.draw(st.lists(elems, min_size=n, max_size=n))))
    assert inner_product(z, u, v) == closed_form_ip(z, u, v)


def test_inner_product_random_bulk(rng):
    for _ in range(1000):
        z = rng.choice(RINGS)
        n = rng.randint(1, 8)
        u = HVector(z, tuple(rng.choice(ELEMENTS) for _ in range(n)))
        v = HVector(z, tuple(rng.choice(ELEMENTS) for _ in range(n)))
        assert inner_product(z, u, v) == closed_form_ip(z, u, v)


def test_vector_text():
    v = vec(RingId.H23, "a0a0")
    assert str(v) == "a0a0"
    assert vec(RingId.H23, "(a, 0, a, 0)") == v
    with pytest.raises(FormatError):
        vec(RingId.H23, "a0x0")
    with pytest.raises(FormatError):
        vec(RingId.H23, "")


def test_ring_parse():
    assert RingId.parse("h23") is RingId.H23
    assert RingId.parse("32") is RingId.H32
    assert RingId.parse(RingId.H32) is RingId.H32
    with pytest.raises(FormatError):
        RingId.parse("H24")


@given(elems, st.integers(0, 12))
def test_times_is_repeated_addition(r, m):
    total = ZERO
    for _ in range(m):
        total = add(total, r)
    assert times(m, r) == total
