import os
import subprocess
import sys

import numpy as np
import pytest

from hexaring import kernels
from hexaring.permgroup import perm_table

BACKENDS = kernels.backends()
py = BACKENDS["python"]
needs_c = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")


def random_key(rng, n, k, p):
    rows = [[rng.randrange(p) for _ in range(n)] for _ in range(k)]
    full = py.rref_rows([py.pack_row(r) for r in rows], n, p)
    return len(full), py.pack_key(full, n)


def test_pack_round_trip(rng):
    for _ in range(200):
        n = rng.randint(1, 8)
        row = [rng.randrange(3) for _ in range(n)]
        assert py.unpack_row(py.pack_row(row), n) == row


def test_perm_rank_round_trip():
    for r in range(120):
        assert py.perm_rank(py.perm_unrank(r, 5)) == r


@needs_c
def test_backends_agree(rng):
    c = BACKENDS["cython"]
    for _ in range(60):
        n = rng.randint(1, 5)
        p = rng.choice((2, 3))
        k, key = random_key(rng, n, rng.randint(0, n), p)
        table = perm_table(n)
        perm = tuple(rng.sample(range(n), n))
        assert c.permute_key(key, n, k, p, perm) == py.permute_key(key, n, k, p, perm)
        gens = table[[rng.randrange(len(table)) for _ in range(2)]]
        assert sorted(c.orbit(key, n, k, p, gens)) == sorted(py.orbit(key, n, k, p, gens))
        assert list(c.stabilizer(key, n, k, p, table)) == list(py.stabilizer(key, n, k, p, table))
        assert bool(c.is_self_orthogonal_key(key, n, k, p)) == py.is_self_orthogonal_key(key, n, k, p)
        rows = py.unpack_key(key, n, k)
        assert list(c.rref_rows(rows, n, p)) == list(py.rref_rows(rows, n, p))
        kb, keyb = random_key(rng, n, rng.randint(0, n), 3)
        ka, keya = random_key(rng, n, rng.randint(0, n), 2)
        assert tuple(c.pair_max(keya, ka, keyb, kb, n, table)) == tuple(py.pair_max(keya, ka, keyb, kb, n, table))
        g1 = table[py.stabilizer(keya, n, ka, 2, table)]
        g2 = table[py.stabilizer(keyb, n, kb, 3, table)]
        cr, cs = c.double_cosets(np.ascontiguousarray(g1), np.ascontiguousarray(g2), n)
        pr, ps = py.double_cosets(g1, g2, n)
        assert list(cr) == list(pr) and list(cs) == list(ps)
        assert c.perm_rank(perm) == py.perm_rank(perm)


@needs_c
@pytest.mark.parametrize("n,k,p,so", [(4, 2, 3, False), (5, 2, 2, True), (5, 3, 3, False), (6, 2, 3, True)])
def test_enumeration_agrees(n, k, p, so):
    c = BACKENDS["cython"]
    assert sorted(c.enumerate_rref(n, k, p, so)) == sorted(py.enumerate_rref(n, k, p, so))


def test_pure_python_fallback():
    env = dict(os.environ, HEXARING_PURE_PYTHON="1")
    code = "from hexaring import kernels, classify; print(kernels.BACKEND, classify.classify('h23', 3, 1, 1).row.code_count)"
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert res.stdout.split() == ["python", "9"]


def test_default_backend():
    want = "cython" if "cython" in BACKENDS else "python"
    if os.environ.get("HEXARING_PURE_PYTHON") == "1":
        want = "python"
    assert kernels.BACKEND == want
