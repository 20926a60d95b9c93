"""Classification of self-orthogonal H23- and H32-codes up to permutation.

A self-orthogonal code ``a Ca + b Cb`` is fixed by a pair of component codes.
For a fixed pair of inequivalent components, the inequivalent codes are
``a Ca + b s(Cb)`` with ``s`` running over double coset representatives of
``Aut(Ca) \\ S_n / Aut(Cb)``.  The lists ``L_a`` and ``L_b`` hold one
representative per component class; summing over ``L_a x L_b`` gives the
table counts.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, TextIO

import numpy as np

from hexaring import gfcode, kernels
from hexaring.caps import check_degree
from hexaring.errors import CapExceededError, PreconditionError
from hexaring.gfcode import GFCode
from hexaring.hcode import HCode, write_hcode
from hexaring.permgroup import factorial, perm_table
from hexaring.ring import RingId

LONG_RUN_LENGTH = 7
PROGRESS_INTERVAL = 5.0


@dataclass(frozen=True)
class ClassificationRow:
    ring: RingId
    n: int
    ka: int
    kb: int
    la_count: int
    lb_count: int
    code_count: int
    qsd: bool

    def machine_line(self) -> str:
        remark = "QSD" if self.qsd else "-"
        return f"{self.ring.z} {self.n} {self.ka} {self.kb} {self.la_count} {self.lb_count} {self.code_count} {remark}"


@dataclass(frozen=True)
class ClassifiedFamily:
    row: ClassificationRow
    codes: tuple[HCode, ...] = ()
    pair_counts: dict = field(default_factory=dict, compare=False)


class BudgetExhausted(Exception):
    """Raised by :func:`report_table` when the time budget runs out; ``rows`` holds the finished rows."""

    def __init__(self, rows: list[ClassificationRow]):
        super().__init__(f"time budget exhausted after {len(rows)} rows")
        self.rows = rows


def component_fields(z: RingId) -> tuple[bool, bool]:
    """Which components must be self-orthogonal: ``(binary, ternary)``."""
    return (True, False) if z is RingId.H23 else (False, True)


@lru_cache(maxsize=None)
def class_keys(p: int, n: int, k: int, self_orthogonal: bool) -> tuple[int, ...]:
    """Sorted canonical keys of the permutation classes of ``[n, k]`` codes over GF(p)."""
    filt = "self_orthogonal" if self_orthogonal else "all"
    return tuple(gfcode.canonical_keys(p, n, k, gfcode.enumerate_keys(p, n, k, filt)))


def list_La(z: RingId, n: int, ka: int) -> list[GFCode]:
    """Inequivalent binary ``[n, ka]`` codes, self-orthogonal ones only for H23."""
    z = RingId.parse(z)
    keys = class_keys(2, n, ka, component_fields(z)[0])
    return [GFCode.from_key(2, n, ka, key) for key in keys]


def list_Lb(z: RingId, n: int, kb: int) -> list[GFCode]:
    """Inequivalent ternary ``[n, kb]`` codes, self-orthogonal ones only for H32."""
    z = RingId.parse(z)
    keys = class_keys(3, n, kb, component_fields(z)[1])
    return [GFCode.from_key(3, n, kb, key) for key in keys]


def is_qsd_shape(n: int, ka: int, kb: int) -> bool:
    return 2 * ka == n and 2 * kb == n


@lru_cache(maxsize=4096)
def _aut(p: int, n: int, k: int, key: int) -> np.ndarray:
    table = perm_table(n)
    return np.ascontiguousarray(table[kernels.stabilizer(key, n, k, p, table)])


def _pair_sdr(n: int, ka: int, kb: int, key_a: int, key_b: int) -> tuple[list[int], list[int]]:
    ranks, sizes = kernels.double_cosets(_aut(2, n, ka, key_a), _aut(3, n, kb, key_b), n)
    if sum(sizes) != factorial(n):
        raise AssertionError(f"double cosets cover {sum(sizes)} of {factorial(n)} permutations")
    return list(ranks), list(sizes)


def _pair_task(args):
    i, j, n, ka, kb, key_a, key_b, want_reps = args
    ranks, _ = _pair_sdr(n, ka, kb, key_a, key_b)
    return i, j, len(ranks), (ranks if want_reps else None)


def _check_components(z: RingId, Ca: GFCode, Cb: GFCode) -> None:
    need_a, need_b = component_fields(z)
    if Ca.n != Cb.n:
        raise PreconditionError("components have different lengths")
    if need_a and not gfcode.is_self_orthogonal(Ca):
        raise PreconditionError("Ca must be self-orthogonal over H23")
    if need_b and not gfcode.is_self_orthogonal(Cb):
        raise PreconditionError("Cb must be self-orthogonal over H32")


def sdr_family(z: RingId, Ca: GFCode, Cb: GFCode) -> list[HCode]:
    """The codes ``a Ca + b s(Cb)``, one per double coset of ``Aut(Ca) \\ S_n / Aut(Cb)``."""
    z = RingId.parse(z)
    _check_components(z, Ca, Cb)
    n = Ca.n
    check_degree(n)
    ranks, _ = _pair_sdr(n, Ca.k, Cb.k, Ca.key, Cb.key)
    return [HCode(z, n, Ca, gfcode.permute(Cb, kernels.perm_unrank(r, n))) for r in ranks]


def _read_checkpoint(path: Path) -> dict[tuple[int, int], int]:
    done = {}
    if path.exists():
        for line in path.read_text().splitlines():
            parts = line.split()
            if len(parts) == 3:
                i, j, c = map(int, parts)
                done[(i, j)] = c
    return done


def _canonical_pair(C: HCode) -> tuple[int, int]:
    return kernels.pair_max(C.Ca.key, C.ka, C.Cb.key, C.kb, C.n, perm_table(C.n))


def classify(
    z: RingId,
    n: int,
    ka: int,
    kb: int,
    jobs: int = 1,
    keep_codes: bool = True,
    checkpoint: str | Path | None = None,
    allow_long: bool = False,
    progress: TextIO | None = None,
) -> ClassifiedFamily:
    """Every inequivalent self-orthogonal code with component dimensions ``(ka, kb)``.

    With ``keep_codes`` the codes are returned sorted by their canonical
    form, and the canonical forms are checked to be pairwise distinct.
    A checkpoint file records finished pairs as ``ca_index cb_index count``
    lines; completed pairs are skipped on resume when codes are not kept.
    """
    z = RingId.parse(z)
    check_degree(n)
    if not (0 <= ka <= n and 0 <= kb <= n):
        raise ValueError(f"dimensions ({ka},{kb}) out of range for length {n}")
    if n >= LONG_RUN_LENGTH and not allow_long:
        raise CapExceededError(f"length {n} is a long run; pass allow_long to proceed")
    La = class_keys(2, n, ka, component_fields(z)[0])
    Lb = class_keys(3, n, kb, component_fields(z)[1])

    ckpt = Path(checkpoint) if checkpoint else None
    done = _read_checkpoint(ckpt) if ckpt else {}
    if keep_codes:
        done = {}
    tasks = [
        (i, j, n, ka, kb, key_a, key_b, keep_codes)
        for i, key_a in enumerate(La)
        for j, key_b in enumerate(Lb)
        if (i, j) not in done
    ]
    counts = dict(done)
    reps: dict[tuple[int, int], list[int]] = {}
    out = open(ckpt, "a") if ckpt else None
    last = time.monotonic()
    try:
        if jobs > 1 and len(tasks) > 1:
            pool = ProcessPoolExecutor(max_workers=jobs)
            results: Iterable = pool.map(_pair_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))
        else:
            pool = None
            results = map(_pair_task, tasks)
        for finished, (i, j, count, ranks) in enumerate(results, 1):
            counts[(i, j)] = count
            if ranks is not None:
                reps[(i, j)] = ranks
            if out:
                out.write(f"{i} {j} {count}\n")
                out.flush()
            if progress and time.monotonic() - last >= PROGRESS_INTERVAL:
                last = time.monotonic()
                print(f"[{z} n={n} ({ka},{kb})] {finished}/{len(tasks)} pairs", file=progress, flush=True)
        if pool:
            pool.shutdown()
    finally:
        if out:
            out.close()

    row = ClassificationRow(z, n, ka, kb, len(La), len(Lb), sum(counts.values()), is_qsd_shape(n, ka, kb))
    codes: tuple[HCode, ...] = ()
    if keep_codes:
        found = []
        for (i, j), ranks in sorted(reps.items()):
            Ca = GFCode.from_key(2, n, ka, La[i])
            Cb = GFCode.from_key(3, n, kb, Lb[j])
            found.extend(HCode(z, n, Ca, gfcode.permute(Cb, kernels.perm_unrank(r, n))) for r in ranks)
        keyed = sorted(((_canonical_pair(C), C) for C in found), key=lambda t: t[0])
        if len({k for k, _ in keyed}) != len(keyed):
            raise AssertionError("classification produced two equivalent codes")
        codes = tuple(C for _, C in keyed)
    return ClassifiedFamily(row, codes, counts)


def edge_rows(z: RingId, n: int) -> list[ClassificationRow]:
    """Rows with a zero or full component, counted by the single-field classes.

    H23: ``(0, n)`` is ``b GF(3)^n``; ``(0, kb)`` counts ternary ``[n, kb]``
    classes; ``(ka, 0)`` and ``(ka, n)`` count binary self-orthogonal classes.
    H32: ``(n, 0)`` is ``a GF(2)^n``; ``(0, kb)`` and ``(n, kb)`` count ternary
    self-orthogonal classes; ``(ka, 0)`` counts binary ``[n, ka]`` classes.
    Rows with no codes are left out.
    """
    z = RingId.parse(z)
    rows = []

    def add(ka, kb, la, lb):
        if la and lb:
            rows.append(ClassificationRow(z, n, ka, kb, la, lb, la * lb, is_qsd_shape(n, ka, kb)))

    if z is RingId.H23:
        for kb in range(1, n + 1):
            add(0, kb, 1, len(class_keys(3, n, kb, False)))
        for ka in range(1, n + 1):
            so = len(class_keys(2, n, ka, True))
            add(ka, 0, so, 1)
            add(ka, n, so, 1)
    else:
        for ka in range(1, n + 1):
            add(ka, 0, len(class_keys(2, n, ka, False)), 1)
        for kb in range(1, n + 1):
            so = len(class_keys(3, n, kb, True))
            add(0, kb, 1, so)
            add(n, kb, 1, so)
    return sorted(rows, key=lambda r: table_order(z, r.ka, r.kb))


def table_order(z: RingId, ka: int, kb: int) -> tuple[int, int]:
    return (ka, kb) if z is RingId.H23 else (kb, ka)


def table_shapes(z: RingId, n: int) -> list[tuple[int, int]]:
    """The ``(ka, kb)`` shapes printed in the tables, with both lists non-empty."""
    z = RingId.parse(z)
    shapes = []
    for ka in range(1, n + 1):
        for kb in range(1, n + 1):
            if z is RingId.H23 and kb == n or z is RingId.H32 and ka == n:
                continue
            if class_keys(2, n, ka, z is RingId.H23) and class_keys(3, n, kb, z is RingId.H32):
                shapes.append((ka, kb))
    return sorted(shapes, key=lambda s: table_order(z, *s))


def report_table(
    z: RingId,
    n_max: int,
    n_min: int = 2,
    budget: float | None = None,
    jobs: int = 1,
    allow_long: bool = False,
    progress: TextIO | None = None,
    on_row: Callable[[ClassificationRow], None] | None = None,
) -> list[ClassificationRow]:
    """All table rows for ``n_min <= n <= n_max`` in the printed order.

    ``budget`` is a wall-clock limit in seconds, checked before each row.
    """
    z = RingId.parse(z)
    start = time.monotonic()
    rows: list[ClassificationRow] = []
    for n in range(n_min, n_max + 1):
        if n >= LONG_RUN_LENGTH and not allow_long:
            raise CapExceededError(f"length {n} is a long run; pass allow_long to proceed")
        for ka, kb in table_shapes(z, n):
            if budget is not None and time.monotonic() - start > budget:
                raise BudgetExhausted(rows)
            fam = classify(z, n, ka, kb, jobs=jobs, keep_codes=False, allow_long=allow_long, progress=progress)
            rows.append(fam.row)
            if on_row:
                on_row(fam.row)
    return rows


def render_rows(rows: Iterable[ClassificationRow]) -> str:
    """Aligned text table with the columns n, (ka,kb), |L_a|, |L_b|, #Codes, Remark."""
    header = ("n", "(ka,kb)", "|L_a|", "|L_b|", "#Codes", "Remark")
    body = [
        (str(r.n), f"({r.ka},{r.kb})", str(r.la_count), str(r.lb_count), str(r.code_count), "QSD" if r.qsd else "")
        for r in rows
    ]
    widths = [max(len(line[c]) for line in [header, *body]) for c in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() for line in [header, *body]]
    return "\n".join(lines)


def emit_codes(family: ClassifiedFamily, directory: str | Path) -> list[Path]:
    """Write each code of ``family`` as an HCode file named by its index."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for idx, C in enumerate(family.codes, 1):
        path = d / f"code_{idx:05d}.hcode"
        write_hcode(path, C)
        paths.append(path)
    return paths


def progress_stream(enabled: bool) -> TextIO | None:
    return sys.stderr if enabled else None
