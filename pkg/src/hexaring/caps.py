"""Size limits for exhaustive computations.

``HEXARING_CAP`` in the environment overrides the brute-force cap (the number
of ambient vectors or generated codewords a definitional oracle may visit).
"""

from __future__ import annotations

import os

from hexaring.errors import CapExceededError

DEFAULT_BRUTE_FORCE_CAP = 6**6
DEFAULT_SUBSPACE_CAP = 2_000_000
MAX_DEGREE = 8


def brute_force_cap() -> int:
    raw = os.environ.get("HEXARING_CAP")
    if raw is None:
        return DEFAULT_BRUTE_FORCE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"HEXARING_CAP must be an integer, got {raw!r}") from None


def check_cap(size: int, cap: int | None = None, what: str = "brute-force search") -> None:
    limit = brute_force_cap() if cap is None else cap
    if size > limit:
        raise CapExceededError(f"{what} needs {size} items, cap is {limit}")


def check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise CapExceededError(f"degree {n} exceeds the symmetric-group cap {MAX_DEGREE}")
