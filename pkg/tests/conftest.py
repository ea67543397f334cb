from __future__ import annotations

import pytest

import support
from positroids import all_decorated_permutations


@pytest.fixture(scope="session")
def dps():
    """Memoized access to the full decorated-permutation census per n."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = list(all_decorated_permutations(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def matroid_census():
    """Memoized labeled-matroid census per n (test-side oracle enumeration)."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = support.all_matroids(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def gap_sweep(dps):
    """Memoized rank-gap-1 pair sweep per n; the expensive shared pass."""
    cache: dict[int, support.GapSweep] = {}

    def get(n: int) -> support.GapSweep:
        if n not in cache:
            cache[n] = support.run_gap_sweep(n, dps(n))
        return cache[n]

    return get
