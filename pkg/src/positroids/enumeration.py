"""Exhaustive generators at desk scale: decorated permutations, positroids,
lattice path matroids, and elementary flag positroid pairs.

Every generator is deterministic (canonical lexicographic order) and lazy.
The default bounds keep full enumeration instant to a few minutes; callers
may raise them explicitly, which the CLI does only with a loud warning.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .decorated import COLOOP, LOOP, DecoratedPermutation
from .lpm import Lpm, lpm_bases
from .matroids import Matroid, positroid_of
from .quotients import is_quotient_rank, recover_shift_set

DEFAULT_MAX_N = 8
FLAG_PAIR_MAX_N = 6


def _check_bound(n: int, max_n: Optional[int], default: int, what: str) -> None:
    bound = default if max_n is None else max_n
    if not 1 <= n <= bound:
        raise ValueError(f"{what} enumeration supports 1 <= n <= {bound}, got n={n}")


def all_decorated_permutations(n: int, max_n: Optional[int] = None) -> Iterator[DecoratedPermutation]:
    """Every decorated permutation of [n] exactly once, in lexicographic
    order of (perm, col); each fixed point carries either decoration."""
    _check_bound(n, max_n, DEFAULT_MAX_N, "decorated permutation")
    for perm in itertools.permutations(range(1, n + 1)):
        fixed = [i for i in range(n) if perm[i] == i + 1]
        for decorations in itertools.product((COLOOP, LOOP), repeat=len(fixed)):
            col = [0] * n
            for pos, c in zip(fixed, decorations):
                col[pos] = c
            yield DecoratedPermutation(perm, tuple(col))


def all_positroids(k: int, n: int, max_n: Optional[int] = None) -> Iterator[Matroid]:
    """The positroid of every rank-k decorated permutation of [n], each once."""
    _check_bound(n, max_n, DEFAULT_MAX_N, "positroid")
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")
    for dp in all_decorated_permutations(n, max_n):
        if dp.rank == k:
            yield positroid_of(dp)


def all_lpms(k: int, n: int, max_n: Optional[int] = None) -> Iterator[Lpm]:
    """Every lattice path matroid M[U, L] of rank k on [n], each once."""
    _check_bound(n, max_n, DEFAULT_MAX_N, "lattice path matroid")
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")
    subsets = list(itertools.combinations(range(1, n + 1), k))
    for upper in subsets:
        for lower in subsets:
            if all(u <= l for u, l in zip(upper, lower)):
                yield Lpm(n, upper, lower)


def elementary_flag_pairs(
    k: int, n: int, max_n: Optional[int] = None
) -> Iterator[tuple[DecoratedPermutation, DecoratedPermutation, frozenset[int]]]:
    """All (sigma, pi, A) with rank(pi) = k, rank(sigma) = k - 1, the
    positroid of sigma an elementary quotient of the positroid of pi, and A
    the recovered shift set: cyclic_shift(pi, A) == sigma always holds."""
    _check_bound(n, max_n, FLAG_PAIR_MAX_N, "flag pair")
    if not 1 <= k <= n:
        raise ValueError(f"rank {k} out of range 1..{n}")
    pis = [dp for dp in all_decorated_permutations(n, max_n) if dp.rank == k]
    sigmas = [dp for dp in all_decorated_permutations(n, max_n) if dp.rank == k - 1]
    for sigma in sigmas:
        m_sigma = positroid_of(sigma)
        for pi in pis:
            if is_quotient_rank(m_sigma, positroid_of(pi)):
                shift_set = recover_shift_set(pi, sigma)
                assert pi.cyclic_shift(shift_set) == sigma
                yield sigma, pi, shift_set


@dataclass(frozen=True)
class CensusRecord:
    """One census line: identifying data plus optional relation edges."""

    n: int
    k: int
    payload: dict = field(compare=False)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, **self.payload}


def census_records(what: str, k: Optional[int], n: int, max_n: Optional[int] = None) -> Iterator[CensusRecord]:
    """JSON-lines-ready records for the CLI; one record per enumerated object."""
    if what == "dps":
        for dp in all_decorated_permutations(n, max_n):
            yield CensusRecord(n, dp.rank, {"dp": dp.to_text()})
    elif what == "positroids":
        if k is None:
            raise ValueError("--k is required for positroids")
        for dp in all_decorated_permutations(n, max_n):
            if dp.rank != k:
                continue
            m = positroid_of(dp)
            yield CensusRecord(
                n,
                k,
                {
                    "dp": dp.to_text(),
                    "necklace": dp.necklace.to_json()["entries"],
                    "basis_count": len(m.bases),
                },
            )
    elif what == "lpms":
        if k is None:
            raise ValueError("--k is required for lpms")
        for p in all_lpms(k, n, max_n):
            yield CensusRecord(
                n, k, {"U": sorted(p.U), "L": sorted(p.L), "basis_count": len(lpm_bases(p).bases)}
            )
    elif what == "flag-pairs":
        if k is None:
            raise ValueError("--k is required for flag-pairs")
        for sigma, pi, shift_set in elementary_flag_pairs(k, n, max_n):
            yield CensusRecord(
                n,
                k,
                {"pi": pi.to_text(), "sigma": sigma.to_text(), "shift_set": sorted(shift_set)},
            )
    else:
        raise ValueError(f"unknown census kind {what!r}")
