"""CW-arrows and CCW-arrows of a decorated permutation, their counting
functions, and the rank formulas they support.

The CW-arrow at position i is the clockwise arc [i, perm(i)] (the full
circle at a coloop, a singleton at a loop); the CCW-arrow is the arc
[perm(i), i] with loop and coloop swapping roles.  The CW count of a set,
with the whole-circle value pinned to n - rank, reads off positroid ranks
of cyclic intervals exactly and upper-bounds the rank everywhere else.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .cyclic import CyclicInterval, full_mask, mask_of, members_of
from .decorated import COLOOP, LOOP, DecoratedPermutation
from .matroids import positroid_of

CW = "cw"
CCW = "ccw"


@dataclass(frozen=True)
class ArrowSet:
    dp: DecoratedPermutation
    kind: str
    arrows: tuple[CyclicInterval, ...]

    def arrow(self, i: int) -> CyclicInterval:
        """The arrow starting at position i, 1-indexed."""
        return self.arrows[i - 1]

    def masks(self) -> tuple[int, ...]:
        return tuple(a.mask for a in self.arrows)

    def to_json(self) -> list[dict]:
        return [a.to_json() for a in self.arrows]


def cw_arrows(dp: DecoratedPermutation) -> ArrowSet:
    n = dp.n
    arrows = tuple(
        CyclicInterval.full(n) if dp.col[i - 1] == COLOOP else CyclicInterval.arc(n, i, dp.perm[i - 1])
        for i in range(1, n + 1)
    )
    return ArrowSet(dp, CW, arrows)


def ccw_arrows(dp: DecoratedPermutation) -> ArrowSet:
    n = dp.n
    arrows = tuple(
        CyclicInterval.full(n) if dp.col[i - 1] == LOOP else CyclicInterval.arc(n, dp.perm[i - 1], i)
        for i in range(1, n + 1)
    )
    return ArrowSet(dp, CCW, arrows)


@lru_cache(maxsize=None)
def _cw_masks(dp: DecoratedPermutation) -> tuple[int, ...]:
    return cw_arrows(dp).masks()


@lru_cache(maxsize=None)
def _ccw_masks(dp: DecoratedPermutation) -> tuple[int, ...]:
    return ccw_arrows(dp).masks()


def _cw_count(dp: DecoratedPermutation, mask: int) -> int:
    if mask == full_mask(dp.n):
        return dp.n - dp.rank
    return sum(1 for a in _cw_masks(dp) if a & ~mask == 0)


def _ccw_count(dp: DecoratedPermutation, mask: int) -> int:
    if mask == full_mask(dp.n):
        return dp.rank
    return sum(1 for a in _ccw_masks(dp) if a & ~mask == 0)


def cw_function(dp: DecoratedPermutation, subset: Iterable[int]) -> int:
    """Number of CW-arrows contained in the subset; n - rank on the full set.

    Only defined for coloop-free permutations (a coloop arrow covers the
    whole circle and the whole-set override would silently disagree).
    """
    if dp.coloops:
        raise ValueError(f"cw is undefined in the presence of coloops {sorted(dp.coloops)}")
    return _cw_count(dp, mask_of(subset, dp.n))


def ccw_function(dp: DecoratedPermutation, subset: Iterable[int]) -> int:
    """CCW counterpart of cw_function; rank on the full set; needs a loop-free dp."""
    if dp.loops:
        raise ValueError(f"ccw is undefined in the presence of loops {sorted(dp.loops)}")
    return _ccw_count(dp, mask_of(subset, dp.n))


def rank_cyclic_interval(dp: DecoratedPermutation, interval: CyclicInterval) -> int:
    """Positroid rank of a cyclic interval, |J| - cw(J), without touching bases."""
    if interval.n != dp.n:
        raise ValueError("ground-set mismatch")
    if dp.coloops:
        raise ValueError(f"cw is undefined in the presence of coloops {sorted(dp.coloops)}")
    return len(interval) - _cw_count(dp, interval.mask)


def rank_upper_bound(dp: DecoratedPermutation, subset: Iterable[int]) -> int:
    """|A| - cw(A), an upper bound for the positroid rank of any proper subset."""
    if dp.coloops:
        raise ValueError(f"cw is undefined in the presence of coloops {sorted(dp.coloops)}")
    mask = mask_of(subset, dp.n)
    if mask == full_mask(dp.n):
        raise ValueError("the bound is stated for proper subsets only")
    return mask.bit_count() - _cw_count(dp, mask)


def _partitions_into(items: list[int], blocks: int) -> Iterator[list[list[int]]]:
    """Set partitions of items into exactly the given number of nonempty blocks."""
    if blocks == 0:
        if not items:
            yield []
        return
    if len(items) < blocks:
        return
    first, rest = items[0], items[1:]
    # first alone in a new block
    for part in _partitions_into(rest, blocks - 1):
        yield [[first]] + part
    # first joins an existing block
    for part in _partitions_into(rest, blocks):
        for idx in range(len(part)):
            yield part[:idx] + [[first] + part[idx]] + part[idx + 1 :]


def verify_ccw_rank_partition(dp: DecoratedPermutation, subset: Iterable[int]) -> bool:
    """Search for a partition A = A_1 | ... | A_t with
    rk(A) = sum_j (rk([n]) - ccw([n] \\ A_j)).

    Partitions are tried in increasing number of blocks and the first witness
    wins.  A loop-free dp is required for the ccw values to make sense.
    """
    if dp.loops:
        raise ValueError(f"ccw is undefined in the presence of loops {sorted(dp.loops)}")
    n = dp.n
    mask = mask_of(subset, n)
    target = positroid_of(dp).rank_table[mask]
    if mask == 0:
        return target == 0
    items = sorted(members_of(mask))
    rk_full = dp.rank
    full = full_mask(n)
    for blocks in range(1, len(items) + 1):
        for part in _partitions_into(items, blocks):
            total = sum(rk_full - _ccw_count(dp, full & ~mask_of(block, n)) for block in part)
            if total == target:
                return True
    return False
