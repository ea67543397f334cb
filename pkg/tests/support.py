"""Shared test utilities: independent oracles, the labeled-matroid census,
the rank-gap pair sweep, and hypothesis strategies.

Everything here is deliberately naive or structurally different from the
library code it is used to check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from hypothesis import strategies as st

from positroids import (
    DecoratedPermutation,
    containment_check,
    exists_shift,
    is_quotient_rank,
    positroid_of,
    recover_shift_set,
    shift_interval,
)
from positroids.cyclic import full_mask
from positroids.matroids import Matroid


# -- counting oracle ----------------------------------------------------------

def derangements(n: int) -> int:
    if n == 0:
        return 1
    if n == 1:
        return 0
    d = [1, 0]
    for m in range(2, n + 1):
        d.append((m - 1) * (d[m - 1] + d[m - 2]))
    return d[n]


def dp_count(n: int) -> int:
    """Number of decorated permutations of [n]: choose the fixed points,
    derange the rest, decorate each fixed point two ways."""
    return sum(comb(n, j) * 2**j * derangements(n - j) for j in range(n + 1))


# -- naive set-level oracles ---------------------------------------------------

def subsets_of(elements):
    items = sorted(elements)
    for r in range(len(items) + 1):
        yield from (frozenset(c) for c in itertools.combinations(items, r))


def naive_rank(bases, members) -> int:
    s = frozenset(members)
    return max(len(s & b) for b in bases)


def naive_circuits(bases, n):
    """Minimal dependent sets straight from the independence definition."""
    independent = lambda s: any(s <= b for b in map(frozenset, bases))
    circuits = []
    for s in subsets_of(range(1, n + 1)):
        if s and not independent(s) and all(independent(s - {x}) for x in s):
            circuits.append(s)
    return sorted(circuits, key=lambda c: (len(c), sorted(c)))


def rotated_order(i, n):
    return list(range(i, n + 1)) + list(range(1, i))


def naive_cyclic_leq(i, a, b, n) -> bool:
    order = rotated_order(i, n)
    return order.index(a) <= order.index(b)


def naive_gale_leq(i, a, b, n) -> bool:
    order = rotated_order(i, n)
    sa = sorted(a, key=order.index)
    sb = sorted(b, key=order.index)
    return all(order.index(x) <= order.index(y) for x, y in zip(sa, sb))


# -- labeled matroid census ------------------------------------------------------

def _matroid_family_masks(n: int, k: int) -> list[tuple[int, ...]]:
    """Basis families of all rank-k matroids on [n], filtered by the exchange
    axiom over every candidate subfamily of C([n], k)."""
    subsets = [sum(1 << (x - 1) for x in combo) for combo in itertools.combinations(range(1, n + 1), k)]
    m = len(subsets)
    if m == 0:
        return [()]
    index_of = {mask: i for i, mask in enumerate(subsets)}
    # req[s][t]: one index-bitmap per element x of S_s \ S_t listing the
    # members that can serve as (S_s - x) + y with y in S_t \ S_s
    req: list[list[tuple[int, ...]]] = [[()] * m for _ in range(m)]
    for s in range(m):
        for t in range(m):
            if s == t:
                continue
            entries = []
            d = subsets[s] & ~subsets[t]
            fresh_all = subsets[t] & ~subsets[s]
            while d:
                x = d & -d
                d ^= x
                bitmap = 0
                f = fresh_all
                while f:
                    y = f & -f
                    f ^= y
                    idx = index_of.get((subsets[s] ^ x) | y)
                    if idx is not None:
                        bitmap |= 1 << idx
                entries.append(bitmap)
            req[s][t] = tuple(entries)
    found = []
    for fam in range(1, 1 << m):
        bits = []
        f = fam
        while f:
            low = f & -f
            f ^= low
            bits.append(low.bit_length() - 1)
        ok = True
        for s in bits:
            rs = req[s]
            for t in bits:
                if s == t:
                    continue
                for r in rs[t]:
                    if not fam & r:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(subsets[i] for i in bits))
    return found


def mask_members(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length())
        mask ^= low
    return frozenset(out)


def all_matroids(n: int) -> list[Matroid]:
    """Every labeled matroid on [n], all ranks, as Matroid objects."""
    out = []
    for k in range(n + 1):
        for fam in _matroid_family_masks(n, k):
            out.append(Matroid(n, (mask_members(b) for b in fam)))
    return out


# -- the rank-gap-1 pair sweep ---------------------------------------------------

@dataclass
class GapSweep:
    n: int
    pairs: int = 0
    flag_pairs: list = field(default_factory=list)
    exists_mismatches: list = field(default_factory=list)
    cover_mismatches: list = field(default_factory=list)
    shift_cover_mismatches: list = field(default_factory=list)
    containment_failures: list = field(default_factory=list)
    replay_failures: list = field(default_factory=list)


def _disjoint_cover(pi: DecoratedPermutation, sigma: DecoratedPermutation) -> bool:
    n = pi.n
    union = 0
    total = 0
    for i in range(1, n + 1):
        iv = shift_interval(pi, sigma, i)
        union |= iv.mask
        total += len(iv)
    return total == n and union == full_mask(n)


def run_gap_sweep(n: int, dps: list[DecoratedPermutation]) -> GapSweep:
    """Visit every ordered pair (sigma, pi) of decorated permutations on [n]
    with rank(sigma) = rank(pi) - 1 and record, without any shortcuts:

    * whether the positroids form an elementary flag pair (full rank oracle),
    * whether exists_shift agrees with entrywise necklace containment,
    * whether the disjoint shift-interval cover agrees with containment and
      with the existence of a shift,
    * for flag pairs: containment_check == (True, True) and the conecklace
      recovery replays to sigma.
    """
    by_rank: dict[int, list[DecoratedPermutation]] = {}
    for dp in dps:
        by_rank.setdefault(dp.rank, []).append(dp)
    neck_masks = {dp: dp.necklace.masks for dp in dps}
    sweep = GapSweep(n)
    for k in range(1, n + 1):
        for sigma in by_rank.get(k - 1, ()):
            m_sigma = positroid_of(sigma)
            s_masks = neck_masks[sigma]
            for pi in by_rank.get(k, ()):
                sweep.pairs += 1
                p_masks = neck_masks[pi]
                contained = all(a & ~b == 0 for a, b in zip(s_masks, p_masks))
                witness = exists_shift(pi, sigma)
                if (witness is not None) != contained:
                    sweep.exists_mismatches.append((sigma, pi))
                cover = _disjoint_cover(pi, sigma)
                if cover != contained:
                    sweep.cover_mismatches.append((sigma, pi))
                if cover != (witness is not None):
                    sweep.shift_cover_mismatches.append((sigma, pi))
                if is_quotient_rank(m_sigma, positroid_of(pi)):
                    if containment_check(sigma, pi) != (True, True):
                        sweep.containment_failures.append((sigma, pi))
                    recovered = recover_shift_set(pi, sigma)
                    if pi.cyclic_shift(recovered) != sigma:
                        sweep.replay_failures.append((sigma, pi))
                    sweep.flag_pairs.append((sigma, pi, recovered))
    return sweep


# -- hypothesis strategies ---------------------------------------------------------

@st.composite
def decorated_permutations(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    perm = tuple(draw(st.permutations(list(range(1, n + 1)))))
    col = tuple(
        draw(st.sampled_from((-1, 1))) if v == i else 0 for i, v in enumerate(perm, start=1)
    )
    return DecoratedPermutation(perm, col)


@st.composite
def subsets(draw, n, proper=False, nonempty=False):
    members = draw(st.sets(st.integers(1, n), max_size=n - 1 if proper else n))
    if nonempty and not members:
        members = {draw(st.integers(1, n))}
    return frozenset(members)
