"""Explicit-bases matroids: the brute-force oracle layer.

A matroid stores its full basis family and derives everything else (rank
function, circuits, duality, loops and coloops) by direct search.  This is
deliberately the slow, trustworthy substrate that every fast criterion in
the package is cross-validated against at desk scale.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .cyclic import (
    check_element,
    check_ground,
    cyclic_pos,
    full_mask,
    gale_max,
    gale_min,
    mask_of,
    members_of,
)
from .decorated import DecoratedPermutation, GrassmannNecklace


@dataclass(frozen=True)
class Matroid:
    """Ground size n plus an explicit basis family.

    The family is deduplicated and canonically ordered at construction.
    Structural checks only; ``is_valid`` performs the exchange-axiom check,
    and the semantic operations assume it holds.
    """

    n: int
    bases: tuple[frozenset[int], ...]

    def __init__(self, n: int, bases: Iterable[Iterable[int]]):
        check_ground(n)
        family = {frozenset(b) for b in bases}
        if not family:
            raise ValueError("a matroid needs at least one basis")
        for b in family:
            for x in b:
                check_element(x, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bases", tuple(sorted(family, key=sorted)))

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    @cached_property
    def basis_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(b, self.n) for b in self.bases)

    def is_valid(self) -> bool:
        """Equicardinality plus the basis-exchange axiom, checked pairwise."""
        if len({len(b) for b in self.bases}) != 1:
            return False
        masks = self.basis_masks
        mset = set(masks)
        for b1 in masks:
            for b2 in masks:
                diff = b1 & ~b2
                while diff:
                    x = diff & -diff
                    diff ^= x
                    fresh = b2 & ~b1
                    found = False
                    while fresh:
                        y = fresh & -fresh
                        fresh ^= y
                        if (b1 ^ x) | y in mset:
                            found = True
                            break
                    if not found:
                        return False
        return True

    @cached_property
    def rank_table(self) -> list[int]:
        """rank_of every subset, indexed by bitmask.  Exponential; desk scale only."""
        if self.n > 16:
            raise ValueError("rank table supported only for n <= 16")
        table = [0] * (1 << self.n)
        masks = self.basis_masks
        for s in range(1, 1 << self.n):
            table[s] = max((s & b).bit_count() for b in masks)
        return table

    def rank_of(self, subset: Iterable[int]) -> int:
        """rk(S) = max over bases of |S intersect B|."""
        s = mask_of(subset, self.n)
        return max((s & b).bit_count() for b in self.basis_masks)

    def independent(self, subset: Iterable[int]) -> bool:
        s = mask_of(subset, self.n)
        return any(s & ~b == 0 for b in self.basis_masks)

    def dual(self) -> "Matroid":
        full = full_mask(self.n)
        return Matroid(self.n, (members_of(full & ~b) for b in self.basis_masks))

    @cached_property
    def circuits(self) -> tuple[frozenset[int], ...]:
        """All minimal dependent sets, by exhaustive search over subsets of [n]."""
        table = self.rank_table
        out = []
        for m in range(1, 1 << self.n):
            size = m.bit_count()
            if table[m] >= size:
                continue
            bits, minimal = m, True
            while bits:
                x = bits & -bits
                bits ^= x
                if table[m ^ x] != size - 1:
                    minimal = False
                    break
            if minimal:
                out.append(members_of(m))
        return tuple(sorted(out, key=lambda c: (len(c), sorted(c))))

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(c, self.n) for c in self.circuits)

    def loops_and_coloops(self) -> tuple[frozenset[int], frozenset[int]]:
        """(elements in no basis, elements in every basis)."""
        union = 0
        inter = full_mask(self.n)
        for b in self.basis_masks:
            union |= b
            inter &= b
        return members_of(full_mask(self.n) & ~union), members_of(inter)

    # -- positroid structure ---------------------------------------------------

    @cached_property
    def _necklace(self) -> GrassmannNecklace:
        entries = tuple(gale_min(i, self.bases, self.n) for i in range(1, self.n + 1))
        return GrassmannNecklace(self.n, self.rank, entries)

    @cached_property
    def _conecklace(self) -> GrassmannNecklace:
        entries = tuple(gale_max(i, self.bases, self.n) for i in range(1, self.n + 1))
        return GrassmannNecklace(self.n, self.rank, entries, "conecklace")

    def grassmann_necklace(self) -> GrassmannNecklace:
        """Entry i is the <=_i-minimum basis (the Gale-order oracle route)."""
        return self._necklace

    def grassmann_conecklace(self) -> GrassmannNecklace:
        return self._conecklace

    def is_positroid(self) -> bool:
        """Whether the necklace closure reproduces exactly this basis family.

        Non-matroids are never positroids, so the exchange axiom is checked
        first; this also keeps the Gale minima well defined.
        """
        if not self.is_valid():
            return False
        closure = bases_from_necklace(self.grassmann_necklace())
        return set(closure.bases) == set(self.bases)

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [sorted(b) for b in self.bases]}

    @classmethod
    def from_json(cls, obj: dict) -> "Matroid":
        return cls(obj["n"], [frozenset(b) for b in obj["bases"]])


def validate_matroid(m: Matroid) -> bool:
    return m.is_valid()


def bases_from_necklace(necklace: GrassmannNecklace) -> Matroid:
    """B(I) = { B in C([n], k) : I_i <=_i B for all i }, the positroid of I.

    Raises ValueError when the filter comes back empty, which signals input
    that does not satisfy the necklace axioms.
    """
    n, k = necklace.n, necklace.k
    refs = [
        tuple(sorted(cyclic_pos(i, x, n) for x in necklace.entries[i - 1]))
        for i in range(1, n + 1)
    ]
    found = []
    for combo in itertools.combinations(range(1, n + 1), k):
        ok = True
        for i in range(1, n + 1):
            pos = sorted(cyclic_pos(i, x, n) for x in combo)
            if any(p < r for p, r in zip(pos, refs[i - 1])):
                ok = False
                break
        if ok:
            found.append(frozenset(combo))
    if not found:
        raise ValueError("no subset dominates every necklace entry; invalid necklace")
    return Matroid(n, found)


@lru_cache(maxsize=None)
def positroid_of(dp: DecoratedPermutation) -> Matroid:
    """The positroid whose Grassmann necklace is the one of dp."""
    return bases_from_necklace(dp.necklace)


@lru_cache(maxsize=None)
def uniform_matroid(k: int, n: int) -> Matroid:
    """U_{k,n}: every k-subset of [n] is a basis."""
    check_ground(n)
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")
    return Matroid(n, itertools.combinations(range(1, n + 1), k))
