"""Brute-force cross-checks for tiny ``n``.

Nothing in here is used by the search engine.  The permutation enumeration
gives ground truth for stabilizer orders, and :func:`brute_force_stat`
computes the four statistics straight from their definitions by walking
every family (or every irredundant sequence), with no bounds and no symmetry
reduction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .core import (
    GroupKind,
    KSetError,
    SetFamily,
    SetSequence,
    Subset,
    is_base,
    is_independent,
    is_irredundant,
)

MAX_ENUM_N = 8


class ResourceGuardError(KSetError):
    """Requested enumeration is larger than the hard guard allows."""


@dataclass(frozen=True)
class Permutation:
    n: int
    image: tuple[int, ...]  # image[i] is the image of point i + 1

    def __post_init__(self):
        if sorted(self.image) != list(range(1, self.n + 1)):
            raise KSetError(f"{self.image} is not a permutation of 1..{self.n}")

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    @property
    def is_even(self) -> bool:
        seen = [False] * self.n
        parity = 0
        for i in range(self.n):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = self.image[j] - 1
                length += 1
            parity ^= (length - 1) & 1
        return parity == 0

    def fixes_setwise(self, s: Subset) -> bool:
        return {self(x) for x in s} == set(s.elements)


def _guard(n: int) -> None:
    if n > MAX_ENUM_N:
        raise ResourceGuardError(f"permutation enumeration is capped at n <= {MAX_ENUM_N}, got {n}")


@lru_cache(maxsize=None)
def _group_table(n: int, kind: GroupKind) -> np.ndarray:
    perms = [Permutation(n, tuple(p)) for p in permutations(range(1, n + 1))]
    if kind is GroupKind.ALT:
        perms = [p for p in perms if p.is_even]
    table = np.array([p.image for p in perms], dtype=np.int64).reshape(len(perms), n)
    table.setflags(write=False)
    return table


def enumerate_group(n: int, kind: GroupKind) -> list[Permutation]:
    """All elements of ``S_n``, or the even ones for ``A_n``."""
    _guard(n)
    kind = GroupKind.parse(kind)
    return [Permutation(n, tuple(int(x) for x in row)) for row in _group_table(n, kind)]


def stab_order_by_enumeration(family, kind: GroupKind) -> int:
    """Count group elements that map every member onto itself (setwise)."""
    n = family.n
    _guard(n)
    table = _group_table(n, GroupKind.parse(kind))
    keep = np.ones(table.shape[0], dtype=bool)
    for member in family.members:
        inside = np.zeros(n + 1, dtype=bool)
        inside[list(member.elements)] = True
        # a bijection maps s into s iff it maps s onto s
        images = table[:, [x - 1 for x in member.elements]]
        keep &= inside[images].all(axis=1)
    return int(keep.sum())


def random_mixed_family(n: int, size: int, rng: random.Random) -> SetFamily:
    """Distinct random nonempty subsets of mixed sizes."""
    pool: set[tuple[int, ...]] = set()
    size = min(size, 2**n - 1)
    while len(pool) < size:
        r = rng.randint(1, n)
        pool.add(tuple(sorted(rng.sample(range(1, n + 1), r))))
    return SetFamily.of(n, pool)


def ksets(n: int, k: int) -> list[Subset]:
    return [Subset(n, c) for c in combinations(range(1, n + 1), k)]


def _max_size(n: int) -> int:
    # any strict stabilizer chain in S_n on subsets has length <= n - 1
    return max(n - 1, 0)


def brute_force_stat(n: int, k: int, kind: GroupKind, stat: str) -> tuple[int, SetFamily | SetSequence]:
    """Compute b, B, H or I directly from the definitions.

    Families are enumerated by size with :func:`itertools.combinations` and
    tested with the core predicates; for ``I`` every sequence of distinct
    k-sets is grown one member at a time and kept while it stays irredundant.
    """
    kind = GroupKind.parse(kind)
    pts = ksets(n, k)
    if stat in ("b", "B", "H"):
        best = None
        for size in range(0, _max_size(n) + 1):
            for combo in combinations(pts, size):
                fam = SetFamily(n, combo)
                if stat == "H":
                    ok = is_independent(fam, kind)
                else:
                    ok = is_base(fam, kind) and is_independent(fam, kind)
                if not ok:
                    continue
                if stat == "b":
                    return size, fam
                best = (size, fam)
                break
        assert best is not None
        return best
    if stat == "I":
        best: tuple[int, SetSequence] | None = None

        def grow(seq: list[Subset]):
            nonlocal best
            s = SetSequence(n, tuple(seq))
            if not is_irredundant(s, kind):
                return
            if is_irredundant(s, kind, require_base=True):
                if best is None or len(seq) > best[0]:
                    best = (len(seq), s)
                return
            for p in pts:
                if p not in seq:
                    grow(seq + [p])

        grow([])
        assert best is not None
        return best
    raise KSetError(f"unknown statistic {stat!r}")
