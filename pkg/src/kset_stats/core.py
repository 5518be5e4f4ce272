"""Partition calculus for pointwise stabilizers of subset families.

A family of subsets of ``{1..n}`` induces a partition of the ground set:
two points share a block iff every member contains both or neither.  The
pointwise stabilizer of the family in ``S_n`` is the Young subgroup of that
partition, and in ``A_n`` it is the even part of it.  Everything here works
off that fact, so no permutations are ever stored.

Points are 1-indexed.  Internally subsets are also carried as bitmasks
(bit ``i - 1`` for point ``i``), which is what the search engine uses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Sequence


class KSetError(ValueError):
    """Invalid input for the k-set machinery."""


class DomainError(KSetError):
    """Parameters outside the domain a construction or formula applies to."""


class GroupKind(enum.Enum):
    SYM = "S"
    ALT = "A"

    @classmethod
    def parse(cls, value) -> "GroupKind":
        if isinstance(value, GroupKind):
            return value
        text = str(value).strip().upper()
        aliases = {"S": cls.SYM, "SYM": cls.SYM, "A": cls.ALT, "ALT": cls.ALT}
        try:
            return aliases[text]
        except KeyError:
            raise KSetError(f"unknown group kind {value!r}; expected 'S' or 'A'") from None


@dataclass(frozen=True)
class GroundParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")

    def require_uniform(self) -> None:
        """Enforce ``1 <= k <= n/2``, the hypothesis of the main action."""
        if not 1 <= self.k <= self.n // 2:
            raise DomainError(f"need 1 <= k <= n/2, got n={self.n}, k={self.k}")


# -- bitmask helpers ------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << (x - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def refine_masks(blocks: tuple[int, ...], w: int) -> tuple[int, ...]:
    """Common refinement of a canonical block tuple with ``{w, complement}``."""
    out = []
    changed = False
    for b in blocks:
        x = b & w
        if x and x != b:
            out.append(x)
            out.append(b ^ x)
            changed = True
        else:
            out.append(b)
    if not changed:
        return blocks
    out.sort(key=lambda b: b & -b)
    return tuple(out)


def block_type(blocks: Sequence[int]) -> tuple[int, ...]:
    """Sorted block sizes (descending), i.e. the partition type."""
    return tuple(sorted((b.bit_count() for b in blocks), reverse=True))


def sym_order_of_type(sizes: Iterable[int]) -> int:
    return prod(factorial(s) for s in sizes)


def alt_trivial_type(sizes: Sequence[int]) -> bool:
    """Types ``1^n`` and ``1^(n-2) 2^1`` are exactly those with trivial A_n part."""
    big = [s for s in sizes if s > 1]
    return not big or big == [2]


def alt_order_of_type(sizes: Sequence[int]) -> int:
    if alt_trivial_type(sizes):
        return 1
    return sym_order_of_type(sizes) // 2


def order_of_type(sizes: Sequence[int], kind: GroupKind) -> int:
    if kind is GroupKind.SYM:
        return sym_order_of_type(sizes)
    return alt_order_of_type(sizes)


# -- value types ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class Subset:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if not els:
            raise KSetError("subsets must be nonempty")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise KSetError(f"subset elements must be strictly increasing: {list(els)}")
        if els[0] < 1 or els[-1] > self.n:
            raise KSetError(f"subset {list(els)} is not inside 1..{self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "Subset":
        return cls(n, tuple(sorted(elements)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Subset":
        return cls(n, elements_of(mask))

    @property
    def mask(self) -> int:
        return mask_of(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def complement(self) -> "Subset":
        rest = [x for x in range(1, self.n + 1) if x not in self.elements]
        if not rest:
            raise KSetError(f"complement of {list(self.elements)} in 1..{self.n} is empty")
        return Subset(self.n, tuple(rest))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def _coerce_members(n: int, members) -> tuple[Subset, ...]:
    out = []
    for m in members:
        if isinstance(m, Subset):
            if m.n != n:
                raise KSetError(f"member {m!r} has ambient size {m.n}, expected {n}")
            out.append(m)
        else:
            out.append(Subset.of(n, m))
    return tuple(out)


@dataclass(frozen=True)
class SetFamily:
    """Unordered family of distinct subsets, stored sorted."""

    n: int
    members: tuple[Subset, ...] = ()

    def __post_init__(self):
        members = tuple(sorted(_coerce_members(self.n, self.members), key=lambda s: s.elements))
        for a, b in zip(members, members[1:]):
            if a == b:
                raise KSetError(f"duplicate member {a!r} in family")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, n: int, members: Iterable[Iterable[int]] = ()) -> "SetFamily":
        return cls(n, tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def masks(self) -> list[int]:
        return [m.mask for m in self.members]

    def without(self, member: Subset) -> "SetFamily":
        return SetFamily(self.n, tuple(m for m in self.members if m != member))

    def as_lists(self) -> list[list[int]]:
        return [list(m.elements) for m in self.members]

    def __repr__(self) -> str:
        return "{" + ",".join(map(repr, self.members)) + "}"


@dataclass(frozen=True)
class SetSequence:
    """Ordered sequence of subsets; repeats are allowed but never strict."""

    n: int
    members: tuple[Subset, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", _coerce_members(self.n, self.members))

    @classmethod
    def of(cls, n: int, members: Iterable[Iterable[int]] = ()) -> "SetSequence":
        return cls(n, tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def masks(self) -> list[int]:
        return [m.mask for m in self.members]

    def as_lists(self) -> list[list[int]]:
        return [list(m.elements) for m in self.members]

    def __repr__(self) -> str:
        return "[" + ",".join(map(repr, self.members)) + "]"


@dataclass(frozen=True)
class Partition:
    """Partition of ``{1..n}`` in canonical form.

    Blocks are sorted ascending and ordered by least element, so structural
    equality is partition equality.
    """

    n: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        if any(not p for p in parts):
            raise KSetError("partition blocks must be nonempty")
        seen = [x for p in parts for x in p]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise KSetError(f"blocks {parts} do not partition 1..{self.n}")
        object.__setattr__(self, "parts", tuple(sorted(parts)))

    @classmethod
    def from_masks(cls, n: int, blocks: Iterable[int]) -> "Partition":
        return cls(n, tuple(elements_of(b) for b in blocks))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(p) for p in self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def type(self) -> tuple[int, ...]:
        """Part sizes, largest first."""
        return tuple(sorted((len(p) for p in self.parts), reverse=True))

    def refines(self, other: "Partition") -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        theirs = other.masks
        return all(any(b & ~o == 0 for o in theirs) for b in self.masks)

    def __repr__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, p)) + "}" for p in self.parts) + "}"


@dataclass(frozen=True)
class StabDescriptor:
    kind: GroupKind
    partition: Partition

    @property
    def order(self) -> int:
        return stab_order(self)


# -- operations -----------------------------------------------------------

def _members_of(family) -> tuple[int, Iterable[Subset]]:
    if isinstance(family, (SetFamily, SetSequence)):
        return family.n, family.members
    raise TypeError(f"expected SetFamily or SetSequence, got {type(family).__name__}")


def partition_masks(n: int, masks: Iterable[int]) -> tuple[int, ...]:
    blocks = (full_mask(n),)
    for w in masks:
        blocks = refine_masks(blocks, w)
    return blocks


def partition_of(family) -> Partition:
    """The partition induced by membership patterns; one block if empty."""
    n, members = _members_of(family)
    return Partition.from_masks(n, partition_masks(n, (m.mask for m in members)))


def refine(p: Partition, omega: Subset) -> Partition:
    if p.n != omega.n:
        raise KSetError(f"ambient sizes differ: partition {p.n}, subset {omega.n}")
    return Partition.from_masks(p.n, refine_masks(p.masks, omega.mask))


def splits(omega: Subset, i: int, j: int) -> bool:
    if i == j:
        raise KSetError("splits needs two distinct points")
    for x in (i, j):
        if not 1 <= x <= omega.n:
            raise KSetError(f"point {x} outside 1..{omega.n}")
    return (i in omega) != (j in omega)


def stab_order(d: StabDescriptor) -> int:
    """Exact order of the pointwise stabilizer described by ``d``."""
    return order_of_type(d.partition.type, d.kind)


def _order(n: int, masks: Iterable[int], kind: GroupKind) -> int:
    return order_of_type(block_type(partition_masks(n, masks)), kind)


def is_base(family: SetFamily, kind: GroupKind) -> bool:
    return _order(family.n, family.masks(), GroupKind.parse(kind)) == 1


def redundant_members(family: SetFamily, kind: GroupKind) -> list[Subset]:
    """Members whose removal leaves the pointwise stabilizer unchanged."""
    kind = GroupKind.parse(kind)
    masks = family.masks()
    full = _order(family.n, masks, kind)
    out = []
    for i, m in enumerate(family.members):
        rest = masks[:i] + masks[i + 1:]
        # nested stabilizers, so equal order means equal group
        if _order(family.n, rest, kind) == full:
            out.append(m)
    return out


def is_independent(family: SetFamily, kind: GroupKind) -> bool:
    return not redundant_members(family, kind)


def is_minimal_base(family: SetFamily, kind: GroupKind) -> bool:
    return is_base(family, kind) and is_independent(family, kind)


def first_non_strict_step(seq: SetSequence, kind: GroupKind) -> int | None:
    """1-based index of the first member that does not shrink the stabilizer."""
    kind = GroupKind.parse(kind)
    blocks = (full_mask(seq.n),)
    order = order_of_type(block_type(blocks), kind)
    for i, m in enumerate(seq.members, start=1):
        blocks = refine_masks(blocks, m.mask)
        nxt = order_of_type(block_type(blocks), kind)
        if nxt >= order:
            return i
        order = nxt
    return None


def is_irredundant(seq: SetSequence, kind: GroupKind, require_base: bool = False) -> bool:
    kind = GroupKind.parse(kind)
    if first_non_strict_step(seq, kind) is not None:
        return False
    if require_base:
        return _order(seq.n, seq.masks(), kind) == 1
    return True


def is_forest(family: SetFamily) -> bool:
    """Acyclicity of the graph whose edges are the (2-element) members."""
    parent = list(range(family.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in family.members:
        if len(m) != 2:
            raise KSetError(f"is_forest needs a 2-uniform family, got member {m!r}")
    for m in family.members:
        a, b = find(m.elements[0]), find(m.elements[1])
        if a == b:
            return False
        parent[a] = b
    return True


def complement_member(family: SetFamily, index: int) -> SetFamily:
    """Replace the ``index``-th member (1-based, canonical order) by its complement."""
    if not 1 <= index <= len(family):
        raise KSetError(f"index {index} out of range for a family of {len(family)}")
    members = list(family.members)
    members[index - 1] = members[index - 1].complement()
    return SetFamily(family.n, tuple(members))
