"""Closed-form values and bounds for S_n and A_n on k-sets."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .core import DomainError, KSetError, Partition


@dataclass(frozen=True)
class ValueOrRange:
    """Either an exact value, or a closed range ``[lower, upper]``.

    ``known`` is False when the true value is only pinned to the range.
    """

    lower: int
    upper: int
    known: bool = True

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty range [{self.lower}, {self.upper}]")
        if self.known and self.lower != self.upper:
            raise ValueError("an exact value needs lower == upper")

    @classmethod
    def exact(cls, value: int) -> "ValueOrRange":
        return cls(value, value, True)

    @classmethod
    def between(cls, lower: int, upper: int) -> "ValueOrRange":
        return cls(lower, upper, False)

    @property
    def value(self) -> int | None:
        return self.lower if self.known else None

    def __contains__(self, v: int) -> bool:
        return self.lower <= v <= self.upper

    def __str__(self) -> str:
        if self.known:
            return str(self.lower)
        return f"[{self.lower},{self.upper}]"


def _check(n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int)) or not 1 <= k <= n // 2:
        raise DomainError(f"need integers with 1 <= k <= n/2, got n={n}, k={k}")


def predicted_I_sym(n: int, k: int) -> int:
    _check(n, k)
    return n - 1 if gcd(n, k) == 1 else n - 2


def predicted_BH_sym(n: int, k: int) -> int:
    """Common value of B and H for S_n on k-sets."""
    _check(n, k)
    if k == 1:
        return n - 1
    if k == 2 or n == 2 * k + 2:
        return n - 2
    return n - 3


def predicted_I_alt(n: int, k: int) -> int:
    _check(n, k)
    if gcd(n, k) == 1:
        return n - 2
    return max(2, n - 3)


def sandwich_range(n: int, k: int) -> ValueOrRange:
    """``H(S_n) - 1 <= B(A_n) <= H(A_n) <= H(S_n)``."""
    h = predicted_BH_sym(n, k)
    return ValueOrRange.between(h - 1, h)


def alt_BH_value(n: int, k: int) -> ValueOrRange:
    """B and H for A_n on k-sets where settled, else the sandwich range.

    Settled cases: ``k = 1`` gives ``n - 2``; ``k = 2`` gives ``n - 3``
    (``2`` when ``n = 4``); ``k = 3`` gives ``n - 3`` except at ``n = 8``.
    """
    _check(n, k)
    if k == 1:
        return ValueOrRange.exact(n - 2)
    if k == 2:
        return ValueOrRange.exact(2 if n == 4 else n - 3)
    if k == 3 and n != 8:
        return ValueOrRange.exact(n - 3)
    return sandwich_range(n, k)


def max_chain_length_sym(n: int) -> int:
    """Longest subgroup chain in S_n: ``floor((3n - 1)/2)`` minus popcount(n)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return (3 * n - 1) // 2 - bin(n).count("1")


def lemma_i_bound(d: int, r: int, s: int) -> int:
    """Upper bound ``d + s - r`` on the length of a strict chain.

    A strict chain through ``d`` sets reaching a partition with ``r`` parts
    can be extended to one reaching ``s`` parts by at most ``s - r`` sets.
    """
    if d < 0 or not 1 <= r <= s:
        raise DomainError(f"need d >= 0 and 1 <= r <= s, got d={d}, r={r}, s={s}")
    return d + s - r


def chain_divisibility_holds(partitions: Sequence[Partition], g: int) -> bool:
    """Whether every part of every partition has size divisible by ``g``.

    ``partitions`` must grow by exactly one part per step.
    """
    if g < 1:
        raise DomainError(f"g must be >= 1, got {g}")
    for a, b in zip(partitions, partitions[1:]):
        if b.num_parts != a.num_parts + 1:
            raise KSetError(
                f"partition chain must gain exactly one part per step: {a!r} -> {b!r}"
            )
    return all(len(part) % g == 0 for p in partitions for part in p.parts)


# Values the closed forms leave open, pinned by exhaustive search.
RESOLVED_ALT_BH = {(8, 3): 5}


def base_size_range(n: int, k: int, alt: bool = False) -> ValueOrRange:
    """Bracket for the minimum base size, which has no closed form here.

    Every added set at most doubles the number of parts, and a base needs
    ``n`` parts (``n - 1`` for A_n); a minimum base is minimal, so it is no
    larger than B.
    """
    _check(n, k)
    need = n - 1 if alt else n
    lower = max(0, (need - 1).bit_length())
    upper = alt_BH_value(n, k).upper if alt else predicted_BH_sym(n, k)
    return ValueOrRange.between(lower, upper)


def formula_value(stat: str, alt: bool, n: int, k: int) -> ValueOrRange:
    if stat == "I":
        return ValueOrRange.exact(predicted_I_alt(n, k) if alt else predicted_I_sym(n, k))
    if stat in ("B", "H"):
        return alt_BH_value(n, k) if alt else ValueOrRange.exact(predicted_BH_sym(n, k))
    if stat == "b":
        return base_size_range(n, k, alt)
    raise KSetError(f"unknown statistic {stat!r}")
