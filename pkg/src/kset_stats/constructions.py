"""Explicit witness families and sequences.

Each builder returns a :class:`Witness` that has already been checked
against its claim with the core predicates; a builder that would emit a
non-verifying witness raises :class:`WitnessError` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import (
    DomainError,
    GroundParams,
    GroupKind,
    KSetError,
    SetFamily,
    SetSequence,
    first_non_strict_step,
    is_base,
    is_independent,
    is_irredundant,
    is_minimal_base,
)

MINIMAL_BASE = "minimal-base"
IRREDUNDANT_BASE = "irredundant-base"
INDEPENDENT = "independent"


class WitnessError(RuntimeError):
    """A construction produced something that fails its own claim."""


@dataclass(frozen=True)
class Witness:
    params: GroundParams
    kind: GroupKind
    payload: SetFamily | SetSequence
    claim: str
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.payload)

    @property
    def ordered(self) -> bool:
        return isinstance(self.payload, SetSequence)

    @property
    def claim_label(self) -> str:
        if self.claim == IRREDUNDANT_BASE:
            return f"{IRREDUNDANT_BASE}-of-length-{self.size}"
        return self.claim

    def verify(self) -> bool:
        return check_claim(self.payload, self.kind, self.claim)


def check_claim(payload, kind: GroupKind, claim: str) -> bool:
    if claim == MINIMAL_BASE:
        return isinstance(payload, SetFamily) and is_minimal_base(payload, kind)
    if claim == INDEPENDENT:
        return isinstance(payload, SetFamily) and is_independent(payload, kind)
    if claim == IRREDUNDANT_BASE:
        return isinstance(payload, SetSequence) and is_irredundant(payload, kind, require_base=True)
    raise KSetError(f"unknown claim {claim!r}")


def _emit(n, k, kind, payload, claim, name) -> Witness:
    if isinstance(payload, SetSequence) and len(set(payload.members)) != len(payload):
        raise WitnessError(f"{name}({n},{k}) repeats a set")
    w = Witness(GroundParams(n, k), kind, payload, claim, name)
    if not w.verify():
        detail = ""
        if isinstance(payload, SetSequence):
            step = first_non_strict_step(payload, kind)
            detail = f" (first non-strict step {step})" if step else " (not a base)"
        elif not is_base(payload, kind):
            detail = " (not a base)"
        raise WitnessError(f"{name}(n={n}, k={k}) fails {claim} for {kind.value}_n{detail}")
    return w


def _family(n, sets) -> SetFamily:
    sets = [tuple(sorted(s)) for s in sets]
    if len(set(sets)) != len(sets):
        raise WitnessError(f"construction repeated a set: {sets}")
    return SetFamily.of(n, sets)


# -- raw set lists --------------------------------------------------------

def star_k2_sets(n: int) -> list[list[int]]:
    return [[1, j] for j in range(2, n)]


def eq1_sets(n: int, k: int) -> list[list[int]]:
    head = list(range(1, k))
    tail = list(range(n - k + 1, n))
    first_row = [head + [j] for j in range(k, n - 1)]
    other_rows = [[i] + tail for i in range(1, k - 1)]
    return first_row + other_rows


def eq2_sets(k: int) -> list[list[int]]:
    left = range(1, k + 2)
    right = range(k + 2, 2 * k + 3)
    return [[x for x in left if x != i] for i in range(1, k + 1)] + [
        [x for x in right if x != i] for i in range(k + 2, 2 * k + 2)
    ]


def coprime_chain_sets(n: int, k: int) -> list[list[int]]:
    """Length ``n - 1`` irredundant base for S_n on k-sets, ``gcd(n, k) = 1``.

    The ground set may be smaller than ``2k`` here since the recursion runs
    on ``(k, k - r)``.
    """
    if k == 1:
        return [[i] for i in range(1, n)]
    d, r = divmod(n, k)
    rest = list(range(d * k + 1, n + 1))
    blocks = [list(range((i - 1) * k + 1, i * k + 1)) for i in range(1, d + 1)]
    inner = coprime_chain_sets(k, k - r)
    out = [list(b) for b in blocks]
    for b in blocks:
        # order-preserving relabel of {1..k} onto the block
        for s in inner:
            out.append([b[x - 1] for x in s] + rest)
    out += [list(range(1, k)) + [d * k + i] for i in range(1, r)]
    return out


def general_chain_sets(n: int, k: int) -> list[list[int]]:
    out = []
    for i in range(1, n - 1):
        if i <= n - k:
            out.append(list(range(1, k)) + [k + i - 1])
        else:
            out.append([i - (n - k)] + list(range(k + 1, 2 * k)))
    return out


# -- witnesses ------------------------------------------------------------

def star_base_k2(n: int) -> Witness:
    if n < 3:
        raise DomainError(f"star_base_k2 needs n >= 3, got {n}")
    return _emit(n, 2, GroupKind.SYM, _family(n, star_k2_sets(n)), MINIMAL_BASE, "star-k2")


def eq1_family(n: int, k: int) -> Witness:
    if k < 3 or n < 2 * k:
        raise DomainError(f"eq1_family needs k >= 3 and n >= 2k, got n={n}, k={k}")
    return _emit(n, k, GroupKind.SYM, _family(n, eq1_sets(n, k)), MINIMAL_BASE, "eq1")


def eq2_family(k: int) -> Witness:
    if k < 3:
        raise DomainError(f"eq2_family needs k >= 3, got {k}")
    n = 2 * k + 2
    return _emit(n, k, GroupKind.SYM, _family(n, eq2_sets(k)), MINIMAL_BASE, "eq2")


def coprime_irredundant_chain(n: int, k: int) -> Witness:
    GroundParams(n, k).require_uniform()
    if gcd(n, k) != 1:
        raise DomainError(f"coprime chain needs gcd(n, k) = 1, got gcd({n}, {k}) = {gcd(n, k)}")
    seq = SetSequence.of(n, coprime_chain_sets(n, k))
    return _emit(n, k, GroupKind.SYM, seq, IRREDUNDANT_BASE, "coprime-chain")


def general_irredundant_chain(n: int, k: int) -> Witness:
    GroundParams(n, k).require_uniform()
    seq = SetSequence.of(n, general_chain_sets(n, k))
    return _emit(n, k, GroupKind.SYM, seq, IRREDUNDANT_BASE, "general-chain")


def alt_excised_sets(n: int, k: int) -> list[list[int]]:
    if k == 2:
        return star_k2_sets(n)[:-1]
    if n == 2 * k + 2:
        return eq2_sets(k)[:-1]
    # drop the last set of the first row: its private point then pairs with n
    sets = eq1_sets(n, k)
    del sets[n - k - 2]
    return sets


def alt_excised_base(n: int, k: int) -> Witness:
    """Minimal base for A_n one smaller than the S_n family it comes from."""
    if k == 2:
        if n < 5:
            raise DomainError(f"the k = 2 route needs n >= 5, got n={n}")
    elif k < 3 or n < 2 * k:
        raise DomainError(f"alt_excised_base needs k = 2, or k >= 3 and n >= 2k; got n={n}, k={k}")
    fam = _family(n, alt_excised_sets(n, k))
    return _emit(n, k, GroupKind.ALT, fam, MINIMAL_BASE, "alt-excised")


def alt_star_base_k3(n: int) -> Witness:
    if n < 6:
        raise DomainError(f"alt_star_base_k3 needs n >= 6, got {n}")
    fam = _family(n, [[1, 2, j] for j in range(3, n)])
    return _emit(n, 3, GroupKind.ALT, fam, MINIMAL_BASE, "alt-star-k3")


# name -> (builder, takes_k)
BUILDERS = {
    "star-k2": (star_base_k2, False),
    "eq1": (eq1_family, True),
    "eq2": (eq2_family, True),
    "coprime-chain": (coprime_irredundant_chain, True),
    "general-chain": (general_irredundant_chain, True),
    "alt-excised": (alt_excised_base, True),
    "alt-star-k3": (alt_star_base_k3, False),
}


def build(name: str, n: int | None = None, k: int | None = None) -> Witness:
    try:
        fn, takes_k = BUILDERS[name]
    except KeyError:
        raise KSetError(f"unknown construction {name!r}; choose from {', '.join(BUILDERS)}") from None
    if name == "eq2":
        if k is None:
            raise KSetError("eq2 needs --k")
        if n is not None and n != 2 * k + 2:
            raise DomainError(f"eq2 lives at n = 2k + 2 = {2 * k + 2}, got n={n}")
        return fn(k)
    if n is None:
        raise KSetError(f"{name} needs --n")
    if takes_k:
        if k is None:
            raise KSetError(f"{name} needs --k")
        return fn(n, k)
    if k is not None and k != (2 if name == "star-k2" else 3):
        raise DomainError(f"{name} is fixed at k = {2 if name == 'star-k2' else 3}")
    return fn(n)
