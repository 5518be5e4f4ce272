"""Base size, height and irredundant bases of S_n and A_n acting on k-sets."""

from .core import (
    DomainError,
    GroundParams,
    GroupKind,
    KSetError,
    Partition,
    SetFamily,
    SetSequence,
    StabDescriptor,
    Subset,
    complement_member,
    is_base,
    is_forest,
    is_independent,
    is_irredundant,
    is_minimal_base,
    partition_of,
    refine,
    splits,
    stab_order,
)
from .search import SearchConfig, StatReport, compute, compute_b, compute_B, compute_H, compute_I

__version__ = "0.1.0"
