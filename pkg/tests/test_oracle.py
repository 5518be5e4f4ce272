import pytest

from kset_stats.core import GroupKind, SetFamily
from kset_stats.oracle import (
    Permutation,
    ResourceGuardError,
    brute_force_stat,
    enumerate_group,
    stab_order_by_enumeration,
)

S, A = GroupKind.SYM, GroupKind.ALT


@pytest.mark.parametrize("n,kind,size", [(3, S, 6), (4, A, 12), (1, A, 1), (5, S, 120)])
def test_enumerate_group_sizes(n, kind, size):
    assert len(enumerate_group(n, kind)) == size


@pytest.mark.parametrize("n", range(2, 7))
def test_alt_is_half(n):
    assert 2 * len(enumerate_group(n, A)) == len(enumerate_group(n, S))
    assert all(p.is_even for p in enumerate_group(n, A))


def test_guard():
    with pytest.raises(ResourceGuardError):
        enumerate_group(9, S)
    with pytest.raises(ResourceGuardError):
        stab_order_by_enumeration(SetFamily.of(9, [[1]]), S)


def test_stab_order_examples():
    assert stab_order_by_enumeration(SetFamily.of(5, [[1, 2, 3]]), S) == 12
    assert stab_order_by_enumeration(SetFamily.of(4, [[1, 2]]), A) == 2
    assert stab_order_by_enumeration(SetFamily.of(4, [[1, 2], [1, 3]]), A) == 1


def test_setwise_not_pointwise():
    # (12) fixes {1,2} as a point of the k-set action
    swap = Permutation(3, (2, 1, 3))
    assert swap.fixes_setwise(SetFamily.of(3, [[1, 2]]).members[0])
    assert not swap.is_even


def test_brute_force_small_values():
    assert brute_force_stat(4, 2, A, "I")[0] == 2
    assert brute_force_stat(5, 2, S, "H")[0] == 3
    assert brute_force_stat(5, 2, S, "b")[0] == 3
