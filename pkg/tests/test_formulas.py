import pytest

from kset_stats import formulas as F
from kset_stats.core import DomainError, KSetError, Partition, SetFamily, Subset, partition_of, refine


def valid_pairs(n_max):
    return [(n, k) for n in range(2, n_max + 1) for k in range(1, n // 2 + 1)]


@pytest.mark.parametrize("n,k,v", [(5, 2, 4), (6, 2, 4), (6, 3, 4)])
def test_predicted_I_sym(n, k, v):
    assert F.predicted_I_sym(n, k) == v


@pytest.mark.parametrize("n,k,v", [(5, 2, 3), (8, 3, 6), (7, 3, 4)])
def test_predicted_BH_sym(n, k, v):
    assert F.predicted_BH_sym(n, k) == v


@pytest.mark.parametrize("n,k,v", [(5, 2, 3), (4, 2, 2), (6, 3, 3)])
def test_predicted_I_alt(n, k, v):
    assert F.predicted_I_alt(n, k) == v


def test_alt_BH_value():
    assert F.alt_BH_value(7, 2) == F.ValueOrRange.exact(4)
    assert F.alt_BH_value(4, 2) == F.ValueOrRange.exact(2)
    r = F.alt_BH_value(8, 3)
    assert not r.known and (r.lower, r.upper) == (5, 6)
    assert not F.alt_BH_value(10, 4).known


@pytest.mark.parametrize("n,v", [(4, 4), (8, 10), (3, 2)])
def test_max_chain_length_sym(n, v):
    assert F.max_chain_length_sym(n) == v


def test_lemma_i_bound():
    assert F.lemma_i_bound(0, 1, 5) == 4
    assert F.lemma_i_bound(2, 3, 7) == 6
    assert F.lemma_i_bound(3, 4, 4) == 3
    with pytest.raises(DomainError):
        F.lemma_i_bound(0, 3, 2)


def test_chain_divisibility():
    # chain from 4-sets of {1..6}: gcd(6, 4) = 2
    p1 = partition_of(SetFamily.of(6, [[1, 2, 3, 4]]))
    p2 = refine(p1, Subset(6, (1, 2, 5, 6)))
    assert p1.parts == ((1, 2, 3, 4), (5, 6))
    assert F.chain_divisibility_holds([p1, p2], 2)
    assert F.chain_divisibility_holds([Partition(4, ((1, 2), (3, 4)))], 2)
    assert not F.chain_divisibility_holds([Partition(4, ((1,), (2, 3, 4)))], 2)


def test_chain_divisibility_rejects_bad_chain():
    a = Partition(4, ((1, 2, 3, 4),))
    b = Partition(4, ((1,), (2,), (3, 4)))
    with pytest.raises(KSetError):
        F.chain_divisibility_holds([a, b], 1)


def test_domain_guard():
    for bad in [(5, 3), (4, 0), (1, 1)]:
        with pytest.raises(DomainError):
            F.predicted_I_sym(*bad)
        with pytest.raises(DomainError):
            F.alt_BH_value(*bad)


def test_BH_not_above_I():
    for n, k in valid_pairs(32):
        assert F.predicted_BH_sym(n, k) <= F.predicted_I_sym(n, k)


def test_I_not_above_chain_length():
    for n, k in valid_pairs(32):
        assert F.predicted_I_sym(n, k) <= F.max_chain_length_sym(n)


def test_alt_I_is_sym_I_minus_one():
    for n, k in valid_pairs(40):
        if n >= 5:
            assert F.predicted_I_alt(n, k) == F.predicted_I_sym(n, k) - 1
    assert F.predicted_I_alt(4, 2) == 2


def test_alt_exact_values_inside_sandwich():
    for n, k in valid_pairs(40):
        v = F.alt_BH_value(n, k)
        assert v.lower >= F.predicted_BH_sym(n, k) - 1
        assert v.upper <= F.predicted_BH_sym(n, k)


def test_base_size_range():
    r = F.base_size_range(8, 4)
    assert (r.lower, r.upper) == (3, 5)
    assert F.formula_value("b", True, 2, 1).upper == 0
    assert F.formula_value("I", False, 7, 3).value == 6
    assert F.RESOLVED_ALT_BH[(8, 3)] in F.alt_BH_value(8, 3)
