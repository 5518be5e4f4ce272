import json

import pytest

from kset_stats import formulas as F
from kset_stats.core import GroupKind, KSetError, SetSequence, is_irredundant, is_minimal_base
from kset_stats.search import SearchConfig, compute, compute_b, compute_B, compute_H, compute_I, compute_stat

S, A = GroupKind.SYM, GroupKind.ALT


@pytest.mark.parametrize("n,k,kind,v", [(5, 2, S, 4), (4, 2, A, 2), (6, 3, S, 4)])
def test_compute_I(n, k, kind, v):
    r = compute_I(SearchConfig.make(n, k, kind, "I"))
    assert r.value == v and r.exhausted
    assert isinstance(r.witness, SetSequence) and len(r.witness) == v
    assert is_irredundant(r.witness, kind, require_base=True)


@pytest.mark.parametrize("n,k,kind,v", [(5, 2, S, 3), (8, 3, S, 6), (7, 2, A, 4)])
def test_compute_H(n, k, kind, v):
    assert compute_H(SearchConfig.make(n, k, kind, "H")).value == v


@pytest.mark.parametrize("n,k,kind,v", [(5, 2, S, 3), (7, 3, S, 4)])
def test_compute_B(n, k, kind, v):
    r = compute_B(SearchConfig.make(n, k, kind, "B"))
    assert r.value == v and is_minimal_base(r.witness, kind)


def test_compute_B_alt_8_3_lies_in_sandwich():
    r = compute_B(SearchConfig.make(8, 3, A, "B"))
    assert r.value in F.alt_BH_value(8, 3)
    assert r.value == F.RESOLVED_ALT_BH[(8, 3)]


@pytest.mark.parametrize("n", range(2, 9))
def test_compute_b_points(n):
    assert compute_b(SearchConfig.make(n, 1, S, "b")).value == n - 1


def test_compute_b_examples():
    assert compute_b(SearchConfig.make(5, 2, S, "b")).value == 3
    r = compute_b(SearchConfig.make(4, 2, A, "b"))
    assert r.value == 2 and r.witness.as_lists() == [[1, 2], [1, 3]]


def test_config_validation():
    with pytest.raises(KSetError):
        SearchConfig.make(5, 2, S, "X")
    with pytest.raises(KSetError):
        SearchConfig.make(5, 3, S, "I")
    with pytest.raises(KSetError):
        SearchConfig.make(5, 2, S, "I", node_budget=0)
    with pytest.raises(KSetError):
        compute_H(SearchConfig.make(5, 2, S, "I"))


@pytest.mark.parametrize("stat,bound", [("I", "lower"), ("H", "lower"), ("B", "lower"), ("b", "upper")])
def test_budget_exhaustion_returns_bound(stat, bound):
    r = compute_stat(9, 4, S, stat, node_budget=5)
    assert not r.exhausted and r.bound == bound
    assert r.nodes_explored <= 6


def test_exhausted_upper_bound_still_a_valid_base():
    r = compute_stat(7, 3, A, "b", node_budget=2)
    assert is_minimal_base(r.witness, A)
    assert r.value >= compute_stat(7, 3, A, "b").value


@pytest.mark.parametrize("kind", [S, A])
@pytest.mark.parametrize("stat", ["b", "B", "H", "I"])
@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 8) for k in range(1, n // 2 + 1)])
def test_fix_first_does_not_change_values(n, k, kind, stat):
    a = compute_stat(n, k, kind, stat)
    b = compute_stat(n, k, kind, stat, fix_first=False)
    assert a.exhausted and b.exhausted
    assert a.value == b.value


@pytest.mark.parametrize("stat", ["b", "B", "H", "I"])
def test_deterministic_reports_are_identical(stat):
    runs = [json.dumps(compute_stat(8, 3, A, stat).to_dict(), sort_keys=True) for _ in range(2)]
    assert runs[0] == runs[1]


@pytest.mark.parametrize("stat", ["B", "H"])
def test_parallel_run_matches_sequential(stat):
    seq = compute_stat(8, 4, S, stat)
    par = compute_stat(8, 4, S, stat, threads=2, deterministic=False)
    assert (par.value, par.witness) == (seq.value, seq.witness)


def test_report_to_dict():
    d = compute(SearchConfig.make(5, 2, S, "I")).to_dict(timing=True)
    assert d["value"] == 4 and d["ordered"] and "elapsed" in d
    assert "elapsed" not in compute(SearchConfig.make(5, 2, S, "I")).to_dict()


def test_alt_k3_family_is_minimal_but_not_minimum():
    from kset_stats.constructions import alt_star_base_k3
    from kset_stats.oracle import brute_force_stat
    assert compute_b(SearchConfig.make(6, 3, A, "b")).value == alt_star_base_k3(6).size
    for n in (7, 8):
        r = compute_b(SearchConfig.make(n, 3, A, "b"))
        assert r.exhausted and r.value == 3 < alt_star_base_k3(n).size
    assert brute_force_stat(7, 3, A, "b")[0] == 3
