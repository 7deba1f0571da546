from collections import Counter
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from gvseries.kernels import sin_kernel
from gvseries.lattice import LatticeClass
from gvseries.localcurves import (Partition, g_series, hook_lengths, inner_sum, kernel_order,
                                  local_bps, partitions)

import oracles


def D(d):
    return LatticeClass((d,))


def test_small_partition_lists():
    assert [p.parts for p in partitions(1)] == [(1,)]
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("d", range(1, 31))
def test_partition_count_matches_pentagonal_recurrence(d):
    ps = partitions(d)
    assert len(ps) == oracles.partition_count(d)
    assert len(set(ps)) == len(ps)
    assert all(p.size == d for p in ps)


def test_p10():
    assert len(partitions(10)) == 42


@pytest.mark.parametrize("parts, hooks", [((1,), [1]), ((2, 1), [3, 1, 1]), ((3,), [3, 2, 1])])
def test_hook_examples(parts, hooks):
    assert sorted(hook_lengths(Partition(parts))) == sorted(hooks)


@pytest.mark.parametrize("d", range(1, 9))
def test_hook_formula_counts_tableaux(d):
    for mu in partitions(d):
        hooks = hook_lengths(mu)
        assert len(hooks) == d
        assert factorial(d) % prod(hooks) == 0
        assert factorial(d) // prod(hooks) == oracles.count_standard_tableaux(mu.parts)


@given(st.integers(1, 12).flatmap(lambda d: st.sampled_from(partitions(d))))
def test_conjugation_preserves_hooks(mu):
    assert Counter(hook_lengths(mu)) == Counter(hook_lengths(mu.conjugate()))
    assert mu.conjugate().conjugate() == mu


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_inner_sum_conjugation_invariant():
    # summing over conjugates instead gives the same series
    h, d, order = 2, 5, 12
    direct = None
    for mu in partitions(d):
        term = None
        for hook in hook_lengths(mu.conjugate()):
            k = sin_kernel(hook, h, order)
            term = k if term is None else (term * k).truncate(order)
        direct = term if direct is None else direct + term
    assert direct.agrees_with(inner_sum(h, d, order))


def test_genus_one_series_is_log_of_partition_generating_function():
    G = g_series(1, 8, 4)
    for d in range(1, 9):
        assert G[D(d)].coeffs == {0: oracles.divisor_sum_over_d(d)}


def test_genus_zero_single_box():
    G = g_series(0, 1, 4)
    assert G.support() == [D(1)]
    assert G[D(1)].coeffs == oracles.kernel(1, 0, 4)


def test_genus_two_degree_one_coefficient():
    G = g_series(2, 3, 8)
    assert G[D(1)].coeffs == oracles.kernel(1, 2, 8)


def test_genus_zero_matches_multicover_expansion():
    # G_0 = sum_k q^k / (k (2 sin(kt/2))^2)
    T = 6
    G = g_series(0, 5, T)
    for d in range(1, 6):
        expect = {e: c / d for e, c in oracles.kernel(d, 0, T).items()}
        assert G[D(d)].coeffs == expect


def test_budget_rule():
    assert kernel_order(0, 6, 4) == 16
    assert kernel_order(3, 6, 4) == 4


def test_local_bps_genus_zero_and_one():
    L0 = local_bps(0, 6, 6)
    assert L0.entries == {(1, 0): 1}
    L1 = local_bps(1, 6, 6)
    assert L1.entries == {(d, 1): 1 for d in range(1, 7)}


def test_local_bps_genus_two_low_degree():
    # degree one is the single genus-two kernel
    L = local_bps(2, 3, 20)
    assert {g: c for (d, g), c in L.entries.items() if d == 1} == {2: 1}
    assert L.integrality_ok
    assert all(L.observed_genus_cutoffs[d] <= L.genus_window for d in (1, 2, 3))
