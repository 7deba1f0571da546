import pytest
from hypothesis import given, strategies as st

from gvseries.errors import ValidityExhausted
from gvseries.fano import FanoSeries, fano_bps_from_gw, fano_gw_from_bps
from gvseries.kernels import decompose_in_genus_basis

import oracles


def test_leading_term_only():
    # c1 = 1: genus-zero kernel starts at t^0
    assert fano_bps_from_gw(FanoSeries(1, {1: 7}, 1)) == {0: 7}


def test_zero():
    assert fano_bps_from_gw(FanoSeries(2, {}, 5)) == {}
    assert fano_gw_from_bps(2, {}, 8) == {}


def test_single_kernel_forward():
    gw = fano_gw_from_bps(1, {0: 1}, 6)
    assert gw == {(e + 2) // 2: c for e, c in oracles.kernel(1, 1 + 0, 6).items()} == {1: 1}
    gw = fano_gw_from_bps(2, {1: 1}, 10)
    assert gw == {(e + 2) // 2: c for e, c in oracles.kernel(1, 3, 10).items()}


def test_rejects_terms_below_shift():
    with pytest.raises(ValueError):
        fano_bps_from_gw(FanoSeries(2, {1: 1}, 4))


def test_forward_outside_window():
    with pytest.raises(ValidityExhausted):
        fano_gw_from_bps(3, {2: 1}, 6)


vectors = st.dictionaries(st.integers(0, 8), st.integers(-30, 30).filter(bool), max_size=9)


@given(st.integers(1, 3), vectors)
def test_roundtrip(c1, b):
    T = 2 * (8 + c1) - 2
    gw = fano_gw_from_bps(c1, b, T)
    assert fano_bps_from_gw(FanoSeries(c1, gw, (T + 2) // 2)) == b


@given(st.dictionaries(st.integers(0, 7), st.fractions(max_denominator=6).filter(bool)))
def test_shift_zero_is_genus_basis(gw):
    f = FanoSeries(0, gw, 7)
    assert fano_bps_from_gw(f) == decompose_in_genus_basis(f.as_tpoly())[0]
