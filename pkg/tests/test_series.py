from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from stablepairs.errors import SeriesError
from stablepairs.series import (
    BpsSpectrum,
    QLaurent,
    ULaurent,
    bps_extract,
    bps_reconstruct,
    series_add,
    series_mul,
    series_scale,
    sin_power,
    two_minus_two_cos,
    u_transform,
    x_power_expand,
)

spectra = st.dictionaries(st.integers(1, 8), st.integers(-10, 10), max_size=8)


def test_x_power_expand():
    assert x_power_expand(0) == QLaurent({0: 1})
    assert x_power_expand(2).coeffs == {-2: 1, 0: 2, 2: 1}
    assert x_power_expand(4).coeffs == {-4: 1, -2: 4, 0: 6, 2: 4, 4: 1}
    assert all(x_power_expand(e).is_palindromic() for e in range(12))
    with pytest.raises(SeriesError):
        x_power_expand(-2)


def test_str_rendering():
    assert str(x_power_expand(2).scale(3)) == "3*q^(-1) + 6*q^(0) + 3*q^(1)"
    assert str(QLaurent({1: -2}, 1)) == "t^1*(-2*q^(1/2))"
    assert str(QLaurent()) == "0"


def test_bps_extract_examples():
    assert bps_extract(x_power_expand(0).scale(3)) == BpsSpectrum({1: 3})
    P = x_power_expand(4).scale(2) + x_power_expand(0).scale(-1)
    assert bps_extract(P).entries == {3: 2, 1: -1}
    assert bps_extract(QLaurent()).entries == {}
    assert bps_extract(QLaurent({0: 1}, 2)).to_json() == {"t_power": 2, "n": {"1": 1}}


def test_bps_extract_rejects_non_palindromic():
    with pytest.raises(SeriesError, match="q <-> 1/q"):
        bps_extract(QLaurent({2: 1}))


def test_bps_extract_rejects_odd_x_power():
    with pytest.raises(SeriesError, match="even"):
        bps_extract(x_power_expand(3))


def test_bps_reconstruct_rejects_genus_zero():
    with pytest.raises(SeriesError):
        bps_reconstruct(BpsSpectrum({0: 1}))


@settings(max_examples=100, deadline=None)
@given(spectra, st.integers(-3, 3))
def test_bps_roundtrip(entries, t):
    spec = BpsSpectrum(entries, t)
    assert bps_extract(bps_reconstruct(spec)) == spec


def test_two_minus_two_cos():
    s = two_minus_two_cos(6)
    assert s.coeffs == {2: 1, 4: Fraction(-1, 12), 6: Fraction(1, 360)}


def test_u_transform_examples():
    assert u_transform(x_power_expand(0), 10) == ULaurent({0: 1}, 10)
    assert u_transform(x_power_expand(2), 6) == two_minus_two_cos(6)
    assert u_transform(QLaurent({0: 5}, 3), 4).t_power == 3


@settings(max_examples=30, deadline=None)
@given(spectra, spectra)
def test_u_transform_is_ring_morphism(a, b):
    P, Q = bps_reconstruct(BpsSpectrum(a)), bps_reconstruct(BpsSpectrum(b))
    N = 14
    assert u_transform(P + Q, N) == u_transform(P, N) + u_transform(Q, N)
    # products of x^(2g-2) with g >= 1 stay in the even part
    assert u_transform(P * Q, N) == (u_transform(P, N) * u_transform(Q, N)).truncate(N)


def sympy_sin_power(e, order):
    u = sympy.Symbol("u")
    ser = sympy.series((2 * sympy.sin(u / 2)) ** e, u, 0, order + 1).removeO()
    poly = sympy.Poly(sympy.expand(ser * u ** max(0, -e)), u)
    out = {}
    for (k,), c in poly.terms():
        out[k - max(0, -e)] = Fraction(int(sympy.numer(c)), int(sympy.denom(c)))
    return out


@pytest.mark.parametrize("e", [-6, -4, -2, 0, 2, 4, 8])
def test_sin_power_against_sympy(e):
    assert sin_power(e, 12).coeffs == sympy_sin_power(e, 12)


def test_sin_power_minus_two():
    s = sin_power(-2, 4)
    assert s.coeffs == {-2: 1, 0: Fraction(1, 12), 2: Fraction(1, 240), 4: Fraction(1, 6048)}


def test_sin_power_odd():
    with pytest.raises(SeriesError, match="odd"):
        sin_power(3)


@pytest.mark.parametrize("h", range(1, 11))
def test_u_transform_matches_sin_power(h):
    assert u_transform(x_power_expand(2 * h - 2), 24) == sin_power(2 * h - 2, 24)


def test_qlaurent_arithmetic():
    a = QLaurent({0: 1, 2: 3})
    b = QLaurent({-2: 2})
    assert series_add(a, b).coeffs == {-2: 2, 0: 1, 2: 3}
    assert series_mul(a, b).coeffs == {-2: 2, 0: 6}
    assert series_scale(a, -2).coeffs == {0: -2, 2: -6}
    assert (a - a).is_zero()
    assert series_mul(QLaurent({0: 1}, 1), QLaurent({0: 1}, 2)).t_power == 3


def test_qlaurent_t_power_mismatch():
    with pytest.raises(SeriesError):
        QLaurent({0: 1}, 0) + QLaurent({0: 1}, 1)


def test_ulaurent_inverse():
    x2 = two_minus_two_cos(16)
    inv = x2.inverse()
    assert (x2 * inv).truncate(12) == ULaurent({0: 1}, 12)
    assert inv.min_order == -2


def test_ulaurent_order_bookkeeping():
    a = ULaurent({0: 1, 1: 1}, 5)
    b = ULaurent({-2: 1}, 5)
    assert (a * b).order == 3
    assert (a + b).order == 5
    with pytest.raises(SeriesError):
        a.coefficient(6)
    with pytest.raises(SeriesError):
        ULaurent({}, 5).inverse()


def test_ulaurent_str():
    assert str(ULaurent({-2: 1, 0: Fraction(1, 12)}, 1)) == "1*u^-2 + 1/12*u^0 + O(u^2)"
