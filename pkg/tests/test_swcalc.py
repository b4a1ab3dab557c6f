import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import ex33_sw

from stablepairs.errors import PreconditionError
from stablepairs.surface import Hodge, build_explicit
from stablepairs.swcalc import fm_binomial, sw_elliptic, wall_crossing_delta

SPORADIC = {(0, 0): 1, (1, 0): 2, (2, 0): 4, (0, 1): 1}
GRID = [(n, e) for n in range(7) for e in range(3)]


def test_fm_binomial_conventions():
    assert all(fm_binomial(a, 0) == 1 for a in range(-5, 6))
    assert fm_binomial(2, 5) == 0
    assert fm_binomial(-2, 3) == -4


@given(st.integers(-10, 10), st.integers(0, 10))
def test_fm_binomial_pascal(a, b):
    if b:
        assert fm_binomial(a, b) == fm_binomial(a - 1, b) + fm_binomial(a - 1, b - 1)


@given(st.integers(1, 12), st.integers(0, 10))
def test_fm_binomial_negative_upper(a, b):
    assert fm_binomial(-a, b) == (-1) ** b * fm_binomial(a + b - 1, b)


@pytest.mark.parametrize("d", range(10))
def test_weight_d_plus_one(d):
    assert (-1) ** d * fm_binomial(-2, d) == d + 1


def test_fm_binomial_negative_lower():
    with pytest.raises(PreconditionError):
        fm_binomial(3, -1)


@pytest.mark.parametrize("n,e", GRID)
def test_sw_example33(ex33, n, e):
    sw = sw_elliptic(ex33, n * ex33["F1"] + e * ex33["F2"]).value
    expected = SPORADIC.get((n, e), 3 * (n + e) - 3)
    assert sw == expected == ex33_sw(n, e)


def test_sw_example33_named(ex33):
    F1, F2 = ex33["F1"], ex33["F2"]
    assert sw_elliptic(ex33, 2 * F1).value == 4
    res = sw_elliptic(ex33, F1 + F2)
    assert res.value == 3 == ex33.albanese(F1 + F2) - 3
    assert len(res.solutions) == 3


def test_sw_dolgachev_and_rational(dolgachev, rational):
    assert sw_elliptic(dolgachev, 6 * dolgachev.canonical).value == 1
    assert sw_elliptic(rational, 6 * rational.canonical).value == 0


@pytest.mark.parametrize("d", range(6))
def test_sw_hyperelliptic(hyperelliptic, d):
    assert sw_elliptic(hyperelliptic, d * hyperelliptic["F"]).value == int(d == 0)


def test_sw_preconditions(ex33, negative):
    with pytest.raises(PreconditionError, match="beta.F"):
        sw_elliptic(ex33, ex33["X"])
    with pytest.raises(PreconditionError, match="fibration"):
        sw_elliptic(negative, negative["A"])


def test_wall_crossing_dolgachev(dolgachev):
    bp = 6 * dolgachev.canonical
    assert wall_crossing_delta(dolgachev, bp) == 1
    k = dolgachev.canonical
    assert sw_elliptic(dolgachev, bp).value - sw_elliptic(dolgachev, k - bp).value == 1


def test_wall_crossing_example33(ex33):
    assert wall_crossing_delta(ex33, ex33["F1"] + ex33["F2"]) == 3


def test_wall_crossing_q0_negative_chi(negative):
    # chi(2A) = (beta^2 - beta.k)/2 + 1 = 0
    assert wall_crossing_delta(negative, 2 * negative["A"]) == 0
    assert wall_crossing_delta(negative, negative.h2.zero()) == 1


def test_wall_crossing_errors():
    S = build_explicit("pg", ["A"], [], [0], [[0]], Hodge(0, 1, 2, 24))
    with pytest.raises(PreconditionError, match="p_g"):
        wall_crossing_delta(S, S["A"])
    T = build_explicit("q2", ["A"], [], [0], [[0]], Hodge(2, 0, -1, -12))
    with pytest.raises(PreconditionError, match="q"):
        wall_crossing_delta(T, T["A"])


@pytest.mark.parametrize("n,e", GRID)
def test_duality_consistency(ex33, n, e):
    beta = n * ex33["F1"] + e * ex33["F2"]
    dual = ex33.canonical - beta
    assert sw_elliptic(ex33, beta).value - sw_elliptic(ex33, dual).value == wall_crossing_delta(ex33, beta)
