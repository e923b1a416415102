import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from gmorder import gm
from gmorder.errors import EvaluationError
from gmorder.gm import GMParams

mpmath.mp.dps = 40

params = st.builds(
    GMParams,
    st.floats(0.05, 20), st.floats(0.0, 2.0), st.floats(0.0, 20),
)


def mp_log_survival(a, b, l, x):
    a, b, l, x = (mpmath.mpf(v) for v in (a, b, l, x))
    g = x if b == 0 else mpmath.expm1(b * x) / b
    return -(l * x + a * g)


def test_params_validation():
    with pytest.raises(ValueError):
        GMParams(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        GMParams(1.0, -0.1, 1.0)
    with pytest.raises(ValueError):
        GMParams(1.0, 1.0, float("nan"))
    assert GMParams.from_dict(GMParams(1, 2, 3).to_dict()) == GMParams(1, 2, 3)


def test_hazard_examples():
    assert gm.hazard(GMParams(0.1, 0.2, 0.6), 0.0) == pytest.approx(0.7, abs=1e-15)
    assert gm.hazard(GMParams(1, 1, 0), math.log(2)) == pytest.approx(2.0, rel=1e-15)
    ref = float(20 * mpmath.e + mpmath.mpf("0.5"))
    assert gm.hazard(GMParams(20, 0.1, 0.5), 10.0) == pytest.approx(ref, rel=1e-14)
    assert abs(gm.hazard(GMParams(20, 0.1, 0.5), 10.0) - 54.86563656) < 1e-8


def test_exponent_cap():
    with pytest.raises(EvaluationError):
        gm.hazard(GMParams(1, 2, 0), 351.0)
    with pytest.raises(EvaluationError):
        gm.log_survival(GMParams(1, 2, 0), [0.0, 400.0])


def test_negative_x_rejected():
    with pytest.raises(ValueError):
        gm.survival(GMParams(1, 1, 1), -0.5)


def test_log_survival_examples():
    assert gm.log_survival(GMParams(1, 1, 1), 0.0) == 0.0
    assert gm.log_survival(GMParams(1, 1, 1), 1.0) == pytest.approx(-math.e, rel=1e-15)
    assert gm.log_survival(GMParams(1, 0.0, 0), 2.0) == pytest.approx(-2.0, rel=1e-15)
    # continuity of the beta -> 0 limit
    assert gm.log_survival(GMParams(1, 1e-12, 0), 2.0) == pytest.approx(-2.0, rel=1e-10)


@given(params, st.floats(0, 30))
def test_log_survival_matches_high_precision(p, x):
    if p.beta * x > 700:
        return
    ref = float(mp_log_survival(p.alpha, p.beta, p.lam, x))
    got = gm.log_survival(p, x)
    assert got == pytest.approx(ref, rel=1e-13, abs=1e-300)


def test_pdf_cdf_examples():
    p = GMParams(0.1, 0.2, 0.6)
    assert gm.pdf(p, 0.0) == pytest.approx(0.7, abs=1e-15)
    q = GMParams(1, 1, 0)
    assert gm.pdf(q, 1.0) == pytest.approx(math.e * math.exp(-(math.e - 1)), rel=1e-14)
    assert gm.pdf(GMParams(1, 0, 1000), 1.0) == 0.0  # log survival -1001 underflows
    r = GMParams(1, 1, 1)
    assert gm.cdf(r, 0.0) == 0.0
    assert gm.cdf(r, 50.0) == 1.0
    assert gm.cdf(r, 1.0) == pytest.approx(1 - math.exp(-math.e), rel=1e-15)


def test_cdf_small_argument_is_accurate():
    p = GMParams(1e-3, 0.1, 0.0)
    x = 1e-9
    assert gm.cdf(p, x) == pytest.approx(1e-12, rel=1e-9)


def test_vector_shapes():
    p = GMParams(1, 0.5, 0.2)
    x = np.linspace(0, 3, 12).reshape(3, 4)
    for f in (gm.hazard, gm.log_survival, gm.survival, gm.pdf, gm.cdf):
        assert np.shape(f(p, x)) == (3, 4)
    assert isinstance(gm.cdf(p, 1.0), float)


@given(params)
def test_hazard_is_minus_derivative_of_log_survival(p):
    xs = np.linspace(0.05, 5.0, 40)
    for x in xs:
        h = 1e-5 * max(1.0, x)
        fd = -(gm.log_survival(p, x + h) - gm.log_survival(p, x - h)) / (2 * h)
        assert fd == pytest.approx(gm.hazard(p, x), rel=1e-6)


@given(params)
def test_hazard_nondecreasing_and_positive(p):
    x = np.linspace(0, 10, 200)
    h = gm.hazard(p, x)
    assert np.all(h > 0) and np.all(np.diff(h) >= 0)


@pytest.mark.parametrize("p", [GMParams(0.1, 0.2, 0.6), GMParams(20, 0.1, 0.5),
                               GMParams(0.02, 1.5, 0.0), GMParams(3, 0, 0.4)])
def test_pdf_integrates_to_one(p):
    hi = 1.0
    while gm.survival(p, hi) >= 1e-12:
        hi *= 2
    val, err = integrate.quad(lambda t: gm.pdf(p, t), 0, hi, limit=400, epsabs=1e-13)
    assert val == pytest.approx(1.0, abs=1e-6)


def test_quantile_examples():
    p = GMParams(0.1, 0.2, 0.6)
    assert gm.quantile(p, 0.0) == 0.0
    for x0 in (0.5, 1.0, 5.0):
        assert gm.quantile(p, gm.cdf(p, x0)) == pytest.approx(x0, abs=1e-10)
    assert gm.quantile(GMParams(1, 0, 0), 1 - math.exp(-1)) == pytest.approx(1.0, abs=1e-14)
    for bad in (1.0, -0.1, float("nan")):
        with pytest.raises(ValueError):
            gm.quantile(p, bad)


@given(params, st.floats(0.0, 0.999999))
def test_quantile_round_trip(p, q):
    x = gm.quantile(p, q)
    assert abs(gm.cdf(p, x) - q) <= 1e-12


def test_quantile_monotone():
    p = GMParams(0.5, 1.3, 0.2)
    q = np.linspace(0, 0.999, 500)
    assert np.all(np.diff(gm.quantile(p, q)) > 0)


def test_sample_deterministic_and_nonnegative():
    p = GMParams(0.5, 0.3, 0.2)
    a = gm.sample(p, 42, 1000)
    b = gm.sample(p, 42, 1000)
    assert np.array_equal(a, b)
    assert np.all(a >= 0)
    assert not np.array_equal(a, gm.sample(p, 43, 1000))
    with pytest.raises(ValueError):
        gm.sample(p, 1, 0)


def test_sample_ks():
    p = GMParams(0.3, 0.7, 0.1)
    n = 20_000
    x = np.sort(gm.sample(p, 7, n))
    F = gm.cdf(p, x)
    k = np.arange(1, n + 1)
    d = max(np.max(k / n - F), np.max(F - (k - 1) / n))
    assert d < 1.63 / math.sqrt(n)
