import numpy as np
import pytest

from gmorder import kernels
from gmorder.kernels import available_backends

BACKENDS = available_backends()
PY = BACKENDS["python"]


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")
class TestAgreement:
    cy = BACKENDS.get("cython")

    def test_prng_bit_identical(self):
        for seed in (0, 17, 2**63 + 5):
            assert np.array_equal(PY.splitmix64_uniforms(seed, 5000), self.cy.splitmix64_uniforms(seed, 5000))

    def test_population_log_survival(self):
        r = np.random.default_rng(1)
        for _ in range(20):
            a, b, l = r.uniform(0.05, 20, 4), r.uniform(0, 2, 4), r.uniform(0, 20, 4)
            b[0] = 0.0
            x = np.linspace(0, 5, 301)
            np.testing.assert_allclose(self.cy.population_log_survival(a, b, l, x),
                                       PY.population_log_survival(a, b, l, x), rtol=1e-13, atol=0)

    def test_cumhaz_inverse(self):
        t = np.concatenate([[0.0], np.geomspace(1e-12, 200, 400)])
        for a, b, l in [(0.5, 0.3, 0.2), (20, 2, 0), (0.05, 0, 3), (1e-3, 1.9, 1e-3)]:
            np.testing.assert_allclose(self.cy.gm_cumhaz_inverse(a, b, l, t),
                                       PY.gm_cumhaz_inverse(a, b, l, t), rtol=1e-13, atol=1e-300)

    def test_overflow_signalled_as_nan(self):
        for impl in (PY, self.cy):
            out = impl.gm_cumhaz_inverse(1e-3, 2.0, 0.0, np.array([1e310 / 1e10]))
            assert np.isnan(out).all()


def test_fallback_forced(monkeypatch):
    import importlib
    monkeypatch.setenv("GM_ORDER_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("GM_ORDER_PURE_PYTHON")
        importlib.reload(kernels)
