"""Acceptance criteria, one pass/fail line each (shown in the terminal summary)."""

import contextlib
import math
import time

import numpy as np
import pytest

from gmorder import archimedean as ar
from gmorder import extremes as ex
from gmorder import gm
from gmorder.cli import main
from gmorder.gm import GMParams
from gmorder.harness import COUNTEREXAMPLES, DEFAULT_IDS, batch_verify, run_counterexample
from gmorder.harness.theorems import RANGES
from gmorder.verdicts import Status

REPORT = {}
_C2 = {}


@contextlib.contextmanager
def criterion(k, title):
    try:
        yield
    except BaseException as exc:
        REPORT[str(k)] = f"criterion {k}: FAIL  {title}: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}"
        print(REPORT[str(k)])
        raise
    REPORT[str(k)] = f"criterion {k}: PASS  {title}"
    print(REPORT[str(k)])


def random_population(rng, n, **kw):
    draw = lambda key: rng.uniform(*RANGES[key], size=n)
    return ex.from_vectors(draw("alpha"), draw("beta"), draw("lam"), **kw)


# 1 ----------------------------------------------------------------------------


def test_criterion_1_counterexamples():
    with criterion(1, "8 counterexamples VIOLATED both ways, excess > 10, < 1 s each"):
        for ce in COUNTEREXAMPLES:
            t0 = time.perf_counter()
            rep = run_counterexample(ce, points=2000, tol_abs=1e-9, tol_rel=1e-9)
            dt = time.perf_counter() - t0
            assert rep.reproduced, f"{ce}: {rep.verdict.forward}/{rep.verdict.reverse}"
            assert rep.verdict.witness["excess"] > 10 and rep.verdict.reverse_witness["excess"] > 10, ce
            assert dt < 1.0, f"{ce} took {dt:.2f} s"
        rows = np.asarray(run_counterexample("CE-MAX-ST-1").rows)
        d = rows[:, -1]
        assert d.max() > 0 and d.min() < 0, "no sign change for CE-MAX-ST-1"


# 2 ----------------------------------------------------------------------------


@pytest.fixture(scope="module")
def theorem_batch():
    t0 = time.perf_counter()
    s = batch_verify(DEFAULT_IDS, trials=200, seed=0, ns=(2, 3, 5), points=2000, tol=1e-9)
    return s, time.perf_counter() - t0


def _c2_line():
    bad = [f"{k} {v}/200" for k, v in _C2.items() if v != 200]
    done = len(_C2)
    title = f"theorem suite 200/200 HOLDS ({done}/{len(DEFAULT_IDS)} theorems run)"
    if bad:
        return f"criterion 2: FAIL  {title}: below 200/200: {', '.join(bad)}"
    return f"criterion 2: PASS  {title}"


def test_criterion_2_runtime(theorem_batch):
    _, dt = theorem_batch
    assert dt < 300, f"batch took {dt:.0f} s"


@pytest.mark.parametrize("tid", DEFAULT_IDS)
def test_criterion_2_theorem(theorem_batch, tid):
    entry = theorem_batch[0]["theorems"][tid]
    _C2[tid] = entry["holds"]
    REPORT["2"] = _c2_line()
    counts = {k: v for k, v in entry["counts"].items() if v}
    assert entry["holds"] == 200, f"{tid}: {counts}"


# 3 ----------------------------------------------------------------------------


def test_criterion_3_hazard_vs_log_survival():
    with criterion(3, "hazard sum vs finite-difference log survival, 1e-6 relative"):
        rng = np.random.default_rng(3)
        worst = 0.0
        for _ in range(50):
            pop = random_population(rng, int(rng.integers(2, 9)))
            hi = ex.default_x_hi(pop, "min")
            x = np.linspace(0, hi, 502)[1:-1]
            h = 1e-5 * np.maximum(x, 1e-3)
            fd = -(ex.min_log_survival(pop, x + h) - ex.min_log_survival(pop, x - h)) / (2 * h)
            haz = ex.min_hazard(pop, x)
            worst = max(worst, float(np.max(np.abs(fd - haz) / np.abs(haz))))
        assert worst < 1e-6, f"worst relative error {worst:.2e}"


# 4 ----------------------------------------------------------------------------


def test_criterion_4_copula_reduction():
    with criterion(4, "independence copula equals independent products, 1e-12"):
        rng = np.random.default_rng(4)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            a, b, l = (rng.uniform(*RANGES[k], size=n) for k in ("alpha", "beta", "lam"))
            dep = ex.from_vectors(a, b, l, copula=ar.independence())
            ind = ex.from_vectors(a, b, l)
            x = np.linspace(0, max(ex.default_x_hi(ind, "max"), 1e-3), 200)
            np.testing.assert_allclose(ex.min_survival(dep, x), ex.min_survival(ind, x), rtol=1e-12, atol=1e-12)
            np.testing.assert_allclose(ex.max_cdf(dep, x), ex.max_cdf(ind, x), rtol=1e-12, atol=1e-12)


# 5 ----------------------------------------------------------------------------


def test_criterion_5_copula_predicates():
    with criterion(5, "clayton(1)/clayton(2) super-additive and dominated; reverse witnessed"):
        c1, c2 = ar.clayton(1.0), ar.clayton(2.0)
        assert ar.super_additive_compose(c1, c2).status is Status.HOLDS
        u = ar.default_u_grid(2, 50)
        assert u.shape == (2500, 2)
        assert ar.copula_dominates(c1, c2, u).status is Status.HOLDS
        rev = ar.copula_dominates(c2, c1, u)
        assert rev.status is Status.VIOLATED and rev.witness is not None
        assert rev.witness["c1"] > rev.witness["c2"]


# 6 ----------------------------------------------------------------------------


def test_criterion_6_shock_atoms():
    with criterion(6, "shock boundary masses exact"):
        rng = np.random.default_rng(6)
        for _ in range(100):
            n = int(rng.integers(1, 9))
            p = rng.uniform(1e-3, 1.0, size=n)
            pop = random_population(rng, n, shock_p=p)
            assert ex.max_cdf(pop, 0.0) == math.prod(1 - v for v in pop.shock_p)
            assert ex.extreme_curve(pop, "min-survival").atom_at_zero == math.prod(pop.shock_p)
            assert ex.min_survival(pop, 1e-300) == pytest.approx(math.prod(pop.shock_p), rel=1e-15)


# 7 ----------------------------------------------------------------------------


def test_criterion_7_sampling_ks():
    with criterion(7, "KS statistic of 1e5 samples below 1.63/sqrt(n), 20 seeds"):
        n = 100_000
        k = np.arange(1, n + 1)
        bound = 1.63 / math.sqrt(n)
        rng = np.random.default_rng(7)
        worst = 0.0
        for seed in range(20):
            p = GMParams(*(float(rng.uniform(*RANGES[key])) for key in ("alpha", "beta", "lam")))
            x = np.sort(gm.sample(p, seed, n))
            F = gm.cdf(p, x)
            d = max(np.max(k / n - F), np.max(F - (k - 1) / n))
            worst = max(worst, d)
            assert d < bound, f"seed {seed}: D = {d:.5f} >= {bound:.5f}"


# 8 ----------------------------------------------------------------------------


def test_criterion_8_quantile_round_trip():
    with criterion(8, "cdf(quantile(q)) within 1e-10 of q"):
        lo = np.logspace(-6, math.log10(0.5), 60)
        q = np.unique(np.concatenate([lo, 1 - lo]))
        rng = np.random.default_rng(8)
        for _ in range(50):
            p = GMParams(*(float(rng.uniform(*RANGES[key])) for key in ("alpha", "beta", "lam")))
            err = np.max(np.abs(gm.cdf(p, gm.quantile(p, q)) - q))
            assert err <= 1e-10, f"{p}: {err:.2e}"


# 9 ----------------------------------------------------------------------------


def test_criterion_9_verify_determinism(tmp_path):
    with criterion(9, "verify JSON byte-identical under 1 and 8 threads"):
        outs = []
        for threads in ("1", "8"):
            path = tmp_path / f"verify_{threads}.json"
            main(["verify", "--theorem", "all", "--trials", "30", "--seed", "11", "--threads", threads,
                  "--out", str(path)])
            outs.append(path.read_bytes())
        assert outs[0] == outs[1]
