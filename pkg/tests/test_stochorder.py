import numpy as np
import pytest

from gmorder import archimedean as ar
from gmorder import extremes as ex
from gmorder import stochorder as so
from gmorder.harness.counterexamples import COUNTEREXAMPLES
from gmorder.stochorder import Grid
from gmorder.verdicts import Status

G = Grid(0.0, 10.0, 500)


def expo(rate):
    return {
        "survival": so.curve("survival", lambda t: np.exp(-rate * np.asarray(t)), lambda t: -rate * np.asarray(t)),
        "density": so.curve("density", lambda t: rate * np.exp(-rate * np.asarray(t)),
                            lambda t: np.log(rate) - rate * np.asarray(t)),
        "hazard": so.curve("hazard", lambda t: np.full_like(np.asarray(t, float), rate)),
    }


def test_grid():
    g = Grid(0, 2, 16)
    v = g.values()
    assert v[0] == 0 and v[-1] == 2 and v.size == 16 and np.all(np.diff(v) > 0)
    lg = Grid(0, 2, 32, "log").values()
    assert lg[0] == 0 and np.all(np.diff(lg) > 0)
    assert np.all(np.diff(Grid(0.1, 2, 20, "log").values()) > 0)
    for bad in [dict(x_min=1, x_max=1), dict(x_min=-1, x_max=1), dict(points=10), dict(spacing="cubic"),
                dict(x_max=float("inf"))]:
        with pytest.raises(ValueError):
            Grid(**{"x_min": 0, "x_max": 1, **bad})
    with pytest.raises(ValueError):
        so.check_st(expo(1)["survival"], expo(2)["survival"], [0, 2, 1])


def test_combine():
    H, V, I = Status.HOLDS, Status.VIOLATED, Status.INCONCLUSIVE
    assert so.combine(H, V) is H
    assert so.combine(V, H) is Status.HOLDS_REVERSED
    assert so.combine(V, I) is V
    assert so.combine(I, V) is I


@pytest.mark.parametrize("rel,kind", [("st", "survival"), ("hr", "survival"), ("rh", "survival"),
                                      ("lr", "density"), ("R-hr", "hazard")])
def test_exponential_pairs(rel, kind):
    fast, slow = expo(2)[kind], expo(1)[kind]
    v = so.CHECKERS[rel](fast, slow, G)
    if rel == "R-hr":
        # constant hazard ratio: both directions hold
        assert v.forward is Status.HOLDS and v.reverse is Status.HOLDS
    else:
        assert v.status is Status.HOLDS and v.forward is Status.HOLDS
        back = so.CHECKERS[rel](slow, fast, G)
        assert back.status is Status.HOLDS_REVERSED and back.forward is not Status.HOLDS
        assert back.witness is not None


def test_reflexive_on_every_relation():
    pops = [ex.from_vectors((0.1, 20), (0.2, 0.1), (0.6, 0.5)),
            ex.from_vectors((0.3, 2), (1, 0.4), (0.1, 0.5), shock_p=(0.5, 0.8)),
            ex.from_vectors((0.3, 2), (1, 0.4), (0.1, 0.5), copula=ar.clayton(2))]
    for pop in pops:
        for rel in so.RELATIONS:
            for extreme in ("min", "max"):
                if rel == "R-hr" and (extreme == "max" or pop.regime == "dependent"):
                    continue
                v = so.compare(rel, pop, pop, extreme)
                assert v.status is Status.HOLDS, (rel, extreme, pop.regime, v.witness)
                assert v.forward is Status.HOLDS and v.reverse is Status.HOLDS


def test_theorem4_example_hr():
    X = ex.from_vectors((3, 1), (1, 0.5), (1, 1))
    Y = ex.from_vectors((2, 2), (1, 0.5), (1, 1))
    v = so.compare("hr", X, Y, "min")
    assert v.status is Status.HOLDS
    assert v.notes["hazard_dominance"] == "HOLDS"


def test_rh_f_and_f_squared():
    F = lambda t: 1 - np.exp(-np.asarray(t))
    A = so.curve("cdf", F)
    B = so.curve("cdf", lambda t: F(t) ** 2)
    assert so.check_rh(A, B, Grid(0, 20, 400)).status is Status.HOLDS


def test_gompertz_ageing_faster():
    A = ex.extreme_curve(ex.from_vectors(1, 2, 0), "min-hazard")
    B = ex.extreme_curve(ex.from_vectors(1, 1, 0), "min-hazard")
    v = so.check_ageing_faster(A, B, Grid(0, 5, 300))
    assert v.status is Status.HOLDS and v.forward is Status.HOLDS and v.reverse is Status.VIOLATED


def test_violated_witness_exceeds_ten_tol():
    for ce in COUNTEREXAMPLES.values():
        X, Y = ce.populations()
        v = so.compare(ce.relation, X, Y, ce.extreme)
        assert v.status is Status.VIOLATED
        assert v.witness["excess"] > 10 and v.reverse_witness["excess"] > 10


def test_st_sign_change_note():
    ce = COUNTEREXAMPLES["CE-MAX-ST-1"]
    X, Y = ce.populations()
    v = so.compare("st", X, Y, "max")
    lo, hi = v.notes["sign_change"]
    assert 0.40 < lo < hi < 0.45
    fine = np.linspace(lo, hi, 2001)
    d = ex.max_cdf(X, fine) - ex.max_cdf(Y, fine)
    assert d[0] * d[-1] < 0


def test_ratio_checks_trim_underflow():
    X = ex.from_vectors((1, 2), (1, 1), (5, 5))
    Y = ex.from_vectors((1, 2), (1, 1), (4, 6))
    v = so.compare("hr", X, Y, "min", Grid(0, 200, 400))
    assert v.trimmed is not None and v.trimmed[1] == 200


def test_overflow_is_inconclusive():
    X = ex.from_vectors(1, 2, 0)
    v = so.compare("st", X, X, "min", Grid(0, 1000, 100))
    assert v.status is Status.INCONCLUSIVE and "reason" in v.notes


def test_shock_atom_enters_hr_through_zero_minus():
    base = dict(alpha=(0.5, 1.0), beta=(0.3, 0.6), lam=(0.2, 0.1))
    X = ex.from_vectors(**base, shock_p=(0.5, 0.5))
    Y = ex.from_vectors(**base, shock_p=(0.9, 0.9))
    # identical continuous parts; the jump at 0 is larger for X, so X <=hr Y
    v = so.compare("hr", X, Y, "min", Grid(0, 5, 200))
    assert v.status is Status.HOLDS
    back = so.compare("hr", Y, X, "min", Grid(0, 5, 200))
    assert back.forward is Status.VIOLATED and back.witness["x_prev_label"] == "0-"


def test_hierarchy_on_random_pairs():
    r = np.random.default_rng(0)
    seen_lr = 0
    for _ in range(150):
        X = ex.from_vectors(r.uniform(0.05, 5, 2), r.uniform(0.05, 2, 2), r.uniform(0.05, 5, 2))
        Y = ex.from_vectors(r.uniform(0.05, 5, 2), r.uniform(0.05, 2, 2), r.uniform(0.05, 5, 2))
        g = so.default_grid(ex.extreme_curve(X, "min-survival"), ex.extreme_curve(Y, "min-survival"), 500)
        for ext in ("min", "max"):
            lr = so.compare("lr", X, Y, ext, g).forward
            hr = so.compare("hr", X, Y, ext, g).forward
            rh = so.compare("rh", X, Y, ext, g).forward
            st = so.compare("st", X, Y, ext, g).forward
            if lr is Status.HOLDS:
                seen_lr += 1
                assert hr is Status.HOLDS and rh is Status.HOLDS
            if hr is Status.HOLDS or rh is Status.HOLDS:
                assert st is Status.HOLDS
    assert seen_lr > 0


def test_hr_ratio_and_hazard_dominance_agree():
    r = np.random.default_rng(1)
    for _ in range(200):
        X = ex.from_vectors(r.uniform(0.05, 5, 3), r.uniform(0.05, 2, 3), r.uniform(0.05, 5, 3))
        Y = ex.from_vectors(r.uniform(0.05, 5, 3), r.uniform(0.05, 2, 3), r.uniform(0.05, 5, 3))
        v = so.compare("hr", X, Y, "min", None)
        assert "cross_check" not in v.notes


@pytest.mark.parametrize("ce_id", list(COUNTEREXAMPLES))
def test_counterexamples_stable_under_refinement(ce_id):
    ce = COUNTEREXAMPLES[ce_id]
    X, Y = ce.populations()
    base = so.default_grid(ex.extreme_curve(X, "min-survival" if ce.extreme == "min" else "max-cdf"),
                           ex.extreme_curve(Y, "min-survival" if ce.extreme == "min" else "max-cdf"), 500)
    for pts in (500, 2000, 8000):
        g = Grid(0, base.x_max, pts)
        assert so.compare(ce.relation, X, Y, ce.extreme, g).status is Status.VIOLATED


def test_curve_kind_and_errors():
    assert so.curve_kind("st", "min") == "min-survival"
    assert so.curve_kind("lr", "max") == "max-density"
    with pytest.raises(ValueError):
        so.curve_kind("R-hr", "max")
    with pytest.raises(ValueError):
        so.curve_kind("xx", "min")
    with pytest.raises(ValueError):
        so.compare("xx", None, None)
    with pytest.raises(ValueError):
        so.check_lr(expo(1)["survival"], expo(1)["survival"], G)


def test_curve_table():
    ce = COUNTEREXAMPLES["CE-MIN-LR-A"]
    X, Y = ce.populations()
    header, rows, trimmed = so.curve_table("lr", X, Y, "min", Grid(0, 3, 300))
    assert header == ["x", "A_min-density", "B_min-density", "ratio"]
    assert np.all(np.isfinite(rows)) and np.all(np.diff(rows[:, 0]) > 0)
    ratio = rows[:, 3]
    assert np.any(np.diff(ratio) > 0) and np.any(np.diff(ratio) < 0)
    h, rows, _ = so.curve_table("st", X, Y, "min", Grid(0, 3, 50))
    np.testing.assert_allclose(rows[:, 3], rows[:, 1] - rows[:, 2])


def test_verdict_serialisation():
    v = so.check_st(expo(2)["survival"], expo(1)["survival"], G)
    d = v.to_dict()
    assert d["status"] == "HOLDS" and d["forward"] == "HOLDS" and d["reverse"] == "VIOLATED"
    assert v.holds("le") and not v.holds("ge")
