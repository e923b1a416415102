"""Majorization pre-orders on real vectors and a numeric Schur-convexity probe.

Notation: ``x_(i)`` is the increasing arrangement, ``x_[i]`` the decreasing
one. ``D+`` is the cone of strictly positive nonincreasing vectors and ``E+``
the strictly positive nondecreasing ones (ties allowed in both).
"""

from dataclasses import dataclass

import numpy as np

from .rng import SplitMix64

#: Slack on partial-sum inequalities and on equality of totals.
SUM_TOL = 1e-12


def _pair(x, y):
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    if x.size == 0:
        raise ValueError("vectors must be non-empty")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("entries must be finite")
    return x, y


def majorizes(x, y, tol=SUM_TOL):
    """True iff ``x`` majorizes ``y``: decreasing partial sums of ``x`` dominate
    and the totals agree."""
    x, y = _pair(x, y)
    cx = np.cumsum(np.sort(x)[::-1])
    cy = np.cumsum(np.sort(y)[::-1])
    return bool(np.all(cx[:-1] >= cy[:-1] - tol) and abs(cx[-1] - cy[-1]) <= tol)


def weak_supermajorizes(x, y, tol=SUM_TOL):
    """True iff every increasing partial sum of ``x`` is <= that of ``y``."""
    x, y = _pair(x, y)
    cx = np.cumsum(np.sort(x))
    cy = np.cumsum(np.sort(y))
    return bool(np.all(cx <= cy + tol))


def weak_submajorizes(x, y, tol=SUM_TOL):
    """True iff every tail sum ``sum_{i>=j} x_(i)`` is >= that of ``y``."""
    x, y = _pair(x, y)
    tx = np.cumsum(np.sort(x)[::-1])
    ty = np.cumsum(np.sort(y)[::-1])
    return bool(np.all(tx >= ty - tol))


def in_D_plus(x):
    x = np.asarray(x, dtype=np.float64).ravel()
    return bool(x.size > 0 and np.all(x > 0) and np.all(np.diff(x) <= 0))


def in_E_plus(x):
    x = np.asarray(x, dtype=np.float64).ravel()
    return bool(x.size > 0 and np.all(x > 0) and np.all(np.diff(x) >= 0))


def in_cone(x, cone):
    if cone == "D+":
        return in_D_plus(x)
    if cone == "E+":
        return in_E_plus(x)
    raise ValueError(f"unknown cone {cone!r}")


def robin_hood(stream, v, steps=3):
    """Order-preserving Robin-Hood transfers: the result is majorized by ``v``.

    Each step moves mass from a larger entry to a smaller one without letting
    the pair cross each other or their neighbours, so a vector in ``D+`` (or
    ``E+``) stays in the same cone.
    """
    v = np.array(v, dtype=np.float64)
    n = v.size
    if n < 2:
        return v
    desc = bool(np.all(np.diff(v) <= 0))
    w = v if desc else v[::-1].copy()
    if not np.all(np.diff(w) <= 0):
        raise ValueError("robin_hood needs a sorted vector")
    for _ in range(steps):
        i = stream.integers(0, n - 1)
        j = stream.integers(i + 1, n)
        if j == i + 1:
            room = (w[i] - w[j]) / 2.0
        else:
            room = min((w[i] - w[j]) / 2.0, w[i] - w[i + 1], w[j - 1] - w[j])
        if room <= 0:
            continue
        eps = room * stream.random()
        w[i] -= eps
        w[j] += eps
    return w if desc else w[::-1].copy()


@dataclass(frozen=True)
class SchurVerdict:
    kind: str  # "convex", "concave", "both", "neither", "inconclusive"
    trials: int
    witness: tuple | None = None  # (x, y, f(x), f(y)) with x majorizing y

    @property
    def convex(self):
        return self.kind in ("convex", "both")

    @property
    def concave(self):
        return self.kind in ("concave", "both")


def _draw_in_region(stream, n, region, lo=0.05, hi=20.0):
    v = np.sort(np.array([stream.uniform(lo, hi) for _ in range(n)]))
    return v[::-1].copy() if region == "D+" else v


def check_schur(f, region="D+", trials=200, seed=0, n=3, tol_abs=1e-9, tol_rel=1e-9):
    """Probe whether ``f`` is Schur-convex/concave on ``region`` by sampling.

    Pairs ``x`` majorizing ``y`` are produced by order-preserving Robin-Hood
    transfers of random sorted vectors. A pair counts against convexity when
    ``f(x) < f(y)`` by more than the tolerance; ``neither`` is only reported
    when both directions fail by more than ten times the tolerance.
    """
    if region not in ("D+", "E+"):
        raise ValueError("region must be 'D+' or 'E+'")
    stream = SplitMix64(seed)
    worst_cvx = (0.0, None)
    worst_ccv = (0.0, None)
    failed_eval = False
    for _ in range(trials):
        x = _draw_in_region(stream, n, region)
        y = robin_hood(stream, x, steps=4)
        try:
            fx = float(f(x))
            fy = float(f(y))
        except (ArithmeticError, ValueError):
            failed_eval = True
            continue
        if not (np.isfinite(fx) and np.isfinite(fy)):
            failed_eval = True
            continue
        thr = tol_abs + tol_rel * max(abs(fx), abs(fy))
        gap = (fy - fx) / thr  # > 1 means convexity fails at this pair
        if gap > worst_cvx[0]:
            worst_cvx = (gap, (tuple(x), tuple(y), fx, fy))
        if -gap > worst_ccv[0]:
            worst_ccv = (-gap, (tuple(x), tuple(y), fx, fy))
    cvx_bad, ccv_bad = worst_cvx[0], worst_ccv[0]
    if cvx_bad <= 1 and ccv_bad <= 1:
        kind = "inconclusive" if failed_eval else "both"
        return SchurVerdict(kind, trials)
    if cvx_bad <= 1:
        return SchurVerdict("inconclusive" if failed_eval else "convex", trials, worst_ccv[1])
    if ccv_bad <= 1:
        return SchurVerdict("inconclusive" if failed_eval else "concave", trials, worst_cvx[1])
    if cvx_bad > 10 and ccv_bad > 10:
        return SchurVerdict("neither", trials, worst_cvx[1])
    return SchurVerdict("inconclusive", trials, worst_cvx[1])
