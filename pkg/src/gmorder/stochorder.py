"""Grid checkers for the usual stochastic, hazard rate, reversed hazard rate,
likelihood ratio and ageing-faster (R-hr) orders.

Every checker compares curve ``A`` (variable X) against curve ``B``
(variable Y) and tests ``X <=_rel Y``:

========  ==========================================  ====================
relation  forward condition on the grid                curves used
========  ==========================================  ====================
st        ``F_A(t) >= F_B(t)``                         cdf or survival
hr        ``S_B/S_A`` nondecreasing                    survival or cdf
rh        ``F_B/F_A`` nondecreasing                    cdf or survival
lr        ``f_B/f_A`` nondecreasing                    density
R-hr      ``r_A/r_B`` nondecreasing                    hazard
========  ==========================================  ====================

Ratios are handled as differences of logs. A step counts against
monotonicity only beyond ``tol_abs + tol_rel*scale`` (plus a rounding-noise
bound for finite-difference curves); a direction is VIOLATED when some step
exceeds ten times that threshold. Both directions are always evaluated, so a
single call reports HOLDS, HOLDS_REVERSED, VIOLATED or INCONCLUSIVE.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import extremes
from .errors import EvaluationError
from .extremes import ExtremeCurve
from .verdicts import Status, grade

TOL_ABS = 1e-9
TOL_REL = 1e-9
#: Ratio checks drop grid points where a denominator falls below this.
TRIM_LEVEL = 1e-290
_LOG_TRIM = math.log(TRIM_LEVEL)

RELATIONS = ("st", "hr", "rh", "lr", "R-hr")

_SURVIVAL = ("min-survival", "survival")
_CDF = ("max-cdf", "cdf")
_DENSITY = ("min-density", "max-density", "density")
_HAZARD = ("min-hazard", "hazard")


@dataclass(frozen=True)
class Grid:
    x_min: float = 0.0
    x_max: float = 1.0
    points: int = 2000
    spacing: str = "linear"

    def __post_init__(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ValueError("grid bounds must be finite")
        if self.x_min < 0 or not self.x_max > self.x_min:
            raise ValueError("grid needs 0 <= x_min < x_max")
        if int(self.points) < 16:
            raise ValueError("grid needs at least 16 points")
        if self.spacing not in ("linear", "log"):
            raise ValueError("spacing must be 'linear' or 'log'")
        object.__setattr__(self, "points", int(self.points))

    def values(self):
        if self.spacing == "linear":
            return np.linspace(self.x_min, self.x_max, self.points)
        if self.x_min > 0:
            return np.geomspace(self.x_min, self.x_max, self.points)
        # log spacing from 0: keep 0 and log-space the rest
        rest = np.geomspace(self.x_max * 1e-6, self.x_max, self.points - 1)
        return np.concatenate([[0.0], rest])

    def to_dict(self):
        return {"x_min": self.x_min, "x_max": self.x_max, "points": self.points, "spacing": self.spacing}


def curve(kind, func, log_func=None, atom_at_zero=None):
    """Wrap a plain function as a curve.

    ``kind`` is one of survival, cdf, density, hazard (or an extreme kind).
    ``atom_at_zero`` defaults to 1 for survivals and 0 for cdfs.
    """
    if log_func is None:
        def log_func(x):
            with np.errstate(divide="ignore"):
                return np.log(np.asarray(func(x), dtype=float))
    if atom_at_zero is None:
        atom_at_zero = 1.0 if kind in _SURVIVAL else 0.0
    return ExtremeCurve(kind, "custom", func, log_func, float(atom_at_zero), None)


@dataclass(frozen=True)
class OrderingVerdict:
    """Result of one order check of ``A`` against ``B``.

    ``forward`` grades ``A <= B`` and ``reverse`` grades ``B <= A``. Witnesses
    are dicts with the offending ``x`` and the two compared values
    (``lhs``/``rhs``): the cdfs for st, consecutive log-ratios otherwise.
    """

    relation: str
    status: Status
    witness: dict | None
    tol_abs: float
    tol_rel: float
    forward: Status
    reverse: Status
    reverse_witness: dict | None = None
    trimmed: tuple | None = None
    notes: dict = field(default_factory=dict)

    def holds(self, direction="le"):
        """Whether ``A <= B`` (``"le"``) or ``A >= B`` (``"ge"``) holds."""
        return (self.forward if direction == "le" else self.reverse) is Status.HOLDS

    def direction_status(self, direction="le"):
        return self.forward if direction == "le" else self.reverse

    def to_dict(self):
        return {
            "relation": self.relation,
            "status": self.status.value,
            "forward": self.forward.value,
            "reverse": self.reverse.value,
            "witness": self.witness,
            "reverse_witness": self.reverse_witness,
            "tol_abs": self.tol_abs,
            "tol_rel": self.tol_rel,
            "trimmed": list(self.trimmed) if self.trimmed is not None else None,
            "notes": self.notes,
        }


def combine(forward, reverse):
    if forward is Status.HOLDS:
        return Status.HOLDS
    if reverse is Status.HOLDS:
        return Status.HOLDS_REVERSED
    if forward is Status.VIOLATED:
        return Status.VIOLATED
    return Status.INCONCLUSIVE


def _inconclusive(relation, tol_abs, tol_rel, reason, trimmed=None):
    return OrderingVerdict(
        relation, Status.INCONCLUSIVE, None, tol_abs, tol_rel,
        Status.INCONCLUSIVE, Status.INCONCLUSIVE, None, trimmed, {"reason": reason},
    )


def _grid_points(grid, A, B, relation):
    if grid is None:
        grid = default_grid(A, B)
    if isinstance(grid, Grid):
        return grid.values()
    x = np.asarray(grid, dtype=float)
    if x.ndim != 1 or x.size < 2 or np.any(np.diff(x) <= 0) or x[0] < 0:
        raise ValueError("grid must be strictly increasing and start at x >= 0")
    return x


def default_grid(A, B, points=2000):
    """Linear grid on ``[0, x_hi]`` with ``x_hi`` the larger default of the two populations."""
    if A.population is None or B.population is None:
        raise ValueError("curves without a population need an explicit grid")
    ext = "max" if A.kind.startswith("max") else "min"
    hi = max(extremes.default_x_hi(A.population, ext), extremes.default_x_hi(B.population, ext))
    return Grid(0.0, hi, points, "linear")


def _log_values(c, x):
    with np.errstate(divide="ignore", invalid="ignore"):
        v = np.asarray(c.log_func(x), dtype=float)
    return np.broadcast_to(v, x.shape).astype(float)


def _cdf_values(c, x):
    """Right-continuous cdf on the grid."""
    if c.kind in _CDF:
        v = np.asarray(c.func(x), dtype=float)
        return np.broadcast_to(v, x.shape).astype(float)
    if c.kind in _SURVIVAL:
        v = -np.expm1(_log_values(c, x))
        return np.where(x == 0, 1.0 - c.atom_at_zero, v)
    raise ValueError(f"curve kind {c.kind!r} has no cdf")


def _log_survival_values(c, x):
    """Right-continuous log-survival on the grid."""
    if c.kind in _SURVIVAL:
        v = _log_values(c, x)
        with np.errstate(divide="ignore"):
            return np.where(x == 0, math.log(c.atom_at_zero) if c.atom_at_zero > 0 else -np.inf, v)
    if c.kind in _CDF:
        return extremes._log1mexp(_log_values(c, x))
    raise ValueError(f"curve kind {c.kind!r} has no survival")


def _log_cdf_values(c, x):
    if c.kind in _CDF:
        return _log_values(c, x)
    if c.kind in _SURVIVAL:
        lv = extremes._log1mexp(_log_survival_values(c, x))
        return lv
    raise ValueError(f"curve kind {c.kind!r} has no cdf")


def _require(c, kinds, relation):
    if c.kind not in kinds:
        raise ValueError(f"{relation} check needs curves of kind {'/'.join(kinds)}, got {c.kind!r}")


def _wit(x, i, lhs, rhs, excess, **extra):
    w = {"x": float(x[i]), "lhs": float(lhs[i]), "rhs": float(rhs[i]), "excess": float(excess)}
    w.update(extra)
    return w


def check_st(A, B, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """``A <=st B`` iff ``F_A(t) >= F_B(t)`` on the grid (atoms enter at x = 0)."""
    _require(A, _SURVIVAL + _CDF, "st")
    _require(B, _SURVIVAL + _CDF, "st")
    x = _grid_points(grid, A, B, "st")
    try:
        fa, fb = _cdf_values(A, x), _cdf_values(B, x)
    except (EvaluationError, FloatingPointError) as exc:
        return _inconclusive("st", tol_abs, tol_rel, str(exc))
    if not (np.all(np.isfinite(fa)) and np.all(np.isfinite(fb))):
        return _inconclusive("st", tol_abs, tol_rel, "non-finite cdf values")
    thr = tol_abs + tol_rel * np.maximum(np.abs(fa), np.abs(fb))
    fwd_r = (fb - fa) / thr
    rev_r = (fa - fb) / thr
    i, j = int(np.argmax(fwd_r)), int(np.argmax(rev_r))
    fwd, rev = grade(float(fwd_r[i])), grade(float(rev_r[j]))
    notes = {}
    diff = fa - fb
    sig = np.abs(diff) > 10 * thr
    if np.any(sig & (diff > 0)) and np.any(sig & (diff < 0)):
        s = np.sign(diff[sig])
        k = int(np.flatnonzero(np.diff(s) != 0)[0])
        xs = x[sig]
        notes["sign_change"] = [float(xs[k]), float(xs[k + 1])]
    return OrderingVerdict(
        "st", combine(fwd, rev),
        _wit(x, i, fa, fb, fwd_r[i]) if fwd is not Status.HOLDS else None,
        tol_abs, tol_rel, fwd, rev,
        _wit(x, j, fb, fa, rev_r[j]) if rev is not Status.HOLDS else None,
        None, notes,
    )


def _monotone(relation, x, d, noise, tol_abs, tol_rel, trimmed, notes=None, labels=None):
    """Grade ``d`` nondecreasing (forward) and nonincreasing (reverse)."""
    if x.size < 2:
        return _inconclusive(relation, tol_abs, tol_rel, "grid trimmed to fewer than two points", trimmed)
    # Compare each point with the extreme of all earlier points, not just its
    # neighbour, so slow drifts made of sub-tolerance steps are still caught.
    idx = np.arange(d.size)
    arg_hi = np.maximum.accumulate(np.where(d >= np.maximum.accumulate(d), idx, 0))[:-1]
    arg_lo = np.maximum.accumulate(np.where(d <= np.minimum.accumulate(d), idx, 0))[:-1]
    cur, nz = d[1:], noise[1:]

    def ratios(ref):
        thr = tol_abs + tol_rel * np.maximum(np.abs(d[ref]), np.abs(cur)) + noise[ref] + nz
        return (cur - d[ref]) / thr

    fwd_r = -ratios(arg_hi)
    rev_r = ratios(arg_lo)
    i, j = int(np.argmax(fwd_r)), int(np.argmax(rev_r))
    fwd, rev = grade(float(fwd_r[i])), grade(float(rev_r[j]))
    labels = labels if labels is not None else [None] * x.size

    def wit(ref, k, r):
        w = {"x": float(x[k + 1]), "x_prev": float(x[ref]), "lhs": float(d[ref]),
             "rhs": float(d[k + 1]), "excess": float(r)}
        if labels[ref] is not None:
            w["x_prev_label"] = labels[ref]
        return w

    return OrderingVerdict(
        relation, combine(fwd, rev),
        wit(arg_hi[i], i, fwd_r[i]) if fwd is not Status.HOLDS else None,
        tol_abs, tol_rel, fwd, rev,
        wit(arg_lo[j], j, rev_r[j]) if rev is not Status.HOLDS else None,
        trimmed, dict(notes or {}),
    )


def _trim(x, keep):
    """Apply a keep-mask; return kept points and the dropped x-range."""
    if keep.all():
        return keep, None
    dropped = x[~keep]
    return keep, (float(dropped.min()), float(dropped.max()))


def _sub(u, v):
    with np.errstate(invalid="ignore"):
        return u - v


def _noise(c, x):
    return np.asarray(c.log_noise(x), dtype=float)


def check_hr(A, B, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """``A <=hr B`` iff ``S_B/S_A`` is nondecreasing.

    The sequence starts at a virtual point ``0-`` where both survivals are 1,
    so an atom at zero enters through the jump to ``S_B(0+)/S_A(0+)``.
    """
    _require(A, _SURVIVAL + _CDF, "hr")
    _require(B, _SURVIVAL + _CDF, "hr")
    x = _grid_points(grid, A, B, "hr")
    try:
        la, lb = _log_survival_values(A, x), _log_survival_values(B, x)
    except (EvaluationError, FloatingPointError) as exc:
        return _inconclusive("hr", tol_abs, tol_rel, str(exc))
    keep, trimmed = _trim(x, (la >= _LOG_TRIM) & (lb >= _LOG_TRIM))
    xs, d = x[keep], _sub(lb, la)[keep]
    noise = np.zeros_like(d)
    labels = [None] * xs.size
    if xs.size and xs[0] == 0.0:
        xs = np.concatenate([[0.0], xs])
        d = np.concatenate([[0.0], d])
        noise = np.concatenate([[0.0], noise])
        labels = ["0-"] + labels
    notes = {}
    cross = _hazard_cross_check(A, B, x, keep, tol_abs, tol_rel)
    if cross is not None:
        notes["hazard_dominance"] = cross.value
    v = _monotone("hr", xs, d, noise, tol_abs, tol_rel, trimmed, notes, labels)
    if cross is not None:
        atom_ok = A.atom_at_zero == B.atom_at_zero
        agree = (cross is Status.HOLDS) == (v.forward is Status.HOLDS)
        if atom_ok and not agree and Status.INCONCLUSIVE not in (cross, v.forward):
            v.notes["cross_check"] = "disagree"
    return v


def _hazard_cross_check(A, B, x, keep, tol_abs, tol_rel):
    """Pointwise ``r_A >= r_B`` for minima of independent (or shocked) populations."""
    pops = (A.population, B.population)
    if A.kind != "min-survival" or B.kind != "min-survival" or None in pops:
        return None
    if any(p.regime == "dependent" for p in pops):
        return None
    xs = x[keep]
    if xs.size == 0:
        return None
    ra = np.asarray(extremes.min_hazard(A.population, xs))
    rb = np.asarray(extremes.min_hazard(B.population, xs))
    thr = tol_abs + tol_rel * np.maximum(ra, rb)
    return grade(float(np.max((rb - ra) / thr)))


def check_rh(A, B, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """``A <=rh B`` iff ``F_B/F_A`` is nondecreasing (points with a cdf below 1e-290 are trimmed)."""
    _require(A, _SURVIVAL + _CDF, "rh")
    _require(B, _SURVIVAL + _CDF, "rh")
    x = _grid_points(grid, A, B, "rh")
    try:
        la, lb = _log_cdf_values(A, x), _log_cdf_values(B, x)
    except (EvaluationError, FloatingPointError) as exc:
        return _inconclusive("rh", tol_abs, tol_rel, str(exc))
    keep, trimmed = _trim(x, (la >= _LOG_TRIM) & (lb >= _LOG_TRIM))
    return _monotone("rh", x[keep], _sub(lb, la)[keep], np.zeros(int(keep.sum())), tol_abs, tol_rel, trimmed)


def _continuous_part(A, B, x):
    """Mask out x = 0 when either variable has an atom there."""
    if max(A.mass_at_zero, B.mass_at_zero) > 0:
        return x > 0
    return np.ones(x.shape, dtype=bool)


def check_lr(A, B, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """``A <=lr B`` iff ``f_B/f_A`` is nondecreasing on the continuous part."""
    _require(A, _DENSITY, "lr")
    _require(B, _DENSITY, "lr")
    x = _grid_points(grid, A, B, "lr")
    x = x[_continuous_part(A, B, x)]
    try:
        la, lb = _log_values(A, x), _log_values(B, x)
        na, nb = _noise(A, x), _noise(B, x)
    except (EvaluationError, FloatingPointError) as exc:
        return _inconclusive("lr", tol_abs, tol_rel, str(exc))
    keep, trimmed = _trim(x, (la >= _LOG_TRIM) & (lb >= _LOG_TRIM) & np.isfinite(na + nb))
    return _monotone("lr", x[keep], _sub(lb, la)[keep], (na + nb)[keep], tol_abs, tol_rel, trimmed)


def check_ageing_faster(A, B, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """``A <=R-hr B`` iff ``r_A/r_B`` is nondecreasing."""
    _require(A, _HAZARD, "R-hr")
    _require(B, _HAZARD, "R-hr")
    x = _grid_points(grid, A, B, "R-hr")
    x = x[_continuous_part(A, B, x)]
    try:
        la, lb = _log_values(A, x), _log_values(B, x)
    except (EvaluationError, FloatingPointError) as exc:
        return _inconclusive("R-hr", tol_abs, tol_rel, str(exc))
    keep, trimmed = _trim(x, np.isfinite(la) & np.isfinite(lb))
    return _monotone("R-hr", x[keep], _sub(la, lb)[keep], np.zeros(int(keep.sum())), tol_abs, tol_rel, trimmed)


CHECKERS = {
    "st": check_st,
    "hr": check_hr,
    "rh": check_rh,
    "lr": check_lr,
    "R-hr": check_ageing_faster,
}


def curve_kind(relation, extreme):
    """Curve kind each relation reads for the given extreme (``min``/``max``)."""
    if extreme not in ("min", "max"):
        raise ValueError("extreme must be 'min' or 'max'")
    if relation in ("st", "hr", "rh"):
        return "min-survival" if extreme == "min" else "max-cdf"
    if relation == "lr":
        return f"{extreme}-density"
    if relation == "R-hr":
        if extreme == "max":
            raise ValueError("R-hr is only supported for minima")
        return "min-hazard"
    raise ValueError(f"unknown relation {relation!r}")


def compare(relation, pop_a, pop_b, extreme="min", grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """Check ``X <=_relation Y`` for the extremes of two populations."""
    if relation not in CHECKERS:
        raise ValueError(f"unknown relation {relation!r}")
    kind = curve_kind(relation, extreme)
    A = extremes.extreme_curve(pop_a, kind)
    B = extremes.extreme_curve(pop_b, kind)
    if grid is None:
        a = extremes.extreme_curve(pop_a, "min-survival" if extreme == "min" else "max-cdf")
        b = extremes.extreme_curve(pop_b, a.kind)
        grid = default_grid(a, b)
    return CHECKERS[relation](A, B, grid, tol_abs, tol_rel)


def curve_table(relation, pop_a, pop_b, extreme, grid):
    """Columns for plotting: both curves plus the relation's diagnostic series.

    Returns ``(header, rows, trimmed)``; rows with a non-finite cell are
    dropped and their x-range reported in ``trimmed``.
    """
    kind = curve_kind(relation, extreme)
    A = extremes.extreme_curve(pop_a, kind)
    B = extremes.extreme_curve(pop_b, kind)
    x = grid.values() if isinstance(grid, Grid) else np.asarray(grid, dtype=float)
    if relation in ("lr", "R-hr"):
        x = x[_continuous_part(A, B, x)]
    with np.errstate(all="ignore"):
        if relation == "st":
            a, b = _cdf_values(A, x), _cdf_values(B, x)
            diag, name = a - b, "difference"
        elif relation == "hr":
            la, lb = _log_survival_values(A, x), _log_survival_values(B, x)
            a, b = np.exp(la), np.exp(lb)
            diag = np.where((la >= _LOG_TRIM) & (lb >= _LOG_TRIM), np.exp(lb - la), np.nan)
            name = "ratio"
        elif relation == "rh":
            la, lb = _log_cdf_values(A, x), _log_cdf_values(B, x)
            a, b = np.exp(la), np.exp(lb)
            diag = np.where((la >= _LOG_TRIM) & (lb >= _LOG_TRIM), np.exp(lb - la), np.nan)
            name = "ratio"
        else:
            la, lb = _log_values(A, x), _log_values(B, x)
            a, b = np.exp(la), np.exp(lb)
            d = la - lb if relation == "R-hr" else lb - la
            diag = np.where((la >= _LOG_TRIM) & (lb >= _LOG_TRIM), np.exp(d), np.nan)
            name = "ratio"
    ok = np.isfinite(a) & np.isfinite(b) & np.isfinite(diag)
    _, trimmed = _trim(x, ok)
    header = ["x", f"A_{kind}", f"B_{kind}", name]
    rows = np.column_stack([x[ok], a[ok], b[ok], diag[ok]])
    return header, rows, trimmed
