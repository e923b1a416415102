"""Archimedean generators and the structural predicates the theorems rely on.

A generator ``psi`` maps [0, inf] onto [0, 1] with ``psi(0) = 1`` and
``psi(inf) = 0``; ``phi`` is its inverse and the copula is
``C(u) = psi(sum_i phi(u_i))``. Built-in families:

* independence: ``psi(t) = exp(-t)``
* Clayton:      ``psi(t) = (1 + theta*t)**(-1/theta)``, theta > 0
* Gumbel-Hougaard: ``psi(t) = exp(-t**(1/theta))``, theta >= 1

Built-ins also carry ``log_psi`` and ``phi_of_log`` (phi as a function of
``log u``) so copula values of tiny survivals are computed without underflow.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .verdicts import PredicateVerdict, Status, grade

#: Smallest u passed to phi; u == 0 itself is handled exactly (C = 0).
U_FLOOR = 1e-300
_LOG_U_FLOOR = math.log(U_FLOOR)

TOL_ABS = 1e-9
TOL_REL = 1e-9


def default_t_grid(points=200, lo=1e-6, hi=50.0):
    return np.geomspace(lo, hi, points)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    theta: float | None
    psi: Callable = field(compare=False, repr=False)
    phi: Callable = field(compare=False, repr=False)
    log_psi: Callable | None = field(default=None, compare=False, repr=False)
    phi_of_log: Callable | None = field(default=None, compare=False, repr=False)
    name: str = ""

    def log_psi_(self, t):
        if self.log_psi is not None:
            return self.log_psi(t)
        with np.errstate(divide="ignore"):
            return np.log(self.psi(t))

    def phi_log_(self, log_u):
        if self.phi_of_log is not None:
            return self.phi_of_log(log_u)
        return self.phi(np.exp(log_u))

    @property
    def label(self):
        if self.family == "custom":
            return self.name or "custom"
        if self.family == "independence":
            return "independence"
        return f"{self.family}({self.theta:g})"

    def to_dict(self):
        if self.family == "custom":
            raise ValueError("custom generators cannot be serialized")
        d = {"family": self.family}
        if self.family != "independence":
            d["theta"] = self.theta
        return d


def independence():
    return GeneratorSpec(
        "independence",
        None,
        psi=lambda t: np.exp(-np.asarray(t, dtype=float)),
        phi=lambda u: -np.log(np.asarray(u, dtype=float)),
        log_psi=lambda t: -np.asarray(t, dtype=float),
        phi_of_log=lambda lu: -np.asarray(lu, dtype=float),
    )


def clayton(theta):
    theta = float(theta)
    if not theta > 0:
        raise ValueError("Clayton theta must be > 0")

    def log_psi(t):
        return -np.log1p(theta * np.asarray(t, dtype=float)) / theta

    def phi_of_log(lu):
        return np.expm1(-theta * np.asarray(lu, dtype=float)) / theta

    return GeneratorSpec(
        "clayton",
        theta,
        psi=lambda t: np.exp(log_psi(t)),
        phi=lambda u: phi_of_log(np.log(np.asarray(u, dtype=float))),
        log_psi=log_psi,
        phi_of_log=phi_of_log,
    )


def gumbel(theta):
    theta = float(theta)
    if not theta >= 1:
        raise ValueError("Gumbel-Hougaard theta must be >= 1")

    def log_psi(t):
        return -np.power(np.asarray(t, dtype=float), 1.0 / theta)

    def phi_of_log(lu):
        return np.power(-np.asarray(lu, dtype=float), theta)

    return GeneratorSpec(
        "gumbel-hougaard",
        theta,
        psi=lambda t: np.exp(log_psi(t)),
        phi=lambda u: phi_of_log(np.log(np.asarray(u, dtype=float))),
        log_psi=log_psi,
        phi_of_log=phi_of_log,
    )


def custom(psi, phi, name="custom"):
    """User generator; both ``psi`` and its inverse ``phi`` must be supplied."""
    return GeneratorSpec("custom", None, psi=psi, phi=phi, name=name)


_FAMILIES = {
    "independence": lambda theta: independence(),
    "clayton": clayton,
    "gumbel-hougaard": gumbel,
    "gumbel": gumbel,
}


def from_dict(d):
    """Build a generator from ``{"family": "clayton", "theta": 2.0}``."""
    fam = str(d["family"]).lower()
    if fam not in _FAMILIES:
        raise ValueError(f"unknown generator family {d['family']!r}")
    return _FAMILIES[fam](d.get("theta"))


def log_copula(g, log_u):
    """``log C(u)`` from ``log u`` along the last axis."""
    lu = np.asarray(log_u, dtype=float)
    zero = np.any(lu == -np.inf, axis=-1)
    lu = np.maximum(lu, _LOG_U_FLOOR)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        s = np.sum(g.phi_log_(lu), axis=-1)
        out = np.where(np.isinf(s), -np.inf, g.log_psi_(np.where(np.isinf(s), 0.0, s)))
    out = np.where(zero, -np.inf, out)
    return out


def copula_value(g, u):
    """``psi(sum_i phi(u_i))`` along the last axis; exactly 0 if some ``u_i`` is 0."""
    u = np.asarray(u, dtype=float)
    if np.any((u < 0) | (u > 1)):
        raise ValueError("copula arguments must lie in [0, 1]")
    with np.errstate(divide="ignore"):
        lu = np.log(u)
    out = np.exp(log_copula(g, lu))
    return float(out) if out.ndim == 0 else out


def _witness(**kw):
    return {k: (float(v) if np.ndim(v) == 0 else [float(t) for t in np.ravel(v)]) for k, v in kw.items()}


def is_log_convex(g, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """Check convexity of ``log psi`` through its secant slopes on ``grid``."""
    t = default_t_grid() if grid is None else np.asarray(grid, dtype=float)
    try:
        with np.errstate(all="ignore"):
            lp = np.asarray(g.log_psi_(t), dtype=float)
    except (ArithmeticError, ValueError) as exc:
        return PredicateVerdict("log-convex", Status.INCONCLUSIVE, {"error": str(exc)}, tol_abs, tol_rel)
    if not np.all(np.isfinite(lp)):
        bad = t[~np.isfinite(lp)][0]
        return PredicateVerdict("log-convex", Status.INCONCLUSIVE, _witness(t=bad), tol_abs, tol_rel)
    slopes = np.diff(lp) / np.diff(t)
    ds = np.diff(slopes)
    thr = tol_abs + tol_rel * np.maximum(np.abs(slopes[:-1]), np.abs(slopes[1:]))
    ratio = -ds / thr
    i = int(np.argmax(ratio))
    status = grade(float(ratio[i]))
    wit = None
    if status is not Status.HOLDS:
        wit = _witness(t=t[i + 1], slope_left=slopes[i], slope_right=slopes[i + 1])
    return PredicateVerdict("log-convex", status, wit, tol_abs, tol_rel)


def _divided_differences(t, y, order):
    """Newton divided differences of orders 0..order with rounding-noise bounds."""
    eps = np.finfo(float).eps
    dd = [y.copy()]
    noise = [4 * eps * np.abs(y) + 1e-300]
    for k in range(1, order + 1):
        prev, pn = dd[-1], noise[-1]
        span = t[k:] - t[:-k]
        dd.append((prev[1:] - prev[:-1]) / span)
        noise.append((pn[1:] + pn[:-1]) / span)
    return dd, noise


def is_d_monotone(g, d, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """Grid test of d-monotonicity.

    ``(-1)^k psi^(k) >= 0`` for k <= d-2 together with ``(-1)^(d-2) psi^(d-2)``
    decreasing and convex is equivalent to ``(-1)^k [t_i..t_{i+k}]psi >= 0``
    for every divided difference of order k = 0..d. Differences whose
    rounding noise bound exceeds their size are treated as unresolved; if an
    entire order is unresolved the verdict is INCONCLUSIVE.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    t = default_t_grid() if grid is None else np.asarray(grid, dtype=float)
    if t.size < d + 2:
        raise ValueError("grid too small for the requested order")
    try:
        with np.errstate(all="ignore"):
            y = np.asarray(g.psi(t), dtype=float)
    except (ArithmeticError, ValueError) as exc:
        return PredicateVerdict(f"{d}-monotone", Status.INCONCLUSIVE, {"error": str(exc)}, tol_abs, tol_rel)
    if not np.all(np.isfinite(y)):
        return PredicateVerdict(f"{d}-monotone", Status.INCONCLUSIVE, {"error": "non-finite psi"}, tol_abs, tol_rel)
    dd, noise = _divided_differences(t, y, d)
    worst = (0.0, None)
    unresolved_order = None
    for k in range(d + 1):
        signed = (-1) ** k * dd[k]
        resolved = noise[k] < np.abs(dd[k])
        if not resolved.any() and np.any(np.abs(dd[k]) > 0):
            unresolved_order = k
        thr = tol_abs + tol_rel * np.abs(dd[k]) + noise[k]
        ratio = np.where(signed < 0, -signed / thr, 0.0)
        i = int(np.argmax(ratio))
        if ratio[i] > worst[0]:
            worst = (float(ratio[i]), _witness(order=k, t=t[i], t_end=t[i + k], signed_difference=signed[i]))
    status = grade(worst[0])
    if status is Status.HOLDS and unresolved_order is not None:
        status = Status.INCONCLUSIVE
        worst = (worst[0], {"order": unresolved_order, "reason": "finite-difference noise exceeds signal"})
    return PredicateVerdict(
        f"{d}-monotone", status, worst[1] if status is not Status.HOLDS else None, tol_abs, tol_rel
    )


def compose(g1, g2):
    """``f = phi2 o psi1`` evaluated through logs."""

    def f(t):
        return g2.phi_log_(g1.log_psi_(t))

    return f


def super_additive_compose(g1, g2, grid=None, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """Check ``f(x+y) >= f(x) + f(y)`` for ``f = phi2 o psi1`` on a 2-D grid."""
    t = default_t_grid() if grid is None else np.asarray(grid, dtype=float)
    f = compose(g1, g2)
    with np.errstate(all="ignore"):
        ft = np.asarray(f(t), dtype=float)
        X, Y = np.meshgrid(t, t, indexing="ij")
        fxy = np.asarray(f(X + Y), dtype=float)
    if not (np.all(np.isfinite(ft)) and np.all(np.isfinite(fxy))):
        return PredicateVerdict(
            "super-additive", Status.INCONCLUSIVE, {"error": "evaluation overflow"}, tol_abs, tol_rel
        )
    lhs = fxy
    rhs = ft[:, None] + ft[None, :]
    thr = tol_abs + tol_rel * np.maximum(np.abs(lhs), np.abs(rhs))
    ratio = (rhs - lhs) / thr
    idx = np.unravel_index(int(np.argmax(ratio)), ratio.shape)
    status = grade(float(ratio[idx]))
    wit = None
    if status is not Status.HOLDS:
        wit = _witness(x=X[idx], y=Y[idx], f_sum_arg=lhs[idx], f_x_plus_f_y=rhs[idx])
    return PredicateVerdict("super-additive", status, wit, tol_abs, tol_rel)


def default_u_grid(n, per_axis=None):
    if per_axis is None:
        per_axis = 50 if n <= 2 else max(4, int(round(2500 ** (1.0 / n))))
    axis = np.linspace(0.0, 1.0, per_axis)
    mesh = np.meshgrid(*([axis] * n), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


def copula_dominates(g1, g2, ugrid=None, n=2, tol_abs=TOL_ABS, tol_rel=TOL_REL):
    """Check ``C_psi1(u) <= C_psi2(u)`` over a grid of u-vectors (rows of ``ugrid``)."""
    u = default_u_grid(n) if ugrid is None else np.asarray(ugrid, dtype=float)
    if u.ndim != 2:
        raise ValueError("ugrid must be a 2-D array of u-vectors")
    c1 = copula_value(g1, u)
    c2 = copula_value(g2, u)
    thr = tol_abs + tol_rel * np.maximum(np.abs(c1), np.abs(c2))
    ratio = (c1 - c2) / thr
    i = int(np.argmax(ratio))
    status = grade(float(ratio[i]))
    wit = None
    if status is not Status.HOLDS:
        wit = _witness(u=u[i], c1=c1[i], c2=c2[i])
    return PredicateVerdict("copula-dominance", status, wit, tol_abs, tol_rel)
