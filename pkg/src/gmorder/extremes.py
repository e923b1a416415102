"""Distributions of the sample minimum and maximum of GM lifetimes.

Three regimes are supported:

* ``independent``: independent members, products of marginals.
* ``dependent``: members joined by an Archimedean copula with generator
  ``psi``; the minimum uses the survival form ``psi(sum phi(S_k))`` and the
  maximum ``psi(sum phi(F_k))``.
* ``shock``: independent ``X_i = I_i * U_i`` with Bernoulli masks,
  ``P(I_i = 1) = p_i``. Each ``X_i`` has an atom ``1 - p_i`` at zero.

Survival/cdf values at ``x = 0`` follow the convention ``S(0) = 1`` for the
minimum (every lifetime is >= 0) and the right-continuous ``F(0)`` for the
maximum; the right limit of the minimum's survival is carried separately as
``ExtremeCurve.atom_at_zero``.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import archimedean, gm, kernels
from .errors import EvaluationError
from .gm import EXPONENT_CAP, GMParams


@dataclass(frozen=True)
class PopulationSpec:
    """One sample of ``n`` GM lifetimes.

    ``shock_p`` (Bernoulli probabilities in (0, 1]) and ``copula`` are
    mutually exclusive; with neither the members are independent.
    """

    members: tuple
    shock_p: tuple | None = None
    copula: archimedean.GeneratorSpec | None = None

    def __post_init__(self):
        members = tuple(m if isinstance(m, GMParams) else GMParams.from_dict(m) for m in self.members)
        if not members:
            raise ValueError("a population needs at least one member")
        object.__setattr__(self, "members", members)
        if self.shock_p is not None:
            if self.copula is not None:
                raise ValueError("shock probabilities and a copula cannot be combined")
            p = tuple(float(v) for v in self.shock_p)
            if len(p) != len(members):
                raise ValueError(f"shock_p has {len(p)} entries for {len(members)} members")
            if not all(0.0 < v <= 1.0 for v in p):
                raise ValueError("shock probabilities must lie in (0, 1]")
            object.__setattr__(self, "shock_p", p)

    @property
    def n(self):
        return len(self.members)

    @property
    def regime(self):
        if self.shock_p is not None:
            return "shock"
        if self.copula is not None:
            return "dependent"
        return "independent"

    @property
    def alphas(self):
        return np.array([m.alpha for m in self.members])

    @property
    def betas(self):
        return np.array([m.beta for m in self.members])

    @property
    def lams(self):
        return np.array([m.lam for m in self.members])

    @property
    def p(self):
        return np.ones(self.n) if self.shock_p is None else np.array(self.shock_p)

    def to_dict(self):
        d = {"members": [m.to_dict() for m in self.members]}
        if self.shock_p is not None:
            d["shock_p"] = list(self.shock_p)
        if self.copula is not None:
            d["copula"] = self.copula.to_dict()
        return d

    @classmethod
    def from_dict(cls, d):
        copula = d.get("copula")
        return cls(
            tuple(GMParams.from_dict(m) for m in d["members"]),
            shock_p=d.get("shock_p"),
            copula=archimedean.from_dict(copula) if copula is not None else None,
        )


def from_vectors(alpha, beta, lam, shock_p=None, copula=None):
    """Population from parameter vectors; scalars are broadcast to the common length."""
    a, b, l = np.broadcast_arrays(np.atleast_1d(alpha), np.atleast_1d(beta), np.atleast_1d(lam))
    members = tuple(GMParams(x, y, z) for x, y, z in zip(a, b, l))
    return PopulationSpec(members, shock_p=None if shock_p is None else tuple(shock_p), copula=copula)


def _x(x):
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise ValueError("x must be >= 0")
    return arr


def _cap(pop, arr):
    if arr.size:
        top = float(np.max(pop.betas)) * float(np.max(arr))
        if top > EXPONENT_CAP:
            raise EvaluationError(f"beta*x = {top:.6g} exceeds the exponent cap {EXPONENT_CAP}")


def _out(arr, like):
    return float(arr) if np.ndim(like) == 0 else arr


def member_log_survival(pop, x):
    """Matrix of GM log-survivals, shape ``(n,) + x.shape`` (no shock factor)."""
    arr = _x(x)
    _cap(pop, arr)
    rows = [-(m.lam * arr + m.alpha * gm.growth(m.beta, arr)) for m in pop.members]
    return np.stack(rows)


def _log1mexp(lv):
    """``log(1 - exp(lv))`` for ``lv <= 0``, accurate at both ends."""
    lv = np.asarray(lv, dtype=float)
    with np.errstate(divide="ignore"):
        return np.where(lv > -math.log(2.0), np.log(-np.expm1(lv)), np.log1p(-np.exp(lv)))


def _total_log_survival(pop, arr):
    return kernels.population_log_survival(
        np.ascontiguousarray(pop.alphas), np.ascontiguousarray(pop.betas),
        np.ascontiguousarray(pop.lams), np.ascontiguousarray(arr.ravel()),
    ).reshape(arr.shape)


def min_log_survival(pop, x, right_limit=False):
    """``log P(X_{1:n} > x)``.

    In the shock regime the value at ``x = 0`` is 0 (the survival is 1 there)
    unless ``right_limit`` is set, in which case ``log prod p_i`` is returned.
    """
    arr = _x(x)
    _cap(pop, arr)
    regime = pop.regime
    if regime == "dependent":
        ls = member_log_survival(pop, arr)
        out = archimedean.log_copula(pop.copula, np.moveaxis(ls, 0, -1))
    else:
        out = _total_log_survival(pop, arr)
        if regime == "shock":
            logp = float(np.sum(np.log(pop.p)))
            shifted = out + logp
            out = shifted if right_limit else np.where(arr > 0, shifted, out)
    return _out(out, x)


def min_survival(pop, x):
    """``P(X_{1:n} > x)``; exact zeros on underflow."""
    return _out(np.exp(np.asarray(min_log_survival(pop, x))), x)


def min_hazard(pop, x):
    """Hazard of the minimum, ``sum_k (lambda_k + alpha_k exp(beta_k x))``.

    Defined for independent and shock populations (for shocks it is the
    hazard of the continuous part on ``x > 0``).
    """
    if pop.regime == "dependent":
        raise ValueError("min_hazard is only available without a copula")
    arr = _x(x)
    _cap(pop, arr)
    out = np.zeros_like(arr)
    for m in pop.members:
        out = out + m.lam + m.alpha * np.exp(m.beta * arr)
    return _out(out, x)


def _fd_step(arr):
    return np.maximum(1e-5, 1e-4 * arr)


def _fd_derivative(f, arr):
    """Five-point derivative with the step ``max(1e-5, 1e-4*x)``; one-sided near 0."""
    h = _fd_step(arr)
    central = arr >= 2 * h
    out = np.empty_like(arr)
    if central.any():
        xc, hc = arr[central], h[central]
        out[central] = (
            f(xc - 2 * hc) - 8 * f(xc - hc) + 8 * f(xc + hc) - f(xc + 2 * hc)
        ) / (12 * hc)
    if (~central).any():
        xf, hf = arr[~central], h[~central]
        out[~central] = (
            -25 * f(xf) + 48 * f(xf + hf) - 36 * f(xf + 2 * hf) + 16 * f(xf + 3 * hf) - 3 * f(xf + 4 * hf)
        ) / (12 * hf)
    return out, h


def min_log_density(pop, x):
    """``log`` of the density of the minimum's continuous part."""
    arr = _x(x)
    if pop.regime == "dependent":
        dens, _ = _fd_derivative(lambda t: -np.exp(min_log_survival(pop, t)), arr.ravel())
        with np.errstate(divide="ignore"):
            return _out(np.log(np.maximum(dens, 0.0)).reshape(arr.shape), x)
    lr = np.log(np.asarray(min_hazard(pop, arr)))
    return _out(lr + np.asarray(min_log_survival(pop, arr, right_limit=True)), x)


def min_density(pop, x):
    """``min_hazard * min_survival`` (times ``prod p_i`` under shocks, on ``x > 0``)."""
    return _out(np.exp(np.asarray(min_log_density(pop, x))), x)


def _member_log_cdf(pop, arr):
    """Per-member ``log F_k`` (shock factor ``1 - p_k S_k`` included) for 1-D ``arr``."""
    ls = member_log_survival(pop, arr)
    if pop.regime == "shock":
        ls = ls + np.log(pop.p)[:, None]
    return _log1mexp(ls), ls


def max_log_cdf(pop, x):
    """``log P(X_{n:n} <= x)``."""
    arr = _x(x)
    _cap(pop, arr)
    shape = arr.shape
    flat = arr.ravel()
    lf, _ = _member_log_cdf(pop, flat)
    if pop.regime == "dependent":
        out = archimedean.log_copula(pop.copula, lf.T)
    else:
        out = np.sum(lf, axis=0)
    return _out(out.reshape(shape), x)


def max_cdf(pop, x):
    """``P(X_{n:n} <= x)``; equals ``prod(1 - p_i)`` at 0 under shocks."""
    arr = _x(x)
    if pop.regime == "shock":
        out = np.exp(np.asarray(max_log_cdf(pop, arr)))
        # The atom is returned as an exact product rather than exp(sum(log)).
        out = np.where(arr == 0, math.prod(1.0 - v for v in pop.shock_p), out)
        return _out(out, x)
    return _out(np.exp(np.asarray(max_log_cdf(pop, arr))), x)


def max_log_density(pop, x):
    """``log`` of the density of the maximum's continuous part."""
    arr = _x(x)
    _cap(pop, arr)
    shape = arr.shape
    flat = arr.ravel()
    if pop.regime == "dependent":
        dens, _ = _fd_derivative(lambda t: np.exp(max_log_cdf(pop, t)), flat)
        with np.errstate(divide="ignore"):
            return _out(np.log(np.maximum(dens, 0.0)).reshape(shape), x)
    lf, ls = _member_log_cdf(pop, flat)
    haz = np.stack([m.lam + m.alpha * np.exp(m.beta * flat) for m in pop.members])
    # log f_k: density of member k (p_k already folded into ls under shocks)
    lfk = np.log(haz) + ls
    with np.errstate(invalid="ignore"):
        # sum_k f_k * prod_{j != k} F_j, in logs; exclusion handled term by term
        terms = np.stack([lfk[k] + _sum_except(lf, k) for k in range(pop.n)])
    top = np.max(terms, axis=0)
    safe = np.where(np.isfinite(top), top, 0.0)
    with np.errstate(divide="ignore"):
        out = np.where(np.isfinite(top), safe + np.log(np.sum(np.exp(terms - safe), axis=0)), -np.inf)
    return _out(out.reshape(shape), x)


def _sum_except(lf, k):
    if lf.shape[0] == 1:
        return np.zeros(lf.shape[1:])
    return np.sum(np.delete(lf, k, axis=0), axis=0)


def max_density(pop, x):
    """Density of the maximum on ``x > 0``; analytic unless a copula is present."""
    return _out(np.exp(np.asarray(max_log_density(pop, x))), x)


def shock_survival(member, p, x):
    """``P(I*U > x)``: ``p*S(x)`` for ``x > 0`` and 1 at ``x = 0``."""
    if not 0.0 < p <= 1.0:
        raise ValueError("p must lie in (0, 1]")
    arr = _x(x)
    val = p * np.exp(np.asarray(gm.log_survival(member, arr)))
    return _out(np.where(arr > 0, val, 1.0), x)


def fd_log_noise(pop, kind, x):
    """Rough rounding-noise bound on the log of a finite-difference density."""
    arr = _x(x)
    if pop.regime != "dependent":
        return np.zeros_like(arr)
    eps = np.finfo(float).eps
    h = _fd_step(arr)
    if kind == "min-density":
        level = np.exp(np.asarray(min_log_survival(pop, arr)))
        dens = np.exp(np.asarray(min_log_density(pop, arr)))
    else:
        level = np.exp(np.asarray(max_log_cdf(pop, arr)))
        dens = np.exp(np.asarray(max_log_density(pop, arr)))
    with np.errstate(divide="ignore", invalid="ignore"):
        noise = 20 * eps * np.maximum(level, eps) / (h * dens)
    return np.where(np.isfinite(noise), noise, np.inf)


KINDS = ("min-survival", "max-cdf", "min-hazard", "min-density", "max-density")


@dataclass(frozen=True)
class ExtremeCurve:
    """A curve attached to one population.

    ``func``/``log_func`` are vectorized in ``x``. ``atom_at_zero`` is the
    right limit at 0 of ``func`` for survival/cdf kinds, and the probability
    mass at zero of the extreme for hazard/density kinds.
    """

    kind: str
    regime: str
    func: Callable
    log_func: Callable
    atom_at_zero: float
    population: PopulationSpec | None = None

    def __call__(self, x):
        return self.func(x)

    @property
    def mass_at_zero(self):
        if self.population is None:
            return 0.0
        p = self.population.p
        if self.kind.startswith("min"):
            return 1.0 - float(np.prod(p))
        return float(np.prod(1.0 - p))

    def log_noise(self, x):
        if self.population is not None and self.kind in ("min-density", "max-density"):
            return fd_log_noise(self.population, self.kind, x)
        return np.zeros_like(np.asarray(x, dtype=float))


def extreme_curve(pop, kind):
    """Wrap the evaluator for ``kind`` into an :class:`ExtremeCurve`."""
    p = pop.p
    if kind == "min-survival":
        return ExtremeCurve(kind, pop.regime, lambda x: min_survival(pop, x),
                            lambda x: min_log_survival(pop, x), math.prod(float(v) for v in p), pop)
    if kind == "max-cdf":
        atom = math.prod(1.0 - v for v in p) if pop.regime == "shock" else 0.0
        return ExtremeCurve(kind, pop.regime, lambda x: max_cdf(pop, x),
                            lambda x: max_log_cdf(pop, x), atom, pop)
    if kind == "min-hazard":
        if pop.regime == "dependent":
            raise ValueError("min-hazard curves need an independent or shock population")
        return ExtremeCurve(kind, pop.regime, lambda x: min_hazard(pop, x),
                            lambda x: np.log(min_hazard(pop, x)), 1.0 - float(np.prod(p)), pop)
    if kind == "min-density":
        return ExtremeCurve(kind, pop.regime, lambda x: min_density(pop, x),
                            lambda x: min_log_density(pop, x), 1.0 - float(np.prod(p)), pop)
    if kind == "max-density":
        return ExtremeCurve(kind, pop.regime, lambda x: max_density(pop, x),
                            lambda x: max_log_density(pop, x), float(np.prod(1.0 - p)), pop)
    raise ValueError(f"unknown curve kind {kind!r}; expected one of {', '.join(KINDS)}")


def _first_below(f, level, start=1.0, cap=None):
    """Smallest ``x`` (to ~1e-10 relative) with decreasing ``f(x) < level``."""
    lo, hi = 0.0, start
    while f(hi) >= level:
        lo, hi = hi, hi * 2.0
        if cap is not None and hi > cap:
            return cap
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < level:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-10 * hi:
            break
    return hi


def default_x_hi(pop, extreme="min", level=1e-12):
    """Right end of the default grid.

    For the minimum this is the smallest ``x`` with survival below ``level``;
    for the maximum every member's survival must be below ``level/n``, which
    bounds ``1 - F_{n:n}`` by ``level`` under any copula.
    """
    cap = EXPONENT_CAP / max(float(np.max(pop.betas)), 1e-300)
    if extreme == "min":
        target = math.log(level)
        return _first_below(lambda t: min_log_survival(pop, t), target, cap=cap)
    if extreme == "max":
        q = 1.0 - level / pop.n
        return float(max(gm.quantile(m, q) for m in pop.members))
    raise ValueError("extreme must be 'min' or 'max'")
