"""The Gompertz-Makeham lifetime law GM(alpha, beta, lambda).

Hazard ``alpha*exp(beta*x) + lambda``; survival
``exp(-lambda*x - alpha/beta*(exp(beta*x) - 1))``. Everything is evaluated
through the log-survival (the negative cumulative hazard), so survivals that
underflow come back as exact zeros and never as NaN.

``beta = 0`` is accepted: ``expm1(beta*x)/beta`` is replaced by its limit
``x`` and the law reduces to an exponential with rate ``alpha + lambda``.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels, rng
from .errors import EvaluationError

#: Largest ``beta*x`` the evaluators accept before raising EvaluationError.
EXPONENT_CAP = 700.0

#: Below this ``beta*x`` the growth term uses its cubic Taylor series.
SMALL_U = 1e-5


@dataclass(frozen=True)
class GMParams:
    """One insuree's GM parameters (all rates per unit time)."""

    alpha: float
    beta: float
    lam: float

    def __post_init__(self):
        for name in ("alpha", "beta", "lam"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)
        if not self.alpha > 0:
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if self.beta < 0 or self.lam < 0:
            raise ValueError("beta and lambda must be >= 0")

    def to_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "lambda": self.lam}

    @classmethod
    def from_dict(cls, d):
        return cls(d["alpha"], d["beta"], d["lambda"])


def _check_x(x):
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise ValueError("x must be >= 0")
    return arr


def _check_cap(beta, arr):
    if arr.size and beta * float(np.max(arr)) > EXPONENT_CAP:
        raise EvaluationError(
            f"beta*x = {beta * float(np.max(arr)):.6g} exceeds the exponent cap {EXPONENT_CAP}"
        )


def _out(arr, like):
    return float(arr) if np.ndim(like) == 0 else arr


def growth(beta, x):
    """``(exp(beta*x) - 1)/beta`` with the ``beta -> 0`` limit ``x``."""
    x = np.asarray(x, dtype=np.float64)
    if beta == 0.0:
        return x.copy()
    u = beta * x
    # series below SMALL_U: expm1(u) underflows for tiny beta*x
    return np.where(u < SMALL_U, x * (1.0 + u * (0.5 + u / 6.0)), np.expm1(u) / beta)


def hazard(p, x):
    """Hazard ``alpha*exp(beta*x) + lambda``."""
    arr = _check_x(x)
    _check_cap(p.beta, arr)
    return _out(p.alpha * np.exp(p.beta * arr) + p.lam, x)


def log_survival(p, x):
    """``-lambda*x - alpha*(exp(beta*x) - 1)/beta``."""
    arr = _check_x(x)
    _check_cap(p.beta, arr)
    return _out(-(p.lam * arr + p.alpha * growth(p.beta, arr)), x)


def survival(p, x):
    return _out(np.exp(np.asarray(log_survival(p, x))), x)


def pdf(p, x):
    arr = _check_x(x)
    return _out(np.asarray(hazard(p, arr)) * np.exp(np.asarray(log_survival(p, arr))), x)


def cdf(p, x):
    """``1 - S(x)`` computed as ``-expm1(log S(x))``."""
    return _out(-np.expm1(np.asarray(log_survival(p, x))), x)


def quantile(p, q):
    """Inverse cdf on [0, 1).

    Solves ``H(x) = -log1p(-q)`` for the cumulative hazard ``H`` by Newton
    iteration started from the right end of a doubling bracket; ``H`` is
    convex and increasing so the iterates decrease monotonically to the root.
    """
    qa = np.asarray(q, dtype=np.float64)
    if np.any(np.isnan(qa)) or np.any(qa < 0) or np.any(qa >= 1):
        raise ValueError("quantile level must lie in [0, 1)")
    target = -np.log1p(-qa)
    x = kernels.gm_cumhaz_inverse(p.alpha, p.beta, p.lam, np.atleast_1d(target))
    if np.any(np.isnan(x)):
        raise EvaluationError("quantile bracket exceeded the exponent cap")
    x = x.reshape(qa.shape)
    return _out(x, q)


def sample(p, seed, n):
    """``n`` inverse-cdf draws driven by the SplitMix64 stream ``seed``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    u = rng.uniforms(seed, n)
    return quantile(p, u)
