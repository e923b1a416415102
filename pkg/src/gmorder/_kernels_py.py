"""Pure NumPy versions of the hot kernels.

Element-for-element these follow the same iteration as ``_kernels.pyx`` so
both backends agree to rounding of the underlying libm calls.
"""

import numpy as np

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1
_EXP_CAP = 700.0
_MAX_NEWTON = 200


def splitmix64_uniforms(seed, n):
    """``n`` doubles in [0, 1) from a SplitMix64 stream started at ``seed``."""
    state0 = np.uint64(int(seed) & _MASK64)
    k = np.arange(1, n + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = state0 + k * GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


_SMALL_U = 1e-5


def _growth_from(em, u, beta, x):
    """``expm1(u)/beta`` given ``em = expm1(u)``, via the series for small ``u``."""
    if beta == 0.0:
        return x
    return np.where(u < _SMALL_U, x * (1.0 + u * (0.5 + u / 6.0)), em / beta)


def _growth(beta, x):
    u = beta * x
    return _growth_from(np.expm1(u), u, beta, x)


def population_log_survival(alphas, betas, lams, x):
    """Sum of member log-survivals, ``-sum(lam*x + alpha*expm1(beta*x)/beta)``."""
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    for a, b, l in zip(alphas, betas, lams):
        out -= l * x + a * _growth(b, x)
    return out


def gm_cumhaz_inverse(alpha, beta, lam, targets):
    """Solve ``lam*x + alpha*expm1(beta*x)/beta = t`` for each target ``t``.

    Returns NaN where the bracket would need ``beta*x > 700``.
    """
    t = np.asarray(targets, dtype=np.float64)
    out = np.zeros_like(t)
    todo = t > 0.0
    if not todo.any():
        return out
    tt = t[todo]

    def H(x):
        return lam * x + alpha * _growth(beta, x)

    hi = np.ones_like(tt)
    lo = np.zeros_like(tt)
    bad = np.zeros(tt.shape, dtype=bool)
    grow = H(hi) < tt
    while grow.any():
        lo[grow] = hi[grow]
        hi[grow] *= 2.0
        over = grow & (beta * hi > _EXP_CAP)
        bad |= over
        grow &= ~over
        grow[grow] = H(hi[grow]) < tt[grow]

    # Newton from the right of the root: monotone for convex increasing H.
    x = hi.copy()
    active = ~bad
    for _ in range(_MAX_NEWTON):
        if not active.any():
            break
        xa = x[active]
        u = beta * xa
        em = np.expm1(u)
        step = (lam * xa + alpha * _growth_from(em, u, beta, xa) - tt[active]) / (lam + alpha * (em + 1.0))
        xn = np.maximum(xa - step, lo[active])
        done = np.abs(xn - xa) <= 4.0 * np.finfo(float).eps * np.maximum(xn, 1e-300)
        x[active] = xn
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    x[bad] = np.nan
    out[todo] = x
    return out
