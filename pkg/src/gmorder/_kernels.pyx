# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_kernels_py`` element for element."""

import numpy as np

from libc.math cimport expm1, fabs, NAN
from libc.stdint cimport uint64_t

cdef double _EXP_CAP = 700.0
cdef int _MAX_NEWTON = 200
cdef double _EPS = 2.220446049250313e-16


def splitmix64_uniforms(seed, Py_ssize_t n):
    cdef uint64_t state = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t z
    cdef Py_ssize_t i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    for i in range(n):
        state = state + <uint64_t>0x9E3779B97F4A7C15
        z = state
        z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
        z = z ^ (z >> 31)
        o[i] = <double>(z >> 11) * (1.0 / 9007199254740992.0)
    return out


cdef double _SMALL_U = 1e-5


cdef inline double _growth_from(double em, double u, double beta, double x) nogil:
    # series for small u: expm1 underflows when beta*x is tiny
    if beta == 0.0:
        return x
    if u < _SMALL_U:
        return x * (1.0 + u * (0.5 + u / 6.0))
    return em / beta


cdef inline double _growth(double beta, double x) nogil:
    cdef double u = beta * x
    if u < _SMALL_U:
        return _growth_from(0.0, u, beta, x)
    return expm1(u) / beta


def population_log_survival(alphas, betas, lams, x):
    cdef double[::1] a = np.ascontiguousarray(alphas, dtype=np.float64)
    cdef double[::1] b = np.ascontiguousarray(betas, dtype=np.float64)
    cdef double[::1] l = np.ascontiguousarray(lams, dtype=np.float64)
    xarr = np.ascontiguousarray(x, dtype=np.float64)
    flat = xarr.reshape(-1)
    out = np.zeros_like(flat)
    cdef double[::1] xv = flat
    cdef double[::1] o = out
    cdef Py_ssize_t i, k, m = xv.shape[0], n = a.shape[0]
    cdef double acc
    with nogil:
        for i in range(m):
            acc = 0.0
            for k in range(n):
                acc = acc - (l[k] * xv[i] + a[k] * _growth(b[k], xv[i]))
            o[i] = acc
    return out.reshape(xarr.shape)


cdef inline double _H(double a, double b, double l, double x) nogil:
    return l * x + a * _growth(b, x)


cdef inline double _newton_step(double a, double b, double l, double x, double t) nogil:
    # one expm1 call serves both H and H'
    cdef double u = b * x
    cdef double em = expm1(u)
    return (l * x + a * _growth_from(em, u, b, x) - t) / (l + a * (em + 1.0))


def gm_cumhaz_inverse(double alpha, double beta, double lam, targets):
    tarr = np.ascontiguousarray(targets, dtype=np.float64)
    flat = tarr.reshape(-1)
    out = np.zeros_like(flat)
    cdef double[::1] t = flat
    cdef double[::1] o = out
    cdef Py_ssize_t i, m = t.shape[0]
    cdef int it
    cdef double lo, hi, x, xn, step, tt
    cdef bint bad
    with nogil:
        for i in range(m):
            tt = t[i]
            if not tt > 0.0:
                o[i] = 0.0
                continue
            lo = 0.0
            hi = 1.0
            bad = False
            while _H(alpha, beta, lam, hi) < tt:
                lo = hi
                hi = hi * 2.0
                if beta * hi > _EXP_CAP:
                    bad = True
                    break
            if bad:
                o[i] = NAN
                continue
            x = hi
            for it in range(_MAX_NEWTON):
                step = _newton_step(alpha, beta, lam, x, tt)
                xn = x - step
                if xn < lo:
                    xn = lo
                if fabs(xn - x) <= 4.0 * _EPS * (xn if xn > 1e-300 else 1e-300):
                    x = xn
                    break
                x = xn
            o[i] = x
    return out.reshape(tarr.shape)
