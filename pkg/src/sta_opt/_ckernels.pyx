# cython: language_level=3
"""Compiled kernels. Same call signatures as ``_pykernels``."""

import numpy as np
from libc.math cimport cos, fabs, sqrt, M_PI

cdef enum:
    SPHERE = 0
    ROSENBROCK = 1
    RASTRIGIN = 2
    GRIEWANK = 3


def evaluate(int code, X):
    cdef const double[:, ::1] x = np.ascontiguousarray(X, dtype=np.float64)
    cdef Py_ssize_t m = x.shape[0], n = x.shape[1], k, i
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double s, p, v, t
    if code < 0 or code > 3:
        raise ValueError(f"unknown benchmark code {code}")
    with nogil:
        for k in range(m):
            s = 0.0
            if code == SPHERE:
                for i in range(n):
                    s += x[k, i] * x[k, i]
            elif code == ROSENBROCK:
                for i in range(n - 1):
                    t = x[k, i + 1] - x[k, i] * x[k, i]
                    v = x[k, i] - 1.0
                    s += 100.0 * t * t + v * v
            elif code == RASTRIGIN:
                for i in range(n):
                    v = x[k, i]
                    s += v * v - 10.0 * cos(2.0 * M_PI * v) + 10.0
            else:
                p = 1.0
                for i in range(n):
                    v = x[k, i]
                    s += v * v
                    p *= cos(v / sqrt(<double>(i + 1)))
                s = s / 4000.0 - p + 1.0
            out[k] = s
    return out_arr


cdef inline double _clip(double v, double lo, double hi) noexcept nogil:
    if v < lo:
        return lo
    if v > hi:
        return hi
    return v


def rotation_candidates(x, double alpha, R, lower, upper):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef const double[:, :, ::1] rv = np.ascontiguousarray(R, dtype=np.float64)
    cdef const double[::1] lo = np.ascontiguousarray(lower, dtype=np.float64)
    cdef const double[::1] hi = np.ascontiguousarray(upper, dtype=np.float64)
    cdef Py_ssize_t m = rv.shape[0], n = xv.shape[0], k, i, j
    out_arr = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    u_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] u = u_arr
    cdef double big = 0.0, norm2 = 0.0, scale, acc
    with nogil:
        # scale by max |x| so tiny states do not underflow in the norm
        for i in range(n):
            if fabs(xv[i]) > big:
                big = fabs(xv[i])
        for i in range(n):
            u[i] = xv[i] / big
            norm2 += u[i] * u[i]
        scale = alpha / (n * sqrt(norm2))
        for k in range(m):
            for i in range(n):
                acc = 0.0
                for j in range(n):
                    acc += rv[k, i, j] * u[j]
                out[k, i] = _clip(xv[i] + scale * acc, lo[i], hi[i])
    return out_arr


def translation_candidates(x, unit, double beta, r, lower, upper):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef const double[::1] uv = np.ascontiguousarray(unit, dtype=np.float64)
    cdef const double[::1] rv = np.ascontiguousarray(r, dtype=np.float64)
    cdef const double[::1] lo = np.ascontiguousarray(lower, dtype=np.float64)
    cdef const double[::1] hi = np.ascontiguousarray(upper, dtype=np.float64)
    cdef Py_ssize_t m = rv.shape[0], n = xv.shape[0], k, i
    out_arr = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double step
    with nogil:
        for k in range(m):
            step = beta * rv[k]
            for i in range(n):
                out[k, i] = _clip(xv[i] + step * uv[i], lo[i], hi[i])
    return out_arr


def expansion_candidates(x, double gamma, G, lower, upper):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef const double[:, ::1] gv = np.ascontiguousarray(G, dtype=np.float64)
    cdef const double[::1] lo = np.ascontiguousarray(lower, dtype=np.float64)
    cdef const double[::1] hi = np.ascontiguousarray(upper, dtype=np.float64)
    cdef Py_ssize_t m = gv.shape[0], n = xv.shape[0], k, i
    out_arr = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    with nogil:
        for k in range(m):
            for i in range(n):
                out[k, i] = _clip(xv[i] + gamma * (gv[k, i] * xv[i]), lo[i], hi[i])
    return out_arr


def tour_lengths(D, perms):
    cdef const double[:, ::1] dv = np.ascontiguousarray(D, dtype=np.float64)
    cdef const Py_ssize_t[:, ::1] pv = np.ascontiguousarray(perms, dtype=np.intp)
    cdef Py_ssize_t m = pv.shape[0], n = pv.shape[1], k, i
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double s
    with nogil:
        for k in range(m):
            s = 0.0
            for i in range(n - 1):
                s += dv[pv[k, i], pv[k, i + 1]]
            s += dv[pv[k, n - 1], pv[k, 0]]
            out[k] = s
    return out_arr
