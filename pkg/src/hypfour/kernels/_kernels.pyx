# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled validation kernels.

Same contracts as ``_fallback``: each function takes an ``(n, 3)`` float64
array of hyperboloid coordinates and returns the first offending index
tuple or ``None``.
"""

import numpy as np
from libc.math cimport sqrt, asinh, fabs

NAME = "cython"

ctypedef double[:, ::1] Coords


cdef inline double mdot(double a0, double a1, double a2,
                        double b0, double b1, double b2) nogil:
    return -a0 * b0 + a1 * b1 + a2 * b2


cdef inline void mcross(double a0, double a1, double a2,
                        double b0, double b1, double b2, double* out) nogil:
    out[0] = -(a1 * b2 - a2 * b1)
    out[1] = a2 * b0 - a0 * b2
    out[2] = a0 * b1 - a1 * b0


cdef inline double det3(const double* a, const double* b, const double* c) nogil:
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


cdef inline double enorm(const double* a) nogil:
    return sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])


cdef inline double scaled_det(const double* a, const double* b, const double* c) nogil:
    return det3(a, b, c) / (enorm(a) * enorm(b) * enorm(c))


cdef inline double dist(const double* p, const double* q) nogil:
    cdef double d0 = p[0] - q[0], d1 = p[1] - q[1], d2 = p[2] - q[2]
    cdef double s = mdot(d0, d1, d2, d0, d1, d2)
    if s <= 0.0:
        return 0.0
    return 2.0 * asinh(0.5 * sqrt(s))


cdef inline void unit_normal(const double* p, const double* q, double* out) nogil:
    mcross(p[0], p[1], p[2], q[0], q[1], q[2], out)
    cdef double s = sqrt(mdot(out[0], out[1], out[2], out[0], out[1], out[2]))
    out[0] /= s
    out[1] /= s
    out[2] /= s


cdef inline int side(const double* x, const double* n, double eps_side) nogil:
    cdef double v = mdot(x[0], x[1], x[2], n[0], n[1], n[2])
    if v > eps_side:
        return 1
    if v < -eps_side:
        return -1
    return 0


cdef inline bint center(const double* a, const double* b, const double* c,
                        double eps_class, double* out) nogil:
    cdef double v[3]
    cdef double s, k
    mcross(a[0] - b[0], a[1] - b[1], a[2] - b[2],
           b[0] - c[0], b[1] - c[1], b[2] - c[2], v)
    s = mdot(v[0], v[1], v[2], v[0], v[1], v[2])
    if s >= -eps_class * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]):
        return False
    k = sqrt(-s)
    if v[0] < 0:
        k = -k
    out[0] = v[0] / k
    out[1] = v[1] / k
    out[2] = v[2] / k
    return True


cdef inline double* row(Coords P, Py_ssize_t i) nogil:
    return &P[i, 0]


def _as_coords(V):
    return np.ascontiguousarray(V, dtype=np.float64).reshape(-1, 3)


def first_reflex(V, double eps_side):
    cdef Coords P = _as_coords(V)
    cdef Py_ssize_t n = P.shape[0], i
    for i in range(n):
        if scaled_det(row(P, (i + n - 1) % n), row(P, i), row(P, (i + 1) % n)) <= eps_side:
            return (i,)
    return None


def first_collinear(V, double eps_side):
    cdef Coords P = _as_coords(V)
    cdef Py_ssize_t n = P.shape[0], a, b, c
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if fabs(scaled_det(row(P, a), row(P, b), row(P, c))) <= eps_side:
                    return (a, b, c)
    return None


cdef bint segments_cross(const double* p, const double* q, const double* r,
                         const double* s, double eps_side) nogil:
    cdef double ni[3]
    cdef double nj[3]
    cdef int s1, s2, s3, s4
    cdef double kpx, kpy, dx, dy, dd, t1, t2
    unit_normal(p, q, ni)
    s1 = side(r, ni, eps_side)
    s2 = side(s, ni, eps_side)
    if s1 * s2 > 0:
        return False
    unit_normal(r, s, nj)
    s3 = side(p, nj, eps_side)
    s4 = side(q, nj, eps_side)
    if s3 * s4 > 0:
        return False
    if s1 == 0 and s2 == 0:
        kpx = p[1] / p[0]
        kpy = p[2] / p[0]
        dx = q[1] / q[0] - kpx
        dy = q[2] / q[0] - kpy
        dd = dx * dx + dy * dy
        t1 = ((r[1] / r[0] - kpx) * dx + (r[2] / r[0] - kpy) * dy) / dd
        t2 = ((s[1] / s[0] - kpx) * dx + (s[2] / s[0] - kpy) * dy) / dd
        return max(t1, t2) >= 0.0 and min(t1, t2) <= 1.0
    return True


def first_intersection(V, double eps_side):
    cdef Coords P = _as_coords(V)
    cdef Py_ssize_t n = P.shape[0], i, j
    cdef double nrm[3]
    cdef double *a
    cdef double *b
    cdef double *c
    for i in range(n):
        a = row(P, (i + n - 1) % n)
        b = row(P, i)
        c = row(P, (i + 1) % n)
        unit_normal(a, b, nrm)
        if side(c, nrm, eps_side) == 0:
            if ((a[1] / a[0] - b[1] / b[0]) * (c[1] / c[0] - b[1] / b[0])
                    + (a[2] / a[0] - b[2] / b[0]) * (c[2] / c[0] - b[2] / b[0])) > 0.0:
                return ((i + n - 1) % n, i)
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segments_cross(row(P, i), row(P, (i + 1) % n), row(P, j), row(P, (j + 1) % n), eps_side):
                return (i, j)
    return None


cdef bint on_circle(const double* a, const double* b, const double* c, const double* d,
                    double eps_sep, double eps_side, double eps_class, double eps_id) nogil:
    cdef double o[3]
    cdef double r
    if dist(a, b) <= eps_sep or dist(b, c) <= eps_sep or dist(a, c) <= eps_sep:
        return False
    if fabs(scaled_det(a, b, c)) <= eps_side:
        return False
    if not center(a, b, c, eps_class, o):
        return False
    r = (dist(o, a) + dist(o, b) + dist(o, c)) / 3.0
    return fabs(dist(o, d) - r) <= eps_id


def first_concyclic(V, double eps_sep, double eps_side, double eps_class, double eps_id,
                    bint consecutive_only=False):
    cdef Coords P = _as_coords(V)
    cdef Py_ssize_t n = P.shape[0], a, b, c, d, i
    if n < 4:
        return None
    if consecutive_only:
        for i in range(n):
            if on_circle(row(P, i), row(P, (i + 1) % n), row(P, (i + 2) % n), row(P, (i + 3) % n),
                         eps_sep, eps_side, eps_class, eps_id):
                return (i, (i + 1) % n, (i + 2) % n, (i + 3) % n)
        return None
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    if on_circle(row(P, a), row(P, b), row(P, c), row(P, d),
                                 eps_sep, eps_side, eps_class, eps_id):
                        return (a, b, c, d)
    return None


def first_incoherent(V, double eps_side, double eps_class):
    cdef Coords P = _as_coords(V)
    cdef Py_ssize_t n = P.shape[0], i
    cdef double o[3]
    cdef double n_prev[3]
    cdef double n_next[3]
    cdef double *a
    cdef double *b
    cdef double *c
    cdef int s1, s2
    for i in range(n):
        a = row(P, (i + n - 1) % n)
        b = row(P, i)
        c = row(P, (i + 1) % n)
        if fabs(scaled_det(a, b, c)) <= eps_side:
            return (i,)
        if not center(a, b, c, eps_class, o):
            return (i,)
        unit_normal(b, a, n_prev)
        unit_normal(b, c, n_next)
        s1 = side(o, n_prev, eps_side)
        s2 = side(o, n_next, eps_side)
        if s1 == 0 or s2 == 0:
            return (i,)
        if s1 != side(c, n_prev, eps_side) or s2 != side(a, n_next, eps_side):
            return (i,)
    return None
