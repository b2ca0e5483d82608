"""Pure-Python validation kernels.

Mirrors ``_kernels.pyx`` line for line; used when the compiled extension
is unavailable and as the reference in backend-parity tests.  Every
function takes an ``(n, 3)`` array of hyperboloid coordinates and returns
the first offending index tuple, or ``None``.
"""

from math import asinh, sqrt

NAME = "python"


def _rows(V):
    return [tuple(map(float, r)) for r in V]


def _dot(a, b):
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (
        -(a[1] * b[2] - a[2] * b[1]),
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _det(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _enorm(a):
    return sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])


def _dist(p, q):
    d = (p[0] - q[0], p[1] - q[1], p[2] - q[2])
    s = _dot(d, d)
    if s <= 0.0:
        return 0.0
    return 2.0 * asinh(0.5 * sqrt(s))


def _scaled_det(a, b, c):
    return _det(a, b, c) / (_enorm(a) * _enorm(b) * _enorm(c))


def _unit_normal(p, q):
    n = _cross(p, q)
    s = sqrt(_dot(n, n))
    return (n[0] / s, n[1] / s, n[2] / s)


def _side(x, n, eps_side):
    v = _dot(x, n)
    if v > eps_side:
        return 1
    if v < -eps_side:
        return -1
    return 0


def _center(a, b, c, eps_class):
    """Circumcenter of a non-collinear triple, or None if no circle exists."""
    n1 = (a[0] - b[0], a[1] - b[1], a[2] - b[2])
    n2 = (b[0] - c[0], b[1] - c[1], b[2] - c[2])
    v = _cross(n1, n2)
    s = _dot(v, v)
    if s >= -eps_class * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]):
        return None
    k = sqrt(-s)
    if v[0] < 0:
        k = -k
    return (v[0] / k, v[1] / k, v[2] / k)


def _klein(p):
    return (p[1] / p[0], p[2] / p[0])


def first_reflex(V, eps_side):
    """First vertex whose turn is not strictly to the left."""
    P = _rows(V)
    n = len(P)
    for i in range(n):
        if _scaled_det(P[i - 1], P[i], P[(i + 1) % n]) <= eps_side:
            return (i,)
    return None


def first_collinear(V, eps_side):
    P = _rows(V)
    n = len(P)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if abs(_scaled_det(P[a], P[b], P[c])) <= eps_side:
                    return (a, b, c)
    return None


def _segments_cross(p, q, r, s, eps_side):
    ni = _unit_normal(p, q)
    s1 = _side(r, ni, eps_side)
    s2 = _side(s, ni, eps_side)
    if s1 * s2 > 0:
        return False
    nj = _unit_normal(r, s)
    s3 = _side(p, nj, eps_side)
    s4 = _side(q, nj, eps_side)
    if s3 * s4 > 0:
        return False
    if s1 == 0 and s2 == 0:
        # shared geodesic: compare parameter intervals in the Klein chart
        kp, kq, kr, ks = _klein(p), _klein(q), _klein(r), _klein(s)
        dx, dy = kq[0] - kp[0], kq[1] - kp[1]
        dd = dx * dx + dy * dy
        t1 = ((kr[0] - kp[0]) * dx + (kr[1] - kp[1]) * dy) / dd
        t2 = ((ks[0] - kp[0]) * dx + (ks[1] - kp[1]) * dy) / dd
        return max(t1, t2) >= 0.0 and min(t1, t2) <= 1.0
    return True


def first_intersection(V, eps_side):
    """First pair of edges ``(i, j)`` that meet improperly.

    Edge ``i`` joins vertices ``i`` and ``i + 1``.  Adjacent edges may only
    share their common vertex, so they fail only when folding back along
    one geodesic.
    """
    P = _rows(V)
    n = len(P)
    for i in range(n):
        a, b, c = P[i - 1], P[i], P[(i + 1) % n]
        nrm = _unit_normal(a, b)
        if _side(c, nrm, eps_side) == 0:
            ka, kb, kc = _klein(a), _klein(b), _klein(c)
            if (ka[0] - kb[0]) * (kc[0] - kb[0]) + (ka[1] - kb[1]) * (kc[1] - kb[1]) > 0.0:
                return ((i - 1) % n, i)
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if _segments_cross(P[i], P[(i + 1) % n], P[j], P[(j + 1) % n], eps_side):
                return (i, j)
    return None


def _on_circle(a, b, c, d, eps_sep, eps_side, eps_class, eps_id):
    if _dist(a, b) <= eps_sep or _dist(b, c) <= eps_sep or _dist(a, c) <= eps_sep:
        return False
    if abs(_scaled_det(a, b, c)) <= eps_side:
        return False
    o = _center(a, b, c, eps_class)
    if o is None:
        return False
    r = (_dist(o, a) + _dist(o, b) + _dist(o, c)) / 3.0
    return abs(_dist(o, d) - r) <= eps_id


def first_concyclic(V, eps_sep, eps_side, eps_class, eps_id, consecutive_only=False):
    """First quadruple with the fourth vertex on the circle through the first three."""
    P = _rows(V)
    n = len(P)
    if n < 4:
        return None
    if consecutive_only:
        for i in range(n):
            q = (i, (i + 1) % n, (i + 2) % n, (i + 3) % n)
            if _on_circle(P[q[0]], P[q[1]], P[q[2]], P[q[3]], eps_sep, eps_side, eps_class, eps_id):
                return q
        return None
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    if _on_circle(P[a], P[b], P[c], P[d], eps_sep, eps_side, eps_class, eps_id):
                        return (a, b, c, d)
    return None


def first_incoherent(V, eps_side, eps_class):
    """First vertex whose circumcenter is missing or outside its cone."""
    P = _rows(V)
    n = len(P)
    for i in range(n):
        a, b, c = P[i - 1], P[i], P[(i + 1) % n]
        if abs(_scaled_det(a, b, c)) <= eps_side:
            return (i,)
        o = _center(a, b, c, eps_class)
        if o is None:
            return (i,)
        n_prev = _unit_normal(b, a)
        n_next = _unit_normal(b, c)
        s1 = _side(o, n_prev, eps_side)
        s2 = _side(o, n_next, eps_side)
        if s1 == 0 or s2 == 0:
            return (i,)
        if s1 != _side(c, n_prev, eps_side) or s2 != _side(a, n_next, eps_side):
            return (i,)
    return None
