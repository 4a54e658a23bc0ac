"""Primitives for the constant-curvature model surfaces of curvature kappa >= 0.

Points of the kappa = 0 model are 2-vectors; points of a kappa > 0 model are
3-vectors of norm 1/sqrt(kappa), living on the round sphere of that curvature.
Tangent vectors at a sphere point are unit 3-vectors orthogonal to the point.
All geodesics run at unit speed in surface arclength.
"""

from __future__ import annotations

import math

import numpy as np

PARALLEL_EPS = 1e-13
SEGMENT_TOL = 1e-9


def check_kappa(kappa: float) -> None:
    if kappa < 0:
        raise ValueError(f"model curvature must be >= 0, got {kappa}")


def radius(kappa: float) -> float:
    if kappa <= 0:
        raise ValueError("radius is defined only for kappa > 0")
    return 1.0 / math.sqrt(kappa)


def unit(v: np.ndarray) -> np.ndarray:
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / n


def _clamp(x: float) -> float:
    return max(-1.0, min(1.0, x))


def dist(kappa: float, p, q) -> float:
    """Geodesic distance between two model points."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if kappa == 0:
        return float(np.linalg.norm(q - p))
    R = radius(kappa)
    ph, qh = p / R, q / R
    return R * math.atan2(float(np.linalg.norm(np.cross(ph, qh))), float(np.dot(ph, qh)))


def tangent_toward(kappa: float, p, q) -> np.ndarray:
    """Unit tangent at p pointing along the geodesic toward q."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if kappa == 0:
        return unit(q - p)
    R = radius(kappa)
    ph, qh = p / R, q / R
    w = qh - float(np.dot(qh, ph)) * ph
    n = float(np.linalg.norm(w))
    if n < 1e-15:
        raise ValueError("direction undefined for coincident or antipodal points")
    return w / n


def advance(kappa: float, p, u, s: float) -> tuple[np.ndarray, np.ndarray]:
    """Flow (p, u) along its geodesic for arclength s; returns point and
    the tangent parallel-transported along the geodesic."""
    p = np.asarray(p, dtype=float)
    u = np.asarray(u, dtype=float)
    if kappa == 0:
        return p + s * u, u
    R = radius(kappa)
    ph = p / R
    c, sn = math.cos(s / R), math.sin(s / R)
    ph2 = c * ph + sn * u
    u2 = -sn * ph + c * u
    ph2 = unit(ph2)
    u2 = u2 - float(np.dot(u2, ph2)) * ph2
    u2 = unit(u2)
    return R * ph2, u2


def rotate_tangent(kappa: float, p, u, phi: float) -> np.ndarray:
    """Rotate tangent u at p by angle phi, counterclockwise in the chart
    orientation (standard plane orientation; sphere seen from outside)."""
    u = np.asarray(u, dtype=float)
    c, s = math.cos(phi), math.sin(phi)
    if kappa == 0:
        return np.array([c * u[0] - s * u[1], s * u[0] + c * u[1]])
    ph = unit(np.asarray(p, dtype=float))
    return c * u + s * np.cross(ph, u)


def signed_angle(kappa: float, p, u, v) -> float:
    """Signed angle from tangent u to tangent v at p, in (-pi, pi]."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if kappa == 0:
        return math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])
    ph = unit(np.asarray(p, dtype=float))
    return math.atan2(float(np.dot(np.cross(u, v), ph)), float(np.dot(u, v)))


def chart_orientation(kappa: float, verts) -> float:
    """+1 for positively oriented vertex triples, -1 otherwise."""
    a, b, c = (np.asarray(v, dtype=float) for v in verts)
    if kappa == 0:
        x, y = b - a, c - a
        return 1.0 if x[0] * y[1] - x[1] * y[0] >= 0 else -1.0
    return 1.0 if float(np.linalg.det(np.stack([a, b, c]))) >= 0 else -1.0


def point_on_segment(kappa: float, p, q, s: float) -> np.ndarray:
    """Point at arclength s from p along the geodesic segment toward q."""
    return advance(kappa, p, tangent_toward(kappa, p, q), s)[0]


def third_vertex(kappa: float, p, q, dp: float, dq: float, opposite_to=None) -> np.ndarray:
    """Point X with dist(p, X) = dp and dist(q, X) = dq.

    Of the two mirror solutions, returns the one on the side of the geodesic
    through p, q away from `opposite_to` (or the positive side if None).
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if kappa == 0:
        e = q - p
        d = float(np.linalg.norm(e))
        ex = e / d
        ey = np.array([-ex[1], ex[0]])
        x = (d * d + dp * dp - dq * dq) / (2 * d)
        h = math.sqrt(max(dp * dp - x * x, 0.0))
        side = 1.0
        if opposite_to is not None:
            side = -1.0 if float(np.dot(np.asarray(opposite_to, float) - p, ey)) > 0 else 1.0
        return p + x * ex + side * h * ey
    R = radius(kappa)
    ph, qh = p / R, q / R
    cd = _clamp(float(np.dot(ph, qh)))
    ca, cb = math.cos(dp / R), math.cos(dq / R)
    det = 1.0 - cd * cd
    if det < 1e-15:
        raise ValueError("degenerate base segment")
    a = (ca - cb * cd) / det
    b = (cb - ca * cd) / det
    n = unit(np.cross(ph, qh))
    c2 = 1.0 - (a * a + b * b + 2 * a * b * cd)
    c = math.sqrt(max(c2, 0.0))
    side = 1.0
    if opposite_to is not None:
        side = -1.0 if float(np.dot(np.asarray(opposite_to, float) / R, n)) > 0 else 1.0
    return R * (a * ph + b * qh + side * c * n)


def segment_crossing(kappa: float, X, u, P, Q, skip: float = 1e-11):
    """First forward meeting of the unit-speed geodesic (X, u) with segment PQ.

    Returns (arclength, point) or None. Points within SEGMENT_TOL of the
    segment count as on it; crossings closer than `skip` along the geodesic
    are ignored (they are the current position).
    """
    X = np.asarray(X, dtype=float)
    u = np.asarray(u, dtype=float)
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if kappa == 0:
        e = Q - P
        elen = float(np.linalg.norm(e))
        ce = u[0] * e[1] - u[1] * e[0]
        if abs(ce) < PARALLEL_EPS * max(elen, 1.0):
            return None
        w = P - X
        delta = (w[0] * e[1] - w[1] * e[0]) / ce
        tau = (w[0] * u[1] - w[1] * u[0]) / ce
        if delta <= skip:
            return None
        ttol = SEGMENT_TOL / max(elen, 1e-30)
        if tau < -ttol or tau > 1.0 + ttol:
            return None
        return delta, P + tau * e
    R = radius(kappa)
    Xh = X / R
    ng = np.cross(Xh, u)
    ne = np.cross(P / R, Q / R)
    nne = float(np.linalg.norm(ne))
    if nne < 1e-14:
        return None
    ne = ne / nne
    w = np.cross(ng, ne)
    nw = float(np.linalg.norm(w))
    if nw < 1e-13:
        return None
    w = w / nw
    dPQ = dist(kappa, P, Q)
    best = None
    for cand in (w, -w):
        cosphi = float(np.dot(cand, Xh))
        sinphi = float(np.dot(cand, u))
        phi = math.atan2(sinphi, cosphi) % (2 * math.pi)
        delta = R * phi
        if delta <= skip:
            continue
        Wp = R * cand
        if dist(kappa, P, Wp) + dist(kappa, Wp, Q) > dPQ + SEGMENT_TOL:
            continue
        if best is None or delta < best[0]:
            best = (delta, Wp)
    return best


def place_triangle(kappa: float, sides, angles) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Canonical positively oriented chart for a triangle with the given side
    lengths (side i opposite vertex i) and angles."""
    a, b, c = sides
    A = angles[0]
    if kappa == 0:
        v0 = np.zeros(2)
        v1 = np.array([c, 0.0])
        v2 = np.array([b * math.cos(A), b * math.sin(A)])
        return v0, v1, v2
    R = radius(kappa)
    v0 = np.array([0.0, 0.0, R])
    e = np.array([1.0, 0.0, 0.0])
    v1 = advance(kappa, v0, e, c)[0]
    v2 = advance(kappa, v0, rotate_tangent(kappa, v0, e, A), b)[0]
    return v0, v1, v2
