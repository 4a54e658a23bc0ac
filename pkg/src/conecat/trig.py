"""Triangle solving and comparison tests in the curvature-kappa models.

Conventions: a triangle stores its curvature and side lengths, side i lying
opposite vertex i.  All lengths are surface arclengths (on the curvature-4
sphere of radius 1/2 a full great circle has length pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import model
from .errors import DegenerateTriangle, PerimeterTooLarge

DEG_TOL = 1e-12
ABS_TOL = 1e-9
LARGE_THRESHOLD = math.pi / 4


@dataclass(frozen=True)
class TriangleShape:
    """A geodesic triangle in the curvature-kappa model, stored by side lengths."""

    kappa: float
    sides: tuple[float, float, float]

    def __post_init__(self):
        model.check_kappa(self.kappa)
        object.__setattr__(self, "sides", tuple(float(s) for s in self.sides))
        a, b, c = self.sides
        if min(a, b, c) <= DEG_TOL:
            raise DegenerateTriangle(f"non-positive side in {self.sides}")
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            if x >= y + z - DEG_TOL:
                raise DegenerateTriangle(f"triangle inequality fails for sides {self.sides}")
        if self.kappa > 0:
            smax = math.pi / math.sqrt(self.kappa)
            if max(a, b, c) >= smax - DEG_TOL:
                raise DegenerateTriangle(
                    f"side exceeds the model bound pi/sqrt(kappa) = {smax}")
            if a + b + c >= 2 * smax - DEG_TOL:
                raise DegenerateTriangle(
                    f"perimeter exceeds the model bound 2*pi/sqrt(kappa) = {2 * smax}")

    @property
    def perimeter(self) -> float:
        return sum(self.sides)

    @property
    def angles(self) -> tuple[float, float, float]:
        return solve_angles(self)

    @property
    def area(self) -> float:
        return triangle_area(self)


@lru_cache(maxsize=None)
def solve_angles(t: TriangleShape) -> tuple[float, float, float]:
    """Interior angles (A, B, C), angle i at vertex i, via the curvature-kappa
    law of cosines."""
    a, b, c = t.sides
    if t.kappa == 0:
        def ang(x, y, z):
            return math.acos(max(-1.0, min(1.0, (y * y + z * z - x * x) / (2 * y * z))))
    else:
        s = math.sqrt(t.kappa)

        def ang(x, y, z):
            num = math.cos(x * s) - math.cos(y * s) * math.cos(z * s)
            den = math.sin(y * s) * math.sin(z * s)
            return math.acos(max(-1.0, min(1.0, num / den)))

    return ang(a, b, c), ang(b, c, a), ang(c, a, b)


def triangle_area(t: TriangleShape) -> float:
    if t.kappa > 0:
        return (sum(solve_angles(t)) - math.pi) / t.kappa
    a, b, c = t.sides
    s = 0.5 * (a + b + c)
    return math.sqrt(max(s * (s - a) * (s - b) * (s - c), 0.0))


def triangle_from_angles(kappa: float, angles) -> TriangleShape:
    """Spherical triangle (kappa > 0) with the given interior angles, via the
    dual law of cosines."""
    if kappa <= 0:
        raise ValueError("angles determine a triangle only for kappa > 0")
    A, B, C = (float(x) for x in angles)
    if A + B + C <= math.pi + DEG_TOL:
        raise DegenerateTriangle("angle sum must exceed pi on the sphere")
    for x, y, z in ((A, B, C), (B, C, A), (C, A, B)):
        if y + z >= math.pi + x - DEG_TOL:
            raise DegenerateTriangle(f"no spherical triangle with angles {angles}")
    s = math.sqrt(kappa)

    def side(x, y, z):
        cv = (math.cos(x) + math.cos(y) * math.cos(z)) / (math.sin(y) * math.sin(z))
        return math.acos(max(-1.0, min(1.0, cv))) / s

    return TriangleShape(kappa, (side(A, B, C), side(B, C, A), side(C, A, B)))


def comparison_triangle(t: TriangleShape, kappa2: float) -> TriangleShape:
    """Triangle with the same side lengths in the curvature-kappa2 model."""
    model.check_kappa(kappa2)
    if kappa2 > 0 and t.perimeter >= 2 * math.pi / math.sqrt(kappa2) - DEG_TOL:
        raise PerimeterTooLarge(
            f"perimeter {t.perimeter} too large for curvature {kappa2}")
    return TriangleShape(kappa2, t.sides)


def circle_length(kappa: float, k_geo: float) -> float:
    """Length of the complete circle of geodesic curvature k_geo in the
    curvature-kappa model."""
    model.check_kappa(kappa)
    w = kappa + k_geo * k_geo
    if w <= 0:
        raise ValueError("kappa + k_geo^2 must be positive")
    return 2 * math.pi / math.sqrt(w)


def chart(t: TriangleShape):
    """Canonical chart vertices of t in its own model."""
    return model.place_triangle(t.kappa, t.sides, solve_angles(t))


def _altitude(kappa: float, V, P, Q) -> float:
    """Length of the perpendicular dropped from V to the side PQ; falls back
    to the nearer endpoint when no perpendicular foot lies on the segment."""
    R = model.radius(kappa)
    vh = np.asarray(V, float) / R
    ph = np.asarray(P, float) / R
    qh = np.asarray(Q, float) / R
    n = model.unit(np.cross(ph, qh))
    proj = vh - float(np.dot(vh, n)) * n
    npj = float(np.linalg.norm(proj))
    if npj < 1e-12:
        return R * math.pi / 2  # V is a pole of the side's great circle
    f = R * proj / npj
    dPQ = model.dist(kappa, P, Q)
    for foot in (f, -f):
        if model.dist(kappa, P, foot) + model.dist(kappa, foot, Q) <= dPQ + model.SEGMENT_TOL:
            return model.dist(kappa, V, foot)
    return min(model.dist(kappa, V, P), model.dist(kappa, V, Q))


def altitudes(t: TriangleShape) -> tuple[float, float, float]:
    """Vertex-to-opposite-side perpendicular lengths, vertex i first."""
    if t.kappa <= 0:
        raise ValueError("altitudes are computed for positive curvature only")
    v = chart(t)
    return tuple(
        _altitude(t.kappa, v[i], v[(i + 1) % 3], v[(i + 2) % 3]) for i in range(3)
    )


def is_large(t: TriangleShape) -> tuple[bool, float]:
    """Whether every vertex of a curvature-4 triangle is at distance at least
    pi/4 from the opposite side (boundary inclusive); also the minimum."""
    if t.kappa != 4:
        raise ValueError("largeness is defined for curvature-4 triangles")
    m = min(altitudes(t))
    return m >= LARGE_THRESHOLD - ABS_TOL, m


class ModelTriangle:
    """A triangle realized inside a model surface, exposing the distance
    oracle used by the comparison sampler.  Side k runs from corner k to
    corner k+1 (mod 3)."""

    def __init__(self, kappa: float, corners):
        model.check_kappa(kappa)
        self.kappa = kappa
        self.corners = [np.asarray(c, dtype=float) for c in corners]

    @classmethod
    def from_shape(cls, t: TriangleShape) -> "ModelTriangle":
        v0, v1, v2 = chart(t)
        return cls(t.kappa, (v0, v1, v2))

    def side_lengths(self) -> tuple[float, float, float]:
        c = self.corners
        return tuple(model.dist(self.kappa, c[k], c[(k + 1) % 3]) for k in range(3))

    def point(self, k: int, s: float):
        c = self.corners
        return model.point_on_segment(self.kappa, c[k], c[(k + 1) % 3], s)

    def distance(self, i: int, s: float, j: int, t: float) -> float:
        return model.dist(self.kappa, self.point(i, s), self.point(j, t))


@dataclass
class CatSampleReport:
    passed: bool
    worst_margin: float
    worst_pair: tuple | None
    samples: int
    note: str = ""


def cat_sample_test(ambient, kappa: float, samples: int = 10) -> CatSampleReport:
    """Sample the comparison inequality for a triangle given by three geodesic
    segments with a distance oracle.

    Pairs of boundary points are compared against the corresponding pair in
    the curvature-kappa comparison triangle; the worst margin is
    min(model distance - ambient distance), so negative margins beyond
    tolerance are violations.
    """
    model.check_kappa(kappa)
    L = [float(x) for x in ambient.side_lengths()]
    degenerate = min(L) <= DEG_TOL or any(
        L[i] >= L[(i + 1) % 3] + L[(i + 2) % 3] - DEG_TOL for i in range(3)
    )
    if degenerate:
        return CatSampleReport(True, 0.0, None, 0, note="degenerate triangle, vacuous pass")
    if kappa > 0 and sum(L) >= 2 * math.pi / math.sqrt(kappa) - DEG_TOL:
        raise PerimeterTooLarge(f"perimeter {sum(L)} too large for curvature {kappa}")
    # comparison corners Q0, Q1, Q2 with dist(Qk, Qk+1) = L[k]
    ref = TriangleShape(kappa, (L[1], L[2], L[0]))
    Q = chart(ref)
    pts = []
    for k in range(3):
        for m in range(samples + 1):
            s = L[k] * m / samples
            pts.append((k, s, model.point_on_segment(kappa, Q[k], Q[(k + 1) % 3], s)))
    worst = math.inf
    worst_pair = None
    for idx in range(len(pts)):
        k1, s1, p1 = pts[idx]
        for k2, s2, p2 in pts[idx + 1:]:
            margin = model.dist(kappa, p1, p2) - ambient.distance(k1, s1, k2, s2)
            if margin < worst:
                worst = margin
                worst_pair = ((k1, s1), (k2, s2))
    return CatSampleReport(worst >= -ABS_TOL, worst, worst_pair, len(pts))
