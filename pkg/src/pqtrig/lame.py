"""Lamé curve (generalized superellipse) samples.

Two parametrizations of the first-quadrant arc are produced:

    C:  x = cos(t)^(2/p),  y = sin(t)^(2/q),   t in [0, pi/2],      x^p + y^q = 1
    D:  x = sin_pq(t),     y = cos_pq(t),      t in [0, pi_pq/2],   x^q + y^p = 1

The two residuals differ in which coordinate carries which exponent, so D is
the mirror image of C in the diagonal.  Point-set comparisons therefore swap
D's coordinates, i.e. they compare C with {(cos_pq t, sin_pq t)}.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace

import numpy as np

from .config import DEFAULT_CONFIG, NumericConfig
from .pqfunctions import PQParams, pi_pq_half, sin_cos_pq

C_PARAM = "C_param"
D_PARAM = "D_param"
CSV_HEADER = ("t", "x", "y", "source", "quadrant")


@dataclass(frozen=True)
class CurveSample:
    t: float
    x: float
    y: float
    source: str
    quadrant: int = 1


def sample_curve_C(P: PQParams, n: int) -> list[CurveSample]:
    """n samples of C at uniform t in [0, pi/2]; the endpoints are exactly (1, 0) and (0, 1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = []
    for i, t in enumerate(np.linspace(0.0, 0.5 * math.pi, n)):
        if i == 0:
            x, y = 1.0, 0.0
        elif i == n - 1:
            x, y = 0.0, 1.0
        else:
            x = math.cos(t) ** (2 / P.p)
            y = math.sin(t) ** (2 / P.q)
        out.append(CurveSample(float(t), x, y, C_PARAM))
    return out


def sample_curve_D(P: PQParams, n: int, cfg: NumericConfig = DEFAULT_CONFIG) -> list[CurveSample]:
    """n samples of D at uniform t strictly inside (0, pi_pq/2), plus the two exact endpoints.

    The interior samples sit at t_i = pi_pq/2 * (i + 1)/(n + 1), so n + 2 samples
    are returned in increasing t.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    half_pi = pi_pq_half(P, cfg)
    out = [CurveSample(0.0, 0.0, 1.0, D_PARAM)]
    for i in range(n):
        t = half_pi * (i + 1) / (n + 1)
        s, c = sin_cos_pq(P, t, cfg)
        out.append(CurveSample(t, s, c, D_PARAM))
    out.append(CurveSample(half_pi, 1.0, 0.0, D_PARAM))
    return out


def extend_four_quadrants(samples: list[CurveSample]) -> list[CurveSample]:
    """Append the reflections (-x, y), (-x, -y), (x, -y), one quadrant block at a time."""
    out = list(samples)
    for quadrant, sx, sy in ((2, -1.0, 1.0), (3, -1.0, -1.0), (4, 1.0, -1.0)):
        out.extend(replace(s, x=sx * s.x, y=sy * s.y, quadrant=quadrant) for s in samples)
    return out


def residual(sample: CurveSample, P: PQParams) -> float:
    """|x|^p + |y|^q - 1 for C samples, |x|^q + |y|^p - 1 for D samples."""
    x, y = abs(sample.x), abs(sample.y)
    if sample.source == C_PARAM:
        return x**P.p + y**P.q - 1.0
    return x**P.q + y**P.p - 1.0


def swap_xy(samples: list[CurveSample]) -> list[CurveSample]:
    return [replace(s, x=s.y, y=s.x) for s in samples]


def _points(samples: list[CurveSample]) -> np.ndarray:
    return np.array([(s.x, s.y) for s in samples], dtype=float)


def _point_to_polyline(points: np.ndarray, poly: np.ndarray) -> np.ndarray:
    """Distance from each point to the polyline through ``poly`` (in order)."""
    a = poly[:-1][None, :, :]
    d = (poly[1:] - poly[:-1])[None, :, :]
    v = points[:, None, :] - a
    len2 = np.sum(d * d, axis=2)
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(len2 > 0, np.sum(v * d, axis=2) / len2, 0.0)
    t = np.clip(t, 0.0, 1.0)
    nearest = a + t[:, :, None] * d
    dist = np.sqrt(np.sum((points[:, None, :] - nearest) ** 2, axis=2))
    return dist.min(axis=1)


def curve_distance(A: list[CurveSample], B: list[CurveSample]) -> float:
    """Symmetric Hausdorff-style distance between two sampled arcs.

    Each sample of one arc is measured against the polyline through the other
    arc's samples; the larger of the two maxima is returned.  Samples must be
    ordered along their arcs.
    """
    pa, pb = _points(A), _points(B)
    return float(max(_point_to_polyline(pa, pb).max(), _point_to_polyline(pb, pa).max()))


def mean_arc_spacing(samples: list[CurveSample]) -> float:
    pts = _points(samples)
    return float(np.mean(np.hypot(*np.diff(pts, axis=0).T)))


def c_d_distance(P: PQParams, n: int, cfg: NumericConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """(distance between C and coordinate-swapped D, mean arc spacing of C), both with n + 2 samples."""
    c = sample_curve_C(P, n + 2)
    d = sample_curve_D(P, n, cfg)
    # C runs from (1,0) to (0,1); swapped D runs the same way
    return curve_distance(c, swap_xy(d)), mean_arc_spacing(c)


def write_csv(samples: list[CurveSample], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in samples:
        writer.writerow((f"{s.t:.17g}", f"{s.x:.17g}", f"{s.y:.17g}", s.source, s.quadrant))


def to_csv(samples: list[CurveSample]) -> str:
    buf = io.StringIO()
    write_csv(samples, buf)
    return buf.getvalue()
