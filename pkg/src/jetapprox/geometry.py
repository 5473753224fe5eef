"""Finite, testable descriptions of compact planar sets.

A descriptor carries everything the lifting pipeline needs: sample points
(every supremum over the set becomes a maximum over samples), a distinguished
base point, one prescribed pole per bounded complementary component, a
winding loop around each pole, and bounded-length connector curves from the
base point to the other distinguished samples.  Constructors are provided
for disks, segments, circles, annuli, dumbbells, explicit countable sets and
fully custom data.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .curves import Disk, Polyline, curve_length  # noqa: F401  (re-exported)
from .errors import (
    AmbiguousWindingError,
    CurveNotClosedError,
    InvalidParamsError,
)
from .quadrature import contour_integral

_TWO_PI_I = 2j * math.pi


def _winding_value(curve: Polyline, p: complex, tol: float):
    """Raw winding integral and its distance to the nearest integer."""
    if not curve.closed:
        raise CurveNotClosedError("winding number needs a closed curve")
    p = complex(p)
    if curve.distance_to(p) <= 0:
        raise InvalidParamsError("point lies on the curve")
    quad_tol = min(tol, 1e-8) / 10
    res = contour_integral(lambda z: 1.0 / (z - p), curve, tol=quad_tol)
    w = res.value / _TWO_PI_I
    n = int(round(w.real))
    return n, abs(w - n)


def winding_number(curve: Polyline, p, tol: float = 1e-6) -> int:
    """Oriented turn count of the closed curve around p.

    Computed by adaptive quadrature of the Cauchy index integral and rounded;
    the pre-rounding value must sit within ``tol`` of an integer.
    """
    n, residual = _winding_value(curve, p, tol)
    if residual > tol:
        raise AmbiguousWindingError(
            f"winding integral {n} + {residual:.3e} away from an integer (tol {tol:.1e})"
        )
    return n


@dataclass(frozen=True)
class CompactSetDescriptor:
    """Finite stand-in for a compact set K.

    ``samples`` approximate K for sup estimation; ``dense_subset`` is the
    subset of samples that carries connector curves; ``finite_poles`` hold
    one point per bounded complementary component (the unbounded component is
    represented by ``includes_infinity``); ``loops[i]`` winds once around
    ``finite_poles[i]`` and around no other pole; every connector runs inside
    K from ``base_point`` to its key with length at most ``connector_bound``.
    """

    kind: str
    samples: tuple
    dense_subset: tuple
    base_point: complex
    finite_poles: tuple = ()
    includes_infinity: bool = True
    loops: tuple = ()
    connector_bound: float = 1.0
    connectors: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.samples:
            raise InvalidParamsError("descriptor needs at least one sample")
        sample_set = set(self.samples)
        if not set(self.dense_subset) <= sample_set:
            raise InvalidParamsError("dense subset must consist of sample points")
        if self.base_point not in set(self.dense_subset):
            raise InvalidParamsError("base point must appear in the dense subset")
        if len(self.loops) != len(self.finite_poles):
            raise InvalidParamsError("need exactly one loop per finite pole")
        for loop in self.loops:
            if not loop.closed:
                raise InvalidParamsError("winding loops must be closed")
        if not (self.connector_bound > 0 and math.isfinite(self.connector_bound)):
            raise InvalidParamsError("connector bound must be positive and finite")
        for key, path in self.connectors.items():
            if path.vertices[0] != self.base_point:
                raise InvalidParamsError(f"connector for {key} does not start at the base point")
            if path.vertices[-1] != key:
                raise InvalidParamsError(f"connector for {key} does not end at its key")
            if path.length > self.connector_bound + 1e-12:
                raise InvalidParamsError(
                    f"connector for {key} has length {path.length:.6g} "
                    f"beyond the bound {self.connector_bound:.6g}"
                )

    def validate(self, tol: float = 1e-6) -> bool:
        """Quadrature-backed invariant check: loop/pole winding pattern."""
        for i, loop in enumerate(self.loops):
            for j, pole in enumerate(self.finite_poles):
                expected = 1 if i == j else 0
                w = winding_number(loop, pole, tol)
                if w != expected:
                    raise InvalidParamsError(
                        f"loop {i} winds {w} times around pole {j}, expected {expected}"
                    )
        return True


# ---------------------------------------------------------------------------
# constructors


def make_set(kind: str, **params) -> CompactSetDescriptor:
    """Build a descriptor of the given kind.

    Kinds and parameters:

    - ``disk``: center, radius, samples
    - ``segment``: start, end, samples
    - ``circle``: center, radius, samples
    - ``annulus``: center, inner_radius, outer_radius, samples
    - ``dumbbell``: center1, radius1, center2, radius2, samples
    - ``countable``: points (explicit list)
    - ``custom``: all descriptor fields explicitly
    """
    builders = {
        "disk": _disk_set,
        "segment": _segment_set,
        "circle": _circle_set,
        "annulus": _annulus_set,
        "dumbbell": _dumbbell_set,
        "countable": _countable_set,
        "custom": _custom_set,
    }
    if kind not in builders:
        raise InvalidParamsError(f"unknown set kind {kind!r}")
    return builders[kind](**params)


def _check_sample_count(samples):
    if samples < 16:
        raise InvalidParamsError("need at least 16 samples")


def _disk_samples(center: complex, radius: float, target: int):
    """Concentric rings plus the center; the outermost ring sits on the boundary."""
    rings = max(2, int(round(math.sqrt(target / 3.0))))
    pts = [center]
    weight = rings * (rings + 1) / 2
    for j in range(1, rings + 1):
        m = max(6, int(round((target - 1) * j / weight)))
        r = radius * j / rings
        for i in range(m):
            pts.append(center + r * cmath.exp(2j * math.pi * i / m))
    return pts


def _disk_set(center=0j, radius=1.0, samples=256) -> CompactSetDescriptor:
    center = complex(center)
    if not radius > 0:
        raise InvalidParamsError("radius must be positive")
    _check_sample_count(samples)
    pts = _disk_samples(center, radius, samples)
    connectors = {z: Polyline.line(center, z) for z in pts if z != center}
    return CompactSetDescriptor(
        kind="disk",
        samples=tuple(pts),
        dense_subset=tuple(pts),
        base_point=center,
        finite_poles=(),
        includes_infinity=True,
        loops=(),
        connector_bound=2.0 * radius,
        connectors=connectors,
    )


def _segment_set(start=0j, end=1.0 + 0j, samples=64) -> CompactSetDescriptor:
    start, end = complex(start), complex(end)
    if start == end:
        raise InvalidParamsError("segment endpoints must differ")
    _check_sample_count(samples)
    m = int(samples)
    pts = [start + (end - start) * (j / (m - 1)) for j in range(m)]
    pts[0], pts[-1] = start, end
    connectors = {z: Polyline.line(start, z) for z in pts if z != start}
    return CompactSetDescriptor(
        kind="segment",
        samples=tuple(pts),
        dense_subset=tuple(pts),
        base_point=start,
        connector_bound=abs(end - start),
        connectors=connectors,
    )


def _circle_set(center=0j, radius=1.0, samples=64) -> CompactSetDescriptor:
    center = complex(center)
    if not radius > 0:
        raise InvalidParamsError("radius must be positive")
    _check_sample_count(samples)
    n = int(samples)
    polygon = Polyline.regular_polygon(center, radius, n)
    pts = list(polygon.vertices[:-1])
    base = pts[0]
    connectors = {}
    for k in range(1, n):
        if k <= n // 2:
            path = pts[: k + 1]
        else:
            path = [pts[0]] + pts[: k - 1 : -1]
        connectors[pts[k]] = Polyline(path)
    return CompactSetDescriptor(
        kind="circle",
        samples=tuple(pts),
        dense_subset=tuple(pts),
        base_point=base,
        finite_poles=(center,),
        loops=(polygon,),
        connector_bound=polygon.length / 2,
        connectors=connectors,
    )


def _annulus_set(center=0j, inner_radius=0.5, outer_radius=1.0, samples=256) -> CompactSetDescriptor:
    center = complex(center)
    if not 0 < inner_radius < outer_radius:
        raise InvalidParamsError("need 0 < inner_radius < outer_radius")
    _check_sample_count(samples)
    rings = 5
    radii = [inner_radius + (outer_radius - inner_radius) * j / (rings - 1) for j in range(rings)]
    r_mid = radii[rings // 2]
    per_ring = max(16, int(samples) // rings)
    pts = []
    for r in radii:
        for i in range(per_ring):
            pts.append(center + r * cmath.exp(2j * math.pi * i / per_ring))
    base = center + r_mid * cmath.exp(0j)
    loop = Polyline.regular_polygon(center, r_mid, 64)

    # chord sagitta must stay well inside the annulus ring
    sag_limit = 0.5 * (r_mid - inner_radius) / r_mid
    max_step = min(2 * math.pi / 64, 2 * math.acos(max(0.0, 1.0 - sag_limit)))
    connectors = {}
    for z in pts:
        if z == base:
            continue
        theta = cmath.phase(z - center)
        verts = [base]
        if theta != 0.0:
            arc = Polyline.arc(center, r_mid, 0.0, theta, max_step)
            verts = [base] + list(arc.vertices)
        verts.append(z)
        connectors[z] = Polyline(verts)
    bound = math.pi * r_mid + (outer_radius - inner_radius) + 1e-9
    return CompactSetDescriptor(
        kind="annulus",
        samples=tuple(pts),
        dense_subset=tuple(pts),
        base_point=base,
        finite_poles=(center,),
        loops=(loop,),
        connector_bound=bound,
        connectors=connectors,
    )


def _dumbbell_set(center1=-2.0 + 0j, radius1=1.0, center2=2.0 + 0j, radius2=1.0, samples=256) -> CompactSetDescriptor:
    c1, c2 = complex(center1), complex(center2)
    if not (radius1 > 0 and radius2 > 0):
        raise InvalidParamsError("radii must be positive")
    gap = abs(c2 - c1)
    if gap <= radius1 + radius2:
        raise InvalidParamsError("disks must be disjoint, joined only by the bar")
    _check_sample_count(samples)
    u = (c2 - c1) / gap
    junction1 = c1 + radius1 * u
    junction2 = c2 - radius2 * u
    n_disk = max(16, (int(samples) - 16) // 2)
    pts = []
    seen = set()
    for p in (
        _disk_samples(c1, radius1, n_disk)
        + _disk_samples(c2, radius2, n_disk)
        + [junction1 + (junction2 - junction1) * (j / 15) for j in range(16)]
        + [junction1, junction2]
    ):
        if p not in seen:
            seen.add(p)
            pts.append(p)
    connectors = {}
    for z in pts:
        if z == c1:
            continue
        if abs(z - c1) <= radius1 + 1e-12:
            verts = [c1, z]
        elif abs(z - c2) <= radius2 + 1e-12:
            verts = [c1, junction1, junction2, z]
        else:
            verts = [c1, junction1, z]
        connectors[z] = Polyline(verts)
    bound = radius1 + abs(junction2 - junction1) + 2 * radius2
    return CompactSetDescriptor(
        kind="dumbbell",
        samples=tuple(pts),
        dense_subset=tuple(pts),
        base_point=c1,
        connector_bound=bound,
        connectors=connectors,
    )


def _countable_set(points=()) -> CompactSetDescriptor:
    pts = [complex(p) for p in points]
    if not pts:
        raise InvalidParamsError("countable set needs at least one point")
    if len(set(pts)) != len(pts):
        raise InvalidParamsError("points must be pairwise distinct")
    # No rectifiable curves live inside a countable set, so there are no
    # connectors; the bound is a placeholder.
    return CompactSetDescriptor(
        kind="countable",
        samples=tuple(pts),
        dense_subset=tuple(pts),
        base_point=pts[0],
        connector_bound=1.0,
        connectors={},
    )


def _custom_set(
    samples,
    base_point,
    dense_subset=None,
    finite_poles=(),
    includes_infinity=True,
    loops=(),
    connector_bound=1.0,
    connectors=None,
) -> CompactSetDescriptor:
    samples = tuple(complex(z) for z in samples)
    dense = tuple(complex(z) for z in (dense_subset if dense_subset is not None else samples))
    return CompactSetDescriptor(
        kind="custom",
        samples=samples,
        dense_subset=dense,
        base_point=complex(base_point),
        finite_poles=tuple(complex(p) for p in finite_poles),
        includes_infinity=bool(includes_infinity),
        loops=tuple(loops),
        connector_bound=float(connector_bound),
        connectors=dict(connectors or {}),
    )
