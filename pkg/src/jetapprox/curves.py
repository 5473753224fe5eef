"""Polylines and disks: the curve and disk primitives used everywhere else.

Smooth curves are represented as polylines (regular polygons for circles);
lengths are exact sums of segment lengths.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import InvalidParamsError


def _finite(value) -> complex:
    z = complex(value)
    if not cmath.isfinite(z):
        raise InvalidParamsError(f"non-finite complex value: {value!r}")
    return z


class Polyline:
    """Ordered vertices in the complex plane; closed means first == last.

    Consecutive duplicate vertices are collapsed; total length must be
    positive and finite.
    """

    __slots__ = ("vertices", "closed", "length")

    def __init__(self, vertices, closed: bool = False):
        verts = []
        for v in vertices:
            v = _finite(v)
            if not verts or verts[-1] != v:
                verts.append(v)
        if len(verts) < 2:
            raise InvalidParamsError("polyline needs at least two distinct vertices")
        if closed and verts[0] != verts[-1]:
            raise InvalidParamsError("closed polyline must end at its first vertex")
        self.vertices = tuple(verts)
        self.closed = bool(closed)
        self.length = sum(abs(b - a) for a, b in zip(verts, verts[1:]))
        if not (self.length > 0 and math.isfinite(self.length)):
            raise InvalidParamsError("polyline length must be positive and finite")

    @classmethod
    def line(cls, a, b) -> "Polyline":
        return cls((a, b))

    @classmethod
    def closed_loop(cls, vertices) -> "Polyline":
        """Close a vertex ring by appending the first vertex if needed."""
        verts = [_finite(v) for v in vertices]
        if verts and verts[0] != verts[-1]:
            verts.append(verts[0])
        return cls(verts, closed=True)

    @classmethod
    def regular_polygon(cls, center, radius: float, n: int = 64, turns: int = 1) -> "Polyline":
        """Closed n-gon inscribed in the circle, starting at angle 0."""
        if n < 3:
            raise InvalidParamsError("polygon needs at least 3 vertices")
        if turns < 1:
            raise InvalidParamsError("turns must be >= 1")
        center = _finite(center)
        ring = [center + radius * cmath.exp(2j * math.pi * k / n) for k in range(n)]
        verts = ring * turns + [ring[0]]
        return cls(verts, closed=True)

    @classmethod
    def arc(cls, center, radius: float, angle0: float, angle1: float, max_step: float) -> "Polyline":
        """Open polyline along a circular arc, chord steps at most max_step radians."""
        if max_step <= 0:
            raise InvalidParamsError("max_step must be positive")
        center = _finite(center)
        span = angle1 - angle0
        pieces = max(1, math.ceil(abs(span) / max_step))
        verts = [
            center + radius * cmath.exp(1j * (angle0 + span * k / pieces))
            for k in range(pieces + 1)
        ]
        return cls(verts)

    def segments(self):
        return zip(self.vertices, self.vertices[1:])

    def reverse(self) -> "Polyline":
        return Polyline(tuple(reversed(self.vertices)), self.closed)

    def diameter(self) -> float:
        vs = self.vertices
        return max(abs(a - b) for i, a in enumerate(vs) for b in vs[i + 1 :])

    def distance_to(self, p) -> float:
        """Distance from a point to the polyline (minimum over segments)."""
        p = complex(p)
        return min(point_segment_distance(p, a, b) for a, b in self.segments())

    def point_at_arclength(self, s: float, start_index: int = 0) -> complex:
        """Point at arc length ``s`` walking forward from the given vertex.

        Closed curves wrap around; walking past the end of an open curve is
        an error.
        """
        if s < 0:
            raise InvalidParamsError("arc length must be >= 0")
        verts = list(self.vertices)
        if not 0 <= start_index < len(verts):
            raise InvalidParamsError("start_index out of range")
        if self.closed:
            # drop the duplicated closing vertex and rotate; walking may wrap
            ring = verts[:-1]
            k = len(ring)
            order = [ring[(start_index + i) % k] for i in range(k + 1)]
        else:
            order = verts[start_index:]
        remaining = s
        for a, b in zip(order, order[1:]):
            seg = abs(b - a)
            if remaining <= seg:
                if seg == 0:
                    return a
                t = remaining / seg
                return a + t * (b - a)
            remaining -= seg
        if self.closed:
            # more than one lap: recurse with the residue
            lap = sum(abs(b - a) for a, b in zip(order, order[1:]))
            return self.point_at_arclength(remaining % lap, start_index)
        raise InvalidParamsError("arc length runs past the end of the open curve")

    def __eq__(self, other):
        if isinstance(other, Polyline):
            return self.vertices == other.vertices and self.closed == other.closed
        return NotImplemented

    def __hash__(self):
        return hash((self.vertices, self.closed))

    def __repr__(self):
        tag = "closed" if self.closed else "open"
        return f"Polyline(<{len(self.vertices)} vertices, {tag}, length {self.length:.6g}>)"


def point_segment_distance(p: complex, a: complex, b: complex) -> float:
    """Euclidean distance from p to the segment [a, b]."""
    ab = b - a
    denom = abs(ab) ** 2
    if denom == 0:
        return abs(p - a)
    t = ((p - a) * ab.conjugate()).real / denom
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * ab))


def curve_length(curve: Polyline) -> float:
    """Exact sum of segment lengths."""
    return curve.length


@dataclass(frozen=True)
class Disk:
    """Open disk with positive radius."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _finite(self.center))
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise InvalidParamsError("disk radius must be positive and finite")

    def contains(self, z, strict: bool = True) -> bool:
        d = abs(complex(z) - self.center)
        return d < self.radius if strict else d <= self.radius
