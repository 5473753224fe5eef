"""Adaptive Gauss-Legendre contour integration along polylines.

Each polyline segment gets a fixed-order Gauss-Legendre rule; a segment is
accepted once integrating its two halves agrees with the whole within the
segment's tolerance share, otherwise the halves are bisected recursively.
Integrands are expected to be analytic near the curve, so convergence is
geometric and the successive-refinement difference is a usable error
estimate.  Segment results are summed in segment order, which keeps results
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import Polyline
from .errors import InvalidParamsError, NoConvergenceError

MAX_BISECTION_DEPTH = 12

# Node/weight tables, computed once at import.
_GL_TABLES = {
    n: tuple(zip(map(float, x), map(float, w)))
    for n, (x, w) in ((n, np.polynomial.legendre.leggauss(n)) for n in (16, 32))
}


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
    nodes_used: int


def _gauss_segment(f, a: complex, b: complex, table) -> complex:
    mid = (a + b) / 2
    half = (b - a) / 2
    total = 0j
    for t, w in table:
        total += w * f(mid + half * t)
    return half * total


def _adaptive_segment(f, a, b, tol, depth, table):
    coarse = _gauss_segment(f, a, b, table)
    mid = (a + b) / 2
    fine = _gauss_segment(f, a, mid, table) + _gauss_segment(f, mid, b, table)
    err = abs(fine - coarse)
    nodes = 3 * len(table)
    if err <= tol:
        return fine, err, nodes
    if depth >= MAX_BISECTION_DEPTH:
        raise NoConvergenceError(
            f"segment [{a}, {b}] did not converge after {MAX_BISECTION_DEPTH} bisections "
            f"(last refinement difference {err:.3e}, tolerance {tol:.3e})"
        )
    lv, le, ln = _adaptive_segment(f, a, mid, tol / 2, depth + 1, table)
    rv, re_, rn = _adaptive_segment(f, mid, b, tol / 2, depth + 1, table)
    return lv + rv, le + re_, nodes + ln + rn


def contour_integral(f, curve: Polyline, tol: float = 1e-10, order: int = 16) -> QuadratureResult:
    """Integral of f along the polyline (closed or open).

    ``f`` is any callable complex -> complex, evaluatable at all quadrature
    nodes on the curve.
    """
    if tol <= 0:
        raise InvalidParamsError("tolerance must be positive")
    if order not in _GL_TABLES:
        raise InvalidParamsError(f"order must be one of {sorted(_GL_TABLES)}")
    table = _GL_TABLES[order]
    segs = list(curve.segments())
    per_seg = tol / len(segs)
    value = 0j
    err = 0.0
    nodes = 0
    for a, b in segs:
        v, e, n = _adaptive_segment(f, a, b, per_seg, 0, table)
        value += v
        err += e
        nodes += n
    return QuadratureResult(value, err, nodes)


def integral_along(f, curve: Polyline, tol: float = 1e-10, order: int = 16) -> complex:
    """Line integral of a function along a (not necessarily closed) curve."""
    return contour_integral(f, curve, tol=tol, order=order).value
