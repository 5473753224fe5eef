"""Integration-by-parts screening of derivative stacks along curves.

A jet that stacks genuine successive derivatives satisfies, along every
curve gamma in the set from a to b and for every multiplier phi analytic
near gamma,

    integral phi * g_{l+1}  =  g_l(b) phi(b) - g_l(a) phi(a) - integral g_l * phi'

The defect is the modulus of the difference between the two sides, measured
by quadrature.  A defect clearly above the quadrature noise disproves the
stack; small defects on a finite curve family are evidence, not proof.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import Polyline
from .errors import (
    DegenerateChordError,
    InvalidParamsError,
    PoleTooCloseError,
)
from .geometry import CompactSetDescriptor
from .jets import Jet
from .quadrature import contour_integral
from .ratfun import Polynomial, RationalFunction

#: Default clearance is this fraction of the curve diameter.
CLEARANCE_FACTOR = 0.1


def _check_clearance(phi: RationalFunction, curve: Polyline, clearance: float):
    for pole in phi.poles:
        d = curve.distance_to(pole)
        if d < clearance:
            raise PoleTooCloseError(
                f"multiplier pole {pole} at distance {d:.3g} from the curve "
                f"(clearance {clearance:.3g})"
            )


def _ibp_defect(jet: Jet, l: int, curve: Polyline, phi: RationalFunction, tol: float, clearance):
    if l < 0 or l + 1 > jet.order:
        raise InvalidParamsError("need 0 <= l and l+1 <= jet order")
    if clearance is None:
        clearance = CLEARANCE_FACTOR * curve.diameter()
    _check_clearance(phi, curve, clearance)
    g_lo = jet.component(l)
    g_hi = jet.component(l + 1)
    phi_d = phi.differentiate()

    lead = contour_integral(lambda z: phi.evaluate(z) * g_hi(z), curve, tol=tol)
    value = lead.value
    err = lead.error_estimate
    if not phi_d.is_zero():
        back = contour_integral(lambda z: g_lo(z) * phi_d.evaluate(z), curve, tol=tol)
        value += back.value
        err += back.error_estimate
    if not curve.closed:
        a = curve.vertices[0]
        b = curve.vertices[-1]
        value -= g_lo(b) * phi.evaluate(b) - g_lo(a) * phi.evaluate(a)
    # on closed curves the two boundary terms cancel exactly
    return abs(value), err


def ibp_defect(
    jet: Jet,
    l: int,
    curve: Polyline,
    phi: RationalFunction,
    tol: float = 1e-9,
    clearance: float | None = None,
) -> float:
    """Integration-by-parts defect of the jet at level l along one curve."""
    return _ibp_defect(jet, l, curve, phi, tol, clearance)[0]


@dataclass(frozen=True)
class DefectEntry:
    l: int
    curve: int
    phi: int
    defect: float


@dataclass(frozen=True)
class DefectReport:
    """Defect grid over (level, curve, multiplier) triples.

    ``passed`` is max_defect <= threshold.  ``status`` adds a third value:
    a failing maximum within 10x of the accumulated quadrature error estimate
    is reported as "inconclusive" rather than "fail".
    """

    entries: tuple
    max_defect: float
    threshold: float
    passed: bool
    status: str
    quad_error: float

    def write_csv(self, stream) -> None:
        stream.write("l,curve,phi,defect\n")
        for e in self.entries:
            stream.write(f"{e.l},{e.curve},{e.phi},{e.defect!r}\n")


def default_curves(descriptor: CompactSetDescriptor) -> list:
    """Winding loops followed by the connectors, in dense-subset order."""
    curves = list(descriptor.loops)
    for key in descriptor.dense_subset:
        path = descriptor.connectors.get(key)
        if path is not None:
            curves.append(path)
    return curves


def default_phis(descriptor: CompactSetDescriptor, curves) -> list:
    """Multipliers 1, z, z^2 plus 1/(z - p) for each clearance-safe pole.

    A pole that sits inside the clearance band of any requested curve is
    omitted.
    """
    phis = [
        RationalFunction.constant(1.0),
        RationalFunction.monomial(1),
        RationalFunction.monomial(2),
    ]
    for pole in descriptor.finite_poles:
        safe = all(
            curve.distance_to(pole) >= CLEARANCE_FACTOR * curve.diameter() for curve in curves
        )
        if safe:
            phis.append(RationalFunction.principal(pole, {1: 1.0}))
    return phis


def ibp_report(
    jet: Jet,
    descriptor: CompactSetDescriptor,
    curves=None,
    phis=None,
    threshold: float = 1e-6,
    tol: float = 1e-9,
) -> DefectReport:
    """Evaluate the defect grid over every (l, curve, phi) triple.

    The grid runs l = 0 .. jet order - 1 against the given curves and
    multipliers (defaults: the descriptor's loops and connectors, and the
    standard multiplier family).  Entries are ordered by (l, curve, phi).
    """
    if curves is None:
        curves = default_curves(descriptor)
    if phis is None:
        phis = default_phis(descriptor, curves)
    entries = []
    worst = 0.0
    quad_err = 0.0
    for l in range(jet.order):
        for ci, curve in enumerate(curves):
            for pi, phi in enumerate(phis):
                defect, err = _ibp_defect(jet, l, curve, phi, tol, None)
                entries.append(DefectEntry(l, ci, pi, defect))
                worst = max(worst, defect)
                quad_err = max(quad_err, err)
    passed = worst <= threshold
    if passed:
        status = "pass"
    elif worst <= 10 * quad_err:
        status = "inconclusive"
    else:
        status = "fail"
    return DefectReport(
        entries=tuple(entries),
        max_defect=worst,
        threshold=threshold,
        passed=passed,
        status=status,
        quad_error=quad_err,
    )


def position_derivative_defect(jet: Jet, l: int, curve: Polyline, t_index: int, steps) -> float:
    """Chordal difference-quotient defect at a curve vertex.

    For each arc-length step s, compares (g_l(p) - g_l(q)) / (p - q) against
    g_{l+1}(q), with q the chosen vertex and p the point s further along the
    curve; returns the worst deviation over the given steps.  For genuine
    derivative stacks on chord-regular curves this decreases as the steps
    shrink.
    """
    if l < 0 or l + 1 > jet.order:
        raise InvalidParamsError("need 0 <= l and l+1 <= jet order")
    steps = list(steps)
    if not steps:
        raise InvalidParamsError("need at least one step")
    anchor = curve.vertices[t_index]
    g_lo = jet.component(l)
    g_hi = jet.component(l + 1)
    base_val = g_lo(anchor)
    target = g_hi(anchor)
    worst = 0.0
    for s in steps:
        if s <= 0:
            raise InvalidParamsError("steps must be positive arc lengths")
        p = curve.point_at_arclength(s, start_index=t_index)
        chord = p - anchor
        if chord == 0:
            raise DegenerateChordError(f"zero chord at step {s}")
        worst = max(worst, abs((g_lo(p) - base_val) / chord - target))
    return worst
