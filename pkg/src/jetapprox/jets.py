"""Function oracles, finite derivative stacks (jets), sup-seminorms and the
weighted derivative metric.

A jet is a finite sequence of functions (g_0, ..., g_N) on a sampled compact
set, treated as candidate derivatives of orders 0..N.  Oracles backed by
rational functions or by the small named-analytic family are exactly
differentiable; tabulated oracles are evaluation-only targets.
"""

from __future__ import annotations

import cmath
from typing import NamedTuple

from .errors import InvalidParamsError, NotDifferentiableError
from .geometry import CompactSetDescriptor
from .ratfun import Polynomial, RationalFunction


class FunctionOracle:
    """Evaluatable complex function; exactly differentiable kinds override
    ``derivative``."""

    differentiable = False

    def __call__(self, z) -> complex:
        raise NotImplementedError

    def derivative(self) -> "FunctionOracle":
        raise NotDifferentiableError(f"{type(self).__name__} has no exact derivative")

    def __add__(self, other):
        if isinstance(other, FunctionOracle):
            return SumOracle((self, other))
        return NotImplemented


class RationalOracle(FunctionOracle):
    """Oracle backed by an exact rational function."""

    differentiable = True

    def __init__(self, function):
        if isinstance(function, Polynomial):
            function = RationalFunction.from_poly(function)
        if not isinstance(function, RationalFunction):
            raise InvalidParamsError("RationalOracle needs a RationalFunction or Polynomial")
        self.function = function

    def __call__(self, z) -> complex:
        return self.function.evaluate(z)

    def derivative(self) -> "RationalOracle":
        return RationalOracle(self.function.differentiate())

    def __repr__(self):
        return f"RationalOracle({self.function!r})"


class AnalyticOracle(FunctionOracle):
    """scale * exp/sin/cos; the family is closed under differentiation."""

    differentiable = True
    _EVAL = {"exp": cmath.exp, "sin": cmath.sin, "cos": cmath.cos}

    def __init__(self, kind: str, scale=1.0):
        if kind not in self._EVAL:
            raise InvalidParamsError(f"unknown analytic kind {kind!r}")
        self.kind = kind
        self.scale = complex(scale)

    def __call__(self, z) -> complex:
        return self.scale * self._EVAL[self.kind](z)

    def derivative(self) -> "AnalyticOracle":
        if self.kind == "exp":
            return self
        if self.kind == "sin":
            return AnalyticOracle("cos", self.scale)
        return AnalyticOracle("sin", -self.scale)

    def __repr__(self):
        return f"AnalyticOracle({self.kind!r}, scale={self.scale!r})"


class PowerSeriesOracle(FunctionOracle):
    """Truncated power series around ``center`` with a recorded working radius.

    The truncation is the oracle: evaluation and differentiation act on the
    stored coefficients exactly.
    """

    differentiable = True

    def __init__(self, coeffs, center=0j, radius=1.0):
        self.coeffs = tuple(complex(c) for c in coeffs)
        self.center = complex(center)
        if not radius > 0:
            raise InvalidParamsError("radius must be positive")
        self.radius = float(radius)

    def __call__(self, z) -> complex:
        w = complex(z) - self.center
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return acc

    def derivative(self) -> "PowerSeriesOracle":
        derived = [k * c for k, c in enumerate(self.coeffs)][1:]
        return PowerSeriesOracle(derived or (0j,), self.center, self.radius)

    def __repr__(self):
        return (
            f"PowerSeriesOracle(<{len(self.coeffs)} terms>, center={self.center!r}, "
            f"radius={self.radius!r})"
        )


class TabulatedOracle(FunctionOracle):
    """Point table; evaluation-only (a target, never a source of derivatives)."""

    differentiable = False

    def __init__(self, values):
        self.values = {complex(k): complex(v) for k, v in dict(values).items()}
        if not self.values:
            raise InvalidParamsError("tabulated oracle needs at least one point")

    def __call__(self, z) -> complex:
        z = complex(z)
        try:
            return self.values[z]
        except KeyError:
            pass
        nearest = min(self.values, key=lambda k: abs(k - z))
        if abs(nearest - z) <= 1e-12 * (1 + abs(z)):
            return self.values[nearest]
        raise InvalidParamsError(f"point {z} is not tabulated")

    def __repr__(self):
        return f"TabulatedOracle(<{len(self.values)} points>)"


class SumOracle(FunctionOracle):
    """Pointwise sum of oracles; differentiable when every part is."""

    def __init__(self, parts):
        flat = []
        for p in parts:
            if isinstance(p, SumOracle):
                flat.extend(p.parts)
            else:
                flat.append(p)
        if not flat:
            raise InvalidParamsError("sum oracle needs at least one part")
        self.parts = tuple(flat)

    @property
    def differentiable(self):
        return all(p.differentiable for p in self.parts)

    def __call__(self, z) -> complex:
        return sum(p(z) for p in self.parts)

    def derivative(self) -> "SumOracle":
        return SumOracle(tuple(p.derivative() for p in self.parts))

    def __repr__(self):
        return f"SumOracle({list(self.parts)!r})"


def zero_oracle() -> RationalOracle:
    return RationalOracle(RationalFunction.zero())


def named_oracle(tag: str, **params) -> FunctionOracle:
    """Factory for the named oracle family.

    Tags: ``exp``, ``sin``, ``cos`` (optional ``scale``),
    ``reciprocal-shift`` (``shift``; the function 1/(z - shift)),
    ``power-series`` (``coeffs``, ``center``, ``radius``).
    """
    if tag in ("exp", "sin", "cos"):
        return AnalyticOracle(tag, params.get("scale", 1.0))
    if tag == "reciprocal-shift":
        shift = complex(params.get("shift", 0j))
        return RationalOracle(RationalFunction.principal(shift, {1: 1.0}))
    if tag == "power-series":
        return PowerSeriesOracle(
            params["coeffs"], params.get("center", 0j), params.get("radius", 1.0)
        )
    raise InvalidParamsError(f"unknown oracle tag {tag!r}")


class Jet:
    """Finite derivative stack: components g_0, .., g_N."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise InvalidParamsError("a jet needs at least one component")
        for c in comps:
            if not callable(c):
                raise InvalidParamsError("jet components must be callable oracles")
        self.components = comps

    @property
    def order(self) -> int:
        return len(self.components) - 1

    def component(self, k: int) -> FunctionOracle:
        if not 0 <= k <= self.order:
            raise InvalidParamsError(f"component {k} out of range (order {self.order})")
        return self.components[k]

    __getitem__ = component

    def __repr__(self):
        return f"Jet(order={self.order})"


def jet_of(f: FunctionOracle, order: int) -> Jet:
    """Jet whose components are the exact successive derivatives of f."""
    if order < 0:
        raise InvalidParamsError("order must be >= 0")
    if not getattr(f, "differentiable", False):
        raise NotDifferentiableError("jet_of needs an exactly differentiable oracle")
    comps = [f]
    for _ in range(order):
        comps.append(comps[-1].derivative())
    return Jet(comps)


def zero_jet(order: int) -> Jet:
    return Jet([zero_oracle() for _ in range(order + 1)])


def _component_or_zero(jet: Jet, k: int) -> FunctionOracle:
    # Components past the stored order count as identically zero; this is the
    # finite-jet convention that lets the metric run to any truncation depth.
    if k <= jet.order:
        return jet.components[k]
    return zero_oracle()


def seminorm(k: int, jet_f: Jet, jet_g: Jet, descriptor: CompactSetDescriptor) -> float:
    """Max over the descriptor's samples of |f_k(z) - g_k(z)|."""
    if k < 0 or k > min(jet_f.order, jet_g.order):
        raise InvalidParamsError("k must not exceed either jet's order")
    f = jet_f.components[k]
    g = jet_g.components[k]
    return max(abs(f(z) - g(z)) for z in descriptor.samples)


class MetricValue(NamedTuple):
    """Truncated metric value plus the exact bound on the dropped tail."""

    value: float
    tail_bound: float


def d_metric(jet_f: Jet, jet_g: Jet, descriptor: CompactSetDescriptor, n_max: int = 20) -> MetricValue:
    """Weighted derivative metric, truncated at n_max.

    Sum over k <= n_max of 2^-k * s_k / (1 + s_k) with s_k the k-th
    sup-seminorm of the difference.  Components beyond a jet's stored order
    are treated as identically zero, so n_max may exceed the orders; every
    dropped term is at most 2^-k, hence the reported tail bound 2^-n_max.
    """
    if n_max < 0:
        raise InvalidParamsError("n_max must be >= 0")
    total = 0.0
    for k in range(n_max + 1):
        f = _component_or_zero(jet_f, k)
        g = _component_or_zero(jet_g, k)
        s = max(abs(f(z) - g(z)) for z in descriptor.samples)
        total += (0.5**k) * s / (1.0 + s)
    return MetricValue(total, 0.5**n_max)
