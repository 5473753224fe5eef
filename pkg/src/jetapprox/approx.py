"""Uniform approximation on a sampled compact set by rational functions
whose poles are restricted to the set's prescribed pole list.

Three concrete backends stand in for the classical density theorems:
truncated Taylor expansion (disk sets, exactly differentiable targets),
Laurent coefficients by contour quadrature (annulus sets), and sample
least-squares in the monomial-plus-principal-part basis (any set).
The reported error is always the maximum over the descriptor's samples.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import (
    IllConditionedWarning,
    InsufficientSamplesError,
    InvalidParamsError,
    NotDifferentiableError,
)
from .geometry import CompactSetDescriptor
from .jets import FunctionOracle
from .quadrature import contour_integral
from .ratfun import Polynomial, PrincipalPart, RationalFunction, taylor_polynomial

_METHODS = ("taylor", "laurent", "least-squares")
_RANK_TOL = 1e-10
_TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class ApproxConfig:
    """Budget knobs for one approximation call.

    ``pole_degrees`` maps a finite pole of the target descriptor to the
    highest principal-part order allowed at that pole.
    """

    method: str = "least-squares"
    poly_degree: int = 0
    pole_degrees: Mapping = field(default_factory=dict)
    sample_weighting: str = "uniform"

    def __post_init__(self):
        if self.method not in _METHODS:
            raise InvalidParamsError(f"method must be one of {_METHODS}")
        if self.poly_degree < 0:
            raise InvalidParamsError("poly_degree must be >= 0")
        for pole, deg in self.pole_degrees.items():
            if int(deg) < 0:
                raise InvalidParamsError(f"pole degree at {pole} must be >= 0")
        if self.sample_weighting != "uniform":
            raise InvalidParamsError("only uniform sample weighting is supported")


def degree_schedule(start: int, stop: int, step: int, *, method: str = "least-squares", pole_degrees=None) -> list:
    """Configs of increasing polynomial budget: start, start+step, ..., <= stop."""
    if start > stop:
        raise InvalidParamsError("start must not exceed stop")
    if step < 1:
        raise InvalidParamsError("step must be >= 1")
    return [
        ApproxConfig(method=method, poly_degree=d, pole_degrees=dict(pole_degrees or {}))
        for d in range(start, stop + 1, step)
    ]


def _match_pole(descriptor: CompactSetDescriptor, pole) -> complex:
    pole = complex(pole)
    for p in descriptor.finite_poles:
        if abs(p - pole) <= 1e-12 * (1 + abs(pole)):
            return p
    raise InvalidParamsError(f"pole {pole} is not among the descriptor's finite poles")


def uniform_approx(g, descriptor: CompactSetDescriptor, cfg: ApproxConfig):
    """Approximate g on the descriptor's samples with poles from its pole list.

    Returns ``(h, sup_error)`` with h a RationalFunction whose poles are a
    subset of the descriptor's finite poles and sup_error the maximum sample
    deviation |h(z) - g(z)|.
    """
    pole_degrees = {
        _match_pole(descriptor, p): int(d) for p, d in cfg.pole_degrees.items() if int(d) > 0
    }
    if cfg.method == "taylor":
        h = _taylor_fit(g, descriptor, cfg.poly_degree)
    elif cfg.method == "laurent":
        h = _laurent_fit(g, descriptor, cfg.poly_degree, pole_degrees)
    else:
        h = _least_squares_fit(g, descriptor, cfg.poly_degree, pole_degrees)
    sup_error = max(abs(h.evaluate(z) - g(z)) for z in descriptor.samples)
    return h, sup_error


def _taylor_fit(g, descriptor: CompactSetDescriptor, degree: int) -> RationalFunction:
    if descriptor.kind != "disk":
        raise InvalidParamsError("taylor backend needs a disk-kind descriptor")
    if not getattr(g, "differentiable", False):
        raise NotDifferentiableError("taylor backend needs an exactly differentiable oracle")
    center = descriptor.base_point
    values = []
    current = g
    for _ in range(degree + 1):
        values.append(current(center))
        current = current.derivative()
    return RationalFunction.from_poly(taylor_polynomial(center, values))


def _laurent_fit(g, descriptor: CompactSetDescriptor, degree: int, pole_degrees) -> RationalFunction:
    if descriptor.kind != "annulus":
        raise InvalidParamsError("laurent backend needs an annulus-kind descriptor")
    pole = descriptor.finite_poles[0]
    loop = descriptor.loops[0]
    max_pole_degree = pole_degrees.get(pole, 0)

    def coefficient(k: int) -> complex:
        res = contour_integral(lambda z: g(z) / (z - pole) ** (k + 1), loop, tol=1e-12)
        return res.value / _TWO_PI_I

    poly = Polynomial([coefficient(k) for k in range(degree + 1)])
    coeffs = {r: coefficient(-r) for r in range(1, max_pole_degree + 1)}
    parts = [PrincipalPart(pole, coeffs)] if coeffs else []
    return RationalFunction(poly, parts)


def _least_squares_fit(g, descriptor: CompactSetDescriptor, degree: int, pole_degrees) -> RationalFunction:
    samples = descriptor.samples
    columns = [("poly", k) for k in range(degree + 1)]
    for pole in descriptor.finite_poles:
        for r in range(1, pole_degrees.get(pole, 0) + 1):
            columns.append((pole, r))
    n_cols = len(columns)
    if len(samples) < 4 * n_cols:
        raise InsufficientSamplesError(
            f"{len(samples)} samples for a basis of size {n_cols}; need at least {4 * n_cols}"
        )
    a = np.empty((len(samples), n_cols), dtype=complex)
    for j, (tag, k) in enumerate(columns):
        if tag == "poly":
            a[:, j] = [z**k for z in samples]
        else:
            a[:, j] = [(z - tag) ** (-k) for z in samples]
    b = np.array([g(z) for z in samples], dtype=complex)
    scale = np.max(np.abs(a), axis=0)
    scale[scale == 0] = 1.0
    solution, _, rank, _ = np.linalg.lstsq(a / scale, b, rcond=_RANK_TOL)
    if rank < n_cols:
        warnings.warn(
            IllConditionedWarning(
                f"least-squares basis rank {rank} < {n_cols}; returning the truncated solution"
            )
        )
    coeffs = solution / scale
    poly = Polynomial(coeffs[: degree + 1])
    part_coeffs = {}
    for (tag, r), c in zip(columns[degree + 1 :], coeffs[degree + 1 :]):
        part_coeffs.setdefault(tag, {})[r] = complex(c)
    parts = [PrincipalPart(pole, cs) for pole, cs in part_coeffs.items()]
    return RationalFunction(poly, parts)
