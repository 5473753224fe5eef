"""Exact calculus for complex polynomials and rational functions with
prescribed poles.

Rational functions are stored canonically as a polynomial part plus one
principal part per pole center.  In this basis differentiation, residue
read-off, principal-part stripping and antidifferentiation are exact
coefficient operations; no numerator/denominator algebra ever happens.
All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import cmath
import math

from .errors import (
    InvalidParamsError,
    PoleEvaluationError,
    ResidueObstructionError,
)

# Pole identity normally means sharing the exact same center value; the
# tolerance only absorbs float noise when a caller recomputes a center.
POLE_MATCH_TOL = 1e-12


def _finite(value) -> complex:
    z = complex(value)
    if not cmath.isfinite(z):
        raise InvalidParamsError(f"non-finite complex value: {value!r}")
    return z


class Polynomial:
    """Polynomial in z; ``coeffs[k]`` multiplies ``z**k``.

    Trailing zero coefficients are dropped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_finite(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1.0) -> "Polynomial":
        if k < 0:
            raise InvalidParamsError("monomial degree must be >= 0")
        return cls((0j,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, z) -> complex:
        # Horner scheme.
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    evaluate = __call__

    def differentiate(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def antidifferentiate(self) -> "Polynomial":
        """Primitive with constant term 0."""
        return Polynomial([0j] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, Polynomial):
            a, b = self.coeffs, other.coeffs
            n = max(len(a), len(b))
            return Polynomial(
                [(a[i] if i < len(a) else 0j) + (b[i] if i < len(b) else 0j) for i in range(n)]
            )
        if isinstance(other, (int, float, complex)):
            return self + Polynomial.constant(other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        res = self + (-other if isinstance(other, Polynomial) else -complex(other))
        return res

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, float, complex)):
            return Polynomial([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def taylor_polynomial(center, derivatives) -> Polynomial:
    """Polynomial with prescribed derivatives at ``center``.

    ``derivatives[s]`` becomes the s-th derivative of the result at
    ``center``; coefficients are returned in powers of z (the expansion
    around ``center`` is multiplied out).
    """
    center = _finite(center)
    acc = Polynomial()
    shift = Polynomial((-center, 1.0))
    for s in reversed(range(len(derivatives))):
        acc = acc * shift + Polynomial.constant(_finite(derivatives[s]) / math.factorial(s))
    return acc


class PrincipalPart:
    """Finite sum of ``c_r / (z - pole)**r`` terms with integer orders r >= 1.

    Zero coefficients are never stored.
    """

    __slots__ = ("pole", "coeffs")

    def __init__(self, pole, coeffs):
        self.pole = _finite(pole)
        cleaned = {}
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        for r, c in items:
            r = int(r)
            if r < 1:
                raise InvalidParamsError(f"principal-part order must be >= 1, got {r}")
            c = _finite(c)
            if c != 0:
                cleaned[r] = cleaned.get(r, 0j) + c
        self.coeffs = dict(sorted(cleaned.items()))

    def max_order(self) -> int:
        return max(self.coeffs, default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, z) -> complex:
        w = complex(z) - self.pole
        if w == 0:
            raise PoleEvaluationError(f"evaluation at pole center {self.pole}")
        inv = 1.0 / w
        acc = 0j
        for r in range(self.max_order(), 0, -1):
            acc = acc * inv + self.coeffs.get(r, 0j)
        return acc * inv

    __call__ = evaluate

    def __eq__(self, other):
        if isinstance(other, PrincipalPart):
            return self.pole == other.pole and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.pole, tuple(self.coeffs.items())))

    def __repr__(self):
        return f"PrincipalPart({self.pole!r}, {self.coeffs!r})"


def _merge_parts(parts):
    """Group principal parts whose centers coincide (within POLE_MATCH_TOL)."""
    flat = []
    for p in parts:
        if not isinstance(p, PrincipalPart):
            raise InvalidParamsError(f"expected PrincipalPart, got {type(p).__name__}")
        if not p.is_zero():
            flat.append(p)
    flat.sort(key=lambda p: (p.pole.real, p.pole.imag))
    merged = []
    for p in flat:
        if merged and abs(p.pole - merged[-1].pole) <= POLE_MATCH_TOL * (1 + abs(p.pole)):
            prev = merged.pop()
            coeffs = dict(prev.coeffs)
            for r, c in p.coeffs.items():
                coeffs[r] = coeffs.get(r, 0j) + c
            merged.append(PrincipalPart(prev.pole, coeffs))
        else:
            merged.append(p)
    return tuple(p for p in merged if not p.is_zero())


class RationalFunction:
    """Polynomial part plus principal parts at pairwise-distinct pole centers.

    Equality is coefficient-wise on the canonical representation.  Poles of
    the value are exactly the centers that carry a nonzero coefficient.
    """

    __slots__ = ("poly", "parts")

    def __init__(self, poly=None, parts=()):
        if poly is None:
            poly = Polynomial()
        elif not isinstance(poly, Polynomial):
            poly = Polynomial(poly)
        self.poly = poly
        self.parts = _merge_parts(parts)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls()

    @classmethod
    def from_poly(cls, poly) -> "RationalFunction":
        return cls(poly if isinstance(poly, Polynomial) else Polynomial(poly))

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    @classmethod
    def monomial(cls, k: int, c=1.0) -> "RationalFunction":
        return cls(Polynomial.monomial(k, c))

    @classmethod
    def principal(cls, pole, coeffs) -> "RationalFunction":
        """e.g. ``principal(1.0, {2: 3.0})`` is 3/(z-1)^2."""
        return cls(Polynomial(), (PrincipalPart(pole, coeffs),))

    # -- structure ----------------------------------------------------

    @property
    def poles(self):
        return tuple(p.pole for p in self.parts)

    def is_zero(self) -> bool:
        return self.poly.is_zero() and not self.parts

    def _find_part(self, pole):
        pole = complex(pole)
        best = None
        best_dist = None
        for p in self.parts:
            d = abs(p.pole - pole)
            if best_dist is None or d < best_dist:
                best, best_dist = p, d
        if best is not None and best_dist <= POLE_MATCH_TOL * (1 + abs(pole)):
            return best
        return None

    # -- calculus -----------------------------------------------------

    def evaluate(self, z) -> complex:
        value = self.poly(z)
        for p in self.parts:
            value += p.evaluate(z)
        return value

    __call__ = evaluate

    def differentiate(self) -> "RationalFunction":
        """Exact derivative: d/dz (z-a)^{-r} = -r (z-a)^{-(r+1)}."""
        parts = [
            PrincipalPart(p.pole, {r + 1: -r * c for r, c in p.coeffs.items()})
            for p in self.parts
        ]
        return RationalFunction(self.poly.differentiate(), parts)

    def antidifferentiate(self) -> "RationalFunction":
        """Exact primitive with polynomial constant term 0.

        Requires every order-1 coefficient to vanish; otherwise the primitive
        would involve a logarithm and ResidueObstructionError is raised.
        """
        for p in self.parts:
            c1 = p.coeffs.get(1)
            if c1:
                raise ResidueObstructionError(
                    f"order-1 coefficient {c1} at pole {p.pole} obstructs antidifferentiation"
                )
        parts = [
            PrincipalPart(p.pole, {r - 1: -c / (r - 1) for r, c in p.coeffs.items()})
            for p in self.parts
        ]
        return RationalFunction(self.poly.antidifferentiate(), parts)

    def residue_coefficient(self, a, r: int) -> complex:
        """Coefficient of ``(z-a)**(-r)``; zero when a is not a pole center."""
        if int(r) < 1:
            raise InvalidParamsError("order r must be a positive integer")
        part = self._find_part(a)
        if part is None:
            return 0j
        return part.coeffs.get(int(r), 0j)

    def strip_principal_parts(self, n: int, poles):
        """Remove the order 1..n coefficients at each listed pole.

        Returns ``(stripped, removed)`` where ``removed`` lists
        ``(pole, order, coefficient)`` for every nonzero coefficient taken
        out, per listed pole in ascending order.  ``stripped`` plus the
        removed terms reproduces this function exactly, and ``stripped``
        admits n successive antiderivatives in the same pole basis.
        """
        if int(n) < 1:
            raise InvalidParamsError("n must be a positive integer")
        n = int(n)
        remaining = {p.pole: dict(p.coeffs) for p in self.parts}
        removed = []
        for query in poles:
            part = self._find_part(query)
            if part is None:
                continue
            coeffs = remaining[part.pole]
            for r in range(1, n + 1):
                c = coeffs.pop(r, 0j)
                if c:
                    removed.append((part.pole, r, c))
        stripped = RationalFunction(
            self.poly, [PrincipalPart(pole, cs) for pole, cs in remaining.items()]
        )
        return stripped, removed

    def nth_primitive(self, n: int, a, init) -> "RationalFunction":
        """n-th exact primitive H with prescribed derivatives at ``a``.

        ``init[r]`` fixes the r-th derivative of H at ``a`` for r < n; after
        each antidifferentiation step the matching constant is added.  The
        point ``a`` must not be a pole and the order 1..n coefficients must
        already be zero (use strip_principal_parts first).
        """
        if int(n) < 1:
            raise InvalidParamsError("n must be a positive integer")
        n = int(n)
        init = [_finite(v) for v in init]
        if len(init) != n:
            raise InvalidParamsError(f"need exactly {n} initial values, got {len(init)}")
        h = self
        for step in range(1, n + 1):
            h = h.antidifferentiate()
            h = h + (init[n - step] - h.evaluate(a))
        return h

    # -- arithmetic ---------------------------------------------------

    def __neg__(self):
        return RationalFunction(
            -self.poly,
            [PrincipalPart(p.pole, {r: -c for r, c in p.coeffs.items()}) for p in self.parts],
        )

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.poly + other.poly, self.parts + other.parts)
        if isinstance(other, Polynomial):
            return RationalFunction(self.poly + other, self.parts)
        if isinstance(other, (int, float, complex)):
            return RationalFunction(self.poly + complex(other), self.parts)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (RationalFunction, Polynomial, int, float, complex)):
            return self + (-other if isinstance(other, (RationalFunction, Polynomial)) else -complex(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return RationalFunction(
                self.poly * other,
                [
                    PrincipalPart(p.pole, {r: c * other for r, c in p.coeffs.items()})
                    for p in self.parts
                ],
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.poly == other.poly and self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash((self.poly, self.parts))

    def max_coeff_difference(self, other: "RationalFunction") -> float:
        """Largest coefficient-wise deviation, pairing poles within tolerance.

        Unmatched poles count with the full magnitude of their coefficients;
        handy as an exactness measure in round-trip checks.
        """
        worst = 0.0
        a, b = self.poly.coeffs, other.poly.coeffs
        for i in range(max(len(a), len(b))):
            ca = a[i] if i < len(a) else 0j
            cb = b[i] if i < len(b) else 0j
            worst = max(worst, abs(ca - cb))
        seen = set()
        for p in self.parts:
            q = other._find_part(p.pole)
            if q is not None:
                seen.add(q.pole)
            for r in set(p.coeffs) | set(q.coeffs if q else ()):
                ca = p.coeffs.get(r, 0j)
                cb = q.coeffs.get(r, 0j) if q else 0j
                worst = max(worst, abs(ca - cb))
        for q in other.parts:
            if q.pole not in seen and self._find_part(q.pole) is None:
                worst = max(worst, max(abs(c) for c in q.coeffs.values()))
        return worst

    def __repr__(self):
        return f"RationalFunction({self.poly!r}, {list(self.parts)!r})"
