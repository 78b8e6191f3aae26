"""Upper half-plane model: Moebius actions, classification, lengths, distance.

Matrices act by z -> (az+b)/(cz+d) with ad - bc = 1; (a,b,c,d) and its
negative are the same map.  Entries may be exact rationals (ints/Fractions),
in which case the trace classification is decided exactly, or floats, in
which case a 1e-12 tolerance is used.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

_TOL = 1e-12


class HyperbolicError(ValueError):
    pass


@dataclass(frozen=True)
class UhpPoint:
    """Interior point (y > 0), finite boundary point (y = 0) or infinity."""

    x: object = 0
    y: object = 0
    at_infinity: bool = False

    @classmethod
    def interior(cls, x, y) -> "UhpPoint":
        if not y > 0:
            raise HyperbolicError(f"interior point needs y > 0, got y = {y}")
        return cls(x, y)

    @classmethod
    def boundary(cls, x) -> "UhpPoint":
        return cls(x, 0)

    @classmethod
    def infinity(cls) -> "UhpPoint":
        return cls(0, 0, True)

    @classmethod
    def from_complex(cls, z: complex) -> "UhpPoint":
        if z.imag > 0:
            return cls.interior(z.real, z.imag)
        return cls.boundary(z.real)

    @property
    def is_interior(self) -> bool:
        return not self.at_infinity and self.y > 0

    @property
    def is_boundary(self) -> bool:
        return self.at_infinity or self.y == 0

    def as_complex(self) -> complex:
        if self.at_infinity:
            raise HyperbolicError("infinity has no complex value")
        return complex(self.x) + 1j * complex(self.y)

    def close_to(self, other: "UhpPoint", tol: float = _TOL) -> bool:
        if self.at_infinity or other.at_infinity:
            return self.at_infinity and other.at_infinity
        return abs(float(self.x) - float(other.x)) <= tol and abs(float(self.y) - float(other.y)) <= tol

    def __repr__(self):
        if self.at_infinity:
            return "UhpPoint(oo)"
        if self.y == 0:
            return f"UhpPoint({self.x})"
        return f"UhpPoint({self.x} + {self.y}i)"


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


class MoebiusMap:
    """Real 2x2 determinant-one matrix modulo global sign."""

    __slots__ = ("a", "b", "c", "d", "exact")

    def __init__(self, a, b, c, d):
        exact = all(_is_exact(x) for x in (a, b, c, d))
        if exact:
            a, b, c, d = (Fraction(x) for x in (a, b, c, d))
            det = a * d - b * c
            if det != 1:
                raise HyperbolicError(f"determinant is {det}, expected 1")
        else:
            a, b, c, d = (float(x) for x in (a, b, c, d))
            det = a * d - b * c
            if abs(det - 1.0) > _TOL:
                if det <= 0:
                    raise HyperbolicError(f"determinant {det} is not positive")
                s = math.sqrt(det)
                a, b, c, d = a / s, b / s, c / s, d / s
        # canonical representative of the +/- pair: first nonzero entry positive
        for x in (a, b, c, d):
            if x != 0:
                if x < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        self.a, self.b, self.c, self.d = a, b, c, d
        self.exact = exact

    @property
    def trace(self):
        return self.a + self.d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return all(
            abs(float(x) - float(y)) <= _TOL for x, y in zip(self.entries(), other.entries())
        )

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __repr__(self):
        return f"MoebiusMap([[{self.a}, {self.b}], [{self.c}, {self.d}]])"

    # -- classification ----------------------------------------------------

    def classify(self) -> str:
        a, b, c, d = self.entries()
        t = self.trace
        if self.exact:
            if b == 0 and c == 0 and a == d:
                return "identity"
            disc = t * t - 4
            if disc > 0:
                return "hyperbolic"
            if disc == 0:
                return "parabolic"
            return "elliptic"
        if abs(b) <= _TOL and abs(c) <= _TOL and abs(a - d) <= _TOL:
            return "identity"
        disc = float(t) * float(t) - 4.0
        if disc > _TOL:
            return "hyperbolic"
        if disc < -_TOL:
            return "elliptic"
        return "parabolic"

    def fixed_points(self):
        """Boundary fixed points (z_minus, z_plus); parabolic maps repeat one."""
        kind = self.classify()
        if kind == "elliptic":
            raise HyperbolicError("elliptic maps have no fixed points on the absolute")
        if kind == "identity":
            raise HyperbolicError("identity fixes every point")
        a, b, c, d = (float(x) for x in self.entries())
        t = a + d
        disc = max(t * t - 4.0, 0.0)
        if abs(c) <= _TOL:
            if kind == "parabolic":
                return UhpPoint.infinity(), UhpPoint.infinity()
            return UhpPoint.infinity(), UhpPoint.boundary(b / (d - a))
        root = math.sqrt(disc)
        return (
            UhpPoint.boundary((a - d - root) / (2 * c)),
            UhpPoint.boundary((a - d + root) / (2 * c)),
        )

    def translation_length(self) -> float:
        """Geodesic translation length l with |Tr| = 2 cosh(l/2)."""
        if self.classify() != "hyperbolic":
            raise HyperbolicError("translation length requires a hyperbolic map")
        t = abs(float(self.trace))
        lam = (t + math.sqrt(t * t - 4.0)) / 2.0
        return 2.0 * math.log(lam)


def apply(m: MoebiusMap, z: UhpPoint) -> UhpPoint:
    a, b, c, d = m.entries()
    if z.at_infinity:
        if (c == 0) if m.exact else abs(float(c)) <= _TOL:
            return UhpPoint.infinity()
        return UhpPoint.boundary(a / c)
    if z.is_interior:
        fa, fb, fc, fd = (float(x) for x in (a, b, c, d))
        w = (fa * z.as_complex() + fb) / (fc * z.as_complex() + fd)
        return UhpPoint.interior(w.real, w.imag)
    x = z.x
    den = c * x + d
    if (den == 0) if (m.exact and _is_exact(x)) else abs(float(den)) <= _TOL:
        return UhpPoint.infinity()
    return UhpPoint.boundary((a * x + b) / den)


def distance(z: UhpPoint, w: UhpPoint) -> float:
    """rho(z, w) = ln((|z - conj w| + |z - w|) / (|z - conj w| - |z - w|))."""
    if not (z.is_interior and w.is_interior):
        raise HyperbolicError("distance requires two interior points")
    zz, ww = z.as_complex(), w.as_complex()
    num = abs(zz - ww.conjugate()) + abs(zz - ww)
    den = abs(zz - ww.conjugate()) - abs(zz - ww)
    return math.log(num / den)


@dataclass(frozen=True)
class GeodesicArc:
    """Vertical half-line (center = x-intercept, radius = None) or semicircle."""

    center: float
    radius: float | None = None

    @property
    def vertical(self) -> bool:
        return self.radius is None

    def contains(self, z: UhpPoint, tol: float = _TOL) -> bool:
        if z.at_infinity:
            return self.vertical
        if self.vertical:
            return abs(float(z.x) - self.center) <= tol
        return abs(abs(z.as_complex() - self.center) - self.radius) <= tol


def geodesic_through(z: UhpPoint, w: UhpPoint) -> GeodesicArc:
    if z.close_to(w, 0.0):
        raise HyperbolicError("geodesic through coincident points is undefined")
    if z.at_infinity or w.at_infinity:
        other = w if z.at_infinity else z
        return GeodesicArc(float(other.x))
    zx, zy = float(z.x), float(z.y)
    wx, wy = float(w.x), float(w.y)
    if abs(zx - wx) <= _TOL:
        return GeodesicArc(zx)
    # |z - c|^2 = |w - c|^2 with real c
    c = (zx * zx + zy * zy - wx * wx - wy * wy) / (2.0 * (zx - wx))
    r = math.hypot(zx - c, zy)
    return GeodesicArc(c, r)


def hyperbolic_circle(center: UhpPoint, radius: float):
    """Euclidean (center, radius) of the hyperbolic circle around an interior point."""
    if not center.is_interior:
        raise HyperbolicError("hyperbolic circle needs an interior center")
    if not radius > 0:
        raise HyperbolicError("radius must be positive")
    x0, y0 = float(center.x), float(center.y)
    return (
        UhpPoint.interior(x0, y0 * math.cosh(radius)),
        y0 * math.sinh(radius),
    )


def random_unimodular(rng) -> MoebiusMap:
    """Random determinant-one matrix from gaussian entries."""
    while True:
        a = rng.gauss(0.0, 1.0)
        b = rng.gauss(0.0, 1.0)
        c = rng.gauss(0.0, 1.0)
        if abs(a) > 0.1:
            return MoebiusMap(a, b, c, (1.0 + b * c) / a)


def random_hyperbolic(rng) -> MoebiusMap:
    """Random hyperbolic map: conjugated diag(lambda, 1/lambda), lambda > 1."""
    lam = math.exp(rng.uniform(0.2, 2.0))
    g = random_unimodular(rng)
    diag = MoebiusMap(lam, 0.0, 0.0, 1.0 / lam)
    return g @ diag @ g.inverse()
