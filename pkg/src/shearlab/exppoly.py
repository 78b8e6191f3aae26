"""Exact exponential Laurent polynomials and their q-deformation.

An ``ExpPoly`` is a finite sum ``sum_m c_m exp((m . z)/2)`` where ``m`` runs
over integer exponent vectors (units of z/2) and the coefficients ``c_m`` are
exact rationals.  A ``QExpPoly`` carries the same exponent vectors but its
coefficients are integer Laurent polynomials in the formal unit ``rho``
(``rho**4 = q``).  The Poisson bracket and the noncommutative product are both
induced by an antisymmetric integer matrix ``omega`` on the edge labels:

    {e^{m.z/2}, e^{n.z/2}} = (1/4) (m^T omega n) e^{(m+n).z/2}
    e^{m.Z/2} o e^{n.Z/2}  = rho^{-(m^T omega n)} e^{(m+n).Z/2}

Keeping exponents in half-units makes every identity exact over Q and
Z[rho, rho^-1].
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be an int or Fraction, got {type(c).__name__}")


def pairing(m: tuple, n: tuple, omega) -> int:
    """m^T omega n for integer vectors and an antisymmetric integer matrix."""
    total = 0
    for i, mi in enumerate(m):
        if not mi:
            continue
        row = omega[i]
        total += mi * sum(row[j] * nj for j, nj in enumerate(n) if nj)
    return total


class DimensionMismatch(ValueError):
    pass


class ExpPoly:
    """Finite map from integer exponent vectors to exact rational coefficients."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[tuple, Fraction] | None = None):
        self.dim = dim
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(int(x) for x in m)
                if len(m) != dim:
                    raise DimensionMismatch(f"exponent vector {m} has length {len(m)}, expected {dim}")
                c = _as_fraction(c)
                if c:
                    clean[m] = clean.get(m, Fraction(0)) + c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "ExpPoly":
        return cls(dim)

    @classmethod
    def const(cls, dim: int, c) -> "ExpPoly":
        return cls(dim, {(0,) * dim: _as_fraction(c)})

    @classmethod
    def monomial(cls, m: Iterable[int], c=1) -> "ExpPoly":
        m = tuple(int(x) for x in m)
        return cls(len(m), {m: _as_fraction(c)})

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "ExpPoly"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExpPoly.const(self.dim, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = ExpPoly(self.dim)
        out.terms = terms
        return out

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        out = ExpPoly(self.dim)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExpPoly.const(self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            out = ExpPoly(self.dim)
            if c:
                out.terms = {m: a * c for m, a in self.terms.items()}
            return out
        self._check(other)
        terms: dict[tuple, Fraction] = {}
        for m, a in self.terms.items():
            for n, b in other.terms.items():
                k = tuple(mi + ni for mi, ni in zip(m, n))
                s = terms.get(k, Fraction(0)) + a * b
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
        out = ExpPoly(self.dim)
        out.terms = terms
        return out

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExpPoly.const(self.dim, other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the lexicographically largest exponent vector."""
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms)]

    def coefficient(self, m: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def evaluate(self, z_values) -> float:
        """Substitute real label values and return the real value."""
        if len(z_values) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} values, got {len(z_values)}")
        total = 0.0
        for m, c in self.terms.items():
            total += float(c) * math.exp(sum(mi * zi for mi, zi in zip(m, z_values)) / 2.0)
        return total

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return [
            {"m": list(m), "c": [c.numerator, c.denominator]}
            for m, c in self.sorted_terms()
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            combo = " + ".join(f"{mi}*z{i}" for i, mi in enumerate(m) if mi)
            if combo:
                parts.append(f"{c} * exp(({combo})/2)")
            else:
                parts.append(str(c))
        return " + ".join(parts)


def poisson_bracket(f: ExpPoly, g: ExpPoly, omega) -> ExpPoly:
    """Edge-form Poisson bracket extended to exponentials by Leibniz."""
    f._check(g)
    terms: dict[tuple, Fraction] = {}
    for m, a in f.terms.items():
        for n, b in g.terms.items():
            k = pairing(m, n, omega)
            if not k:
                continue
            key = tuple(mi + ni for mi, ni in zip(m, n))
            s = terms.get(key, Fraction(0)) + Fraction(k, 4) * a * b
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    out = ExpPoly(f.dim)
    out.terms = terms
    return out


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in the formal unit rho = q^{1/4}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for n, c in coeffs.items():
                c = _as_fraction(c)
                if c:
                    clean[int(n)] = c
        self.coeffs = clean

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def rho_power(cls, n: int, c=1) -> "LaurentPoly":
        return cls({n: c})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        coeffs = dict(self.coeffs)
        for n, c in other.coeffs.items():
            s = coeffs.get(n, Fraction(0)) + c
            if s:
                coeffs[n] = s
            else:
                coeffs.pop(n, None)
        out = LaurentPoly()
        out.coeffs = coeffs
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly()
        out.coeffs = {n: -c for n, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        coeffs: dict[int, Fraction] = {}
        for n, a in self.coeffs.items():
            for k, b in other.coeffs.items():
                s = coeffs.get(n + k, Fraction(0)) + a * b
                if s:
                    coeffs[n + k] = s
                else:
                    coeffs.pop(n + k, None)
        out = LaurentPoly()
        out.coeffs = coeffs
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def star(self) -> "LaurentPoly":
        """The involution rho -> rho^{-1}."""
        out = LaurentPoly()
        out.coeffs = {-n: c for n, c in self.coeffs.items()}
        return out

    def at_one(self) -> Fraction:
        """Specialize rho = 1."""
        return sum(self.coeffs.values(), Fraction(0))

    def is_scalar_multiple_of_one(self) -> bool:
        return set(self.coeffs) <= {0}

    def classical_derivative(self) -> Fraction:
        """(1/(2 pi i)) d/dhbar at hbar=0 of sum_n c_n rho^n with rho = e^{-i pi hbar/4}.

        Each rho^n contributes -n/8 at hbar = 0.
        """
        return sum((Fraction(-n, 8) * c for n, c in self.coeffs.items()), Fraction(0))

    def sorted_terms(self):
        return sorted(self.coeffs.items())

    def to_json(self):
        return [{"rho": n, "c": [c.numerator, c.denominator]} for n, c in self.sorted_terms()]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for n, c in self.sorted_terms():
            if n == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*rho^{n}" if c != 1 else f"rho^{n}")
        return " + ".join(parts)


class QExpPoly:
    """Finite map from integer exponent vectors to Laurent polynomials in rho."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[tuple, LaurentPoly] | None = None):
        self.dim = dim
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(int(x) for x in m)
                if len(m) != dim:
                    raise DimensionMismatch(f"exponent vector {m} has length {len(m)}, expected {dim}")
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.const(c)
                if c:
                    clean[m] = clean.get(m, LaurentPoly()) + c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean

    @classmethod
    def zero(cls, dim: int) -> "QExpPoly":
        return cls(dim)

    @classmethod
    def monomial(cls, m: Iterable[int], c=1) -> "QExpPoly":
        m = tuple(int(x) for x in m)
        return cls(len(m), {m: c})

    @classmethod
    def from_classical(cls, f: ExpPoly) -> "QExpPoly":
        """Weyl promotion: each c e^{m.z/2} becomes c e^{m.Z/2} with rho-free c."""
        return cls(f.dim, {m: LaurentPoly.const(c) for m, c in f.terms.items()})

    def _check(self, other: "QExpPoly"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, LaurentPoly()) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = QExpPoly(self.dim)
        out.terms = terms
        return out

    def __neg__(self):
        out = QExpPoly(self.dim)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "QExpPoly":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        terms = {}
        for m, a in self.terms.items():
            p = a * c
            if p:
                terms[m] = p
        out = QExpPoly(self.dim)
        out.terms = terms
        return out

    def __eq__(self, other):
        if not isinstance(other, QExpPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_rho_free(self) -> bool:
        return all(c.is_scalar_multiple_of_one() for c in self.terms.values())

    def coefficient(self, m: Iterable[int]) -> LaurentPoly:
        return self.terms.get(tuple(m), LaurentPoly())

    def at_rho_one(self) -> ExpPoly:
        out = ExpPoly(self.dim)
        terms = {}
        for m, c in self.terms.items():
            v = c.at_one()
            if v:
                terms[m] = v
        out.terms = terms
        return out

    def star(self) -> "QExpPoly":
        """Hermitean conjugate: coefficient-wise rho -> rho^{-1}."""
        out = QExpPoly(self.dim)
        out.terms = {m: c.star() for m, c in self.terms.items()}
        return out

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return [{"m": list(m), "c": c.to_json()} for m, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            combo = " + ".join(f"{mi}*Z{i}" for i, mi in enumerate(m) if mi)
            body = f"exp(({combo})/2)" if combo else "1"
            parts.append(f"({c}) * {body}")
        return " + ".join(parts)


def qmul(f: QExpPoly, g: QExpPoly, omega) -> QExpPoly:
    """Noncommutative product of quantum-torus elements."""
    f._check(g)
    terms: dict[tuple, LaurentPoly] = {}
    for m, a in f.terms.items():
        for n, b in g.terms.items():
            k = pairing(m, n, omega)
            key = tuple(mi + ni for mi, ni in zip(m, n))
            contrib = a * b * LaurentPoly.rho_power(-k)
            s = terms.get(key, LaurentPoly()) + contrib
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    out = QExpPoly(f.dim)
    out.terms = terms
    return out


def classical_limit_commutator(f: QExpPoly, g: QExpPoly, omega) -> ExpPoly:
    """(1/(2 pi i)) d/dhbar of [f o g - g o f] at hbar = 0, exactly.

    Requires rho-free inputs; the result equals the Poisson bracket of the
    rho = 1 specializations.
    """
    if not (f.is_rho_free() and g.is_rho_free()):
        raise ValueError("classical limit requires rho-independent coefficients")
    comm = qmul(f, g, omega) - qmul(g, f, omega)
    out = ExpPoly(f.dim)
    terms = {}
    for m, c in comm.terms.items():
        v = c.classical_derivative()
        if v:
            terms[m] = v
    out.terms = terms
    return out
