"""Trivalent ribbon graphs with per-edge shear labels.

Darts are 0..2E-1; edge ``i`` owns darts ``2i`` and ``2i+1`` and the opposite
of dart ``d`` is ``d ^ 1``.  ``sigma`` sends each dart to the next dart
anticlockwise around the same vertex, so vertices are the sigma-orbits and
faces are the orbits of ``d -> sigma(opposite(d))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


class FatGraphError(ValueError):
    pass


@dataclass(frozen=True)
class TopologyReport:
    vertices: int
    edges: int
    faces: int
    genus: int
    holes: int

    def to_json(self):
        return {
            "V": self.vertices,
            "E": self.edges,
            "F": self.faces,
            "genus": self.genus,
            "holes": self.holes,
        }


def opposite(d: int) -> int:
    return d ^ 1


def edge_of(d: int) -> int:
    return d >> 1


class FatGraph:
    """Immutable trivalent ribbon graph with shear labels."""

    __slots__ = ("sigma", "z")

    def __init__(self, sigma, z):
        sigma = tuple(int(d) for d in sigma)
        z = tuple(z)
        if len(sigma) % 2:
            raise FatGraphError("dart count must be even")
        if len(z) != len(sigma) // 2:
            raise FatGraphError(f"expected {len(sigma) // 2} labels, got {len(z)}")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "z", z)

    def __setattr__(self, name, value):
        raise AttributeError("FatGraph is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    @property
    def n_edges(self) -> int:
        return len(self.sigma) // 2

    def with_labels(self, z) -> "FatGraph":
        return FatGraph(self.sigma, z)

    def __eq__(self, other):
        if not isinstance(other, FatGraph):
            return NotImplemented
        return self.sigma == other.sigma and self.z == other.z

    def __repr__(self):
        return f"FatGraph(sigma={list(self.sigma)}, z={list(self.z)})"

    def _orbits(self, step):
        seen = [False] * self.n_darts
        out = []
        for d0 in range(self.n_darts):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = step(d)
            out.append(tuple(orbit))
        return out

    def vertices(self):
        """Sigma-orbits, each listed anticlockwise from its smallest dart."""
        return self._orbits(lambda d: self.sigma[d])

    def faces(self):
        """Orbits of d -> sigma(opposite(d)), each from its smallest dart."""
        return self._orbits(lambda d: self.sigma[opposite(d)])

    # -- validation --------------------------------------------------------

    def validate(self) -> TopologyReport:
        n = self.n_darts
        sigma = self.sigma
        hit = [0] * n
        for d, s in enumerate(sigma):
            if not 0 <= s < n:
                raise FatGraphError(f"sigma[{d}] = {s} is not a dart index")
            hit[s] += 1
        for d, h in enumerate(hit):
            if h != 1:
                raise FatGraphError(f"sigma is not a permutation: dart {d} has {h} preimages")
        for orbit in self.vertices():
            if len(orbit) != 3:
                raise FatGraphError(
                    f"vertex orbit {list(orbit)} has size {len(orbit)}, expected 3 (dart {orbit[0]})"
                )
        E = self.n_edges
        V = n // 3
        F = len(self.faces())
        chi = V - E + F
        if chi % 2:
            raise FatGraphError(f"Euler characteristic {chi} is odd")
        genus = (2 - chi) // 2
        holes = F
        if genus < 0:
            raise FatGraphError(f"negative genus from Euler data (V={V}, E={E}, F={F})")
        if E != 6 * genus - 6 + 3 * holes or V != 4 * genus - 4 + 2 * holes:
            raise FatGraphError(
                f"inconsistent Euler data: V={V}, E={E}, F={F}, genus={genus}, holes={holes}"
            )
        return TopologyReport(V, E, F, genus, holes)

    # -- face data ---------------------------------------------------------

    def face_multiplicity(self, face) -> tuple:
        """How many times each edge appears on the face boundary."""
        mult = [0] * self.n_edges
        for d in face:
            mult[edge_of(d)] += 1
        return tuple(mult)

    def face_perimeter(self, face):
        """Multiplicity-weighted label sum, as (exponent vector, numeric value)."""
        mult = self.face_multiplicity(face)
        value = sum(m * z for m, z in zip(mult, self.z))
        return mult, value

    # -- Poisson data ------------------------------------------------------

    def omega_matrix(self):
        """Antisymmetric E x E integer matrix of the edge Poisson brackets.

        Each vertex with anticlockwise edge cycle (e1, e2, e3) contributes +1
        to omega[e1][e2], omega[e2][e3], omega[e3][e1] and -1 to the
        transposes; contributions sum over shared vertices.
        """
        E = self.n_edges
        omega = [[0] * E for _ in range(E)]
        for orbit in self.vertices():
            edges = [edge_of(d) for d in orbit]
            for k in range(3):
                a, b = edges[k], edges[(k + 1) % 3]
                omega[a][b] += 1
                omega[b][a] -= 1
        return omega

    # -- serialization -----------------------------------------------------

    def to_json(self):
        def num(x):
            if isinstance(x, Fraction):
                if x.denominator == 1:
                    return x.numerator
                return float(x)
            return x

        return {"sigma": list(self.sigma), "z": [num(x) for x in self.z]}

    @classmethod
    def from_json(cls, data) -> "FatGraph":
        if not isinstance(data, dict) or "sigma" not in data or "z" not in data:
            raise FatGraphError('graph JSON must be an object with "sigma" and "z"')
        return cls(data["sigma"], data["z"])

    @classmethod
    def load(cls, path) -> "FatGraph":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def once_punctured_torus(labels=(0, 0, 0)) -> FatGraph:
    """Two trivalent vertices {0,2,4} and {1,3,5}, one hexagonal face."""
    return FatGraph([2, 3, 4, 5, 0, 1], labels)


def tetrahedron(labels=(0, 0, 0, 0, 0, 0)) -> FatGraph:
    """Planar tetrahedral ribbon graph: V=4, E=6, F=4, genus 0, 4 holes.

    Edge ends: e0 = darts 0,1; e1 = 2,3; e2 = 4,5; e3 = 6,7; e4 = 8,9;
    e5 = 10,11; vertex cycles (0,4,2), (6,8,1), (3,10,7), (5,9,11).
    """
    sigma = [4, 6, 0, 10, 2, 9, 8, 3, 1, 11, 7, 5]
    return FatGraph(sigma, labels)
