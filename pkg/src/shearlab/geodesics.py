"""Closed paths on a fat graph compiled to L/R/X matrix words over ExpPoly.

A path word is a cyclic dart sequence d_1, ..., d_n: dart d_k starts at its
own vertex, the traversal ends at the vertex of opp(d_k), and the next dart
is sigma(opp(d_k)) (a left turn) or sigma(sigma(opp(d_k))) (a right turn).
The word compiles to the product T_n X_{z_n} ... T_1 X_{z_1} with

    L = [[0, 1], [-1, -1]],  R = [[1, 1], [-1, 0]],
    X_z = [[0, -e^{z/2}], [e^{-z/2}, 0]],

and the geodesic function is the (sign-normalized) trace.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exppoly import ExpPoly, poisson_bracket
from .fatgraph import FatGraph, edge_of, opposite


class PathError(ValueError):
    pass


def next_darts(g: FatGraph, d: int):
    """The two legal successors of dart d: (left turn, right turn)."""
    t = g.sigma[opposite(d)]
    return t, g.sigma[t]


def validate_path(g: FatGraph, path) -> tuple:
    path = tuple(int(d) for d in path)
    if not path:
        raise PathError("empty path word")
    n = g.n_darts
    for d in path:
        if not 0 <= d < n:
            raise PathError(f"dart {d} out of range")
    for k, d in enumerate(path):
        nxt = path[(k + 1) % len(path)]
        if nxt == opposite(d):
            raise PathError(f"backtracking at step {k}: {d} -> {nxt}")
        if nxt not in next_darts(g, d):
            raise PathError(f"invalid step {k}: {d} -> {nxt} is not joined at a vertex")
    return path


def turn_sequence(g: FatGraph, path) -> list:
    """Turn after each dart: 'L' for sigma(opp(d)), 'R' for sigma^2(opp(d))."""
    path = validate_path(g, path)
    turns = []
    for k, d in enumerate(path):
        nxt = path[(k + 1) % len(path)]
        left, _right = next_darts(g, d)
        turns.append("L" if nxt == left else "R")
    return turns


def path_inverse(path) -> tuple:
    """The reversed traversal: opposite darts in reverse order."""
    return tuple(opposite(d) for d in reversed(path))


def graph_simple(path) -> bool:
    """True iff no edge is traversed twice."""
    edges = [edge_of(d) for d in path]
    return len(edges) == len(set(edges))


# -- 2x2 matrices over ExpPoly ------------------------------------------------


def _c(dim, v):
    return ExpPoly.const(dim, v)


def turn_matrix(dim: int, turn: str):
    if turn == "L":
        return ((_c(dim, 0), _c(dim, 1)), (_c(dim, -1), _c(dim, -1)))
    if turn == "R":
        return ((_c(dim, 1), _c(dim, 1)), (_c(dim, -1), _c(dim, 0)))
    raise PathError(f"unknown turn {turn!r}")


def edge_matrix(dim: int, e: int):
    up = [0] * dim
    up[e] = 1
    down = [0] * dim
    down[e] = -1
    return (
        (_c(dim, 0), ExpPoly.monomial(up, -1)),
        (ExpPoly.monomial(down, 1), _c(dim, 0)),
    )


def mat_mul(A, B):
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(2)), start=A[i][0] * 0) for j in range(2))
        for i in range(2)
    )


def mat_trace(A) -> ExpPoly:
    return A[0][0] + A[1][1]


def mat_det(A) -> ExpPoly:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def mat_inv(A):
    """Adjugate; exact inverse since every path matrix has determinant one."""
    return ((A[1][1], -A[0][1]), (-A[1][0], A[0][0]))


def mat_neg(A):
    return tuple(tuple(-x for x in row) for row in A)


def mat_eq(A, B) -> bool:
    return all(A[i][j] == B[i][j] for i in range(2) for j in range(2))


def path_matrix(g: FatGraph, path):
    """T_n X_{e_n} ... T_1 X_{e_1} for the path's darts and turns."""
    path = validate_path(g, path)
    turns = turn_sequence(g, path)
    dim = g.n_edges
    M = None
    for d, t in zip(path, turns):
        factor = mat_mul(turn_matrix(dim, t), edge_matrix(dim, edge_of(d)))
        M = factor if M is None else mat_mul(factor, M)
    return M


def normalized_path_matrix(g: FatGraph, path):
    """Path matrix with the PSL sign fixed so the trace has positive leading coefficient."""
    M = path_matrix(g, path)
    if mat_trace(M).leading_coefficient() < 0:
        M = mat_neg(M)
    return M


def geodesic_function(g: FatGraph, path) -> ExpPoly:
    return mat_trace(normalized_path_matrix(g, path))


def product_traces(g: FatGraph, p, q):
    """(Tr(PQ), Tr(PQ^-1)) for the sign-normalized matrices of the two words."""
    P = normalized_path_matrix(g, p)
    Q = normalized_path_matrix(g, q)
    return mat_trace(mat_mul(P, Q)), mat_trace(mat_mul(P, mat_inv(Q)))


# -- identity checks ----------------------------------------------------------


def skein_check(g: FatGraph, p, q) -> dict:
    """Tr(P) Tr(Q) = Tr(PQ) + Tr(PQ^-1), exactly."""
    gp = geodesic_function(g, p)
    gq = geodesic_function(g, q)
    g_pq, g_pqi = product_traces(g, p, q)
    lhs = gp * gq
    rhs = g_pq + g_pqi
    return {
        "name": "skein",
        "lhs": repr(lhs),
        "rhs": repr(rhs),
        "equal": lhs == rhs,
        "residual": "exact" if lhs == rhs else repr(lhs - rhs),
    }


def goldman_check(g: FatGraph, p, q, omega=None) -> dict:
    """{G_P, G_Q} = (1/2) G_PQ - (1/2) G_PQ^-1, exactly."""
    if omega is None:
        omega = g.omega_matrix()
    gp = geodesic_function(g, p)
    gq = geodesic_function(g, q)
    g_pq, g_pqi = product_traces(g, p, q)
    lhs = poisson_bracket(gp, gq, omega)
    rhs = Fraction(1, 2) * g_pq - Fraction(1, 2) * g_pqi
    return {
        "name": "goldman",
        "lhs": repr(lhs),
        "rhs": repr(rhs),
        "equal": lhs == rhs,
        "residual": "exact" if lhs == rhs else repr(lhs - rhs),
    }


# -- the once-punctured torus -------------------------------------------------

# Words on once_punctured_torus(): A traverses edges z0, z2 and compiles to
# L X_{z2} R X_{z0}; B traverses z0, z1 and compiles to R X_{z1} L X_{z0};
# the third graph-simple word traverses z1, z2.  The hole word follows the
# single hexagonal face.
TORUS_A = (0, 5)
TORUS_B = (0, 3)
TORUS_ABINV = (2, 5)
TORUS_HOLE = (0, 3, 4, 1, 2, 5)


def torus_casimir(g: FatGraph) -> ExpPoly:
    """C = G_A^2 + G_B^2 + G_{AB^-1}^2 - G_A G_B G_{AB^-1} on the torus graph."""
    if g.sigma != (2, 3, 4, 5, 0, 1):
        raise PathError("torus_casimir requires the once-punctured torus graph")
    ga = geodesic_function(g, TORUS_A)
    gb = geodesic_function(g, TORUS_B)
    gc = geodesic_function(g, TORUS_ABINV)
    return ga * ga + gb * gb + gc * gc - ga * gb * gc


# -- random paths -------------------------------------------------------------


def random_closed_path(g: FatGraph, rng, min_len: int = 2, max_len: int = 8, start=None, max_tries: int = 5000):
    """Seeded random closed path word (rejection sampling over random turn walks)."""
    if min_len < 2 or max_len < min_len:
        raise PathError("need 2 <= min_len <= max_len")
    for _ in range(max_tries):
        length = rng.randint(min_len, max_len)
        d0 = start if start is not None else rng.randrange(g.n_darts)
        path = [d0]
        for _ in range(length - 1):
            path.append(rng.choice(next_darts(g, path[-1])))
        if d0 in next_darts(g, path[-1]):
            return tuple(path)
    raise PathError(f"no closed path found in {max_tries} tries")


# -- Appendix-style R-matrix checks ------------------------------------------


def _x_numeric(z: float) -> np.ndarray:
    return np.array([[0.0, -np.exp(z / 2.0)], [np.exp(-z / 2.0), 0.0]])


def _dx_numeric(z: float) -> np.ndarray:
    return np.array([[0.0, -np.exp(z / 2.0) / 2.0], [-np.exp(-z / 2.0) / 2.0, 0.0]])


_SIGN_TENSOR = np.diag([1.0, -1.0, -1.0, 1.0])
_PERMUTATION_R = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=float
)


def rmatrix_local_check(z1: float, z4: float, tol: float = 1e-12) -> dict:
    """{X_{z1} (x) X_{z4}} = -(1/4) (X (x) X) S for the crossing with {z1, z4} = -1.

    The derivative tensor dX/dz1 (x) dX/dz4 times the edge bracket -1 must
    match -(1/4) kron(X, X) S entrywise.
    """
    lhs = -1.0 * np.kron(_dx_numeric(z1), _dx_numeric(z4))
    rhs = -0.25 * np.kron(_x_numeric(z1), _x_numeric(z4)) @ _SIGN_TENSOR
    residual = float(np.max(np.abs(lhs - rhs)))
    return {
        "name": "rmatrix_local",
        "z": [z1, z4],
        "edge_bracket": -1,
        "residual": residual,
        "equal": residual <= tol,
    }


def rmatrix_global_check(A: np.ndarray, B: np.ndarray, tol: float = 1e-12) -> dict:
    """Tr1 Tr2[(A (x) B)(R - 1/2)] = Tr(AB) - (1/2) Tr A Tr B."""
    lhs = np.trace(np.kron(A, B) @ (_PERMUTATION_R - 0.5 * np.eye(4)))
    rhs = np.trace(A @ B) - 0.5 * np.trace(A) * np.trace(B)
    residual = float(abs(lhs - rhs))
    return {
        "name": "rmatrix_global",
        "lhs": float(lhs),
        "rhs": float(rhs),
        "residual": residual,
        "equal": residual <= tol,
    }
