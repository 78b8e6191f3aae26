"""Flip (Whitehead) moves: quadrilateral re-gluing, the phi-label law,
path transport, and the flip relations (involution, commutation, pentagon).

For an edge e with darts a = 2e, b = 2e+1 at distinct trivalent vertices the
four corner darts are

    P1 = sigma(a), Q1 = sigma^2(a)   at the vertex of a,
    P2 = sigma(b), Q2 = sigma^2(b)   at the vertex of b,

so the corners in cyclic order around the quadrilateral are
(P1, Q2, P2, Q1).  The flip re-glues e along the other diagonal, pairing
{Q1, P2} and {Q2, P1}, and updates labels by

    z_e -> -z_e,
    edge(P1), edge(P2)  +=  phi(z_e),
    edge(Q1), edge(Q2)  -=  phi(-z_e),        phi(z) = log(1 + e^z),

with contributions adding when one edge occupies two corners (the torus
doubling).  Alternate corners around the quadrilateral thus receive
+phi(z_e) and -phi(-z_e); this orientation is the one that preserves all
geodesic traces and face perimeters (phi(z) - phi(-z) = z makes the
cancellations exact).

Two dart assignments realize the re-glued pairing (which dart of e ends up
at which new vertex).  We pick the one determined by where the smallest
corner dart sits; the choice alternates under repeated flips, which makes
flip an exact involution on (sigma, labels) rather than an involution only
up to relabeling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fatgraph import FatGraph, FatGraphError, edge_of, opposite
from .geodesics import PathError, next_darts, validate_path


def phi(z: float) -> float:
    """log(1 + e^z), computed stably."""
    if z > 0:
        return z + math.log1p(math.exp(-z))
    return math.log1p(math.exp(z))


@dataclass(frozen=True)
class FlipRecord:
    edge: int
    corners: tuple  # (P1, Q2, P2, Q1): cyclic order around the quadrilateral
    before: FatGraph
    after: FatGraph
    rule: str  # which dart assignment was used for the new gluing

    def to_json(self):
        return {
            "edge": self.edge,
            "corners": list(self.corners),
            "rule": self.rule,
            "before": self.before.to_json(),
            "after": self.after.to_json(),
        }


def flip(g: FatGraph, e: int) -> FlipRecord:
    if not 0 <= e < g.n_edges:
        raise FatGraphError(f"edge {e} out of range")
    a, b = 2 * e, 2 * e + 1
    sigma = list(g.sigma)
    if b in (sigma[a], sigma[sigma[a]]):
        raise FatGraphError(f"edge {e} is a self-loop and cannot be flipped")
    p1, q1 = sigma[a], sigma[sigma[a]]
    p2, q2 = sigma[b], sigma[sigma[b]]

    new = list(sigma)
    if min(p1, p2, q1, q2) in (p1, p2):
        rule = "anti"
        # new vertex cycles (a, Q1, P2) and (b, Q2, P1)
        new[a], new[q1], new[p2] = q1, p2, a
        new[b], new[q2], new[p1] = q2, p1, b
    else:
        rule = "clock"
        # new vertex cycles (a, Q2, P1) and (b, Q1, P2)
        new[a], new[q2], new[p1] = q2, p1, a
        new[b], new[q1], new[p2] = q1, p2, b

    ze = float(g.z[e])
    z = [float(x) for x in g.z]
    z[e] = -ze if ze != 0.0 else 0.0
    for corner, delta in ((p1, phi(ze)), (p2, phi(ze)), (q1, -phi(-ze)), (q2, -phi(-ze))):
        z[edge_of(corner)] += delta

    after = FatGraph(new, z)
    return FlipRecord(e, (p1, q2, p2, q1), g, after, rule)


def transport_path(record: FlipRecord, path):
    """Rewrite a path word across the flip quadrilateral.

    Darts off the flipped edge are kept; traversals of the flipped edge are
    dropped and re-inserted exactly where the re-glued quadrilateral requires
    a crossing.  Each kept consecutive pair is checked against the after
    graph, so the result is valid by construction.
    """
    path = validate_path(record.before, path)
    e = record.edge
    after = record.after
    kept = [d for d in path if edge_of(d) != e]
    if not kept:
        raise PathError("path has no darts outside the flipped edge")
    out = []
    n = len(kept)
    for i, x in enumerate(kept):
        out.append(x)
        y = kept[(i + 1) % n]
        if y in next_darts(after, x):
            continue
        inserted = False
        for w in (2 * e, 2 * e + 1):
            if w in next_darts(after, x) and y in next_darts(after, w):
                out.append(w)
                inserted = True
                break
        if not inserted:
            raise PathError(f"cannot transport step {x} -> {y} across the flip")
    # rotate so the word starts at its smallest dart (canonical cyclic form)
    k = out.index(min(out))
    out = tuple(out[k:] + out[:k])
    return validate_path(after, out)


# -- graph equivalence --------------------------------------------------------


def find_isomorphism(g1: FatGraph, g2: FatGraph, edge_map=None, label_tol: float = 1e-12):
    """Dart bijection taking (opp, sigma) of g1 to g2 and edge i to edge_map[i].

    Returns the dart map as a list, or None.  Labels must agree through
    edge_map within label_tol.
    """
    if g1.n_darts != g2.n_darts:
        return None
    n = g1.n_darts
    if edge_map is None:
        edge_map = list(range(g1.n_edges))
    for i in range(g1.n_edges):
        if abs(float(g1.z[i]) - float(g2.z[edge_map[i]])) > label_tol:
            return None
    for seed in (2 * edge_map[0], 2 * edge_map[0] + 1):
        psi = [-1] * n
        psi[0] = seed
        psi[1] = opposite(seed)
        stack = [0, 1]
        ok = True
        while stack and ok:
            d = stack.pop()
            for nd, target in ((g1.sigma[d], g2.sigma[psi[d]]), (opposite(d), opposite(psi[d]))):
                if psi[nd] == -1:
                    if edge_map[edge_of(nd)] != edge_of(target):
                        ok = False
                        break
                    psi[nd] = target
                    stack.append(nd)
                elif psi[nd] != target:
                    ok = False
                    break
        if ok and -1 not in psi and len(set(psi)) == n:
            if all(g2.sigma[psi[d]] == psi[g1.sigma[d]] for d in range(n)):
                return psi
    return None


def equivalent(g1: FatGraph, g2: FatGraph, edge_map=None, label_tol: float = 1e-12) -> bool:
    return find_isomorphism(g1, g2, edge_map, label_tol) is not None


# -- flip relations -----------------------------------------------------------


def _labels_close(g1: FatGraph, g2: FatGraph, tol: float) -> float:
    return max(abs(float(x) - float(y)) for x, y in zip(g1.z, g2.z))


def check_involution(g: FatGraph, e: int, tol: float = 1e-12) -> dict:
    twice = flip(flip(g, e).after, e).after
    sigma_equal = twice.sigma == g.sigma
    residual = _labels_close(twice, g, tol)
    return {
        "name": "involution",
        "edge": e,
        "sigma_equal": sigma_equal,
        "residual": residual,
        "equal": sigma_equal and residual <= tol,
    }


def check_commutation(g: FatGraph, e1: int, e2: int, tol: float = 1e-12) -> dict:
    darts1 = {2 * e1, 2 * e1 + 1}
    verts = {frozenset(v) for v in g.vertices()}
    shared = [v for v in verts if (v & darts1) and (v & {2 * e2, 2 * e2 + 1})]
    if shared:
        raise FatGraphError(f"edges {e1} and {e2} share a vertex; commutation needs disjoint edges")
    ab = flip(flip(g, e1).after, e2).after
    ba = flip(flip(g, e2).after, e1).after
    sigma_equal = ab.sigma == ba.sigma
    residual = _labels_close(ab, ba, tol)
    return {
        "name": "commutation",
        "edges": [e1, e2],
        "sigma_equal": sigma_equal,
        "residual": residual,
        "equal": sigma_equal and residual <= tol,
    }


def check_pentagon(g: FatGraph, e1: int, e2: int, tol: float = 1e-12) -> dict:
    """Five alternating flips return the graph up to transposing the two edges."""
    verts = [frozenset(v) for v in g.vertices()]
    common = [
        v for v in verts if (v & {2 * e1, 2 * e1 + 1}) and (v & {2 * e2, 2 * e2 + 1})
    ]
    if len(common) != 1:
        raise FatGraphError(
            f"pentagon needs edges sharing exactly one vertex; {e1},{e2} share {len(common)}"
        )
    h = g
    for e in (e1, e2, e1, e2, e1):
        h = flip(h, e).after
    edge_map = list(range(g.n_edges))
    edge_map[e1], edge_map[e2] = e2, e1
    ok = equivalent(g, h, edge_map=edge_map, label_tol=tol)
    swapped_z = list(map(float, g.z))
    swapped_z[e1], swapped_z[e2] = swapped_z[e2], swapped_z[e1]
    residual = max(abs(a - float(b)) for a, b in zip(swapped_z, h.z))
    return {
        "name": "pentagon",
        "edges": [e1, e2],
        "residual": residual,
        "equal": ok,
    }


def check_perimeters(g: FatGraph, e: int, tol: float = 1e-12) -> dict:
    """Every face perimeter is invariant under the flip of e."""
    after = flip(g, e).after
    before_vals = sorted(g.face_perimeter(f)[1] for f in g.faces())
    after_vals = sorted(after.face_perimeter(f)[1] for f in after.faces())
    residual = max(abs(x - y) for x, y in zip(before_vals, after_vals))
    return {
        "name": "perimeter",
        "edge": e,
        "residual": residual,
        "equal": len(before_vals) == len(after_vals) and residual <= tol,
    }


def torus_flip_map(labels):
    """Coordinate map of the z0-flip on the once-punctured torus.

    The after graph is relabeled to the standard anticlockwise edge order
    (the flipped edge stays in position 0), giving

        z0 -> -z0,  z1 -> z2 - 2 phi(-z0),  z2 -> z1 + 2 phi(z0).
    """
    from .fatgraph import once_punctured_torus

    g = once_punctured_torus(labels)
    after = flip(g, 0).after
    # anticlockwise edge cycle at the after-vertex of dart 0 is (e0, e2, e1)
    cycle = [0]
    d = after.sigma[0]
    while d != 0:
        cycle.append(d)
        d = after.sigma[d]
    order = [edge_of(d) for d in cycle]
    return tuple(float(after.z[e]) for e in order)


def torus_modular_check(labels, tol: float = 1e-12) -> dict:
    """U -> U^-1 and V -> e^{l_P/2} V^-1 / (U + U^-1) under the z0-flip.

    U = e^{z0/2}; V is the multiplicative coordinate of the non-flipped label
    that transforms contravariantly (z1 in this engine's edge numbering).
    """
    z0, z1, z2 = (float(x) for x in labels)
    new = torus_flip_map(labels)
    u, v = math.exp(z0 / 2.0), math.exp(z1 / 2.0)
    lp = z0 + z1 + z2
    u_new, v_new = math.exp(new[0] / 2.0), math.exp(new[1] / 2.0)
    res_u = abs(u_new - 1.0 / u)
    res_v = abs(v_new - math.exp(lp / 2.0) / (v * (u + 1.0 / u)))
    residual = max(res_u, res_v, abs(u_new * u - 1.0))
    return {
        "name": "torus_modular",
        "labels": [z0, z1, z2],
        "after": list(new),
        "residual": residual,
        "equal": residual <= tol,
    }
