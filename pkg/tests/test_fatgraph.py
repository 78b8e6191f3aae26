import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shearlab.fatgraph import (
    FatGraph,
    FatGraphError,
    edge_of,
    once_punctured_torus,
    opposite,
    tetrahedron,
)


def test_dart_primitives():
    assert [opposite(d) for d in range(6)] == [1, 0, 3, 2, 5, 4]
    assert [edge_of(d) for d in range(6)] == [0, 0, 1, 1, 2, 2]


def test_torus_topology():
    g = once_punctured_torus()
    rep = g.validate()
    assert (rep.vertices, rep.edges, rep.faces, rep.genus, rep.holes) == (2, 3, 1, 1, 1)
    assert sorted(map(sorted, g.vertices())) == [[0, 2, 4], [1, 3, 5]]
    assert len(g.faces()) == 1 and len(g.faces()[0]) == 6


def test_tetrahedron_topology():
    g = tetrahedron()
    rep = g.validate()
    assert (rep.vertices, rep.edges, rep.faces, rep.genus, rep.holes) == (4, 6, 4, 0, 4)
    assert sorted(map(sorted, g.faces())) == [[0, 3, 6], [1, 4, 9], [2, 5, 10], [7, 8, 11]]


def test_torus_omega():
    g = once_punctured_torus()
    assert g.omega_matrix() == [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]


def test_tetrahedron_omega():
    om = tetrahedron().omega_matrix()
    assert all(om[i][j] == -om[j][i] for i in range(6) for j in range(6))
    assert all(om[i][i] == 0 for i in range(6))
    assert {abs(om[i][j]) for i in range(6) for j in range(6) if i != j} <= {0, 1}


def test_faces_in_omega_kernel():
    # each face multiplicity vector is annihilated by omega
    for g in (once_punctured_torus(), tetrahedron()):
        om = g.omega_matrix()
        for f in g.faces():
            p = g.face_multiplicity(f)
            assert all(sum(om[i][j] * p[j] for j in range(len(p))) == 0 for i in range(len(p)))


def test_face_perimeter():
    g = once_punctured_torus((1.0, 2.0, 4.0))
    mult, value = g.face_perimeter(g.faces()[0])
    assert mult == (2, 2, 2)
    assert value == pytest.approx(14.0)


def test_validate_rejects_bad_sigma():
    with pytest.raises(FatGraphError):
        FatGraph([0, 1, 2, 3, 4, 5], (0, 0, 0)).validate()  # fixed points: size-1 orbits
    with pytest.raises(FatGraphError):
        FatGraph([2, 3, 4, 5, 0, 0], (0, 0, 0)).validate()  # not a permutation
    with pytest.raises(FatGraphError):
        FatGraph([2, 3, 4, 5, 0, 9], (0, 0, 0)).validate()  # out of range
    with pytest.raises(FatGraphError):
        FatGraph([1, 0, 3, 2], (0, 0)).validate()  # orbits of size 2


def test_constructor_rejects_bad_shapes():
    with pytest.raises(FatGraphError):
        FatGraph([0, 1, 2], (0, 0))
    with pytest.raises(FatGraphError):
        FatGraph([2, 3, 4, 5, 0, 1], (0, 0))


def test_immutability():
    g = once_punctured_torus()
    with pytest.raises(AttributeError):
        g.sigma = (0,) * 6


def test_json_roundtrip(tmp_path):
    g = once_punctured_torus((0.5, -1.25, 3.0))
    path = tmp_path / "g.json"
    path.write_text(json.dumps(g.to_json()))
    h = FatGraph.load(path)
    assert h.sigma == g.sigma
    assert all(abs(a - b) == 0 for a, b in zip(h.z, g.z))
    with pytest.raises(FatGraphError):
        FatGraph.from_json({"sigma": [2, 3, 4, 5, 0, 1]})
    with pytest.raises(FatGraphError):
        FatGraph.from_json([1, 2, 3])


@settings(max_examples=60)
@given(st.randoms(use_true_random=False))
def test_random_trivalent_graphs_validate(rnd):
    # build a random sigma from random 3-cycles over the 12 darts
    darts = list(range(12))
    rnd.shuffle(darts)
    sigma = [0] * 12
    for k in range(0, 12, 3):
        a, b, c = darts[k : k + 3]
        sigma[a], sigma[b], sigma[c] = b, c, a
    g = FatGraph(sigma, (0,) * 6)
    try:
        rep = g.validate()
    except FatGraphError:
        return  # disconnected or Euler-inconsistent gluings are correctly rejected
    assert rep.vertices == 4 and rep.edges == 6
    assert rep.edges == 6 * rep.genus - 6 + 3 * rep.holes
    assert rep.vertices == 4 * rep.genus - 4 + 2 * rep.holes


@settings(max_examples=40)
@given(st.randoms(use_true_random=False))
def test_vertices_faces_partition_darts(rnd):
    darts = list(range(12))
    rnd.shuffle(darts)
    sigma = [0] * 12
    for k in range(0, 12, 3):
        a, b, c = darts[k : k + 3]
        sigma[a], sigma[b], sigma[c] = b, c, a
    g = FatGraph(sigma, (0,) * 6)
    for orbits in (g.vertices(), g.faces()):
        flat = sorted(d for orbit in orbits for d in orbit)
        assert flat == list(range(12))
