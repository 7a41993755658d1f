import pytest

from equiangular import errors
from equiangular.andreev import find_3circuits
from equiangular.census import canonical_form
from equiangular.families import (
    generate_pn,
    generate_prism,
    grid_triangulation,
    named,
    pn_expected_census,
    pn_face_count,
    pn_vertex_count,
)
from equiangular.polyhedron import face_census


def test_p1_is_tetrahedron():
    P = generate_pn(1)
    assert (P.face_count, P.vertex_count, face_census(P)) == (4, 4, {3: 4})


def test_p2_is_cube():
    P = generate_pn(2)
    assert (P.face_count, P.vertex_count, face_census(P)) == (6, 8, {4: 6})
    assert canonical_form(P) == canonical_form(generate_prism(4))


def test_p4_census():
    P = generate_pn(4)
    assert (P.face_count, P.vertex_count) == (13, 22)
    assert face_census(P) == {4: 3, 5: 6, 6: 4}


@pytest.mark.parametrize("n", range(1, 31))
def test_closed_form_census(n):
    P = generate_pn(n)
    assert P.vertex_count == pn_vertex_count(n) == n * n + n + 2
    assert 2 * P.face_count == 2 * pn_face_count(n) == n * n + n + 6
    assert face_census(P) == pn_expected_census(n)


@pytest.mark.parametrize("n", range(3, 12))
def test_face_roles(n):
    P = generate_pn(n)
    A = [P.face_index(f"A{i}") for i in (1, 2, 3)]
    B = [P.face_index(f"B{i}") for i in (1, 2, 3)]
    assert all(len(P.faces[a]) == n + 2 for a in A)
    assert all(len(P.faces[b]) == 4 for b in B)
    # B1 touches A1, A2; B2 touches A2, A3; B3 touches A3, A1
    pairs = [(0, 1), (1, 2), (2, 0)]
    for b, (i, j) in zip(B, pairs):
        assert P.faces_adjacent(b, A[i]) and P.faces_adjacent(b, A[j])
    # v0 is the common vertex of the A faces; v1..v3 end the edges from it
    common = set(P.faces[A[0]]) & set(P.faces[A[1]]) & set(P.faces[A[2]])
    assert common == {0}
    assert set(P.neighbors[0]) == {1, 2, 3}
    hexes = [i for i in range(P.face_count) if i not in A
             and not any(P.faces_adjacent(i, a) for a in A)]
    assert len(hexes) == (n - 3) * (n - 2) // 2
    assert all(len(P.faces[h]) == 6 for h in hexes)


@pytest.mark.parametrize("n", range(2, 11))
def test_no_3circuits(n):
    assert find_3circuits(generate_pn(n)) == []


@pytest.mark.parametrize("n", range(1, 15))
def test_grid_triangle_count(n):
    vcount, tris, _ = grid_triangulation(n)
    assert len(tris) == 1 + 3 + 3 * (n - 1) + n * (n - 1) // 2 + (n - 1) * (n - 2) // 2
    assert len(tris) == n * n + n + 2
    assert vcount == 3 + n * (n + 1) // 2


def test_bad_n():
    with pytest.raises(errors.BadParameterError):
        generate_pn(0)


@pytest.mark.parametrize("m, census", [(3, {3: 2, 4: 3}), (4, {4: 6}), (5, {4: 5, 5: 2})])
def test_prisms(m, census):
    P = generate_prism(m)
    assert face_census(P) == census
    assert (P.vertex_count, P.face_count) == (2 * m, m + 2)


def test_bad_m():
    with pytest.raises(errors.BadParameterError):
        generate_prism(2)


def test_named():
    assert face_census(named("dodecahedron")) == {5: 12}
    with pytest.raises(errors.BadParameterError):
        named("icosahedron")
