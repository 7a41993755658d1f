import pytest

from equiangular import errors
from equiangular.andreev import equiangular_feasibility
from equiangular.census import (
    canonical_form,
    census,
    enumerate_admissible,
    enumerate_cubic_polyhedra,
    enumerate_dual_route,
    insert_edge,
    is_admissible,
)
from equiangular.families import cube, generate_pn, generate_prism, tetrahedron
from equiangular.polyhedron import face_census


# OEIS A000109: 3-connected cubic planar graphs on 4, 6, ..., 14 vertices
@pytest.mark.parametrize("v, count", [(4, 1), (6, 1), (8, 2), (10, 5), (12, 14), (14, 50)])
def test_cubic_polyhedra_counts(v, count):
    assert len(enumerate_cubic_polyhedra(v)) == count


def test_canonical_form_examples():
    assert canonical_form(cube()) == canonical_form(generate_prism(4))
    assert canonical_form(cube()) != canonical_form(generate_prism(5))
    P3 = generate_pn(3)
    assert canonical_form(P3) == canonical_form(P3.mirror())
    assert canonical_form(P3) == canonical_form(P3.relabel(list(range(P3.vertex_count))[::-1]))
    assert canonical_form(cube()).startswith("8:")


def test_insert_edge_grows_by_two():
    Q = insert_edge(tetrahedron(), 0, 0, 1)
    assert Q.vertex_count == 6 and canonical_form(Q) == canonical_form(generate_prism(3))


def test_v4():
    res = census(4)
    assert res.count == 1 and res.entries[0].canonical_form == canonical_form(tetrahedron())


def test_v6_empty():
    assert census(6).count == 0
    assert not is_admissible(generate_prism(3))


def test_v8_cube():
    assert census(8).forms() == {canonical_form(cube())}


def test_v10_pentagonal_prism():
    res = census(10)
    assert res.forms() == {canonical_form(generate_prism(5))}
    assert res.entries[0].face_census == {4: 5, 5: 2}


def test_v12_nonempty():
    res = census(12)
    assert res.count >= 1
    assert {tuple(sorted(e.face_census.items())) for e in res.entries} == {
        ((4, 4), (5, 4)), ((4, 6), (6, 2))}


@pytest.mark.parametrize("v", [4, 6, 8, 10, 12])
def test_routes_agree(v):
    assert enumerate_admissible(v).forms() == enumerate_dual_route(v).forms()


@pytest.mark.parametrize("v", [8, 10, 12])
def test_entries_pass_andreev(v):
    for e in census(v).entries:
        verdict = equiangular_feasibility(e.polyhedron, 3)
        assert verdict.feasible and verdict.report.in_theorem_scope


@pytest.mark.parametrize("v", [2, 5, 14, 0])
def test_bad_v(v):
    with pytest.raises(errors.BadParameterError):
        census(v)


def test_bad_method():
    with pytest.raises(errors.BadParameterError):
        census(8, "sideways")


def test_summary_and_json():
    res = census(10, "dual")
    assert res.summary() == "v=10 count=1"
    (d,) = res.to_list()
    assert d["canonical_form"] == res.entries[0].canonical_form
    assert d["face_census"] == {"4": 5, "5": 2}


def test_deterministic():
    assert [e.canonical_form for e in census(12).entries] == \
        [e.canonical_form for e in census(12).entries]
    assert face_census(census(12).entries[0].polyhedron) == census(12).entries[0].face_census
