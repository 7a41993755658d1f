import re

import numpy as np
import pytest

from equiangular import errors
from equiangular.families import cube, generate_pn, tetrahedron
from equiangular.render import (
    barycentric_residual,
    default_outer_face,
    edge_crossings,
    render_pn_schematic,
    render_svg,
    segments_intersect,
    tutte_layout,
)


def _count(svg, tag):
    return len(re.findall(rf"<{tag}\b", svg))


def test_tetrahedron_centroid():
    P = tetrahedron()
    for f in range(4):
        lay = tutte_layout(P, f)
        (inner,) = set(range(4)) - set(P.faces[f])
        centroid = lay.positions[list(P.faces[f])].mean(axis=0)
        assert np.allclose(lay[inner], centroid, atol=1e-12)


def test_cube_inner_square():
    lay = tutte_layout(cube(), 0, start_angle=np.pi / 4)
    inner = [u for u in range(8) if u not in lay.outer_vertices]
    radii = np.linalg.norm(lay.positions[inner], axis=1)
    assert np.allclose(radii, radii[0]) and 0 < radii[0] < 1
    assert np.allclose(lay.positions[inner].mean(axis=0), 0, atol=1e-12)


def test_p3_outer_a1():
    P = generate_pn(3)
    lay = tutte_layout(P, P.face_index("A1"))
    assert barycentric_residual(P, lay) <= 1e-9
    assert edge_crossings(P, lay) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_residual(n):
    P = generate_pn(n)
    assert barycentric_residual(P, tutte_layout(P)) <= 1e-9


@pytest.mark.parametrize("n", range(1, 5))
def test_crossing_free(n):
    P = generate_pn(n)
    for f in range(P.face_count):
        assert edge_crossings(P, tutte_layout(P, f)) == []


def test_crossing_detector_positive():
    assert segments_intersect((0, 0), (1, 1), (0, 1), (1, 0))
    assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))
    assert segments_intersect((0, 0), (2, 0), (1, 0), (3, 0))
    P = cube()
    lay = tutte_layout(P, 0)
    bad = lay.positions.copy()
    inner = [u for u in range(8) if u not in lay.outer_vertices]
    bad[inner[0]], bad[inner[2]] = lay.positions[inner[2]], lay.positions[inner[0]]
    assert edge_crossings(P, type(lay)(bad, lay.outer_face, lay.outer_vertices, lay.bounds))


def test_default_outer_face():
    P = generate_pn(4)
    assert len(P.faces[default_outer_face(P)]) == 6
    with pytest.raises(errors.BadParameterError):
        tutte_layout(P, P.face_count)


@pytest.mark.parametrize("P, lines", [(cube(), 12), (tetrahedron(), 6), (generate_pn(4), 33)],
                         ids=["cube", "tetra", "P4"])
def test_svg_lines(P, lines):
    svg = render_svg(P, tutte_layout(P))
    assert _count(svg, "line") == lines
    assert _count(svg, "circle") == P.vertex_count
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def test_svg_labels():
    P = generate_pn(3)
    svg = render_svg(P, tutte_layout(P), vertex_ids=True)
    assert ">B2<" in svg and ">v0<" in svg


@pytest.mark.parametrize("n, circles", [(1, 1), (2, 3), (3, 6), (5, 15)])
def test_schematic_circles(n, circles):
    svg = render_pn_schematic(n)
    assert _count(svg, "circle") == circles
    assert _count(svg, "line") == 3
    for lab in ("A1", "A2", "A3"):
        assert f">{lab}<" in svg


def test_schematic_labels():
    assert all(f">B{i}<" in render_pn_schematic(4) for i in (1, 2, 3))
    assert ">B<" in render_pn_schematic(1)
    with pytest.raises(errors.BadParameterError):
        render_pn_schematic(0)
