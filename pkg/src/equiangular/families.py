"""Constructors for the P_n family, prisms and a few named polyhedra.

P_n is built through its dual triangulation.  The dual has three "line"
vertices, one for each of the faces A1, A2, A3 through the distinguished
vertex v0, and a triangular array of grid vertices G(i, j), 1 <= j <= i <= n,
one for each remaining face:

            L1 ── L2                 G(1,1)  = B1 (touches A1, A2)
             \\   /                 G(n,n)  = B2 (touches A2, A3)
              L3                    G(n,1)  = B3 (touches A3, A1)

Grid neighbours are G(i,j+1), G(i+1,j), G(i+1,j+1); the left column
touches L1, the diagonal touches L2 and the bottom row touches L3.
Dualizing gives (n+2)-gons A_i, quadrilateral corners B_i, pentagons along
the sides and hexagons inside.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .errors import BadParameterError
from .polyhedron import (
    CombinatorialPolyhedron,
    build_from_faces,
    orient_consistently,
    polyhedron_from_triangulation,
)

_L1, _L2, _L3 = 0, 1, 2


def pn_face_count(n: int) -> int:
    return (n * n + n + 6) // 2


def pn_vertex_count(n: int) -> int:
    return n * n + n + 2


def pn_expected_census(n: int) -> Dict[int, int]:
    """Face-size breakdown of P_n from the closed-form counts."""
    if n == 1:
        return {3: 4}
    if n == 2:
        return {4: 6}
    census: Dict[int, int] = {}
    for size, count in ((n + 2, 3), (4, 3), (5, 3 * (n - 2)), (6, (n - 3) * (n - 2) // 2)):
        if count:
            census[size] = census.get(size, 0) + count
    return dict(sorted(census.items()))


def grid_triangulation(n: int) -> Tuple[int, List[Tuple[int, int, int]], Dict[Tuple[int, int], int]]:
    """The dual triangulation of P_n as ``(vertex_count, triangles, grid_ids)``.

    Vertices 0, 1, 2 are the lines L1, L2, L3; ``grid_ids[(i, j)]`` gives the
    id of G(i, j).  The first triangle is the line triangle (the vertex v0)
    and the next three are the corner triangles (v1, v2, v3).
    """
    if n < 1:
        raise BadParameterError(f"n must be >= 1, got {n}")
    gid: Dict[Tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            gid[(i, j)] = 3 + len(gid)

    G = gid.__getitem__
    tris: List[Tuple[int, int, int]] = [
        (_L1, _L2, _L3),
        (G((1, 1)), _L2, _L1),
        (G((n, n)), _L3, _L2),
        (G((n, 1)), _L1, _L3),
    ]
    for i in range(1, n):
        tris.append((_L1, G((i, 1)), G((i + 1, 1))))
        tris.append((_L2, G((i, i)), G((i + 1, i + 1))))
        tris.append((_L3, G((n, i)), G((n, i + 1))))
    for i in range(1, n):
        for j in range(1, i + 1):
            tris.append((G((i, j)), G((i + 1, j)), G((i + 1, j + 1))))
    for i in range(2, n):
        for j in range(1, i):
            tris.append((G((i, j)), G((i + 1, j + 1)), G((i, j + 1))))

    n_up, n_down = n * (n - 1) // 2, (n - 1) * (n - 2) // 2
    assert len(tris) == 1 + 3 + 3 * (n - 1) + n_up + n_down == pn_vertex_count(n)
    # seed: a counterclockwise up-triangle, or the corner triangle when n = 1
    seed = 4 + 3 * (n - 1) if n > 1 else 1
    oriented = orient_consistently(tris, seed_index=seed)
    return 3 + len(gid), oriented, gid


def generate_pn(n: int) -> CombinatorialPolyhedron:
    """The polyhedron P_n (P_1 is the tetrahedron, P_2 the cube).

    Faces 0, 1, 2 are A1, A2, A3; the remaining faces follow the grid in
    row-major order.  Vertex 0 is v0 = A1 ∩ A2 ∩ A3 and vertices 1, 2, 3
    are the far ends of the edges A1∩A2, A2∩A3, A3∩A1.
    """
    vcount, tris, gid = grid_triangulation(n)
    labels = {_L1: "A1", _L2: "A2", _L3: "A3"}
    if n == 1:
        labels[gid[(1, 1)]] = "B"
    else:
        labels[gid[(1, 1)]] = "B1"
        labels[gid[(n, n)]] = "B2"
        labels[gid[(n, 1)]] = "B3"
        for (i, j), x in gid.items():
            labels.setdefault(x, f"G{i},{j}")
    return polyhedron_from_triangulation(vcount, tris, labels)


def generate_prism(m: int) -> CombinatorialPolyhedron:
    """m-gonal prism: top vertices 0..m-1, bottom vertices m..2m-1."""
    if m < 3:
        raise BadParameterError(f"m must be >= 3, got {m}")
    top = list(range(m))
    bottom = [m + i for i in reversed(range(m))]
    sides = [[(i + 1) % m, i, m + i, m + (i + 1) % m] for i in range(m)]
    labels = {0: "top", 1: "bottom"}
    labels.update({2 + i: f"side{i}" for i in range(m)})
    return build_from_faces(2 * m, [top, bottom] + sides, labels)


def tetrahedron() -> CombinatorialPolyhedron:
    return build_from_faces(4, [[0, 1, 2], [0, 3, 1], [1, 3, 2], [0, 2, 3]])


def cube() -> CombinatorialPolyhedron:
    return generate_prism(4)


def dodecahedron() -> CombinatorialPolyhedron:
    # built as the dual of the icosahedron triangulation
    top, bottom = 0, 11
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    tris = []
    for i in range(5):
        a, b = upper[i], upper[(i + 1) % 5]
        c, d = lower[i], lower[(i + 1) % 5]
        tris.append((top, a, b))
        tris.append((a, c, b))
        tris.append((b, c, d))
        tris.append((bottom, d, c))
    return polyhedron_from_triangulation(12, orient_consistently(tris))


NAMED = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "triangular-prism": lambda: generate_prism(3),
    "pentagonal-prism": lambda: generate_prism(5),
    "hexagonal-prism": lambda: generate_prism(6),
    "dodecahedron": dodecahedron,
}


def named(name: str) -> CombinatorialPolyhedron:
    try:
        return NAMED[name]()
    except KeyError:
        raise BadParameterError(f"unknown polyhedron {name!r}; choose from {sorted(NAMED)}")
