"""Isomorph-free census of combinatorial types admissible for π/3 angles.

Two independent routes produce the same list:

primal
    grow every simple polyhedron from the tetrahedron by inserting an edge
    across a face (subdivide two edges of one face and join the new
    vertices), reject isomorphs, then filter by the combinatorial rules:
    no triangular face (the tetrahedron excepted), no 3-circuit, no two
    faces sharing two edges, and no triangular prism.

dual
    take every graph on f = v/2 + 2 vertices from the networkx graph
    atlas (extended by one vertex for f = 8), keep the maximal planar ones
    with minimum degree >= 4 and no separating triangle, embed and dualize.
    The tetrahedron is the K4 special case.

Isomorphism is decided by a canonical code of the rotation system: a
breadth-first relabelling from every dart in both orientations, keeping the
smallest.  3-connected planar graphs embed uniquely up to reflection, so
equal codes mean combinatorially equivalent polyhedra, mirror images
included.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

import networkx as nx

from .andreev import find_3circuits, is_triangular_prism
from .errors import BadParameterError, MultiEdgeDualError
from .families import tetrahedron
from .polyhedron import (
    CombinatorialPolyhedron,
    CombinatorialTriangulation,
    FaceCensus,
    build_from_faces,
    build_triangulation,
    dual_triangulation,
)

MAX_CENSUS_V = 12

Rotation = Mapping[int, Mapping[int, int]]


def _bfs_code(rot: Rotation, u0: int, w0: int) -> Tuple[int, ...]:
    label = {u0: 0}
    order = [u0]
    start = {u0: w0}
    code: List[int] = []
    for u in order:
        first = w = start[u]
        while True:
            if w not in label:
                label[w] = len(order)
                order.append(w)
                start[w] = u
            code.append(label[w])
            w = rot[u][w]
            if w == first:
                break
        code.append(-1)
    return tuple(code)


def rotation_canonical_code(rot: Rotation) -> Tuple[int, ...]:
    inv = {u: {b: a for a, b in r.items()} for u, r in rot.items()}
    best = None
    for r in (rot, inv):
        for u0 in r:
            for w0 in r[u0]:
                c = _bfs_code(r, u0, w0)
                if best is None or c < best:
                    best = c
    return best


def _code_string(n: int, code: Tuple[int, ...]) -> str:
    rows, row = [], []
    for x in code:
        if x < 0:
            rows.append(",".join(map(str, row)))
            row = []
        else:
            row.append(x)
    return f"{n}:" + "|".join(rows)


def canonical_form(P: CombinatorialPolyhedron) -> str:
    """String equal for two polyhedra iff they are combinatorially equivalent.

    Reflections count as equivalent.
    """
    return _code_string(P.vertex_count, rotation_canonical_code(P.rotation))


def triangulation_canonical_form(T: CombinatorialTriangulation) -> str:
    return _code_string(T.vertex_count, rotation_canonical_code(T.rotation))


# ---------------------------------------------------------------------------
# primal route
# ---------------------------------------------------------------------------

def insert_edge(P: CombinatorialPolyhedron, face: int, i: int, j: int) -> CombinatorialPolyhedron:
    """Join new points on edges i and j (positions along ``face``) by an edge."""
    F = P.faces[face]
    k = len(F)
    i, j = sorted((i, j))
    if i == j or not 0 <= i < k or not 0 <= j < k:
        raise ValueError("need two distinct edge positions of the face")
    p, q = P.vertex_count, P.vertex_count + 1
    xi, xi1 = F[i], F[(i + 1) % k]
    xj, xj1 = F[j], F[(j + 1) % k]

    f1 = [p] + list(F[i + 1:j + 1]) + [q]
    f2 = [q] + list(F[j + 1:]) + list(F[:i + 1]) + [p]
    faces = []
    for idx, G in enumerate(P.faces):
        if idx == face:
            continue
        G = list(G)
        for (a, b, new) in ((xi1, xi, p), (xj1, xj, q)):
            m = len(G)
            for t in range(m):
                if G[t] == a and G[(t + 1) % m] == b:
                    G.insert(t + 1, new)
                    break
        faces.append(G)
    return build_from_faces(P.vertex_count + 2, [f1, f2] + faces)


@lru_cache(maxsize=None)
def _cubic_polyhedra(v: int) -> Tuple[Tuple[str, CombinatorialPolyhedron], ...]:
    if v == 4:
        P = tetrahedron()
        return ((canonical_form(P), P),)
    found: Dict[str, CombinatorialPolyhedron] = {}
    for _, P in _cubic_polyhedra(v - 2):
        for face, F in enumerate(P.faces):
            for i, j in itertools.combinations(range(len(F)), 2):
                Q = insert_edge(P, face, i, j)
                found.setdefault(canonical_form(Q), Q)
    return tuple(sorted(found.items()))


def enumerate_cubic_polyhedra(v: int) -> List[CombinatorialPolyhedron]:
    """Every simple polyhedron with ``v`` vertices, one per isomorphism class."""
    if v < 4 or v % 2 or v > MAX_CENSUS_V + 2:
        raise BadParameterError(f"v must be even and in [4, {MAX_CENSUS_V + 2}], got {v}")
    return [P for _, P in _cubic_polyhedra(v)]


def is_admissible(P: CombinatorialPolyhedron) -> bool:
    """Combinatorial rules a π/3-equiangular polyhedron must obey."""
    if P.vertex_count == 4:
        return True
    if any(len(f) == 3 for f in P.faces):
        return False
    if is_triangular_prism(P) or find_3circuits(P):
        return False
    try:
        dual_triangulation(P)
    except MultiEdgeDualError:
        return False
    return True


@dataclass
class CensusEntry:
    canonical_form: str
    polyhedron: CombinatorialPolyhedron
    face_census: FaceCensus

    def to_dict(self) -> dict:
        d = self.polyhedron.to_dict()
        d["canonical_form"] = self.canonical_form
        d["face_census"] = {str(k): c for k, c in self.face_census.items()}
        return d


@dataclass
class CensusResult:
    vertex_count: int
    method: str
    entries: List[CensusEntry] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.entries)

    def forms(self) -> set:
        return {e.canonical_form for e in self.entries}

    def to_list(self) -> List[dict]:
        return [e.to_dict() for e in self.entries]

    def summary(self) -> str:
        return f"v={self.vertex_count} count={self.count}"


def _check_v(v: int) -> None:
    if v % 2 or not 4 <= v <= MAX_CENSUS_V:
        raise BadParameterError(f"v must be even and in [4, {MAX_CENSUS_V}], got {v}")


def _result(v: int, method: str, polys) -> CensusResult:
    entries = {}
    for P in polys:
        cf = canonical_form(P)
        entries.setdefault(cf, CensusEntry(cf, P, P.face_census()))
    return CensusResult(v, method, [entries[k] for k in sorted(entries)])


def enumerate_admissible(v: int) -> CensusResult:
    _check_v(v)
    return _result(v, "primal", [P for P in enumerate_cubic_polyhedra(v) if is_admissible(P)])


# ---------------------------------------------------------------------------
# dual route
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _atlas_by_order() -> Dict[int, List[nx.Graph]]:
    out: Dict[int, List[nx.Graph]] = {}
    for g in nx.graph_atlas_g():
        out.setdefault(g.number_of_nodes(), []).append(g)
    return out


def _candidate_graphs(f: int):
    """Graphs on ``f`` vertices with 3f - 6 edges and minimum degree >= 4."""
    target = 3 * f - 6
    atlas = _atlas_by_order()
    if f in atlas:
        for g in atlas[f]:
            if g.number_of_edges() == target and min(d for _, d in g.degree()) >= 4:
                yield g
        return
    if f - 1 not in atlas:
        raise BadParameterError(f"dual route supports at most {max(atlas) + 1} faces")
    # delete any vertex: what remains is planar with min degree >= 3
    for h in atlas[f - 1]:
        d = target - h.number_of_edges()
        if not 4 <= d <= f - 1 or min(x for _, x in h.degree()) < 3:
            continue
        must = [x for x, deg in h.degree() if deg == 3]
        rest = [x for x, deg in h.degree() if deg > 3]
        if len(must) > d:
            continue
        for extra in itertools.combinations(rest, d - len(must)):
            g = h.copy()
            g.add_edges_from((f - 1, x) for x in must + list(extra))
            yield g


def _embed_triangulation(g: nx.Graph):
    planar, emb = nx.check_planarity(g)
    if not planar:
        return None
    tris = {}
    for u in g.nodes:
        ccw = list(emb.neighbors_cw_order(u))[::-1]
        for a, b in zip(ccw, ccw[1:] + ccw[:1]):
            tris.setdefault(frozenset((u, a, b)), (u, a, b))
    return build_triangulation(g.number_of_nodes(), tris.values())


def enumerate_dual_route(v: int) -> CensusResult:
    _check_v(v)
    if v == 4:
        return _result(v, "dual", [tetrahedron()])
    f = v // 2 + 2
    seen: Dict[str, CombinatorialTriangulation] = {}
    for g in _candidate_graphs(f):
        T = _embed_triangulation(g)
        if T is None or T.non_facial_triangles():
            continue
        seen.setdefault(triangulation_canonical_form(T), T)
    return _result(v, "dual", [T.dual() for T in seen.values()])


def census(v: int, method: str = "primal") -> CensusResult:
    if method == "primal":
        return enumerate_admissible(v)
    if method == "dual":
        return enumerate_dual_route(v)
    raise BadParameterError(f"unknown census method {method!r}")
