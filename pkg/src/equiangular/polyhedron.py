"""Combinatorial model of simple polyhedra and their dual triangulations.

A simple polyhedron is stored as a list of faces, each face a cyclic list
of vertex ids traversed counterclockwise when viewed from outside.  Edges,
incidences and the rotation system are derived on demand and cached; the
objects themselves never change after construction.

Orientation convention used throughout: a face containing the consecutive
vertices ``(a, u, b)`` owns the darts ``a -> u`` and ``u -> b``, and the
neighbour of ``u`` following ``b`` in counterclockwise order is ``a``.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    EulerViolationError,
    MultiEdgeDualError,
    NonCubicError,
    OpenEdgeError,
    OrientationClashError,
    PolyhedronError,
    RepeatedVertexError,
)

Edge = Tuple[int, int]
Face = Tuple[int, ...]
FaceCensus = Dict[int, int]


def _edge(u: int, w: int) -> Edge:
    return (u, w) if u < w else (w, u)


def min_rotation(cycle: Sequence[int]) -> Tuple[int, ...]:
    """Rotate a cycle of distinct ids so that its smallest entry comes first."""
    i = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def _darts(face: Sequence[int]):
    k = len(face)
    for i in range(k):
        yield face[i], face[(i + 1) % k]


def _validate_cycles(vertex_count: int, faces: Sequence[Sequence[int]]) -> None:
    for idx, face in enumerate(faces):
        if len(face) < 3:
            raise PolyhedronError(f"face {idx} has fewer than 3 vertices")
        for x in face:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < vertex_count:
                raise PolyhedronError(f"face {idx}: vertex id {x!r} outside [0, {vertex_count})")
        if len(set(face)) != len(face):
            raise RepeatedVertexError(f"face {idx} repeats a vertex: {list(face)}")


def _dart_owner(faces: Sequence[Sequence[int]]) -> Dict[Edge, int]:
    """Map each directed edge to the face that traverses it, checking closure."""
    owner: Dict[Edge, int] = {}
    for idx, face in enumerate(faces):
        for d in _darts(face):
            if d in owner:
                raise OrientationClashError(
                    f"edge {d[0]}->{d[1]} traversed in the same direction by faces "
                    f"{owner[d]} and {idx}")
            owner[d] = idx
    counts = Counter(_edge(*d) for d in owner)
    for e, c in sorted(counts.items()):
        if c != 2:
            raise OpenEdgeError(f"edge {e} lies in {c} face(s), expected 2")
    return owner


@dataclass(frozen=True, eq=False)
class CombinatorialPolyhedron:
    """A validated simple (3-valent) polyhedron on the 2-sphere.

    Build instances with :func:`build_from_faces` or :meth:`from_json`; the
    constructor itself does no checking.
    """

    vertex_count: int
    faces: Tuple[Face, ...]
    labels: Mapping[int, str] = field(default_factory=dict)

    # -- counts ---------------------------------------------------------------
    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted({_edge(*d) for f in self.faces for d in _darts(f)}))

    # -- incidences -----------------------------------------------------------
    @cached_property
    def dart_face(self) -> Dict[Edge, int]:
        return {d: i for i, f in enumerate(self.faces) for d in _darts(f)}

    @cached_property
    def edge_faces(self) -> Dict[Edge, Tuple[int, int]]:
        """Edge -> the two faces containing it (smaller index first)."""
        out = {}
        for (u, w), i in self.dart_face.items():
            if u < w:
                j = self.dart_face[(w, u)]
                out[(u, w)] = (min(i, j), max(i, j))
        return out

    @cached_property
    def face_vertex_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(f) for f in self.faces)

    @cached_property
    def vertex_faces(self) -> Tuple[Tuple[int, ...], ...]:
        inc: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for i, f in enumerate(self.faces):
            for x in f:
                inc[x].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def face_adjacency(self) -> Tuple[frozenset, ...]:
        adj: List[set] = [set() for _ in self.faces]
        for i, j in self.edge_faces.values():
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    def faces_adjacent(self, i: int, j: int) -> bool:
        return j in self.face_adjacency[i]

    @cached_property
    def face_pair_edge(self) -> Dict[Tuple[int, int], Edge]:
        """(i, j) with i < j -> an edge shared by faces i and j."""
        return {fs: e for e, fs in self.edge_faces.items()}

    def shared_edges(self, i: int, j: int) -> List[Edge]:
        return [e for e, fs in self.edge_faces.items() if fs == (min(i, j), max(i, j))]

    @cached_property
    def neighbors(self) -> Tuple[Tuple[int, ...], ...]:
        nb: List[set] = [set() for _ in range(self.vertex_count)]
        for u, w in self.edges:
            nb[u].add(w)
            nb[w].add(u)
        return tuple(tuple(sorted(s)) for s in nb)

    @cached_property
    def rotation(self) -> Dict[int, Dict[int, int]]:
        """Counterclockwise successor of each neighbour around each vertex."""
        rot: Dict[int, Dict[int, int]] = {u: {} for u in range(self.vertex_count)}
        for f in self.faces:
            k = len(f)
            for i in range(k):
                a, u, b = f[i - 1], f[i], f[(i + 1) % k]
                rot[u][b] = a
        return rot

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def face_census(self) -> FaceCensus:
        return face_census(self)

    def label(self, i: int) -> Optional[str]:
        return self.labels.get(i)

    def face_index(self, label: str) -> int:
        for i, lab in self.labels.items():
            if lab == label:
                return i
        raise KeyError(label)

    def mirror(self) -> "CombinatorialPolyhedron":
        """The same polyhedron with every face orientation reversed."""
        return build_from_faces(self.vertex_count, [f[::-1] for f in self.faces], self.labels)

    def relabel(self, perm: Sequence[int]) -> "CombinatorialPolyhedron":
        """Rename vertex ``x`` to ``perm[x]``."""
        return build_from_faces(self.vertex_count,
                                [[perm[x] for x in f] for f in self.faces], self.labels)

    # -- serialization --------------------------------------------------------
    def to_dict(self) -> dict:
        d = {"vertex_count": self.vertex_count, "faces": [list(f) for f in self.faces]}
        if self.labels:
            d["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return d

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: Mapping) -> "CombinatorialPolyhedron":
        try:
            labels = {int(k): str(v) for k, v in (d.get("labels") or {}).items()}
            return build_from_faces(int(d["vertex_count"]), d["faces"], labels)
        except (KeyError, TypeError) as exc:
            raise PolyhedronError(f"malformed polyhedron record: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "CombinatorialPolyhedron":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, CombinatorialPolyhedron):
            return NotImplemented
        return (self.vertex_count == other.vertex_count and self.faces == other.faces
                and dict(self.labels) == dict(other.labels))

    def __hash__(self):
        return hash((self.vertex_count, self.faces))

    def __repr__(self):
        return (f"CombinatorialPolyhedron(v={self.vertex_count}, e={self.edge_count}, "
                f"f={self.face_count})")


def build_from_faces(vertex_count: int, faces: Iterable[Sequence[int]],
                     labels: Optional[Mapping[int, str]] = None) -> CombinatorialPolyhedron:
    """Validate a face list and return the polyhedron it describes.

    Raises the specific :mod:`equiangular.errors` subclass for the first
    structural defect found: repeated vertices, open edges, clashing
    orientation, vertices not in exactly three faces, or a failed Euler
    count.
    """
    faces = [tuple(f) for f in faces]
    if vertex_count < 1:
        raise PolyhedronError("vertex_count must be positive")
    _validate_cycles(vertex_count, faces)
    _dart_owner(faces)

    per_vertex = Counter(x for f in faces for x in f)
    for x in range(vertex_count):
        if per_vertex[x] != 3:
            raise NonCubicError(f"vertex {x} lies in {per_vertex[x]} faces, expected 3")

    e = sum(len(f) for f in faces) // 2
    if vertex_count - e + len(faces) != 2:
        raise EulerViolationError(
            f"v - e + f = {vertex_count} - {e} + {len(faces)} != 2")
    assert 2 * e == 3 * vertex_count and 2 * len(faces) == vertex_count + 4

    labels = dict(labels or {})
    for k in labels:
        if not 0 <= k < len(faces):
            raise PolyhedronError(f"label attached to unknown face {k}")
    return CombinatorialPolyhedron(vertex_count, tuple(min_rotation(f) for f in faces), labels)


def face_census(P: CombinatorialPolyhedron) -> FaceCensus:
    """Number of faces of each size, keyed by size in increasing order."""
    c = Counter(len(f) for f in P.faces)
    return {k: c[k] for k in sorted(c)}


# ---------------------------------------------------------------------------
# triangulations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CombinatorialTriangulation:
    """A triangulated 2-sphere with consistently oriented triangles."""

    vertex_count: int
    triangles: Tuple[Tuple[int, int, int], ...]

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted({_edge(*d) for t in self.triangles for d in _darts(t)}))

    @cached_property
    def dart_triangle(self) -> Dict[Edge, int]:
        return {d: i for i, t in enumerate(self.triangles) for d in _darts(t)}

    @cached_property
    def neighbors(self) -> Tuple[frozenset, ...]:
        nb: List[set] = [set() for _ in range(self.vertex_count)]
        for u, w in self.edges:
            nb[u].add(w)
            nb[w].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def rotation(self) -> Dict[int, Dict[int, int]]:
        """Counterclockwise successor of each neighbour around each vertex."""
        rot: Dict[int, Dict[int, int]] = {u: {} for u in range(self.vertex_count)}
        for x, y, z in self.triangles:
            rot[x][y] = z
            rot[y][z] = x
            rot[z][x] = y
        return rot

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def facial_triangles(self) -> set:
        return {frozenset(t) for t in self.triangles}

    def non_facial_triangles(self) -> List[Tuple[int, int, int]]:
        """3-cycles of the graph that do not bound a face (separating triangles)."""
        facial = self.facial_triangles()
        out = []
        for u, w in self.edges:
            for x in self.neighbors[u] & self.neighbors[w]:
                if x > w and frozenset((u, w, x)) not in facial:
                    out.append((u, w, x))
        return sorted(out)

    def dual(self) -> CombinatorialPolyhedron:
        return polyhedron_from_triangulation(self.vertex_count, self.triangles)

    def __repr__(self):
        return (f"CombinatorialTriangulation(v={self.vertex_count}, e={len(self.edges)}, "
                f"t={len(self.triangles)})")


def build_triangulation(vertex_count: int,
                        triangles: Iterable[Sequence[int]]) -> CombinatorialTriangulation:
    """Validate an oriented triangle list as a simple sphere triangulation."""
    tris = [tuple(t) for t in triangles]
    _validate_cycles(vertex_count, tris)
    if any(len(t) != 3 for t in tris):
        raise PolyhedronError("triangulation faces must have exactly 3 vertices")
    _dart_owner(tris)
    e = 3 * len(tris) // 2
    if vertex_count - e + len(tris) != 2:
        raise EulerViolationError(f"v - e + f = {vertex_count} - {e} + {len(tris)} != 2")
    if len({frozenset(t) for t in tris}) != len(tris):
        raise MultiEdgeDualError("two triangles share the same vertex set")
    return CombinatorialTriangulation(vertex_count, tuple(min_rotation(t) for t in tris))


def dual_triangulation(P: CombinatorialPolyhedron) -> CombinatorialTriangulation:
    """Faces of ``P`` become vertices, vertices of ``P`` become triangles.

    Triangle ``u`` lists the three faces around vertex ``u`` in
    counterclockwise order, so the triangulation inherits the orientation.
    """
    seen: Dict[Tuple[int, int], Edge] = {}
    for e, fs in P.edge_faces.items():
        if fs in seen:
            raise MultiEdgeDualError(
                f"faces {fs[0]} and {fs[1]} share more than one edge ({seen[fs]} and {e})")
        seen[fs] = e

    tris = []
    for u in range(P.vertex_count):
        first = P.vertex_faces[u][0]
        cyc = [first]
        f = first
        for _ in range(2):
            face = P.faces[f]
            a = face[face.index(u) - 1]
            f = P.dart_face[(u, a)]
            cyc.append(f)
        tris.append(cyc)
    return build_triangulation(P.face_count, tris)


def polyhedron_from_triangulation(vertex_count: int,
                                  triangles: Sequence[Sequence[int]],
                                  labels: Optional[Mapping[int, str]] = None,
                                  vertex_order: Optional[Sequence[int]] = None,
                                  ) -> CombinatorialPolyhedron:
    """Dualize an oriented triangulation into a simple polyhedron.

    Triangle ``t`` becomes polyhedron vertex ``t`` (or ``vertex_order``
    position of ``t`` when given); triangulation vertex ``x`` becomes face
    ``x`` listing the triangles around ``x`` counterclockwise.
    """
    tris = [tuple(t) for t in triangles]
    dart_tri = {d: i for i, t in enumerate(tris) for d in _darts(t)}
    around: List[List[int]] = [[] for _ in range(vertex_count)]
    for i, t in enumerate(tris):
        for x in t:
            around[x].append(i)

    new_id = list(range(len(tris)))
    if vertex_order is not None:
        for pos, t in enumerate(vertex_order):
            new_id[t] = pos

    faces = []
    for x in range(vertex_count):
        if not around[x]:
            raise PolyhedronError(f"triangulation vertex {x} lies in no triangle")
        start = around[x][0]
        cyc = []
        t = start
        while True:
            cyc.append(new_id[t])
            tri = tris[t]
            k = tri.index(x)
            z = tri[(k + 2) % 3]
            t = dart_tri[(x, z)]
            if t == start:
                break
            if len(cyc) > len(around[x]):
                raise PolyhedronError(f"link of triangulation vertex {x} is not a single cycle")
        faces.append(cyc)
    return build_from_faces(len(tris), faces, labels)


def orient_consistently(cycles: Sequence[Sequence[int]],
                        seed_index: int = 0) -> List[Tuple[int, ...]]:
    """Flip cycles so every shared edge is traversed in opposite directions.

    The seed cycle keeps its given direction; every other cycle is oriented
    by propagation across shared edges.  Raises if the surface is not
    orientable or an edge is shared by more than two cycles.
    """
    cycles = [tuple(c) for c in cycles]
    by_edge: Dict[Edge, List[int]] = {}
    for i, c in enumerate(cycles):
        for d in _darts(c):
            by_edge.setdefault(_edge(*d), []).append(i)
    for e, owners in by_edge.items():
        if len(owners) != 2:
            raise OpenEdgeError(f"edge {e} lies in {len(owners)} cycle(s), expected 2")

    out: List[Optional[Tuple[int, ...]]] = [None] * len(cycles)
    for root in [seed_index] + list(range(len(cycles))):
        if out[root] is not None:
            continue
        out[root] = cycles[root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for d in _darts(out[i]):
                a, b = by_edge[_edge(*d)]
                j = b if a == i else a
                want_reversed_dart = (d[1], d[0])
                cand = cycles[j]
                if want_reversed_dart not in set(_darts(cand)):
                    cand = cand[::-1]
                if out[j] is None:
                    out[j] = cand
                    queue.append(j)
                elif want_reversed_dart not in set(_darts(out[j])):
                    raise OrientationClashError("surface is not orientable")
    return out  # type: ignore[return-value]


def is_3_connected(P: CombinatorialPolyhedron) -> bool:
    return nx.node_connectivity(P.graph()) >= 3
