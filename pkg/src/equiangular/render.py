"""Planar drawings: Tutte barycentric layouts and the P_n schematic, as SVG."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sps
import scipy.sparse.linalg as spla

from .errors import BadParameterError, PolyhedronError, SingularSystemError
from .families import generate_pn
from .polyhedron import CombinatorialPolyhedron

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Layout:
    positions: np.ndarray          # shape (v, 2)
    outer_face: int
    outer_vertices: Tuple[int, ...]
    bounds: Tuple[float, float, float, float]   # xmin, ymin, xmax, ymax

    def __getitem__(self, u: int) -> np.ndarray:
        return self.positions[u]


def default_outer_face(P: CombinatorialPolyhedron) -> int:
    """A largest face, lowest index on ties."""
    return max(range(P.face_count), key=lambda i: (len(P.faces[i]), -i))


def tutte_layout(P: CombinatorialPolyhedron, outer_face: Optional[int] = None,
                 radius: float = 1.0, start_angle: float = math.pi / 2) -> Layout:
    """Pin ``outer_face`` on a regular polygon, put every other vertex at the
    mean of its neighbours.

    For a 3-connected planar graph the result is a crossing-free straight
    line drawing with convex faces.
    """
    if outer_face is None:
        outer_face = default_outer_face(P)
    if not 0 <= outer_face < P.face_count:
        raise BadParameterError(f"face index {outer_face} out of range")

    outer = P.faces[outer_face]
    m = len(outer)
    pos = np.zeros((P.vertex_count, 2))
    # the outer face is seen from inside the drawing, so it runs clockwise
    for k, u in enumerate(outer):
        t = start_angle - 2 * math.pi * k / m
        pos[u] = radius * math.cos(t), radius * math.sin(t)

    pinned = set(outer)
    inner = [u for u in range(P.vertex_count) if u not in pinned]
    if inner:
        idx = {u: i for i, u in enumerate(inner)}
        rows, cols, vals = [], [], []
        rhs = np.zeros((len(inner), 2))
        for u in inner:
            i = idx[u]
            rows.append(i)
            cols.append(i)
            vals.append(float(len(P.neighbors[u])))
            for w in P.neighbors[u]:
                if w in pinned:
                    rhs[i] += pos[w]
                else:
                    rows.append(i)
                    cols.append(idx[w])
                    vals.append(-1.0)
        A = sps.csc_matrix((vals, (rows, cols)), shape=(len(inner), len(inner)))
        try:
            sol = spla.splu(A).solve(rhs)
        except RuntimeError as exc:
            raise SingularSystemError(str(exc)) from exc
        if not np.all(np.isfinite(sol)):
            raise SingularSystemError("barycentric system has no unique solution")
        pos[inner] = sol

    xmin, ymin = pos.min(axis=0)
    xmax, ymax = pos.max(axis=0)
    return Layout(pos, outer_face, tuple(outer), (xmin, ymin, xmax, ymax))


def barycentric_residual(P: CombinatorialPolyhedron, layout: Layout) -> float:
    """Largest distance of an interior vertex from the mean of its neighbours."""
    pinned = set(layout.outer_vertices)
    worst = 0.0
    for u in range(P.vertex_count):
        if u in pinned:
            continue
        mean = layout.positions[list(P.neighbors[u])].mean(axis=0)
        worst = max(worst, float(np.linalg.norm(layout.positions[u] - mean)))
    return worst


def _orient(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _on_segment(p, q, r, eps) -> bool:
    return (min(p[0], q[0]) - eps <= r[0] <= max(p[0], q[0]) + eps
            and min(p[1], q[1]) - eps <= r[1] <= max(p[1], q[1]) + eps)


def segments_intersect(p1, p2, p3, p4, eps: float = 1e-12) -> bool:
    """Closed segments p1p2 and p3p4 share at least one point."""
    d1, d2 = _orient(p3, p4, p1), _orient(p3, p4, p2)
    d3, d4 = _orient(p1, p2, p3), _orient(p1, p2, p4)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
       ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True
    return ((abs(d1) <= eps and _on_segment(p3, p4, p1, eps))
            or (abs(d2) <= eps and _on_segment(p3, p4, p2, eps))
            or (abs(d3) <= eps and _on_segment(p1, p2, p3, eps))
            or (abs(d4) <= eps and _on_segment(p1, p2, p4, eps)))


def edge_crossings(P: CombinatorialPolyhedron, layout: Layout) -> List[Tuple[tuple, tuple]]:
    """Edge pairs that meet anywhere other than at a shared endpoint."""
    pos = layout.positions
    bad = []
    for e, g in itertools.combinations(P.edges, 2):
        shared = set(e) & set(g)
        if shared:
            (c,) = shared
            a = e[0] if e[1] == c else e[1]
            b = g[0] if g[1] == c else g[1]
            # only a fold-back onto the same ray can overlap
            u, w = pos[a] - pos[c], pos[b] - pos[c]
            if abs(u[0] * w[1] - u[1] * w[0]) <= 1e-12 and float(u @ w) > 0:
                bad.append((e, g))
        elif segments_intersect(pos[e[0]], pos[e[1]], pos[g[0]], pos[g[1]]):
            bad.append((e, g))
    return bad


# ---------------------------------------------------------------------------
# SVG output
# ---------------------------------------------------------------------------

def _svg_open(width: float, height: float) -> List[str]:
    return ['<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
            f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
            '<rect width="100%" height="100%" fill="white"/>']


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(P: CombinatorialPolyhedron, layout: Layout, size: int = 480,
               margin: int = 24, face_labels: bool = True, vertex_ids: bool = False) -> str:
    """Straight-line drawing: one ``<line>`` per edge, one dot per vertex."""
    if layout.positions.shape[0] != P.vertex_count:
        raise PolyhedronError("layout does not cover every vertex")
    xmin, ymin, xmax, ymax = layout.bounds
    span = max(xmax - xmin, ymax - ymin) or 1.0
    scale = (size - 2 * margin) / span

    def xy(p):
        return margin + (p[0] - xmin) * scale, margin + (ymax - p[1]) * scale

    out = _svg_open(size, size)
    out.append('<g stroke="black" stroke-width="1.5">')
    for u, w in P.edges:
        (x1, y1), (x2, y2) = xy(layout[u]), xy(layout[w])
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append('</g>')
    out.append('<g fill="black">')
    for u in range(P.vertex_count):
        x, y = xy(layout[u])
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3"/>')
    out.append('</g>')
    if vertex_ids:
        out.append('<g font-family="sans-serif" font-size="10" fill="#a00">')
        for u in range(P.vertex_count):
            x, y = xy(layout[u])
            out.append(f'<text x="{x + 4:.3f}" y="{y - 4:.3f}">v{u}</text>')
        out.append('</g>')
    if face_labels and P.labels:
        out.append('<g font-family="sans-serif" font-size="12" fill="#036" '
                   'text-anchor="middle">')
        for i, lab in sorted(P.labels.items()):
            if i == layout.outer_face:
                x, y = margin, margin / 2 + 4
                out.append(f'<text x="{x:.3f}" y="{y:.3f}" text-anchor="start">'
                           f'outer: {_escape(lab)}</text>')
                continue
            c = layout.positions[list(P.faces[i])].mean(axis=0)
            x, y = xy(c)
            out.append(f'<text x="{x:.3f}" y="{y + 4:.3f}">{_escape(lab)}</text>')
        out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def schematic_grid_positions(n: int, spacing: float = 1.0):
    """Centres of the grid circles G(i, j), row 1 at the top, y pointing down."""
    h = spacing * math.sqrt(3) / 2
    return {(i, j): ((j - (i + 1) / 2) * spacing, (i - 1) * h)
            for i in range(1, n + 1) for j in range(1, i + 1)}


def render_pn_schematic(n: int, size: int = 480, margin: int = 30) -> str:
    """Three lines meeting at π/3 and a triangular grid of equal dashed circles.

    Circle positions follow the combinatorics of P_n, not its hyperbolic
    geometry: radii are all equal and neighbouring circles just touch.
    """
    if n < 1:
        raise BadParameterError(f"n must be >= 1, got {n}")
    P = generate_pn(n)
    r = 0.5
    centres = schematic_grid_positions(n)
    # grid-point triangle pushed out by r on every side
    h = math.sqrt(3) / 2
    grow = r / math.sin(math.pi / 6)           # distance from a corner centre to the vertex
    top = (0.0, -grow)
    left = (-(n - 1) / 2 - grow * h, (n - 1) * h + grow / 2)
    right = ((n - 1) / 2 + grow * h, (n - 1) * h + grow / 2)

    pts = [top, left, right]
    xmin = min(p[0] for p in pts)
    xmax = max(p[0] for p in pts)
    ymin = min(p[1] for p in pts)
    ymax = max(p[1] for p in pts)
    span = max(xmax - xmin, ymax - ymin)
    scale = (size - 2 * margin) / span

    def xy(p):
        return margin + (p[0] - xmin) * scale, margin + (p[1] - ymin) * scale

    def extend(p, q, t=0.12):
        dx, dy = q[0] - p[0], q[1] - p[1]
        return (p[0] - t * dx, p[1] - t * dy), (q[0] + t * dx, q[1] + t * dy)

    out = _svg_open(size, size)
    out.append('<g stroke="black" stroke-width="2">')
    sides = {"A1": (top, left), "A2": (top, right), "A3": (left, right)}
    for name, (p, q) in sides.items():
        (x1, y1), (x2, y2) = (xy(z) for z in extend(p, q))
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append('</g>')

    out.append('<g fill="none" stroke="#036" stroke-width="1.2" stroke-dasharray="4 3">')
    for (i, j), c in centres.items():
        x, y = xy(c)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{r * scale:.3f}"/>')
    out.append('</g>')

    out.append('<g font-family="sans-serif" font-size="13" text-anchor="middle">')
    for name, (p, q) in sides.items():
        mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
        cx, cy = 0.0, (n - 1) * h * 2 / 3
        dx, dy = mx - cx, my - cy
        d = math.hypot(dx, dy) or 1.0
        x, y = xy((mx + 0.35 * dx / d, my + 0.35 * dy / d))
        out.append(f'<text x="{x:.3f}" y="{y + 4:.3f}">{name}</text>')
    corner_cells = {(1, 1): P.labels.get(3)}
    if n > 1:
        corner_cells = {(1, 1): "B1", (n, n): "B2", (n, 1): "B3"}
    for cell, name in corner_cells.items():
        x, y = xy(centres[cell])
        out.append(f'<text x="{x:.3f}" y="{y + 4:.3f}">{name}</text>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
