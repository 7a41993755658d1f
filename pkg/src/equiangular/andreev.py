"""Andreev's conditions for non-obtuse hyperbolic polyhedra.

Given a simple combinatorial polyhedron and a dihedral angle on every
edge, :func:`check_andreev` evaluates the five conditions

    (a) angles at a vertex sum to at least π (exactly π: ideal vertex)
    (b) four faces at a vertex meet at right angles
    (c) a 3-circuit has angle sum below π
    (d) a face adjacent to two non-adjacent faces that share an ideal
        vertex off it cannot make right angles with both
    (e) a prismatic 4-circuit is not all right angles

and reports each one with the elements that violate it.  Condition (b)
never applies to 3-valent input.  Tetrahedra and triangular prisms fall
outside the theorem; they are still evaluated but flagged.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    BadParameterError,
    InconsistentAnglesError,
    MissingAngleError,
    ObtuseAngleError,
    PolyhedronError,
    UnderdeterminedError,
)
from .polyhedron import CombinatorialPolyhedron, Edge

ANGLE_TOL = 1e-12

IDEAL = "ideal"
PROPER = "proper"
INFEASIBLE = "infeasible"

SATISFIED = "satisfied"
VIOLATED = "violated"
VACUOUS = "vacuous"


class AngleAssignment:
    """Dihedral angle (radians) on every edge of one polyhedron."""

    def __init__(self, P: CombinatorialPolyhedron, angles: Mapping[Edge, float]):
        self.polyhedron = P
        clean: Dict[Edge, float] = {}
        for (u, w), a in angles.items():
            clean[(min(u, w), max(u, w))] = float(a)
        for e in P.edges:
            if e not in clean:
                raise MissingAngleError(f"edge {e} has no dihedral angle")
        extra = set(clean) - set(P.edges)
        if extra:
            raise PolyhedronError(f"angles given for non-edges {sorted(extra)}")
        for e, a in clean.items():
            if not a > 0:
                raise PolyhedronError(f"edge {e}: angle {a} is not positive")
            if a > math.pi / 2 + ANGLE_TOL:
                raise ObtuseAngleError(f"edge {e}: angle {a} exceeds pi/2")
        self._angles = clean

    @classmethod
    def uniform(cls, P: CombinatorialPolyhedron, angle: float) -> "AngleAssignment":
        return cls(P, {e: angle for e in P.edges})

    @classmethod
    def equiangular(cls, P: CombinatorialPolyhedron, k: int) -> "AngleAssignment":
        """All angles π/k."""
        return cls.uniform(P, math.pi / k)

    def __getitem__(self, edge: Edge) -> float:
        u, w = edge
        return self._angles[(min(u, w), max(u, w))]

    def between(self, i: int, j: int) -> float:
        """Angle between adjacent faces ``i`` and ``j``."""
        try:
            return self[self.polyhedron.face_pair_edge[(min(i, j), max(i, j))]]
        except KeyError:
            raise PolyhedronError(f"faces {i} and {j} are not adjacent") from None

    def vertex_sum(self, u: int) -> float:
        return sum(self[(u, w)] for w in self.polyhedron.neighbors[u])

    def is_uniform(self, angle: float) -> bool:
        return all(abs(a - angle) <= ANGLE_TOL for a in self._angles.values())

    def items(self):
        return self._angles.items()


@dataclass
class ConditionResult:
    status: str
    witnesses: List[tuple] = field(default_factory=list)
    checked: int = 0

    def to_dict(self) -> dict:
        return {"status": self.status, "checked": self.checked,
                "witnesses": [list(w) for w in self.witnesses]}


@dataclass
class AndreevReport:
    conditions: Dict[str, ConditionResult]
    vertex_classes: List[str]
    in_theorem_scope: bool
    special_rules: Dict[str, str] = field(default_factory=dict)

    @property
    def violated(self) -> List[str]:
        return [k for k, c in self.conditions.items() if c.status == VIOLATED]

    @property
    def impossible_by_special_rule(self) -> bool:
        return any(v == "impossible" for v in self.special_rules.values())

    @property
    def ok(self) -> bool:
        """True when nothing rules the angle assignment out."""
        return not self.violated and not self.impossible_by_special_rule

    @property
    def verdict(self) -> str:
        if not self.in_theorem_scope:
            return "outside theorem scope"
        return "admissible" if self.ok else "violated"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "in_theorem_scope": self.in_theorem_scope,
            "conditions": {k: c.to_dict() for k, c in self.conditions.items()},
            "vertex_classes": list(self.vertex_classes),
            "special_rules": dict(self.special_rules),
        }

    def table(self) -> str:
        lines = ["condition  status      checked  witnesses"]
        for k, c in self.conditions.items():
            wit = "; ".join(" ".join(map(str, w)) for w in c.witnesses[:6])
            if len(c.witnesses) > 6:
                wit += f"; ... ({len(c.witnesses)} total)"
            lines.append(f"({k})        {c.status:<10}  {c.checked:>7}  {wit}")
        n_ideal = self.vertex_classes.count(IDEAL)
        lines.append(f"vertices: {n_ideal} ideal, {self.vertex_classes.count(PROPER)} proper, "
                     f"{self.vertex_classes.count(INFEASIBLE)} infeasible")
        for name, res in self.special_rules.items():
            lines.append(f"special rule {name}: {res}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def classify_vertex(angle_sum: float) -> str:
    """ideal when the angle sum is π (to 1e-12), proper above, infeasible below."""
    if abs(angle_sum - math.pi) <= ANGLE_TOL:
        return IDEAL
    return PROPER if angle_sum > math.pi else INFEASIBLE


def _canon_cycle(c: Sequence[int]) -> Tuple[int, ...]:
    k = len(c)
    reps = []
    for seq in (list(c), list(reversed(c))):
        for i in range(k):
            reps.append(tuple(seq[i:] + seq[:i]))
    return min(reps)


def find_3circuits(P: CombinatorialPolyhedron) -> List[Tuple[int, int, int]]:
    """Face triples that are pairwise adjacent but have no vertex in common."""
    adj = P.face_adjacency
    sets = P.face_vertex_sets
    out = []
    for i in range(P.face_count):
        for j in adj[i]:
            if j <= i:
                continue
            for k in adj[i] & adj[j]:
                if k > j and not (sets[i] & sets[j] & sets[k]):
                    out.append((i, j, k))
    return sorted(out)


def find_prismatic_4circuits(P: CombinatorialPolyhedron) -> List[Tuple[int, int, int, int]]:
    """Chordless 4-cycles of faces with no vertex common to all four.

    Each circuit is returned once, as its lexicographically smallest
    rotation or reflection.
    """
    adj = P.face_adjacency
    sets = P.face_vertex_sets
    found = set()
    for f1 in range(P.face_count):
        for f2 in adj[f1]:
            for f3 in adj[f2]:
                if f3 == f1 or f3 in adj[f1]:
                    continue
                for f4 in adj[f3] & adj[f1]:
                    if f4 == f2 or f4 in adj[f2]:
                        continue
                    if sets[f1] & sets[f2] & sets[f3] & sets[f4]:
                        continue
                    found.add(_canon_cycle((f1, f2, f3, f4)))
    return sorted(found)


def is_tetrahedron(P: CombinatorialPolyhedron) -> bool:
    return P.vertex_count == 4


def is_triangular_prism(P: CombinatorialPolyhedron) -> bool:
    # the only simple polyhedron on six vertices
    return P.vertex_count == 6 and P.face_census() == {3: 2, 4: 3}


def check_andreev(P: CombinatorialPolyhedron, angles: AngleAssignment) -> AndreevReport:
    if angles.polyhedron is not P and angles.polyhedron != P:
        raise PolyhedronError("angle assignment belongs to a different polyhedron")
    right = math.pi / 2
    is_right = lambda a: abs(a - right) <= ANGLE_TOL  # noqa: E731

    classes = [classify_vertex(angles.vertex_sum(u)) for u in range(P.vertex_count)]
    cond_a = ConditionResult(SATISFIED, checked=P.vertex_count)
    cond_a.witnesses = [(u,) for u, c in enumerate(classes) if c == INFEASIBLE]

    # every vertex of the model is 3-valent
    cond_b = ConditionResult(VACUOUS)

    circuits3 = find_3circuits(P)
    cond_c = ConditionResult(SATISFIED, checked=len(circuits3))
    for i, j, k in circuits3:
        s = angles.between(i, j) + angles.between(j, k) + angles.between(i, k)
        if s >= math.pi - ANGLE_TOL:
            cond_c.witnesses.append((i, j, k))

    ideal = {u for u, c in enumerate(classes) if c == IDEAL}
    adj = P.face_adjacency
    sets = P.face_vertex_sets
    cond_d = ConditionResult(SATISFIED)
    for i in range(P.face_count):
        for j, k in itertools.combinations(sorted(adj[i]), 2):
            if k in adj[j]:
                continue
            if not ((sets[j] & sets[k] & ideal) - sets[i]):
                continue
            cond_d.checked += 1
            if is_right(angles.between(i, j)) and is_right(angles.between(i, k)):
                cond_d.witnesses.append((i, j, k))

    circuits4 = find_prismatic_4circuits(P)
    cond_e = ConditionResult(SATISFIED, checked=len(circuits4))
    for c in circuits4:
        if all(is_right(angles.between(c[t], c[(t + 1) % 4])) for t in range(4)):
            cond_e.witnesses.append(c)

    conditions = {"a": cond_a, "b": cond_b, "c": cond_c, "d": cond_d, "e": cond_e}
    for cond in conditions.values():
        if cond.witnesses:
            cond.status = VIOLATED

    special: Dict[str, str] = {}
    if is_triangular_prism(P) and angles.is_uniform(math.pi / 3):
        special["triangular-prism-pi/3"] = "impossible"

    scope = not (is_tetrahedron(P) or is_triangular_prism(P))
    return AndreevReport(conditions, classes, scope, special)


@dataclass
class FeasibilityVerdict:
    k: int
    feasible: bool
    reasons: List[str]
    report: Optional[AndreevReport] = None

    def to_dict(self) -> dict:
        d = {"k": self.k, "feasible": self.feasible, "reasons": list(self.reasons)}
        if self.report is not None:
            d["report"] = self.report.to_dict()
        return d


def equiangular_feasibility(P: CombinatorialPolyhedron, k: int) -> FeasibilityVerdict:
    """Can ``P`` carry all dihedral angles π/k?

    Only k = 2 and k = 3 can survive: three angles π/k at a vertex need to
    sum to at least π.  For k = 3 every vertex comes out ideal, for k = 2
    every vertex is proper.
    """
    if k < 2:
        raise BadParameterError(f"k must be >= 2, got {k}")
    if k > 4:
        return FeasibilityVerdict(k, False, ["k > 4: no pi/k-equiangular polyhedron exists"])
    if k == 4:
        return FeasibilityVerdict(
            k, False, ["vertex angle sum 3*pi/4 < pi violates condition (a)"])

    report = check_andreev(P, AngleAssignment.equiangular(P, k))
    reasons = []
    expected = IDEAL if k == 3 else PROPER
    if all(c == expected for c in report.vertex_classes):
        reasons.append(f"all {P.vertex_count} vertices {expected}")
    for name in report.violated:
        reasons.append(f"condition ({name}) violated")
    if report.impossible_by_special_rule:
        reasons.append("no pi/3-equiangular triangular prism exists")
    if not report.in_theorem_scope:
        reasons.append("outside theorem scope (tetrahedron or triangular prism)")
    return FeasibilityVerdict(k, report.ok, reasons, report)


# ---------------------------------------------------------------------------
# ideal tetrahedra
# ---------------------------------------------------------------------------

TETRA_EDGES: Tuple[Edge, ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def complete_ideal_tetra_angles(partial: Mapping[Edge, Optional[float]]) -> Dict[Edge, float]:
    """Fill in the dihedral angles of an ideal tetrahedron.

    ``partial`` maps edges ``(i, j)`` of the tetrahedron on vertices 0..3 to
    an angle or ``None``.  The angles at each vertex must sum to π; the
    completion is returned when that linear system pins down every missing
    angle.  Raises :class:`UnderdeterminedError` when some angle stays free
    and :class:`InconsistentAnglesError` when no completion exists or it
    would need an angle outside (0, π).
    """
    known: Dict[Edge, float] = {}
    for (i, j), a in partial.items():
        e = (min(i, j), max(i, j))
        if e not in TETRA_EDGES:
            raise PolyhedronError(f"{(i, j)} is not an edge of the tetrahedron")
        if a is not None:
            if not 0 < a < math.pi:
                raise InconsistentAnglesError(f"angle {a} on {e} outside (0, pi)")
            known[e] = float(a)

    unknown = [e for e in TETRA_EDGES if e not in known]
    # one row per vertex: the three incident angles sum to pi
    A = np.array([[1.0 if v in e else 0.0 for e in unknown] for v in range(4)])
    rhs = np.array([math.pi - sum(a for e, a in known.items() if v in e) for v in range(4)])

    if unknown and np.linalg.matrix_rank(A) < len(unknown):
        raise UnderdeterminedError(
            f"angles on {unknown} are not determined by the given values")
    x = np.linalg.lstsq(A, rhs, rcond=None)[0] if unknown else np.zeros(0)
    if np.max(np.abs(A @ x - rhs)) > 1e-12:
        raise InconsistentAnglesError(
            "no completion: vertex angle sums cannot all equal pi")

    full = dict(known)
    full.update({e: float(v) for e, v in zip(unknown, x)})
    for e, a in full.items():
        if not 0 < a < math.pi:
            raise InconsistentAnglesError(f"completion needs angle {a} on {e}")
    return {e: full[e] for e in TETRA_EDGES}
