"""Hyperbolic volumes of the π/3-equiangular polyhedra with known decompositions.

Every P_n splits into n(3n-1)/2 regular ideal tetrahedra, so its volume is
that multiple of vol(P_1) = 3 Л(π/3).  The pentagonal prism splits into four
regular ideal tetrahedra plus a remainder P' made of two pairs of congruent
ideal tetrahedra with angles (π/3, a, b + π/3) and (2π/3, a, b), where

    a = arccos(√10 / 4),    b = arccos(√2 (3 + √5) / 8),    a + b = π/3.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Tuple

from .errors import BadParameterError, NotACubeError
from .lobachevsky import IdealTetrahedron, ideal_tetra_volume, lob
from .polyhedron import CombinatorialPolyhedron

PI3 = math.pi / 3


@dataclass(frozen=True)
class PrismConstants:
    a: float
    b: float

    @classmethod
    def compute(cls) -> "PrismConstants":
        return cls(math.acos(math.sqrt(10) / 4),
                   math.acos(math.sqrt(2) * (3 + math.sqrt(5)) / 8))

    def tetrahedra(self) -> Tuple[IdealTetrahedron, IdealTetrahedron]:
        """The two shapes making up P', each occurring twice."""
        return (IdealTetrahedron(PI3, self.a, self.b + PI3),
                IdealTetrahedron(2 * PI3, self.a, self.b))


PRISM_CONSTANTS = PrismConstants.compute()


@dataclass(frozen=True)
class VolumeResult:
    value: float
    decomposition_note: str

    def __float__(self):
        return self.value


def vol_P1() -> VolumeResult:
    return VolumeResult(3 * lob(PI3), "one regular ideal tetrahedron T(pi/3, pi/3, pi/3)")


def tetra_count(n: int) -> int:
    """Number of regular ideal tetrahedra in the decomposition of P_n."""
    if n < 1:
        raise BadParameterError(f"n must be >= 1, got {n}")
    return n * (3 * n - 1) // 2


def vol_Pn(n: int) -> VolumeResult:
    c = tetra_count(n)
    return VolumeResult(c * vol_P1().value, f"n(3n-1)/2 = {c} copies of P_1")


def vol_Pprime_simplified(consts: PrismConstants = PRISM_CONSTANTS) -> float:
    """4Л(a) + 2Л(b) + 2Л(b + π/3), using Л(2π/3) = -Л(π/3)."""
    a, b = consts.a, consts.b
    return 4 * lob(a) + 2 * lob(b) + 2 * lob(b + PI3)


def vol_Pprime(consts: PrismConstants = PRISM_CONSTANTS) -> VolumeResult:
    t1, t2 = consts.tetrahedra()
    value = 2 * ideal_tetra_volume(t1) + 2 * ideal_tetra_volume(t2)
    if abs(value - vol_Pprime_simplified(consts)) > 1e-12:
        raise ArithmeticError("P' volume disagrees with its simplified form")
    return VolumeResult(value, "2 T(pi/3, a, b+pi/3) + 2 T(2pi/3, a, b)")


def vol_pentagonal_prism() -> VolumeResult:
    return VolumeResult(4 * vol_P1().value + vol_Pprime().value, "4 P_1 + P'")


def ranking_report(max_n: int = 3) -> List[Tuple[str, float]]:
    """Known volumes sorted ascending: P_1 .. P_max_n and the pentagonal prism."""
    if max_n < 3:
        raise BadParameterError("max_n must be >= 3 to place the prism between P_2 and P_3")
    rows = [(f"P_{n}", vol_Pn(n).value) for n in range(1, max_n + 1)]
    rows.append(("pentagonal prism", vol_pentagonal_prism().value))
    rows.sort(key=lambda r: r[1])
    vols = dict(rows)
    if not vols["P_1"] < vols["P_2"] < vols["pentagonal prism"] < vols["P_3"]:
        raise ArithmeticError("volume ordering P_1 < P_2 < prism < P_3 broken")
    return rows


def cube_decomposition(P: CombinatorialPolyhedron) -> List[Tuple[int, ...]]:
    """Five vertex quadruples cutting a combinatorial cube into ideal tetrahedra.

    Picks the lexicographically smallest set S of four pairwise
    non-adjacent vertices.  Each s in S is cut off by the tetrahedron on s
    and its three neighbours; what remains is the tetrahedron on the other
    four vertices.  Returns the four corner quadruples followed by the
    central one, each sorted.
    """
    from .census import canonical_form
    from .families import cube

    if P.vertex_count != 8 or canonical_form(P) != canonical_form(cube()):
        raise NotACubeError("input is not combinatorially a cube")
    nb = P.neighbors
    for S in itertools.combinations(range(8), 4):
        if all(w not in nb[u] for u, w in itertools.combinations(S, 2)):
            break
    corners = [tuple(sorted((s,) + nb[s])) for s in S]
    central = tuple(x for x in range(8) if x not in S)
    return corners + [central]
