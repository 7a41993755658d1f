"""Combinatorics and volumes of π/3-equiangular hyperbolic polyhedra.

The main entry points are re-exported here; see the submodules for the
rest.
"""

from .andreev import (
    AndreevReport,
    AngleAssignment,
    check_andreev,
    classify_vertex,
    complete_ideal_tetra_angles,
    equiangular_feasibility,
    find_3circuits,
    find_prismatic_4circuits,
)
from .census import (
    CensusResult,
    canonical_form,
    enumerate_admissible,
    enumerate_cubic_polyhedra,
    enumerate_dual_route,
)
from .errors import PolyhedronError
from .families import generate_pn, generate_prism, named
from .lobachevsky import IdealTetrahedron, ideal_tetra_volume, lob
from .polyhedron import (
    CombinatorialPolyhedron,
    CombinatorialTriangulation,
    build_from_faces,
    dual_triangulation,
    face_census,
)
from .render import render_pn_schematic, render_svg, tutte_layout
from .volumes import (
    PRISM_CONSTANTS,
    cube_decomposition,
    ranking_report,
    tetra_count,
    vol_P1,
    vol_pentagonal_prism,
    vol_Pn,
    vol_Pprime,
)

__version__ = "0.1.0"
