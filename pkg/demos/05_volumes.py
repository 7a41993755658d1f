"""
Volumes
=======

vol(P_n) counts regular ideal tetrahedra; the pentagonal prism adds four
of them to a remainder P' made of two pairs of congruent ideal tetrahedra.
"""

from equiangular.families import cube
from equiangular.volumes import (
    PRISM_CONSTANTS,
    cube_decomposition,
    ranking_report,
    tetra_count,
    vol_Pn,
    vol_Pprime,
    vol_pentagonal_prism,
)

for n in range(1, 6):
    print(f"P_{n}: {tetra_count(n):3d} tetrahedra, volume {vol_Pn(n).value:.6f}")

print(f"\na = {PRISM_CONSTANTS.a:.12f}, b = {PRISM_CONSTANTS.b:.12f}")
for t in PRISM_CONSTANTS.tetrahedra():
    print("  tetrahedron angles", [round(x, 9) for x in t.angles], f"volume {t.volume:.9f}")
print(f"vol(P') = {vol_Pprime().value:.10f}")
print(f"vol(pentagonal prism) = {vol_pentagonal_prism().value:.10f}")

print("\nranking")
for name, vol in ranking_report():
    print(f"  {name:18s} {vol:.6f}")

print("\nthe cube as five ideal tetrahedra (vertex quadruples):")
for q in cube_decomposition(cube()):
    print("  ", q)
