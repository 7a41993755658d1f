"""
Drawings
========

Writes Tutte layouts of P_1..P_4 and schematics of P_1..P_5 as SVG files
into the current directory.
"""

from equiangular import generate_pn
from equiangular.render import (
    barycentric_residual,
    edge_crossings,
    render_pn_schematic,
    render_svg,
    tutte_layout,
)

for n in range(1, 5):
    P = generate_pn(n)
    lay = tutte_layout(P)
    print(f"P_{n}: outer face {P.label(lay.outer_face)}, residual "
          f"{barycentric_residual(P, lay):.1e}, crossings {len(edge_crossings(P, lay))}")
    with open(f"P{n}_tutte.svg", "w") as fh:
        fh.write(render_svg(P, lay))

for n in range(1, 6):
    with open(f"P{n}_schematic.svg", "w") as fh:
        fh.write(render_pn_schematic(n))
print("wrote P*_tutte.svg and P*_schematic.svg")
