"""
The family P_n
==============

P_n is built from a triangle of three lines A1, A2, A3 and a triangular
grid of n(n+1)/2 cells.  P_1 is the tetrahedron and P_2 the cube.
"""

from equiangular import face_census, generate_pn
from equiangular.census import canonical_form
from equiangular.families import cube

for n in range(1, 8):
    P = generate_pn(n)
    print(f"n={n}: v={P.vertex_count:3d} e={P.edge_count:3d} f={P.face_count:3d} "
          f"faces by size {dict(sorted(face_census(P).items()))}")

print("P_2 is a cube:", canonical_form(generate_pn(2)) == canonical_form(cube()))

# faces keep their roles as labels
P = generate_pn(4)
for lab in ("A1", "A2", "A3", "B1", "B2", "B3"):
    i = P.face_index(lab)
    print(f"{lab}: {len(P.faces[i])}-gon {P.faces[i]}")

# JSON round trip
again = type(P).from_json(P.to_json())
print("round trip equal:", again == P)
