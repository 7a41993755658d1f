"""
Checking Andreev's conditions
=============================

With every dihedral angle π/3 each vertex of a simple polyhedron is ideal
(angle sum π).  Whether the assignment is realizable then hinges on the
circuit conditions.
"""

from equiangular import AngleAssignment, check_andreev, equiangular_feasibility
from equiangular.families import cube, generate_prism

print("cube, all angles pi/3")
print(check_andreev(cube(), AngleAssignment.equiangular(cube(), 3)).table())

print("\ncube, all angles pi/2: the three belts violate (e)")
print(check_andreev(cube(), AngleAssignment.equiangular(cube(), 2)).table())

print("\ntriangular prism, all angles pi/3")
r = check_andreev(generate_prism(3), AngleAssignment.equiangular(generate_prism(3), 3))
print(r.table())
print("special rules:", r.special_rules)

for k in (2, 3, 4, 5):
    v = equiangular_feasibility(generate_prism(5), k)
    print(f"pentagonal prism, pi/{k}: {'feasible' if v.feasible else 'infeasible'} ({'; '.join(v.reasons)})")
