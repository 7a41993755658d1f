"""
Census of admissible combinatorial types
========================================

Two independent enumerations: growing simple polyhedra from the
tetrahedron, and filtering triangulations of the sphere (the duals).
"""

import time

from equiangular.census import census

for v in range(4, 13, 2):
    t0 = time.perf_counter()
    primal = census(v, "primal")
    dual = census(v, "dual")
    dt = time.perf_counter() - t0
    agree = primal.forms() == dual.forms()
    print(f"{primal.summary():16s} routes agree: {agree}   ({dt:.2f} s)")
    for e in primal.entries:
        print("    faces by size:", dict(sorted(e.face_census.items())))
