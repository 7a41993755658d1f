"""
The Lobachevsky function and ideal tetrahedra
=============================================

Л(x) = -∫_0^x log|2 sin t| dt is odd, π-periodic and peaks at π/6.
An ideal tetrahedron with dihedral angles α, β, γ (α+β+γ = π) has volume
Л(α) + Л(β) + Л(γ).
"""

import math

import numpy as np

from equiangular import IdealTetrahedron, lob

# a few values
for name, x in [("pi/6", math.pi / 6), ("pi/4", math.pi / 4), ("pi/3", math.pi / 3)]:
    print(f"lob({name:5s}) = {lob(x):.15f}")

# it works on arrays too; here is the shape over one period
xs = np.linspace(0, math.pi, 13)
for x, y in zip(xs, lob(xs)):
    bar = "#" * int(round(60 * max(y, 0)))
    print(f"{x:6.3f} {y:+.6f} {bar}")

# the duplication identity Л(2x) = 2Л(x) + 2Л(x + π/2)
x = np.linspace(0.01, 1.5, 7)
print("duplication residual:", np.max(np.abs(lob(2 * x) - 2 * lob(x) - 2 * lob(x + math.pi / 2))))

# the regular ideal tetrahedron is the most voluminous one
regular = IdealTetrahedron(math.pi / 3, math.pi / 3, math.pi / 3)
skew = IdealTetrahedron(math.pi / 2, math.pi / 4, math.pi / 4)
print(f"regular: {regular.volume:.9f}   (pi/2, pi/4, pi/4): {skew.volume:.9f}")
