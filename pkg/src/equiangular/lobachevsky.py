"""Lobachevsky's function and volumes of ideal tetrahedra.

    Л(x) = -∫_0^x log|2 sin t| dt = ½ Σ_{r≥1} sin(2 r x) / r²

The function is odd and π-periodic, so every argument is first reduced
into [-π/2, π/2].  On that interval the Clausen-type expansion

    Л(x) = x - x log(2|x|) + x Σ_{k≥1} ζ(2k) (x/π)^{2k} / (k (2k+1))

converges geometrically with ratio at most 1/4, so a fixed table of
``_NTERMS`` coefficients reaches double precision everywhere.  The
logarithmic singularity is carried by the closed-form leading term rather
than by the series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy.special import zeta

from .errors import AngleSumError, PolyhedronError

ANGLE_SUM_TOL = 1e-12

_NTERMS = 30
# c_k = ζ(2k) / (k (2k+1)), highest order first for Horner evaluation
_COEFFS: Tuple[float, ...] = tuple(
    float(zeta(2 * k)) / (k * (2 * k + 1)) for k in range(_NTERMS, 0, -1))

ArrayLike = Union[float, np.ndarray]


def reduce_angle(x: ArrayLike) -> ArrayLike:
    """Reduce modulo π into [-π/2, π/2]."""
    if np.ndim(x) == 0:
        return math.remainder(float(x), math.pi)
    x = np.asarray(x, dtype=float)
    return x - math.pi * np.round(x / math.pi)


def _lob_reduced(r: np.ndarray) -> np.ndarray:
    q = (r / math.pi) ** 2
    acc = np.zeros_like(r)
    for c in _COEFFS:
        acc = (acc + c) * q
    a = np.abs(r)
    with np.errstate(divide="ignore", invalid="ignore"):
        lead = np.where(a > 0, r - r * np.log(2.0 * a), 0.0)
    return lead + r * acc


def lob(x: ArrayLike) -> ArrayLike:
    """Lobachevsky's function, absolute error around 1e-16 for any finite x.

    Accepts a float or an array; returns the same kind.
    """
    if np.ndim(x) == 0:
        xf = float(x)
        if not math.isfinite(xf):
            raise PolyhedronError(f"lob: non-finite argument {x!r}")
        return float(_lob_reduced(np.array([reduce_angle(xf)]))[0])
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise PolyhedronError("lob: non-finite argument")
    return _lob_reduced(reduce_angle(arr))


@dataclass(frozen=True)
class IdealTetrahedron:
    """Ideal tetrahedron with dihedral angles α, β, γ at three concurrent edges.

    Opposite edges carry equal angles, so the triple determines the shape.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for a in self.angles:
            if not 0.0 < a < math.pi:
                raise AngleSumError(f"dihedral angle {a} outside (0, pi)")
        s = sum(self.angles)
        if abs(s - math.pi) > ANGLE_SUM_TOL:
            raise AngleSumError(f"angles sum to {s!r}, not pi")

    @property
    def angles(self) -> Tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def volume(self) -> float:
        return ideal_tetra_volume(self)


def ideal_tetra_volume(t: IdealTetrahedron) -> float:
    """Л(α) + Л(β) + Л(γ)."""
    return lob(t.alpha) + lob(t.beta) + lob(t.gamma)
