import math

import pytest

from equiangular import errors
from equiangular.families import cube, generate_pn, generate_prism, tetrahedron
from equiangular.lobachevsky import IdealTetrahedron, ideal_tetra_volume, lob
from equiangular.volumes import (
    PRISM_CONSTANTS,
    cube_decomposition,
    ranking_report,
    tetra_count,
    vol_P1,
    vol_Pn,
    vol_Pprime,
    vol_Pprime_simplified,
    vol_pentagonal_prism,
)

# 3 Л(π/3) via 40-digit quadrature (tests/oracles.py)
P1_ORACLE = 1.01494160640965362502
P3_ORACLE = 12.1792992769158435
P5_ORACLE = 35.5229562243378769


def test_p1():
    v = vol_P1().value
    assert abs(v - 1.014941) <= 1e-5
    assert abs(v - P1_ORACLE) <= 1e-14
    assert v == pytest.approx(ideal_tetra_volume(IdealTetrahedron(*[math.pi / 3] * 3)), abs=1e-15)
    assert abs(v - 2 * lob(math.pi / 6)) <= 1e-12


def test_p2_reference_value():
    v = vol_Pn(2).value
    assert abs(v - 5.074705) <= 1e-5
    assert abs(v - 5 * vol_P1().value) <= 1e-12 * v


def test_p3_p5_oracle():
    assert abs(vol_Pn(3).value - P3_ORACLE) <= 1e-12
    assert abs(vol_Pn(5).value - P5_ORACLE) <= 1e-12
    assert abs(vol_Pn(3).value - 12.179299) <= 1e-5


@pytest.mark.parametrize("n, c", [(1, 1), (2, 5), (3, 12), (4, 22), (5, 35)])
def test_tetra_count_known(n, c):
    assert tetra_count(n) == c


@pytest.mark.parametrize("n", range(1, 101))
def test_tetra_count_steps(n):
    assert tetra_count(n + 1) - tetra_count(n) == 3 * n + 1


@pytest.mark.parametrize("n", range(1, 31))
def test_ratio_exact(n):
    assert vol_Pn(n).value / vol_P1().value == pytest.approx(tetra_count(n), rel=1e-12)


def test_bad_n():
    with pytest.raises(errors.BadParameterError):
        tetra_count(0)
    with pytest.raises(errors.BadParameterError):
        vol_Pn(-1)


def test_prism_constants():
    a, b = PRISM_CONSTANTS.a, PRISM_CONSTANTS.b
    assert math.cos(a) == math.sqrt(10) / 4
    assert abs(math.cos(b) - math.sqrt(2) * (3 + math.sqrt(5)) / 8) <= 1e-15
    assert abs(math.cos(a + b) - 0.5) <= 1e-12
    for t in PRISM_CONSTANTS.tetrahedra():
        assert abs(sum(t.angles) - math.pi) <= 1e-12


def test_pprime_forms_agree():
    assert abs(vol_Pprime().value - vol_Pprime_simplified()) <= 1e-12


def test_pprime_value():
    # independent evaluation: 40-digit quadrature of the same closed form
    assert abs(vol_Pprime().value - 3.1386138945) <= 1e-9


def test_pentagonal_prism():
    v = vol_pentagonal_prism().value
    assert abs(v - 7.198378) <= 1e-5
    assert v > vol_Pn(2).value
    assert abs(v - (4 * vol_P1().value + vol_Pprime().value)) <= 1e-12
    # additivity with the 6-decimal P_1 value and the recomputed P' value
    assert abs(v - (4 * 1.014941 + 3.138614)) <= 2e-5


def test_ranking():
    rows = ranking_report()
    names = [r[0] for r in rows]
    assert names == ["P_1", "P_2", "pentagonal prism", "P_3"]
    assert abs(rows[0][1] - 1.014941) <= 1e-5
    assert abs(rows[1][1] - 5.074705) <= 1e-5
    assert rows[2][1] < rows[3][1]
    with pytest.raises(errors.BadParameterError):
        ranking_report(2)


def _check_decomposition(P, quads):
    assert len(quads) == 5 and all(len(q) == 4 for q in quads)
    nb = P.neighbors
    central = quads[-1]
    assert all(w not in nb[u] for i, u in enumerate(central) for w in central[i + 1:])
    cut = set(range(8)) - set(central)
    assert all(w not in nb[u] for u in cut for w in cut)
    # every corner quadruple is a cut vertex with its neighbours
    for q in quads[:4]:
        (s,) = set(q) & cut
        assert set(q) == {s, *nb[s]}
    for u in range(8):
        hits = sum(u in q for q in quads[:4])
        assert hits == (1 if u in cut else 3)


@pytest.mark.parametrize("P", [cube(), generate_pn(2), generate_prism(4)],
                         ids=["cube", "P2", "prism4"])
def test_cube_decomposition(P):
    _check_decomposition(P, cube_decomposition(P))


def test_cube_decomposition_relabelled():
    P = cube().relabel([3, 7, 0, 5, 1, 6, 2, 4])
    _check_decomposition(P, cube_decomposition(P))


def test_not_a_cube():
    with pytest.raises(errors.NotACubeError):
        cube_decomposition(tetrahedron())
    with pytest.raises(errors.NotACubeError):
        cube_decomposition(generate_pn(3))
