"""Rips and Cech filtrations, circumradii, minimal enclosing balls."""

import itertools
import math

import numpy as np
import pytest

from enthom.errors import DegenerateSimplex
from enthom.filtration import (cech_filtration, cm_circumradius,
                               embed_distances, min_enclosing_ball_radius,
                               rips_filtration)
from enthom.semimetric import DistanceMatrix, distance_matrix
from enthom.statevec import named_state
from conftest import random_distance_matrix


def dm_from(matrix, which="d", kind="negativity"):
    m = np.asarray(matrix, dtype=float)
    return DistanceMatrix(n=m.shape[0], which=which, kind=kind, entries=m)


def births(fc):
    return {s.vertices: s.birth for s in fc.simplices}


def test_rips_w3_triangle_fills_at_merge():
    dm = distance_matrix(named_state("w3"), "d", "concurrence")
    b = births(rips_filtration(dm))
    assert b[(0,)] == b[(1,)] == b[(2,)] == 0.0
    for e in [(0, 1), (0, 2), (1, 2)]:
        assert b[e] == pytest.approx(1.5, abs=1e-9)
    assert b[(0, 1, 2)] == pytest.approx(1.5, abs=1e-9)


def test_rips_ghz3_only_vertices():
    dm = distance_matrix(named_state("ghz3"), "d", "negativity")
    fc = rips_filtration(dm)
    assert [s.vertices for s in fc.simplices] == [(0,), (1,), (2,)]


def test_rips_infinite_edge_blocks_triangle():
    dm = dm_from([[0, 1, math.inf], [1, 0, 2], [math.inf, 2, 0]])
    b = births(rips_filtration(dm))
    assert b[(0, 1)] == 1 and b[(1, 2)] == 2
    assert (0, 2) not in b and (0, 1, 2) not in b


def test_cech_equilateral_triangle_circumdiameter():
    s = 1.5
    dm = dm_from([[0, s, s], [s, 0, s], [s, s, 0]])
    b = births(cech_filtration(dm))
    assert b[(0, 1, 2)] == pytest.approx(2 * s / math.sqrt(3), abs=1e-9)


def test_cech_obtuse_triangle_capped_by_longest_side():
    # sides 3, 4, 6: the ball centered at the midpoint of the longest edge
    # already covers the third point, so the triangle is born with its edge
    dm = dm_from([[0, 3, 6], [3, 0, 4], [6, 4, 0]])
    b = births(cech_filtration(dm))
    assert b[(0, 1, 2)] == pytest.approx(6.0, abs=1e-9)
    # miniball oracle on explicitly embedded coordinates
    coords, ok = embed_distances(np.array([[0, 3, 6], [3, 0, 4], [6, 4, 0.0]]))
    assert ok
    assert 2 * min_enclosing_ball_radius(coords) == pytest.approx(6.0, abs=1e-9)


def test_cech_edges_equal_rips_edges():
    for name in ("w3", "Dpp", "E", "w4"):
        dm = distance_matrix(named_state(name), "d", "negativity")
        br = births(rips_filtration(dm))
        bc = births(cech_filtration(dm))
        for vs, v in br.items():
            if len(vs) == 2:
                assert bc[vs] == v


def test_rips_birth_never_exceeds_cech_birth(rng):
    for _ in range(20):
        n = int(rng.integers(3, 7))
        dm = dm_from(random_distance_matrix(n, rng))
        br = births(rips_filtration(dm))
        bc = births(cech_filtration(dm))
        assert set(br) == set(bc)
        for vs, v in br.items():
            assert bc[vs] >= v - 1e-12


def test_face_monotonicity_both_kinds(rng):
    for _ in range(20):
        n = int(rng.integers(3, 7))
        dm = dm_from(random_distance_matrix(n, rng))
        for build in (rips_filtration, cech_filtration):
            b = births(build(dm))
            for vs, v in b.items():
                for f in itertools.combinations(vs, len(vs) - 1):
                    if f:
                        assert b[f] <= v + 1e-12


def test_jung_bound_for_triangles(rng):
    # points in the plane ensure the triangle inequality holds
    for _ in range(50):
        pts = rng.uniform(0, 10, size=(3, 2))
        d = np.linalg.norm(pts[:, None] - pts[None, :], axis=-1)
        dm = dm_from(d)
        br = births(rips_filtration(dm))
        bc = births(cech_filtration(dm))
        tri = (0, 1, 2)
        assert bc[tri] <= (2 / math.sqrt(3)) * br[tri] + 1e-9


def test_filtration_order_and_determinism():
    dm = distance_matrix(named_state("Dpp"), "d", "negativity")
    a = cech_filtration(dm)
    b = cech_filtration(dm)
    assert a.simplices == b.simplices
    keys = [(s.birth, s.dim, s.vertices) for s in a.simplices]
    assert keys == sorted(keys)


def test_max_dim_validation_and_default():
    dm = distance_matrix(named_state("w4"), "d", "negativity")
    assert rips_filtration(dm).max_dim == 3
    assert max(s.dim for s in rips_filtration(dm, 2).simplices) <= 2
    with pytest.raises(ValueError):
        rips_filtration(dm, 4)


def test_embedding_failure_falls_back_to_rips():
    # 1, 1, 3 violates the triangle inequality: not embeddable
    dm = dm_from([[0, 1, 3], [1, 0, 1], [3, 1, 0]])
    fc = cech_filtration(dm)
    assert (0, 1, 2) in fc.flagged
    assert births(fc)[(0, 1, 2)] == pytest.approx(3.0)


def test_cm_circumradius_closed_forms():
    eq = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0.0]])
    assert cm_circumradius(eq) == pytest.approx(1 / math.sqrt(3), abs=1e-12)
    right = np.array([[0, 3, 4], [3, 0, 5], [4, 5, 0.0]])
    assert cm_circumradius(right) == pytest.approx(2.5, abs=1e-12)
    tetra = np.ones((4, 4)) - np.eye(4)
    assert cm_circumradius(tetra) == pytest.approx(math.sqrt(3 / 8), abs=1e-12)


def test_cm_circumradius_matches_embedding_oracle(rng):
    for _ in range(20):
        pts = rng.uniform(0, 5, size=(4, 3))
        d = np.linalg.norm(pts[:, None] - pts[None, :], axis=-1)
        # circumcenter: equidistant point in the affine hull of all 4
        a = pts[1:] - pts[0]
        center = pts[0] + np.linalg.solve(a @ a.T, 0.5 * np.sum(a * a, axis=1)) @ a
        oracle = np.linalg.norm(pts[0] - center)
        assert cm_circumradius(d) == pytest.approx(oracle, rel=1e-8)


def test_cm_circumradius_degenerate():
    collinear = np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0.0]])
    with pytest.raises(DegenerateSimplex):
        cm_circumradius(collinear)
    with pytest.raises(ValueError):
        cm_circumradius(np.zeros((6, 6)))


def test_min_enclosing_ball_basics():
    two = np.array([[0.0, 0.0], [2.0, 0.0]])
    assert min_enclosing_ball_radius(two) == pytest.approx(1.0)
    square = np.array([[0, 0], [1, 0], [0, 1], [1, 1.0]])
    assert min_enclosing_ball_radius(square) == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    dup = np.zeros((3, 2))
    assert min_enclosing_ball_radius(dup) == pytest.approx(0.0)


def test_complex_json_dump_has_no_inf():
    dm = distance_matrix(named_state("psi_c3"), "d", "negativity")
    doc = rips_filtration(dm).to_json()
    assert all(math.isfinite(row["birth"]) for row in doc)
    assert {tuple(r["vertices"]) for r in doc} == {(0,), (1,), (2,), (0, 1), (1, 2)}
