import math

import numpy as np
import pytest

from polarcalc.geometry import (EuclideanBall, LpSumBody, Polytope, negate,
                                lp_sum, polar, random_polytope, scale)
from polarcalc.volume import (DimensionTooLarge, VolumeEstimate, gamma_ratio,
                              shoelace_area, unit_ball_volume, volume,
                              volume_exact, volume_mc, volume_polar_gamma,
                              volume_radial)

SQUARE = Polytope([[1, 1], [1, -1], [-1, 1], [-1, -1]])
SIMPLEX = Polytope([[0, 0], [1, 0], [0, 1]])

# the difference body of the standard simplex, ordered counter-clockwise
HEXAGON = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


def test_estimate_validation():
    with pytest.raises(ValueError):
        VolumeEstimate(-1.0, 0.0, "exact")
    with pytest.raises(ValueError):
        VolumeEstimate(1.0, 0.5, "exact")


def test_estimate_json():
    est = VolumeEstimate(1.5, 0.1, "mc", 1000)
    assert est.to_json() == {"value": 1.5, "stderr": 0.1, "method": "mc",
                             "samples": 1000}


def test_exact_square():
    assert volume_exact(SQUARE).value == pytest.approx(4.0)


def test_exact_simplex():
    assert volume_exact(SIMPLEX).value == pytest.approx(0.5)


def test_exact_hexagon_matches_shoelace():
    # shoelace over the ordered loop is the independent oracle: area 3
    assert shoelace_area(HEXAGON) == pytest.approx(3.0)
    hexagon = Polytope(HEXAGON)
    assert volume_exact(hexagon).value == pytest.approx(3.0, rel=1e-12)


def test_exact_cube_3d():
    cube = Polytope([[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
    assert volume_exact(cube).value == pytest.approx(8.0)


def test_exact_matches_qhull_volume():
    # scipy's qhull facet-based volume as a second route
    for seed in range(5):
        P = random_polytope(3, 12, seed)
        assert volume_exact(P).value == pytest.approx(P.hull().volume, rel=1e-10)


def test_exact_rejects_dim4():
    cube4 = Polytope([[a, b, c, d] for a in (-1, 1) for b in (-1, 1)
                      for c in (-1, 1) for d in (-1, 1)])
    with pytest.raises(DimensionTooLarge):
        volume_exact(cube4)


def test_exact_scaling():
    P = random_polytope(2, 8, 11)
    v = volume_exact(P).value
    assert volume_exact(scale(P, 2.5)).value == pytest.approx(2.5 ** 2 * v, rel=1e-12)


def test_exact_ball():
    assert volume_exact(EuclideanBall(1.0, 2)).value == pytest.approx(math.pi)
    assert volume_exact(EuclideanBall(2.0, 3)).value == pytest.approx(
        4.0 / 3.0 * math.pi * 8.0)


def test_mc_square_all_hits():
    est = volume_mc(SQUARE, 10_000, seed=0)
    assert est.value == 4.0
    assert est.stderr == 0.0


def test_mc_ball_three_sigma():
    est = volume_mc(EuclideanBall(1.0, 2), 1_000_000, seed=1)
    assert abs(est.value - math.pi) <= 3 * est.stderr


def test_mc_cross_polytope_3d():
    cross = Polytope(np.vstack([np.eye(3), -np.eye(3)]))
    est = volume_mc(cross, 1_000_000, seed=2)
    assert abs(est.value - 8.0 / 6.0) <= 3 * est.stderr


@pytest.mark.parametrize("seed", range(20))
def test_mc_agrees_with_exact(seed):
    P = random_polytope(2, 8, seed)
    est = volume_mc(P, 40_000, seed=seed + 1000)
    exact = volume_exact(P).value
    assert abs(est.value - exact) <= 3 * max(est.stderr, 1e-12)


def test_gamma_route_gaussian_identity():
    # for K = B_2^2 and p = 2 the integrand is constant, so the route
    # reproduces Gamma(2) |B_2^2| = pi with zero variance
    est = volume_polar_gamma(EuclideanBall(1.0, 2), 2.0, 10_000, seed=3)
    assert est.value == pytest.approx(math.pi, rel=1e-12)
    assert est.stderr <= 1e-12


def test_gamma_route_square():
    # |([-1,1]^2)^polar| = |B_1^2| = 2
    est = volume_polar_gamma(SQUARE, 1.0, 200_000, seed=4)
    assert abs(est.value - 2.0) <= 3 * est.stderr
    assert abs(est.value - 2.0) / 2.0 < 0.02


def test_gamma_route_scaling():
    lam = 1.7
    est = volume_polar_gamma(EuclideanBall(lam, 3), 2.0, 5_000, seed=5)
    assert est.value == pytest.approx(lam ** -3 * unit_ball_volume(3), rel=1e-10)


@pytest.mark.parametrize("seed", range(10))
def test_gamma_route_agrees_with_exact_polar(seed):
    K = random_polytope(2, 8, seed + 50, ensure_origin_interior=True)
    est = volume_polar_gamma(K, 1.0, 60_000, seed=seed)
    exact = volume_exact(polar(K)).value
    assert abs(est.value - exact) <= 3 * max(est.stderr, 1e-12)


def test_gamma_route_independent_of_p():
    K = random_polytope(2, 8, 60, ensure_origin_interior=True)
    vals = [volume_polar_gamma(K, p, 20_000, seed=6).value for p in (1.0, 2.0, 3.5)]
    assert vals[0] == pytest.approx(vals[1], rel=1e-9)
    assert vals[0] == pytest.approx(vals[2], rel=1e-9)


def test_radial_volume_of_polytope():
    K = random_polytope(2, 8, 61, ensure_origin_interior=True)
    est = volume_radial(K, 60_000, seed=7)
    assert abs(est.value - volume_exact(K).value) <= 3 * est.stderr


def test_radial_volume_of_lp_sum_body():
    # |K +_2 K| = |2^(1/2) K| = 2 |K| in the plane
    K = random_polytope(2, 8, 62, ensure_origin_interior=True)
    S = LpSumBody(K, K, 2.0)
    est = volume(S, 60_000, seed=8)
    expected = 2.0 * volume_exact(K).value
    assert abs(est.value - expected) <= 3 * est.stderr + 1e-3 * expected


def test_volume_dispatcher_routes():
    assert volume(SQUARE).method == "exact"
    assert volume(EuclideanBall(1.0, 2)).method == "exact"
    S = lp_sum(SQUARE, EuclideanBall(1.0, 2), 2.0)
    assert volume(S, 20_000, seed=9).method == "gamma"
    cube4 = Polytope([[a, b, c, d] for a in (-1, 1) for b in (-1, 1)
                      for c in (-1, 1) for d in (-1, 1)])
    est = volume(cube4, 50_000, seed=10)
    assert est.method in ("mc", "gamma")
    assert abs(est.value - 16.0) <= 4 * est.stderr + 0.05 * 16.0


def test_polar_volume_of_difference_body_firey_equality():
    # symmetric K: (K-K)^polar = (2K)^polar, volume 2^-n |K^polar|
    diff = lp_sum(SQUARE, negate(SQUARE), 1)
    lhs = volume_exact(polar(diff)).value
    rhs = 0.25 * volume_exact(polar(SQUARE)).value
    assert lhs == pytest.approx(rhs, rel=1e-12)


# --------------------------------------------------------------------------
# gamma_ratio


def test_gamma_ratio_p1_binomial():
    for n in range(1, 11):
        assert abs(gamma_ratio(n, 1) * math.comb(2 * n, n) - 1.0) <= 1e-12


def test_gamma_ratio_n2_p1_value():
    assert gamma_ratio(2, 1) == pytest.approx(1.0 / 6.0, abs=1e-15)


def test_gamma_ratio_half_integer():
    # Gamma(3/2)^2 / Gamma(2) = pi/4
    assert gamma_ratio(1, 2) == pytest.approx(math.pi / 4.0, rel=1e-12)


def test_gamma_ratio_infinity():
    for n in (1, 2, 3, 7):
        assert gamma_ratio(n, math.inf) == 1.0


def test_gamma_ratio_monotone_in_p():
    ps = [1.0, 1.5, 2.0, 4.0, 8.0, 32.0]
    vals = [gamma_ratio(2, p) for p in ps]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1.0


def test_gamma_ratio_rejects_bad_input():
    with pytest.raises(ValueError):
        gamma_ratio(0, 1)
    with pytest.raises(ValueError):
        gamma_ratio(2, 0.5)
