import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarcalc import geometry as geo
from polarcalc.geometry import (BadExponent, DegenerateInstance, EuclideanBall,
                                LpSumBody, OriginNotInterior, Polytope,
                                barycenter, center, convex_hull_of, gauge,
                                intersect_polytopes, lp_intersection, lp_sum,
                                lp_intersection_support_direct, minkowski_sum,
                                negate, polar, random_polytope, scale, support,
                                translate)

SQUARE = Polytope([[1, 1], [1, -1], [-1, 1], [-1, -1]])
SIMPLEX = Polytope([[0, 0], [1, 0], [0, 1]])
CROSS = Polytope([[1, 0], [-1, 0], [0, 1], [0, -1]])


def sphere_points(n, count, seed):
    rng = np.random.default_rng(seed)
    u = rng.standard_normal((count, n))
    return u / np.linalg.norm(u, axis=1, keepdims=True)


# --------------------------------------------------------------------------
# support and gauge


def test_support_square():
    assert support(SQUARE, [1, 1]) == pytest.approx(2.0)


def test_support_ball():
    ball = EuclideanBall(1.0, 3)
    assert support(ball, [3, 4, 0]) == pytest.approx(5.0)


def test_support_simplex_enumeration():
    # independent oracle: max of <u, v> over the three vertices
    u = np.array([-1.0, -1.0])
    expected = max(float(u @ v) for v in SIMPLEX.vertices)
    assert expected == 0.0
    assert support(SIMPLEX, u) == pytest.approx(expected)


def test_gauge_square():
    assert gauge(SQUARE, [2, 0]) == pytest.approx(2.0)


def test_gauge_at_origin():
    assert gauge(EuclideanBall(1.0, 2), [0, 0]) == 0.0


def test_gauge_cross_polytope():
    assert gauge(CROSS, [0.5, 0.5]) == pytest.approx(1.0)


def test_gauge_requires_interior_origin():
    shifted = Polytope([[1, 1], [2, 1], [1, 2]])
    with pytest.raises(OriginNotInterior):
        gauge(shifted, [1, 1])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.floats(0.1, 10.0))
def test_support_positive_homogeneity(seed, lam):
    P = random_polytope(2, 7, seed)
    u = sphere_points(2, 1, seed + 1)[0]
    assert support(P, lam * u) == pytest.approx(lam * support(P, u), rel=1e-12)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_support_subadditive(seed):
    P = random_polytope(2, 7, seed)
    u, v = sphere_points(2, 2, seed + 1)
    assert support(P, u + v) <= support(P, u) + support(P, v) + 1e-12


# --------------------------------------------------------------------------
# polar duality


def test_polar_square_is_cross():
    p = polar(SQUARE)
    expected = {(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)}
    got = {tuple(np.round(v, 12)) for v in p.vertices}
    assert got == expected


def test_polar_ball_self_dual():
    assert polar(EuclideanBall(1.0, 2)).radius == pytest.approx(1.0)
    assert polar(EuclideanBall(2.0, 3)).radius == pytest.approx(0.5)


def test_polar_requires_interior_origin():
    with pytest.raises(OriginNotInterior):
        polar(Polytope([[1, 1], [2, 1], [1, 2]]))


@pytest.mark.parametrize("seed", range(6))
def test_duality_support_of_polar_is_gauge(seed):
    K = random_polytope(2, 9, seed, ensure_origin_interior=True)
    Kp = polar(K)
    U = sphere_points(2, 100, seed)
    hp = Kp.support_batch(U)
    gk = K.gauge_batch(U)
    assert np.all(np.abs(hp - gk) <= 1e-9 * (1.0 + np.abs(gk)))


@pytest.mark.parametrize("seed", range(6))
def test_bidual_restores_polytope(seed):
    K = random_polytope(2, 9, seed, ensure_origin_interior=True)
    KK = polar(polar(K))
    U = sphere_points(2, 100, seed)
    assert np.allclose(K.support_batch(U), KK.support_batch(U), atol=1e-9)


def test_bidual_3d():
    K = random_polytope(3, 12, 5, ensure_origin_interior=True)
    KK = polar(polar(K))
    U = sphere_points(3, 100, 5)
    assert np.allclose(K.support_batch(U), KK.support_batch(U), atol=1e-9)


# --------------------------------------------------------------------------
# lp sums


def test_lp_sum_self_scaling():
    # K +_p K = 2^(1/p) K on sampled directions
    K = random_polytope(2, 8, 3, ensure_origin_interior=True)
    U = sphere_points(2, 50, 3)
    hK = K.support_batch(U)
    for p in (1.0, 1.5, 2.0, 4.0, math.inf):
        S = lp_sum(K, K, p)
        factor = 1.0 if p == math.inf else 2.0 ** (1.0 / p)
        assert np.allclose(S.support_batch(U), factor * hK, rtol=1e-9)


def test_lp_sum_interval_translation():
    A = Polytope([[0, 0], [1, 0], [0, 1], [1, 1]])       # [0,1]^2
    B = Polytope([[0, 0], [-1, 0], [0, -1], [-1, -1]])   # [-1,0]^2
    S = lp_sum(A, B, 1)
    U = sphere_points(2, 50, 0)
    assert np.allclose(S.support_batch(U), SQUARE.support_batch(U), atol=1e-12)


def test_lp_sum_balls_closed_form():
    S = lp_sum(EuclideanBall(1.0, 2), EuclideanBall(1.0, 2), 2.0)
    assert isinstance(S, EuclideanBall)
    assert S.support([1, 0]) == pytest.approx(math.sqrt(2.0))


def test_lp_sum_bad_exponent():
    with pytest.raises(BadExponent):
        lp_sum(SQUARE, SQUARE, 0.5)


def test_lp_sum_monotone_in_p():
    K = random_polytope(2, 8, 4, ensure_origin_interior=True)
    L = random_polytope(2, 8, 5, ensure_origin_interior=True)
    U = sphere_points(2, 60, 4)
    ps = [1.0, 1.5, 2.0, 4.0, 16.0, math.inf]
    prev = None
    for p in ps:
        vals = LpSumBody(K, L, p).support_batch(U)
        if prev is not None:
            assert np.all(vals <= prev + 1e-12)
        prev = vals


def test_minkowski_consistency_with_oracle():
    K = random_polytope(2, 8, 6, ensure_origin_interior=True)
    L = random_polytope(2, 8, 7, ensure_origin_interior=True)
    exact = lp_sum(K, L, 1)
    assert isinstance(exact, Polytope)
    oracle = LpSumBody(K, L, 1)
    U = sphere_points(2, 100, 6)
    assert np.allclose(exact.support_batch(U), oracle.support_batch(U), atol=1e-9)


# --------------------------------------------------------------------------
# lp intersections


def test_lp_intersection_self_scaling():
    K = random_polytope(2, 8, 8, ensure_origin_interior=True)
    U = sphere_points(2, 50, 8)
    gK = K.gauge_batch(U)
    for p in (1.0, 1.5, 2.0, 4.0, math.inf):
        C = lp_intersection(K, K, p)
        inv_p = 0.0 if p == math.inf else 1.0 / p
        assert np.allclose(C.gauge_batch(U), 2.0 ** (1.0 - inv_p) * gK, rtol=1e-9)


def test_lp_intersection_p1_is_plain_intersection():
    K = SQUARE
    L = EuclideanBall(2.0, 2)
    C = lp_intersection(K, L, 1)
    U = sphere_points(2, 80, 1)
    assert np.allclose(C.gauge_batch(U), K.gauge_batch(U), atol=1e-9)


def test_lp_intersection_pinf_balls():
    C = lp_intersection(EuclideanBall(1.0, 2), EuclideanBall(1.0, 2), math.inf)
    assert C.gauge([0.5, 0.0]) == pytest.approx(1.0)  # 0.5 * B_2


def test_lp_intersection_requires_origin():
    shifted = Polytope([[1, 1], [2, 1], [1, 2]])
    with pytest.raises(OriginNotInterior):
        lp_intersection(shifted, SQUARE, 2.0)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 4.0, math.inf])
def test_lp_intersection_gauge_matches_q_mean(p):
    # hand-derived oracle: |x|_{K cap_p L} = (|x|_K^q + |x|_L^q)^(1/q)
    K = random_polytope(2, 8, 21, ensure_origin_interior=True)
    L = random_polytope(2, 8, 22, ensure_origin_interior=True)
    C = lp_intersection(K, L, p)
    U = sphere_points(2, 100, 21)
    gK = (U @ K.normals.T / K.offsets).max(axis=1)
    gL = (U @ L.normals.T / L.offsets).max(axis=1)
    if p == 1.0:
        expected = np.maximum(gK, gL)
    elif p == math.inf:
        expected = gK + gL
    else:
        q = p / (p - 1.0)
        expected = (gK ** q + gL ** q) ** (1.0 / q)
    assert np.allclose(C.gauge_batch(U), expected, rtol=1e-9)


def test_lp_intersection_support_against_inf_convolution():
    K = random_polytope(2, 8, 23, ensure_origin_interior=True)
    L = random_polytope(2, 8, 24, ensure_origin_interior=True)
    C = lp_intersection(K, L, 2.0)
    rng = np.random.default_rng(23)
    for x in rng.uniform(-1, 1, size=(5, 2)):
        direct = lp_intersection_support_direct(K, L, 2.0, x)
        assert C.support(x) == pytest.approx(direct, rel=5e-4, abs=5e-4)


# --------------------------------------------------------------------------
# affine operations


def test_negate_simplex():
    got = {tuple(np.round(v, 12)) for v in negate(SIMPLEX).vertices}
    assert got == {(0.0, 0.0), (-1.0, 0.0), (0.0, -1.0)}


def test_translate_square():
    T = translate(SQUARE, [1, 0])
    assert T.support([1, 0]) == pytest.approx(2.0)
    assert T.support([-1, 0]) == pytest.approx(0.0)
    assert T.support([0, 1]) == pytest.approx(1.0)


def test_scale_ball_support():
    assert scale(EuclideanBall(1.0, 2), 3.0).support([1, 0]) == pytest.approx(3.0)


def test_scale_rejects_nonpositive():
    with pytest.raises(ValueError):
        scale(SQUARE, -1.0)


def test_affine_wrappers_for_oracle_bodies():
    S = LpSumBody(SQUARE, CROSS, 2.0)
    N = negate(S)
    u = np.array([0.3, -0.9])
    assert N.support(u) == pytest.approx(S.support(-u))
    T = translate(S, [0.5, 0.0])
    assert T.support(u) == pytest.approx(S.support(u) + 0.5 * u[0])
    assert scale(S, 2.0).support(u) == pytest.approx(2.0 * S.support(u))


# --------------------------------------------------------------------------
# barycenter / center


def test_barycenter_simplex():
    bc, err = barycenter(SIMPLEX)
    assert np.allclose(bc, [1 / 3, 1 / 3], atol=1e-12)
    assert np.all(err == 0)


def test_barycenter_square_symmetry():
    bc, _ = barycenter(SQUARE)
    assert np.allclose(bc, 0.0, atol=1e-12)


def test_barycenter_translated_ball():
    bc, _ = barycenter(translate(EuclideanBall(1.0, 2), [2, 0]))
    assert np.allclose(bc, [2, 0], atol=1e-9)


def test_barycenter_mc_agrees_with_exact():
    P = random_polytope(2, 9, 17)
    exact, _ = barycenter(P)
    approx, err = barycenter(geo.AffineBody(P, 1.0, [0.0, 0.0]), trials=0, seed=0)
    # affine image with zero shift delegates to the exact path
    assert np.allclose(exact, approx, atol=1e-12)
    mc_body = geo.GaugeOracleBody(lambda X: P.gauge_batch(X), 2, P.cube_halfwidth())
    mc, err = barycenter(mc_body, trials=40_000, seed=1)
    assert np.all(np.abs(mc - exact) <= 3 * err + 1e-9)


def test_center_simplex():
    C = center(SIMPLEX)
    bc, _ = barycenter(C)
    assert np.allclose(bc, 0.0, atol=1e-12)
    assert np.allclose(C.vertices.mean(axis=0) + 1 / 3 - C.vertices.mean(axis=0), 1 / 3)


def test_center_idempotent():
    P = random_polytope(2, 9, 29)
    once = center(P)
    twice = center(once)
    assert np.allclose(once.vertices, twice.vertices, atol=1e-12)


def test_center_of_centered_cube_is_identity():
    C = center(SQUARE)
    assert np.allclose(sorted(map(tuple, C.vertices)), sorted(map(tuple, SQUARE.vertices)))


# --------------------------------------------------------------------------
# random polytopes


def test_random_polytope_triangle():
    P = random_polytope(2, 3, seed=1)
    assert len(P.vertices) == 3


def test_random_polytope_radius_bounds():
    P = random_polytope(2, 50, seed=2)
    norms = np.linalg.norm(P.vertices, axis=1)
    assert np.all(norms >= 0.5 - 1e-12) and np.all(norms <= 1.5 + 1e-12)
    U = sphere_points(2, 50, 2)
    # containment in 1.5 B_2 bounds the support and the gauge
    assert np.all(P.support_batch(U) <= 1.5 + 1e-12)
    assert np.all(P.gauge_batch(U) >= 1.0 / 1.5 - 1e-12)


def test_random_polytope_deterministic():
    a = random_polytope(3, 10, seed=77)
    b = random_polytope(3, 10, seed=77)
    assert np.array_equal(a.vertices, b.vertices)


def test_random_polytope_origin_interior_margin():
    P = random_polytope(2, 6, seed=3, ensure_origin_interior=True)
    assert P.offsets.min() > 0.05


def test_random_polytope_rejects_bad_args():
    with pytest.raises(ValueError):
        random_polytope(5, 10, 0)
    with pytest.raises(ValueError):
        random_polytope(2, 2, 0)


# --------------------------------------------------------------------------
# exact polytope algebra helpers


def test_minkowski_sum_of_simplices_is_hexagon():
    S = SIMPLEX
    H = minkowski_sum(S, negate(S))
    assert len(H.vertices) == 6


def test_intersect_polytopes_shifted():
    A = Polytope([[0, 0], [1, 0], [0, 1], [1, 1]])
    B = translate(A, [0.5, 0.0])
    C = intersect_polytopes(A, B)
    U = sphere_points(2, 40, 9)
    expected = Polytope([[0.5, 0], [1, 0], [0.5, 1], [1, 1]])
    assert np.allclose(C.support_batch(U), expected.support_batch(U), atol=1e-9)


def test_intersect_polytopes_empty_interior():
    A = Polytope([[0, 0], [1, 0], [0, 1]])
    B = translate(A, [5.0, 5.0])
    with pytest.raises(DegenerateInstance):
        intersect_polytopes(A, B)


def test_convex_hull_of_pair():
    H = convex_hull_of(SIMPLEX, negate(SIMPLEX))
    assert H.contains([0.9, 0.05]) and H.contains([-0.9, -0.05])


# --------------------------------------------------------------------------
# serialisation


def test_polytope_json_round_trip():
    payload = SQUARE.to_json()
    assert payload["dim"] == 2
    back = Polytope.from_json(payload)
    assert np.allclose(back.vertices, SQUARE.vertices)


def test_one_dimensional_bodies():
    seg = Polytope([[-2.0], [3.0]])
    assert support(seg, [1.0]) == pytest.approx(3.0)
    assert support(seg, [-1.0]) == pytest.approx(2.0)
    assert gauge(seg, [1.5]) == pytest.approx(0.5)
    p = polar(seg)
    assert gauge(p, [1.0]) == pytest.approx(support(seg, [1.0]), rel=1e-12)
