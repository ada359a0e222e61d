"""Executable inequality and identity checks with statistical verdicts.

Each checker turns one inequality instance into a CheckReport carrying
both sides with error bars.  The verdict policy keeps Monte Carlo noise
from forging counterexamples to proved statements:

* on an exact path (both stderrs zero) the comparison is sharp up to a
  relative 1e-9 slack;
* on a noisy path a "fail" needs a violation beyond three combined
  standard errors, a "pass" needs the same margin of safety, and
  anything straddling equality is "inconclusive".

Instance generators build bodies and functions that satisfy each
statement's hypotheses by construction (e.g. pairs whose polars are
exactly centred, built by centring in polar space).  Suites bundle
checkers with generators and are deterministic given the master seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import logconcave as lc
from .geometry import (ConvexBody, DegenerateInstance, Polytope, barycenter,
                       center, convex_hull_of, intersect_polytopes, lp_sum,
                       lp_intersection, minkowski_sum, negate, polar,
                       random_polytope, translate, scale)
from .logconcave import (LogConcaveFn, asplund, asplund_at, barycenter_fn,
                         convolution_at, entropy, exp_neg_support_pow,
                         indicator, integral, level_set, sup_norm)
from .volume import (VolumeEstimate, gamma_ratio, volume, volume_exact,
                     volume_mc, volume_radial)


class HypothesisViolated(ValueError):
    """The instance does not satisfy the statement's hypotheses."""


SIGMA_FAIL = 3.0
EXACT_RTOL = 1e-9


@dataclass
class CheckReport:
    """One inequality/identity instance with its verdict."""

    check_id: str
    n: int
    p: float | None
    seed: int
    instance: dict
    lhs: tuple  # (value, stderr)
    rhs: tuple
    direction: str  # "le" | "ge" | "eq"
    verdict: str = "inconclusive"
    ratio: float | None = None
    margin_sigmas: float | None = None
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lhs = (float(self.lhs[0]), float(self.lhs[1]))
        self.rhs = (float(self.rhs[0]), float(self.rhs[1]))
        lhs_v, lhs_e = self.lhs
        rhs_v, rhs_e = self.rhs
        sigma = math.hypot(lhs_e, rhs_e)
        if self.direction == "le":
            viol = lhs_v - rhs_v
        elif self.direction == "ge":
            viol = rhs_v - lhs_v
        else:
            viol = abs(lhs_v - rhs_v)
        scale_ref = max(abs(lhs_v), abs(rhs_v), 1.0)
        if sigma == 0.0:
            self.verdict = "pass" if viol <= EXACT_RTOL * scale_ref else "fail"
            self.margin_sigmas = None
        else:
            self.margin_sigmas = viol / sigma
            if viol > SIGMA_FAIL * sigma:
                self.verdict = "fail"
            elif self.direction != "eq" and viol < -SIGMA_FAIL * sigma:
                self.verdict = "pass"
            elif self.direction == "eq" and viol <= SIGMA_FAIL * sigma:
                self.verdict = "pass"
            else:
                self.verdict = "inconclusive"
        if rhs_v != 0.0:
            self.ratio = lhs_v / rhs_v

    def to_json(self) -> dict:
        p = self.p
        if p == math.inf:
            p = "inf"
        return {
            "check_id": self.check_id,
            "n": self.n,
            "p": p,
            "seed": self.seed,
            "instance": self.instance,
            "lhs": {"value": self.lhs[0], "stderr": self.lhs[1]},
            "rhs": {"value": self.rhs[0], "stderr": self.rhs[1]},
            "direction": self.direction,
            "ratio": self.ratio,
            "verdict": self.verdict,
            "margin_sigmas": self.margin_sigmas,
            "extras": self.extras,
        }


def _as_pair(est) -> tuple:
    if isinstance(est, VolumeEstimate):
        return (est.value, est.stderr)
    return (float(est[0]), float(est[1]))


def _product(*ests) -> tuple:
    """First-order error propagation for a product of estimates."""
    value = 1.0
    for est in ests:
        value *= _as_pair(est)[0]
    var = 0.0
    for i, est in enumerate(ests):
        v, e = _as_pair(est)
        others = 1.0
        for j, other in enumerate(ests):
            if j != i:
                others *= _as_pair(other)[0]
        var += (others * e) ** 2
    return value, math.sqrt(var)


def _scaled(pair, factor) -> tuple:
    v, e = _as_pair(pair)
    return factor * v, abs(factor) * e


def _seed_of(*parts) -> int:
    ss = np.random.SeedSequence(list(parts))
    return int(ss.generate_state(1)[0])


class _MembershipIntersection(ConvexBody):
    """Intersection of two bodies exposed through membership only;
    used for hit-or-miss volumes of shifted intersections."""

    def __init__(self, first, second):
        self.parts = (first, second)
        self.dim = first.dim

    def contains_batch(self, X, tol=1e-9):
        a, b = self.parts
        return a.contains_batch(X, tol) & b.contains_batch(X, tol)

    def cube_halfwidth(self):
        return min(p.cube_halfwidth() for p in self.parts)


def _intersection_volume(K, L, budget, seed) -> tuple:
    """|K intersect L| for bodies that need not contain the origin."""
    from .geometry import EuclideanBall
    if isinstance(K, Polytope) and isinstance(L, Polytope) and K.dim <= 3:
        try:
            return _as_pair(volume_exact(intersect_polytopes(K, L)))
        except DegenerateInstance:
            return (0.0, 0.0)
    if isinstance(K, EuclideanBall) and isinstance(L, EuclideanBall):
        return _as_pair(volume_exact(EuclideanBall(min(K.radius, L.radius), K.dim)))
    est = volume_mc(_MembershipIntersection(K, L), budget, seed)
    return _as_pair(est)


def _body_volume(K, budget, seed) -> tuple:
    return _as_pair(volume(K, budget, seed))


def _describe_pair(K, L) -> dict:
    return {"K": K.describe(), "L": L.describe()}


# ---------------------------------------------------------------------------
# classical inequality checkers


def check_rs_two_bodies(K, L, x0=None, budget=100_000, seed=0) -> CheckReport:
    """|K cap (x0+L)| |K-L| <= C(2n,n) |K| |L|, equality iff K = L is a
    simplex (with x0 = 0)."""
    n = K.dim
    x0 = np.zeros(n) if x0 is None else np.asarray(x0, dtype=float)
    shifted = translate(L, x0)
    cap = _intersection_volume(K, shifted, budget, _seed_of(seed, 1))
    diff = _body_volume(lp_sum(K, negate(L), 1), budget, _seed_of(seed, 2))
    vK = _body_volume(K, budget, _seed_of(seed, 3))
    vL = _body_volume(L, budget, _seed_of(seed, 4))
    lhs = _product(cap, diff)
    rhs = _scaled(_product(vK, vL), math.comb(2 * n, n))
    return CheckReport("rs_two_bodies", n, None, seed,
                       {**_describe_pair(K, L), "x0": x0.tolist()},
                       lhs, rhs, "le")


def check_milman_pajor(K, L, budget=100_000, seed=0) -> CheckReport:
    """|K| |L| <= |K-L| |K cap L| once K and L share their barycenter.

    The checker recentres both bodies (a no-op for centred input)."""
    n = K.dim
    Kc, Lc = center(K, seed=_seed_of(seed, 10)), center(L, seed=_seed_of(seed, 11))
    vK = _body_volume(Kc, budget, _seed_of(seed, 1))
    vL = _body_volume(Lc, budget, _seed_of(seed, 2))
    diff = _body_volume(lp_sum(Kc, negate(Lc), 1), budget, _seed_of(seed, 3))
    cap = _intersection_volume(Kc, Lc, budget, _seed_of(seed, 4))
    return CheckReport("milman_pajor", n, None, seed, _describe_pair(K, L),
                       _product(vK, vL), _product(diff, cap), "le")


def check_volume_polars(K, L, budget=100_000, seed=0) -> CheckReport:
    """|(K cap L)^o| |(K-L)^o| <= |K^o| |L^o| for 0 interior to both."""
    n = K.dim
    cap_polar = _body_volume(polar(lp_intersection(K, L, 1)), budget, _seed_of(seed, 1))
    diff_polar = _body_volume(polar(lp_sum(K, negate(L), 1)), budget, _seed_of(seed, 2))
    pK = _body_volume(polar(K), budget, _seed_of(seed, 3))
    pL = _body_volume(polar(L), budget, _seed_of(seed, 4))
    return CheckReport("volume_polars", n, None, seed, _describe_pair(K, L),
                       _product(cap_polar, diff_polar), _product(pK, pL), "le")


def check_rs_convex_hull(K, L, budget=100_000, seed=0) -> CheckReport:
    """|K cap L| |conv{K, -L}| <= 2^n |K| |L| for 0 in K cap L;
    equality iff K = L is a simplex with the origin at a vertex."""
    n = K.dim
    cap = _intersection_volume(K, L, budget, _seed_of(seed, 1))
    hull = _body_volume(lp_sum(K, negate(L), math.inf), budget, _seed_of(seed, 2))
    vK = _body_volume(K, budget, _seed_of(seed, 3))
    vL = _body_volume(L, budget, _seed_of(seed, 4))
    lhs = _product(cap, hull)
    rhs = _scaled(_product(vK, vL), 2.0 ** n)
    return CheckReport("rs_convex_hull", n, None, seed, _describe_pair(K, L),
                       lhs, rhs, "le")


def check_firey(K, budget=100_000, seed=0) -> CheckReport:
    """|(K-K)^o| <= 2^-n |K^o|; equality for symmetric K."""
    n = K.dim
    lhs = _body_volume(polar(lp_sum(K, negate(K), 1)), budget, _seed_of(seed, 1))
    pK = _body_volume(polar(K), budget, _seed_of(seed, 2))
    rhs = _scaled(pK, 2.0 ** (-n))
    return CheckReport("firey", n, None, seed, {"K": K.describe()}, lhs, rhs, "le")


def check_bm_dual_p(K, p, budget=100_000, seed=0) -> CheckReport:
    """|(K +_p (-K))^o| <= 2^(-n/p) |K^o| for 0 interior to K."""
    n = K.dim
    lhs = _body_volume(polar(lp_sum(K, negate(K), p)), budget, _seed_of(seed, 1))
    pK = _body_volume(polar(K), budget, _seed_of(seed, 2))
    factor = 1.0 if p == math.inf else 2.0 ** (-n / p)
    rhs = _scaled(pK, factor)
    return CheckReport("bm_dual_p", n, p, seed, {"K": K.describe()}, lhs, rhs, "le")


# ---------------------------------------------------------------------------
# functional checkers


def _conv_at_zero(f: LogConcaveFn, g: LogConcaveFn, budget, seed) -> tuple:
    """(f*g)(0), using the closed route for same-exponent support-power
    pairs: f(x) g(-x) = exp(-h^p of K +_p (-L)), whose integral is
    Gamma(1+n/p) |(K +_p (-L))^o|."""
    if (f.family == "exp_neg_support_pow" and g.family == "exp_neg_support_pow"
            and f.p == g.p):
        n = f.dim
        body = lp_sum(f.body, negate(g.body), f.p)
        est = volume(polar(body), budget, seed)
        factor = math.gamma(1.0 + n / f.p)
        return factor * est.value, factor * est.stderr
    return convolution_at(f, g, np.zeros(f.dim), budget, seed)


def _max_convolution(f, g, budget, seed, splits=13, rounds=3):
    """sup_x (f*g)(x) by coarse-to-fine grid search; each evaluation
    reuses the same seed so the surface seen by the optimiser is
    smooth.  Returns (value, stderr, argmax)."""
    centre = barycenter_fn(f)[0] + barycenter_fn(g)[0]
    width = 0.5 * (f.bounding_radius + g.bounding_radius)
    best = (-math.inf, 0.0)
    incumbent = centre
    for _ in range(rounds):
        axes = [np.linspace(c - width, c + width, splits) for c in centre]
        mesh = np.meshgrid(*axes, indexing="ij")
        X = np.column_stack([m.ravel() for m in mesh])
        for x in X:
            val, err = convolution_at(f, g, x, budget, seed)
            if val > best[0]:
                best = (val, err)
                incumbent = x
        centre = incumbent
        width *= 2.0 * 2.0 / (splits - 1)
    return best[0], best[1], incumbent


def check_functional_rs(f, g, budget=100_000, seed=0) -> CheckReport:
    """sup(f*g) integral(f Asplund g) <= C(2n,n) sup f sup g
    integral f integral g for integrable log-concave f, g."""
    n = f.dim
    cv, ce, cx = _max_convolution(f, g, budget, _seed_of(seed, 1))
    star = asplund(f, g)
    int_star = integral(star, budget, _seed_of(seed, 2))
    int_f = integral(f, budget, _seed_of(seed, 3))
    int_g = integral(g, budget, _seed_of(seed, 4))
    lhs = _product((cv, ce), int_star)
    rhs = _scaled(_product(int_f, int_g), math.comb(2 * n, n) * sup_norm(f) * sup_norm(g))
    report = CheckReport("functional_rs", n, getattr(f, "p", None), seed,
                         {"f": f.describe(), "g": g.describe()}, lhs, rhs, "le")
    report.extras["conv_argmax"] = [float(v) for v in cx]
    return report


def check_reverse_functional_rs(f, g, budget=100_000, seed=0) -> CheckReport:
    """sup f sup g int f int g <= e^(1 + Ent f + Ent g) (f*g)(0)
    int (f Asplund g), for opposite-barycenter f, g whose sups sit at
    the origin.  Raises HypothesisViolated otherwise."""
    n = f.dim
    for fn in (f, g):
        if fn(np.zeros(n)) < sup_norm(fn) * (1.0 - 1e-9):
            raise HypothesisViolated("sup must be attained at the origin")
    bf, ef = barycenter_fn(f, seed=_seed_of(seed, 10))
    bg, eg = barycenter_fn(g, seed=_seed_of(seed, 11))
    tol = SIGMA_FAIL * np.hypot(ef, eg) + 1e-9
    if np.any(np.abs(bf + bg) > tol):
        raise HypothesisViolated("barycenters are not opposite")
    int_f = integral(f, budget, _seed_of(seed, 1))
    int_g = integral(g, budget, _seed_of(seed, 2))
    ent_f = entropy(f, budget, _seed_of(seed, 3))
    ent_g = entropy(g, budget, _seed_of(seed, 4))
    conv0 = _conv_at_zero(f, g, budget, _seed_of(seed, 5))
    int_star = integral(asplund(f, g), budget, _seed_of(seed, 6))
    lhs = _scaled(_product(int_f, int_g), sup_norm(f) * sup_norm(g))
    amp = math.exp(1.0 + ent_f[0] + ent_g[0])
    rhs = _product(conv0, int_star)
    # entropy error enters through the exponential prefactor
    rhs_val = amp * rhs[0]
    rhs_err = amp * math.hypot(rhs[1], rhs[0] * math.hypot(ent_f[1], ent_g[1]))
    report = CheckReport("reverse_functional_rs", n, getattr(f, "p", None), seed,
                         {"f": f.describe(), "g": g.describe()},
                         lhs, (rhs_val, rhs_err), "le")
    report.extras["entropy_f"] = ent_f[0]
    report.extras["entropy_g"] = ent_g[0]
    return report


# ---------------------------------------------------------------------------
# lp polar-volume theorem checkers


def _check_polar_hypothesis(K, L, seed):
    bK, eK = barycenter(polar(K), seed=_seed_of(seed, 20))
    bL, eL = barycenter(polar(L), seed=_seed_of(seed, 21))
    tol = SIGMA_FAIL * np.hypot(eK, eL) + 1e-9
    if np.any(np.abs(bK + bL) > tol):
        raise HypothesisViolated("polar bodies are not oppositely centred")


def check_rspolar(K, L, p, budget=100_000, seed=0) -> CheckReport:
    """|(K cap_p L)^o| |(K +_p (-L))^o| >= gamma_ratio(n,p) |K^o| |L^o|
    when the polars are oppositely centred."""
    n = K.dim
    _check_polar_hypothesis(K, L, seed)
    cap_polar = _body_volume(polar(lp_intersection(K, L, p)), budget, _seed_of(seed, 1))
    diff_polar = _body_volume(polar(lp_sum(K, negate(L), p)), budget, _seed_of(seed, 2))
    pK = _body_volume(polar(K), budget, _seed_of(seed, 3))
    pL = _body_volume(polar(L), budget, _seed_of(seed, 4))
    lhs = _product(cap_polar, diff_polar)
    rhs = _scaled(_product(pK, pL), gamma_ratio(n, p))
    return CheckReport("rspolar", n, p, seed, _describe_pair(K, L), lhs, rhs, "ge")


def check_rspolar_p1(K, L, budget=100_000, seed=0) -> CheckReport:
    """The p = 1 corollary |(K cap L)^o| |(K-L)^o| >= |K^o| |L^o| / C(2n,n),
    computed through the direct intersection/Minkowski routes rather
    than the lp machinery (cross-check for check_rspolar at p = 1)."""
    n = K.dim
    _check_polar_hypothesis(K, L, seed)
    if isinstance(K, Polytope) and isinstance(L, Polytope):
        cap = intersect_polytopes(K, L)
    else:
        cap = lp_intersection(K, L, 1)
    diff = (minkowski_sum(K, negate(L))
            if isinstance(K, Polytope) and isinstance(L, Polytope)
            else lp_sum(K, negate(L), 1))
    lhs = _product(_body_volume(polar(cap), budget, _seed_of(seed, 1)),
                   _body_volume(polar(diff), budget, _seed_of(seed, 2)))
    pK = _body_volume(polar(K), budget, _seed_of(seed, 3))
    pL = _body_volume(polar(L), budget, _seed_of(seed, 4))
    rhs = _scaled(_product(pK, pL), 1.0 / math.comb(2 * n, n))
    return CheckReport("rspolar_p1", n, 1.0, seed, _describe_pair(K, L),
                       lhs, rhs, "ge")


def check_rspolar_reverse(K, L, p, budget=100_000, seed=0) -> CheckReport:
    """|(K cap_p L)^o| |(K +_p (-L))^o| <= C(2n,n) gamma_ratio(n,p)
    |K^o| |L^o| for 0 interior to both (no barycenter hypothesis)."""
    n = K.dim
    cap_polar = _body_volume(polar(lp_intersection(K, L, p)), budget, _seed_of(seed, 1))
    diff_polar = _body_volume(polar(lp_sum(K, negate(L), p)), budget, _seed_of(seed, 2))
    pK = _body_volume(polar(K), budget, _seed_of(seed, 3))
    pL = _body_volume(polar(L), budget, _seed_of(seed, 4))
    lhs = _product(cap_polar, diff_polar)
    rhs = _scaled(_product(pK, pL), math.comb(2 * n, n) * gamma_ratio(n, p))
    return CheckReport("rspolar_reverse", n, p, seed, _describe_pair(K, L),
                       lhs, rhs, "le")


# ---------------------------------------------------------------------------
# projection-section check for product-form level sets


class _ProductLevelBody(ConvexBody):
    """Level set {(u,v) : f((u+v)/sqrt2) g((v-u)/sqrt2) >= t} in R^{2n}
    for f = exp(-h_K^p), g = exp(-h_L^p); membership is exact."""

    def __init__(self, K, L, p, t):
        self.K, self.L, self.p, self.t = K, L, p, t
        self.threshold = -math.log(t)
        self.dim = 2 * K.dim
        s = self.threshold ** (1.0 / p)
        rK = polar(K).cube_halfwidth()
        rL = polar(L).cube_halfwidth()
        self._half = s * (rK + rL) / math.sqrt(2.0) * 1.0000001

    def contains_batch(self, X, tol=1e-9):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        n = self.K.dim
        u, v = X[:, :n], X[:, n:]
        a = (u + v) / math.sqrt(2.0)
        b = (v - u) / math.sqrt(2.0)
        hK = np.maximum(self.K.support_batch(a), 0.0)
        hL = np.maximum(self.L.support_batch(b), 0.0)
        return hK ** self.p + hL ** self.p <= self.threshold * (1.0 + tol)

    def cube_halfwidth(self):
        return self._half


def check_projection_section(f, g, t, budget=100_000, seed=0,
                             upper=False) -> CheckReport:
    """For the 2n-dimensional level set L_t of
    F(u,v) = f((u+v)/sqrt2) g((v-u)/sqrt2):
        |L_t| >= C(2n,n)^-1 |P_H L_t| |L_t cap H^perp|,
    H the span of the last n coordinates.  With ``upper=True`` the
    Fubini counterpart |L_t| <= |P_H L_t| |L_t cap H^perp| is checked
    instead (valid when the middle fibre is maximal, e.g. symmetric
    instances)."""
    if not (f.family == "exp_neg_support_pow" and g.family == "exp_neg_support_pow"
            and f.p == g.p):
        raise HypothesisViolated("projection-section check needs matching "
                                 "support-power families")
    if not (0.0 < t < 1.0):
        raise HypothesisViolated("level t must lie in (0, 1)")
    K, L, p = f.body, g.body, f.p
    n = K.dim
    s = (-math.log(t)) ** (1.0 / p)
    level = _ProductLevelBody(K, L, p, t)
    vol_level = _as_pair(volume_mc(level, budget, _seed_of(seed, 1)))
    # projection onto H: (s/sqrt2) (K cap_p L)^o, i.e. the lq-sum of the polars
    proj = scale(polar(lp_intersection(K, L, p)), s / math.sqrt(2.0))
    vol_proj = _body_volume(proj, budget, _seed_of(seed, 2))
    # central section: sqrt2 s (K +_p (-L))^o
    section = scale(polar(lp_sum(K, negate(L), p)), math.sqrt(2.0) * s)
    vol_sec = _body_volume(section, budget, _seed_of(seed, 3))
    prod = _product(vol_proj, vol_sec)
    if upper:
        return CheckReport("projection_section_upper", n, p, seed,
                           {**_describe_pair(K, L), "t": t},
                           vol_level, prod, "le")
    rhs = _scaled(prod, 1.0 / math.comb(2 * n, n))
    return CheckReport("projection_section", n, p, seed,
                       {**_describe_pair(K, L), "t": t},
                       vol_level, rhs, "ge")


# ---------------------------------------------------------------------------
# lemma-level verifiers


def verify_jensen_weighted(n, trials, seed, budget=0) -> CheckReport:
    """Weighted Jensen bound for log-concave psi and a discrete
    probability measure mu on <= 10 atoms:
        integral psi dmu <= psi(psi-weighted mean of the atoms).
    Reports the largest violation across the trials (exact path)."""
    rng = np.random.default_rng(seed)
    worst = -math.inf
    made = 0
    attempts = 0
    while made < trials and attempts < 20 * trials:
        attempts += 1
        kind = rng.integers(0, 3)
        body = random_polytope(n, n + 5, int(rng.integers(1 << 31)),
                               ensure_origin_interior=True)
        if kind == 0:
            psi = indicator(body)
        elif kind == 1:
            psi = exp_neg_support_pow(body, float(rng.uniform(1.0, 3.0)))
        else:
            psi = lc.gaussian(n, float(rng.uniform(0.6, 1.6)))
        m = int(rng.integers(2, 11))
        atoms = rng.uniform(-1.5, 1.5, size=(m, n))
        w = rng.uniform(0.1, 1.0, size=m)
        w /= w.sum()
        vals = psi(atoms)
        mass = float((w * vals).sum())
        if mass <= 1e-12:
            continue
        made += 1
        point = (atoms * (w * vals)[:, None]).sum(axis=0) / mass
        worst = max(worst, mass - float(psi(point)))
    if made < trials:
        raise DegenerateInstance("could not draw enough positive-mass instances")
    return CheckReport("jensen_weighted", n, None, seed,
                       {"trials": trials}, (worst, 0.0), (0.0, 0.0), "le")


def verify_ball_body_volume(f, budget=4000, seed=0) -> CheckReport:
    """|K_f| = integral(f) / f(0) (the moment body at p = n)."""
    body = lc.ball_body(f)
    est = volume_radial(body, min(budget, 4000), _seed_of(seed, 1))
    target = integral(f, budget, _seed_of(seed, 2))
    f0 = f(np.zeros(f.dim))
    return CheckReport("ball_body_volume", f.dim, None, seed, {"f": f.describe()},
                       _as_pair(est), _scaled(target, 1.0 / f0), "eq")


def verify_level_set_inclusion(f, levels=(0.1, 0.5, 0.9), n_rays=50,
                               seed=0, budget=0) -> CheckReport:
    """t^(1/n) K_t inside K_f: for boundary points x of the level set
    K_t, the ball-body gauge of t^(1/n) x stays below 1 + 1e-6."""
    n = f.dim
    rng = np.random.default_rng(seed)
    worst = -math.inf
    for t in levels:
        Kt = level_set(f, t).body
        u = rng.standard_normal((n_rays, n))
        u /= np.linalg.norm(u, axis=1, keepdims=True)
        boundary = u / Kt.gauge_batch(u)[:, None]
        pts = t ** (1.0 / n) * boundary
        gauges = np.array([lc.ball_body_gauge(f, row) for row in pts])
        worst = max(worst, float(gauges.max()))
    return CheckReport("level_set_inclusion", n, None, seed,
                       {"f": f.describe(), "levels": list(levels)},
                       (worst, 0.0), (1.0 + 1e-6, 0.0), "le")


def verify_epigraph_barycenter(f, budget=200_000, seed=0) -> list[CheckReport]:
    """Barycenter of {(x,t) : f(x) >= e^-t sup f} under e^-t dt dx:
    the spatial component equals the mass centroid of f and the height
    component equals 1 + Ent(f / sup f).  Both compared at 3 sigma."""
    n = f.dim
    s = sup_norm(f)
    R = f.bounding_radius
    T = lc.TAIL_CUT
    rng = np.random.default_rng(_seed_of(seed, 1))
    X = rng.uniform(-R, R, size=(budget, n))
    tval = rng.uniform(0.0, T, size=budget)
    inside = f(X) >= np.exp(-tval) * s
    w = np.where(inside, np.exp(-tval), 0.0)
    mass = w.sum()
    if mass <= 0:
        raise DegenerateInstance("epigraph sample missed the body")
    mean_x = (X * w[:, None]).sum(axis=0) / mass
    mean_t = float((tval * w).sum() / mass)
    # weighted-mean standard errors via the delta method
    err_x = np.sqrt((((X - mean_x) * w[:, None]) ** 2).sum(axis=0)) / mass
    err_t = math.sqrt((((tval - mean_t) * w) ** 2).sum()) / mass
    bx, bxe = barycenter_fn(f, seed=_seed_of(seed, 2))
    ent, ent_err = entropy(f, seed=_seed_of(seed, 3))
    dev_x = float(np.linalg.norm(mean_x - bx))
    sig_x = float(np.linalg.norm(np.hypot(err_x, bxe))) + 1e-15
    rep_x = CheckReport("epigraph_barycenter_x", n, None, seed,
                        {"f": f.describe()}, (dev_x, sig_x), (0.0, 0.0), "eq")
    rep_t = CheckReport("epigraph_barycenter_t", n, None, seed,
                        {"f": f.describe()},
                        (mean_t, err_t), (1.0 + ent, ent_err), "eq")
    return [rep_x, rep_t]


def verify_centered_level_sets(K, L, p, t=0.5, budget=200_000, seed=0) -> CheckReport:
    """Zero-vector identity for f = exp(-h_K^p), g = exp(-h_L^p) with
    oppositely centred polars: at level t,
        (1/|Lt~|) [ int_{K_t} x |Kt~_{t/f(x)}| dx
                    + int_{Kt~} y |K_{t/g(y)}| dy ]  = 0,
    where K_t = s K^o, Kt~ = s L^o, s = (-log t)^(1/p).  The companion
    reading with |Kt~_{t/g(y)}| in the second integral is recorded in
    extras for reference."""
    n = K.dim
    s = (-math.log(t)) ** (1.0 / p)
    pK, pL = polar(K), polar(L)
    volK = volume_exact(pK).value if isinstance(pK, Polytope) and n <= 3 \
        else volume(pK, budget, _seed_of(seed, 1)).value
    volL = volume_exact(pL).value if isinstance(pL, Polytope) and n <= 3 \
        else volume(pL, budget, _seed_of(seed, 2)).value

    def moment(base_polar, other_vol, sub):
        """int over s*base_polar of x * other_vol * (-log t - |x|^p)^{n/p},
        by hit-or-miss sampling of the scaled polar."""
        rng = np.random.default_rng(_seed_of(seed, sub))
        body = scale(base_polar, s)
        R = body.cube_halfwidth()
        X = rng.uniform(-R, R, size=(budget, n))
        gauges = base_polar.gauge_batch(X)  # |x|_{base_polar}
        inside = gauges <= s
        w = np.zeros(budget)
        w[inside] = other_vol * (-math.log(t) - gauges[inside] ** p) ** (n / p)
        cube = (2.0 * R) ** n
        vec = (X * w[:, None]).mean(axis=0) * cube
        vec_err = (X * w[:, None]).std(axis=0, ddof=1) * cube / math.sqrt(budget)
        mass = float(w.mean() * cube)
        mass_err = float(w.std(ddof=1) * cube / math.sqrt(budget))
        return vec, vec_err, mass, mass_err

    vec1, err1, lt_mass, lt_err = moment(pK, volL, 3)       # over K_t
    vec2, err2, _, _ = moment(pL, volK, 4)                  # proof form
    vec2_alt, _, _, _ = moment(pL, volL, 5)                 # stated form
    total = (vec1 + vec2) / lt_mass
    sigma = np.hypot(err1, err2) / lt_mass \
        + np.abs(total) * lt_err / lt_mass
    dev = float(np.linalg.norm(total))
    sig = float(np.linalg.norm(sigma)) + 1e-15
    report = CheckReport("centered_level_sets", n, p, seed,
                         {**_describe_pair(K, L), "t": t},
                         (dev, sig), (0.0, 0.0), "eq")
    report.extras["stated_form_norm"] = float(
        np.linalg.norm((vec1 + vec2_alt) / lt_mass))
    report.extras["level_mass"] = lt_mass
    return report


def verify_sup_convolution_closed_form(K, L, p, n_points=20, seed=0,
                                       budget=0) -> CheckReport:
    """Closed-form Asplund product of exp(-h_K^p) pairs (duality route)
    against the direct numeric sup over splits, at random points."""
    f = exp_neg_support_pow(K, p)
    g = exp_neg_support_pow(L, p)
    closed = asplund(f, g)
    rng = np.random.default_rng(seed)
    R = 0.5 * (f.bounding_radius + g.bounding_radius)
    pts = rng.uniform(-R, R, size=(n_points, K.dim))
    errs = [abs(closed(x) - asplund_at(f, g, x)) for x in pts]
    return CheckReport("sup_convolution_closed_form", K.dim, p, seed,
                       _describe_pair(K, L), (float(max(errs)), 0.0),
                       (1e-3, 0.0), "le")


# ---------------------------------------------------------------------------
# instance generators


@dataclass
class InstanceGenerator:
    """Seeded recipe producing instances satisfying a statement's
    hypotheses.  Recipes:

    * centered_polar_pair: K = P^o, L = Q^o with P, Q centred random
      polytopes, so K^o and L^o have barycenter 0 exactly;
    * opposite_polar_pair: K^o, L^o barycentres are +b and -b exactly
      for a generically nonzero b (and different volumes);
    * general_pair: two random polytopes with 0 well interior;
    * symmetric_body: hull of +/- a random point cloud;
    * simplex: the standard simplex (origin at a vertex);
    * function_pair(family): log-concave pairs for the functional
      checks.
    """

    recipe: str
    n: int
    m: int = 7
    seed: int = 0
    p: float = 1.0
    family: str = "indicator"

    def build(self):
        n, m, seed = self.n, self.m, self.seed
        if self.recipe == "centered_polar_pair":
            P = center(random_polytope(n, m, _seed_of(seed, 0), ensure_origin_interior=True))
            Q = center(random_polytope(n, m, _seed_of(seed, 1), ensure_origin_interior=True))
            return polar(P), polar(Q)
        if self.recipe == "opposite_polar_pair":
            P = random_polytope(n, m, _seed_of(seed, 0), ensure_origin_interior=True)
            b = barycenter(P)[0]
            for k in range(2, 200):
                Q0 = random_polytope(n, m + 2, _seed_of(seed, k),
                                     ensure_origin_interior=True)
                Q = translate(Q0, -b - barycenter(Q0)[0])
                if isinstance(Q, Polytope) and Q.offsets.min() > 0.05:
                    return polar(P), polar(Q)
            raise DegenerateInstance("no opposite-barycenter partner found")
        if self.recipe == "general_pair":
            K = random_polytope(n, m, _seed_of(seed, 0), ensure_origin_interior=True)
            L = random_polytope(n, m, _seed_of(seed, 1), ensure_origin_interior=True)
            return K, L
        if self.recipe == "symmetric_body":
            rng = np.random.default_rng(_seed_of(seed, 0))
            u = rng.standard_normal((m, n))
            u /= np.linalg.norm(u, axis=1, keepdims=True)
            pts = u * rng.uniform(0.5, 1.5, size=(m, 1))
            return Polytope(np.vstack([pts, -pts]))
        if self.recipe == "simplex":
            return Polytope(np.vstack([np.zeros(n), np.eye(n)]))
        if self.recipe == "function_pair":
            return self._function_pair()
        raise ValueError(f"unknown recipe {self.recipe!r}")

    def _function_pair(self):
        n, seed = self.n, self.seed
        if self.family == "indicator":
            K = center(random_polytope(n, self.m, _seed_of(seed, 0),
                                       ensure_origin_interior=True))
            L = center(random_polytope(n, self.m, _seed_of(seed, 1),
                                       ensure_origin_interior=True))
            return indicator(K), indicator(negate(L))
        if self.family == "exp_support":
            gen = InstanceGenerator("centered_polar_pair", n, self.m, seed)
            K, L = gen.build()
            return exp_neg_support_pow(K, self.p), exp_neg_support_pow(L, self.p)
        if self.family == "gaussian":
            rng = np.random.default_rng(_seed_of(seed, 0))
            return (lc.gaussian(n, float(rng.uniform(0.8, 1.25))),
                    lc.gaussian(n, float(rng.uniform(0.8, 1.25))))
        raise ValueError(f"unknown function family {self.family!r}")


# ---------------------------------------------------------------------------
# suites


SUITE_NAMES = ("classical", "thm_reverse_functional", "thm_rspolar",
               "thm_rspolar_reverse", "projection", "theorems", "lemmas", "all")


def _finite(ps):
    return [p for p in ps if p != math.inf]


def run_suite(suite, dims=(2,), ps=(1.0, 2.0, math.inf), trials=3,
              mc_samples=100_000, seed=0) -> list:
    """Run a named suite; deterministic given the seed.

    Returns CheckReports sorted by (check_id, n, p, seed)."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; pick one of {SUITE_NAMES}")
    reports = []
    parts = ([suite] if suite not in ("theorems", "all")
             else ["thm_reverse_functional", "thm_rspolar", "thm_rspolar_reverse",
                   "projection"])
    if suite == "all":
        parts = ["classical", *parts, "lemmas"]
    part_tags = {"classical": 1, "thm_reverse_functional": 2, "thm_rspolar": 3,
                 "thm_rspolar_reverse": 4, "projection": 5, "lemmas": 6}
    for part in parts:
        for n in dims:
            for trial in range(trials):
                s = _seed_of(seed, n, trial, part_tags[part])
                reports.extend(_run_part(part, n, trial, ps, mc_samples, s))
    reports.sort(key=lambda r: (r.check_id, r.n, str(r.p), r.seed))
    return reports


def _run_part(part, n, trial, ps, budget, seed):
    out = []
    if part == "classical":
        K, L = InstanceGenerator("general_pair", n, n + 5, seed).build()
        out.append(check_rs_two_bodies(K, L, None, budget, seed))
        out.append(check_milman_pajor(K, L, budget, seed))
        out.append(check_volume_polars(K, L, budget, seed))
        out.append(check_rs_convex_hull(K, L, budget, seed))
        out.append(check_firey(K, budget, seed))
        for p in ps:
            out.append(check_bm_dual_p(K, p, budget, seed))
    elif part == "thm_rspolar":
        K, L = InstanceGenerator("centered_polar_pair", n, n + 5, seed).build()
        for p in ps:
            out.append(check_rspolar(K, L, p, budget, seed))
        out.append(check_rspolar_p1(K, L, budget, seed))
    elif part == "thm_rspolar_reverse":
        K, L = InstanceGenerator("general_pair", n, n + 5, seed).build()
        for p in ps:
            out.append(check_rspolar_reverse(K, L, p, budget, seed))
    elif part == "thm_reverse_functional":
        fi, gi = InstanceGenerator("function_pair", n, n + 5, seed,
                                   family="indicator").build()
        out.append(check_reverse_functional_rs(fi, gi, budget, seed))
        p_exp = next(iter(_finite(ps)), 1.0)
        fe, ge = InstanceGenerator("function_pair", n, n + 5, seed,
                                   p=p_exp, family="exp_support").build()
        out.append(check_reverse_functional_rs(fe, ge, budget, seed))
        fg, gg = InstanceGenerator("function_pair", n, n + 5, seed,
                                   family="gaussian").build()
        out.append(check_reverse_functional_rs(fg, gg, budget, seed))
    elif part == "projection":
        p_exp = next((p for p in _finite(ps) if p > 1), 2.0)
        K, L = InstanceGenerator("centered_polar_pair", n, n + 5, seed).build()
        f = exp_neg_support_pow(K, p_exp)
        g = exp_neg_support_pow(L, p_exp)
        out.append(check_projection_section(f, g, 0.5, budget, seed))
        S = InstanceGenerator("symmetric_body", n, n + 5, seed).build()
        fs = exp_neg_support_pow(S, p_exp)
        out.append(check_projection_section(fs, fs, 0.5, budget, seed, upper=True))
    elif part == "lemmas":
        out.append(verify_jensen_weighted(n, 50, seed))
        K = random_polytope(n, n + 5, _seed_of(seed, 30), ensure_origin_interior=True)
        L0 = random_polytope(n, n + 5, _seed_of(seed, 31), ensure_origin_interior=True)
        for f in (indicator(K), exp_neg_support_pow(K, 1.0),
                  exp_neg_support_pow(K, 2.0)):
            out.append(verify_ball_body_volume(f, 4000, seed))
        out.append(verify_level_set_inclusion(exp_neg_support_pow(K, 2.0),
                                              seed=seed))
        out.extend(verify_epigraph_barycenter(lc.gaussian(n), budget, seed))
        out.extend(verify_epigraph_barycenter(exp_neg_support_pow(center(K), 1.0),
                                              budget, seed))
        Kp, Lp = InstanceGenerator("opposite_polar_pair", n, n + 5, seed).build()
        p_exp = next((p for p in _finite(ps) if p > 1), 2.0)
        out.append(verify_centered_level_sets(Kp, Lp, p_exp, 0.5, budget, seed))
        out.append(verify_sup_convolution_closed_form(K, L0, p_exp, 20, seed))
    return out


def summarize(reports) -> list[dict]:
    """Aggregate counts and ratio extrema per (check_id, n, p) group."""
    groups = {}
    for r in reports:
        key = (r.check_id, r.n, "inf" if r.p == math.inf else r.p)
        g = groups.setdefault(key, {"check_id": r.check_id, "n": r.n,
                                    "p": key[2], "trials": 0, "pass": 0,
                                    "fail": 0, "inconclusive": 0,
                                    "min_ratio": None, "max_ratio": None})
        g["trials"] += 1
        g[r.verdict] += 1
        if r.ratio is not None:
            g["min_ratio"] = r.ratio if g["min_ratio"] is None else min(g["min_ratio"], r.ratio)
            g["max_ratio"] = r.ratio if g["max_ratio"] is None else max(g["max_ratio"], r.ratio)
    return [groups[k] for k in sorted(groups, key=lambda k: (k[0], k[1], str(k[2])))]
