"""Log-concave functions and their calculus.

Every function here is e^{-v} with v convex.  The closed-form families
are normalised internally to the shape

    f(x) = exp(-c * |x|_B^p),      c > 0, p >= 1, B a convex body,

which covers indicators' polars, exp(-h_K^p) (take B = K^polar, c = 1),
exp(-|x|_K^p / p) (c = 1/p) and Gaussians (B a ball, p = 2).  That one
normal form makes integrals, entropy, barycenters, level sets, Asplund
products and polar functions closed-form for the whole family;
everything else falls back to grid search / Monte Carlo / quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .geometry import (ConvexBody, DimMismatch, EuclideanBall,
                       GaugeOracleBody, OriginNotInterior, Polytope,
                       as_vector, body_from_json, body_to_json,
                       exponent_from_json, exponent_to_json,
                       intersect_polytopes, lp_sum, negate, polar, scale,
                       translate)
from .volume import VolumeEstimate, volume, volume_exact

# integration cutoff: level sets below exp(-TAIL_CUT) of the sup are
# dropped; their mass is < 1e-12 of the total for desk-scale instances
TAIL_CUT = 40.0


class NotIntegrable(ValueError):
    """The function carries no usable bounding data."""


class UnboundedConjugate(RuntimeError):
    """The Legendre supremum ran into the search boundary."""


class ZeroAtOrigin(ValueError):
    """Ball-body construction needs f(0) > 0."""


class EmptyLevelSet(ValueError):
    """Requested level is above the supremum (or degenerate)."""


class LogConcaveFn:
    """A log-concave function with an optional closed-form family tag.

    family is one of "indicator", "exp_neg_support_pow",
    "exp_neg_gauge_pow", "gaussian", "grid".  Power families share the
    internal (gauge_body, p, coeff) normal form described in the module
    docstring.
    """

    def __init__(self, dim, family, *, body=None, p=None, coeff=None,
                 gauge_body=None, fn=None, sigma=None, bounding_radius=None):
        self.dim = int(dim)
        self.family = family
        self.body = body
        self.p = p
        self.coeff = coeff
        self.gauge_body = gauge_body
        self.fn = fn
        self.sigma = sigma
        if bounding_radius is None:
            bounding_radius = self._default_radius()
        self.bounding_radius = float(bounding_radius)

    def _default_radius(self):
        if self.family == "indicator":
            return self.body.cube_halfwidth()
        if self.is_power:
            level = (TAIL_CUT / self.coeff) ** (1.0 / self.p)
            return level * self.gauge_body.cube_halfwidth()
        raise NotIntegrable("generic functions need an explicit bounding radius")

    @property
    def is_power(self) -> bool:
        return self.gauge_body is not None

    def __call__(self, X):
        single = np.asarray(X).ndim == 1
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if X.shape[1] != self.dim:
            raise DimMismatch(f"points of dimension {X.shape[1]} for a "
                              f"{self.dim}-dimensional function")
        if self.family == "indicator":
            vals = self.body.contains_batch(X).astype(float)
        elif self.is_power:
            vals = np.exp(-self.coeff * self.gauge_body.gauge_batch(X) ** self.p)
        else:
            vals = np.asarray(self.fn(X), dtype=float)
        return float(vals[0]) if single else vals

    def to_json(self) -> dict:
        payload = {"family": self.family, "dim": self.dim}
        if self.family == "indicator":
            payload["body"] = body_to_json(self.body)
        elif self.family == "gaussian":
            payload["sigma"] = self.sigma
        elif self.is_power:
            payload["body"] = body_to_json(self.body)
            payload["p"] = exponent_to_json(self.p)
            payload["scale"] = self.coeff
        else:
            raise TypeError("grid-backed functions are regenerated, not serialised")
        return payload

    @classmethod
    def from_json(cls, payload) -> "LogConcaveFn":
        family = payload["family"]
        if family == "indicator":
            return indicator(body_from_json(payload["body"]))
        if family == "gaussian":
            return gaussian(payload["dim"], payload["sigma"])
        if family == "exp_neg_support_pow":
            return exp_neg_support_pow(body_from_json(payload["body"]),
                                       exponent_from_json(payload["p"]))
        if family == "exp_neg_gauge_pow":
            body = body_from_json(payload["body"])
            p = exponent_from_json(payload["p"])
            return power_gauge(body, p, payload.get("scale", 1.0 / p))
        raise ValueError(f"unknown family {family!r}")

    def describe(self) -> dict:
        d = {"family": self.family, "dim": self.dim}
        if self.sigma is not None:
            d["sigma"] = self.sigma
        if self.p is not None:
            d["p"] = exponent_to_json(self.p)
        if self.coeff is not None:
            d["scale"] = self.coeff
        if self.body is not None:
            d["body"] = self.body.describe()
        return d


def indicator(body: ConvexBody) -> LogConcaveFn:
    """Characteristic function of a convex body."""
    return LogConcaveFn(body.dim, "indicator", body=body)


def exp_neg_support_pow(body: ConvexBody, p) -> LogConcaveFn:
    """f = exp(-h_K^p); the gauge normal form uses B = K^polar, c = 1."""
    if p == math.inf or p < 1:
        raise ValueError("exponent must be finite and >= 1")
    return LogConcaveFn(body.dim, "exp_neg_support_pow", body=body, p=float(p),
                        coeff=1.0, gauge_body=polar(body))


def exp_neg_gauge_pow(body: ConvexBody, p) -> LogConcaveFn:
    """f = exp(-|x|_K^p / p), the scaling that makes polarity swap p and q."""
    if p == math.inf or p < 1:
        raise ValueError("exponent must be finite and >= 1")
    return LogConcaveFn(body.dim, "exp_neg_gauge_pow", body=body, p=float(p),
                        coeff=1.0 / p, gauge_body=body)


def power_gauge(body: ConvexBody, p, coeff) -> LogConcaveFn:
    """General member exp(-coeff * |x|_K^p) of the power family."""
    if p == math.inf or p < 1 or coeff <= 0:
        raise ValueError("need finite p >= 1 and coeff > 0")
    return LogConcaveFn(body.dim, "exp_neg_gauge_pow", body=body, p=float(p),
                        coeff=float(coeff), gauge_body=body)


def gaussian(dim: int, sigma: float = 1.0) -> LogConcaveFn:
    """f = exp(-|x|^2 / (2 sigma^2))."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    ball = EuclideanBall(1.0, dim)
    return LogConcaveFn(dim, "gaussian", body=ball, p=2.0,
                        coeff=1.0 / (2.0 * sigma * sigma), gauge_body=ball,
                        sigma=float(sigma))


def grid_fn(fn, dim: int, bounding_radius: float, label="grid") -> LogConcaveFn:
    """Numerically defined function; values are recomputed, never stored."""
    f = LogConcaveFn(dim, "grid", fn=fn, bounding_radius=bounding_radius)
    f.label = label
    return f


# ---------------------------------------------------------------------------
# basic functionals


def sup_norm(f: LogConcaveFn) -> float:
    """All closed-form families attain their sup (= 1) at the origin;
    grid functions are maximised over a refined lattice."""
    if f.family == "indicator" or f.is_power:
        return 1.0
    best, _ = _grid_max(lambda X: f(X), f.dim, f.bounding_radius)
    return best


def integral(f: LogConcaveFn, n_samples: int = 200_000, seed: int = 0,
             method: str = "auto"):
    """integral of f over R^n, returned as (value, stderr).

    Closed forms: |K| for indicators and
    Gamma(1+n/p) c^{-n/p} |B| for the power family (so exp(-h_K^p)
    integrates to Gamma(1+n/p) |K^polar|).  Monte Carlo over the
    cutoff bounding cube otherwise, and 1-d quadrature on request.
    """
    n = f.dim
    if method == "auto":
        if f.family == "indicator" or f.is_power:
            method = "closed"
        elif n == 1:
            method = "quad"
        else:
            method = "mc"
    if method == "closed":
        if f.family == "indicator":
            est = volume(f.body, n_samples, seed)
            return est.value, est.stderr
        if f.is_power:
            est = volume(f.gauge_body, n_samples, seed)
            factor = math.gamma(1.0 + n / f.p) * f.coeff ** (-n / f.p)
            return factor * est.value, factor * est.stderr
        raise NotIntegrable("no closed form for this family")
    if method == "quad":
        if n != 1:
            raise ValueError("quadrature route is 1-d only")
        R = f.bounding_radius
        val, err = quad(lambda t: f(np.array([t])), -R, R, limit=200)
        return float(val), float(err)
    if method == "mc":
        rng = np.random.default_rng(seed)
        R = f.bounding_radius
        X = rng.uniform(-R, R, size=(n_samples, n))
        vals = f(X)
        cube = (2.0 * R) ** n
        return (cube * float(vals.mean()),
                cube * float(vals.std(ddof=1)) / math.sqrt(n_samples))
    raise ValueError(f"unknown method {method!r}")


def barycenter_fn(f: LogConcaveFn, n_samples: int = 200_000, seed: int = 0,
                  method: str = "auto"):
    """Mass centroid integral(x f)/integral(f) as (vector, stderr vector).

    For the power family the centroid is a closed multiple of the
    centroid of the gauge body:
        (n+1) Gamma((n+1)/p) / (n Gamma(n/p) c^(1/p)) * bary(B),
    so exp(-h_K^p) is centred exactly when K^polar is.
    """
    from .geometry import barycenter as body_barycenter
    n = f.dim
    if method == "auto":
        method = "closed" if (f.family == "indicator" or f.is_power) else "mc"
    if method == "closed":
        if f.family == "indicator":
            return body_barycenter(f.body, n_samples, seed)
        if f.is_power:
            bc, err = body_barycenter(f.gauge_body, n_samples, seed)
            const = ((n + 1.0) * math.gamma((n + 1.0) / f.p)
                     / (n * math.gamma(n / f.p) * f.coeff ** (1.0 / f.p)))
            return const * bc, const * err
        raise NotIntegrable("no closed form for this family")
    rng = np.random.default_rng(seed)
    R = f.bounding_radius
    X = rng.uniform(-R, R, size=(n_samples, n))
    w = f(X)
    mass = w.sum()
    if mass <= 0:
        raise NotIntegrable("function vanished on the whole sample")
    mean = (X * w[:, None]).sum(axis=0) / mass
    # delta-method error for the weighted mean
    resid = (X - mean) * w[:, None]
    err = np.sqrt((resid ** 2).sum(axis=0)) / mass
    return mean, err


def entropy(f: LogConcaveFn, n_samples: int = 200_000, seed: int = 0,
            method: str = "auto"):
    """Ent(f) = -integral(f log f)/integral(f), with 0 log 0 = 0.

    The whole power family has Ent = n/p (Gaussians give n/2, exp(-|x|)
    in 1-d gives 1); indicators give 0.  Returns (value, stderr).
    """
    n = f.dim
    if method == "auto":
        if f.family == "indicator":
            return 0.0, 0.0
        if f.is_power:
            return n / f.p, 0.0
        method = "quad" if n == 1 else "mc"
    if method == "closed":
        if f.family == "indicator":
            return 0.0, 0.0
        if f.is_power:
            return n / f.p, 0.0
        raise NotIntegrable("no closed form for this family")
    floor = 1e-300

    def nlogf(vals):
        out = np.zeros_like(vals)
        mask = vals > floor
        out[mask] = -vals[mask] * np.log(vals[mask])
        return out

    if method == "quad":
        if n != 1:
            raise ValueError("quadrature route is 1-d only")
        R = f.bounding_radius
        num, num_err = quad(lambda t: nlogf(np.array(f(np.array([[t]])))).item(),
                            -R, R, limit=200)
        den, den_err = quad(lambda t: f(np.array([t])), -R, R, limit=200)
        val = num / den
        err = (abs(num_err) + abs(val) * abs(den_err)) / den
        return float(val), float(err)
    rng = np.random.default_rng(seed)
    R = f.bounding_radius
    X = rng.uniform(-R, R, size=(n_samples, n))
    vals = f(X)
    num = nlogf(vals)
    den_mean = vals.mean()
    if den_mean <= 0:
        raise NotIntegrable("function vanished on the whole sample")
    ratio = float(num.mean() / den_mean)
    resid = num - ratio * vals
    err = float(resid.std(ddof=1)) / (math.sqrt(n_samples) * den_mean)
    return ratio, err


# ---------------------------------------------------------------------------
# products and transforms


def asplund(f: LogConcaveFn, g: LogConcaveFn) -> LogConcaveFn:
    """Asplund (sup-convolution) product sup_{x1+x2=x} f(x1) g(x2).

    Closed forms: indicators multiply to the indicator of the Minkowski
    sum; same-exponent power functions combine through the lq-sum of
    their rescaled gauge bodies (exp(-h_K^p) pairs land on
    exp(-h^p) of the lp-intersection); Gaussians add variances.
    Anything else is evaluated by refined grid search over splits.
    """
    if f.dim != g.dim:
        raise DimMismatch("Asplund product needs equal dimensions")
    if f.family == "indicator" and g.family == "indicator":
        return indicator(lp_sum(f.body, g.body, 1))
    if f.family == "gaussian" and g.family == "gaussian":
        return gaussian(f.dim, math.hypot(f.sigma, g.sigma))
    if f.is_power and g.is_power and f.p == g.p:
        p = f.p
        q = math.inf if p == 1 else p / (p - 1.0)
        a = scale(f.gauge_body, f.coeff ** (-1.0 / p))
        b = scale(g.gauge_body, g.coeff ** (-1.0 / p))
        combined = lp_sum(a, b, q)
        if (f.family == "exp_neg_support_pow" and g.family == "exp_neg_support_pow"
                and f.coeff == 1.0 and g.coeff == 1.0):
            from .geometry import lp_intersection
            return exp_neg_support_pow(lp_intersection(f.body, g.body, p), p)
        return power_gauge(combined, p, 1.0)
    radius = f.bounding_radius + g.bounding_radius

    def evaluate(X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return np.array([asplund_at(f, g, x) for x in X])

    return grid_fn(evaluate, f.dim, radius, label="asplund")


def asplund_at(f: LogConcaveFn, g: LogConcaveFn, x, splits=33, rounds=3) -> float:
    """Numeric sup-convolution at a single point: refined grid over the
    split y in f(y) g(x-y).  Cross-check oracle for the closed forms."""
    x = as_vector(x, f.dim)
    width = f.bounding_radius + g.bounding_radius
    centre = 0.5 * x
    best = 0.0
    for _ in range(rounds):
        axes = [np.linspace(c - width, c + width, splits) for c in centre]
        mesh = np.meshgrid(*axes, indexing="ij")
        Y = np.column_stack([m.ravel() for m in mesh])
        vals = f(Y) * g(x[None, :] - Y)
        k = int(vals.argmax())
        if vals[k] >= best:
            best = float(vals[k])
            centre = Y[k]
        width *= 2.0 * 2.0 / (splits - 1)
    return best


def convolution_at(f: LogConcaveFn, g: LogConcaveFn, x, n_samples: int = 200_000,
                   seed: int = 0, method: str = "auto"):
    """(f*g)(x) = integral f(y) g(x-y) dy, as (value, stderr).

    Indicator pairs over low-dimensional polytopes reduce to the exact
    volume |K  (x - L)|; Gaussian pairs are closed form; dimension one
    uses quadrature; the rest is Monte Carlo over f's bounding cube.
    """
    if f.dim != g.dim:
        raise DimMismatch("convolution needs equal dimensions")
    x = as_vector(x, f.dim)
    n = f.dim
    if method == "auto":
        if (f.family == "indicator" and g.family == "indicator"
                and isinstance(f.body, Polytope) and isinstance(g.body, Polytope)
                and n <= 3):
            method = "exact"
        elif f.family == "gaussian" and g.family == "gaussian":
            method = "closed"
        elif n == 1:
            method = "quad"
        else:
            method = "mc"
    if method == "exact":
        shifted = translate(negate(g.body), x)
        from .geometry import DegenerateInstance
        try:
            cap = intersect_polytopes(f.body, shifted)
        except DegenerateInstance:
            return 0.0, 0.0
        return volume_exact(cap).value, 0.0
    if method == "closed":
        s1, s2 = f.sigma ** 2, g.sigma ** 2
        amp = (2.0 * math.pi * s1 * s2 / (s1 + s2)) ** (n / 2.0)
        return amp * math.exp(-float(x @ x) / (2.0 * (s1 + s2))), 0.0
    if method == "quad":
        if n != 1:
            raise ValueError("quadrature route is 1-d only")
        lo = max(-f.bounding_radius, x[0] - g.bounding_radius)
        hi = min(f.bounding_radius, x[0] + g.bounding_radius)
        if lo >= hi:
            return 0.0, 0.0
        val, err = quad(lambda t: f(np.array([t])) * g(np.array([x[0] - t])),
                        lo, hi, limit=200)
        return float(val), float(err)
    rng = np.random.default_rng(seed)
    R = f.bounding_radius
    Y = rng.uniform(-R, R, size=(n_samples, n))
    vals = f(Y) * g(x[None, :] - Y)
    cube = (2.0 * R) ** n
    return (cube * float(vals.mean()),
            cube * float(vals.std(ddof=1)) / math.sqrt(n_samples))


def _grid_max(fn, dim, radius, splits=33, rounds=3, centre=None):
    """Refined grid maximisation; returns (value, argmax)."""
    centre = np.zeros(dim) if centre is None else as_vector(centre, dim)
    width = float(radius)
    best = -math.inf
    best_at = centre
    for _ in range(rounds):
        axes = [np.linspace(c - width, c + width, splits) for c in centre]
        mesh = np.meshgrid(*axes, indexing="ij")
        Y = np.column_stack([m.ravel() for m in mesh])
        vals = np.asarray(fn(Y), dtype=float)
        k = int(vals.argmax())
        if vals[k] > best:
            best = float(vals[k])
            best_at = Y[k]
        centre = best_at
        width *= 2.0 * 2.0 / (splits - 1)
    return best, best_at


def legendre(v, x, radius, splits=65, rounds=3) -> float:
    """Legendre transform sup_y <x,y> - v(y) over the cube [-R, R]^n.

    v must be a batch callable; the caller declares coercivity through
    the search radius.  The supremum is located on a multi-resolution
    grid (at least two refinement rounds); if the incumbent sits on the
    outer search boundary the conjugate is flagged as unbounded.
    """
    x = np.asarray(x, dtype=float)
    dim = x.shape[0]

    def neg_obj(Y):
        return Y @ x - np.asarray(v(Y), dtype=float)

    best, best_at = _grid_max(neg_obj, dim, radius, splits, rounds)
    if np.abs(best_at).max() >= radius * (1.0 - 1e-9):
        raise UnboundedConjugate(
            "supremum attained on the search boundary; enlarge the radius")
    return best


def polar_fn(f: LogConcaveFn) -> LogConcaveFn:
    """Polar function inf_y e^{-<x,y>} / f(y) = exp(-L(-log f)(x)).

    Closed per family: indicators polarise to exp(-gauge of the polar
    body); exp(-c |x|_B^p) maps to exp(-c' |x|_{B^polar}^q) with
    c' = (cp)^(1-q)/q (so the 1/p-scaled family swaps p and q, and the
    standard Gaussian is self-polar); p = 1 collapses back to an
    indicator.  Generic functions go through the numeric Legendre
    transform of -log f.
    """
    if f.family == "indicator":
        if not f.body.origin_interior:
            raise OriginNotInterior("polar of an indicator needs 0 interior")
        return power_gauge(polar(f.body), 1.0, 1.0)
    if f.is_power:
        if f.p == 1.0:
            return indicator(scale(polar(f.gauge_body), f.coeff))
        q = f.p / (f.p - 1.0)
        coeff = (f.coeff * f.p) ** (1.0 - q) / q
        out = power_gauge(polar(f.gauge_body), q, coeff)
        if f.family == "gaussian":
            return gaussian(f.dim, 1.0 / f.sigma)
        return out
    radius = max(4.0 * TAIL_CUT / max(f.bounding_radius, 1e-9),
                 f.bounding_radius)

    def evaluate(X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        floor = 1e-300

        def vlog(Y):
            vals = np.maximum(np.asarray(f(Y), dtype=float), floor)
            return -np.log(vals)

        return np.array([math.exp(-legendre(vlog, xi, radius)) for xi in X])

    return grid_fn(evaluate, f.dim, radius, label="polar_fn")


# ---------------------------------------------------------------------------
# ball bodies and level sets


def ball_body_gauge(f: LogConcaveFn, x, p=None) -> float:
    """Gauge of the moment body K_p(f):
        |x| = (p / f(0) * integral_0^inf f(r x) r^{p-1} dr)^(-1/p),
    the p = n default being the body whose volume is integral(f)/f(0).
    Computed by adaptive 1-d quadrature along the ray."""
    x = as_vector(x, f.dim)
    if p is None:
        p = f.dim
    f0 = f(np.zeros(f.dim))
    if f0 <= 0:
        raise ZeroAtOrigin("ball body needs f(0) > 0")
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        return 0.0
    r_max = _ray_cutoff(f, x)
    kwargs = {"limit": 200}
    if f.family == "indicator":
        edge = 1.0 / f.body.gauge_batch(x[None, :])[0]
        kwargs["points"] = [min(edge, r_max)]
    val, _ = quad(lambda r: f(r * x) * r ** (p - 1.0), 0.0, r_max, **kwargs)
    if val <= 0:
        raise ZeroAtOrigin("radial integral vanished along this ray")
    return (p * val / f0) ** (-1.0 / p)


def _ray_cutoff(f: LogConcaveFn, x, floor=1e-18, cap=1e9):
    """Smallest dyadic r with f(r x) below the floor (or the cap)."""
    r = 1.0
    while r < cap and f(r * np.asarray(x, dtype=float)) > floor:
        r *= 2.0
    return r


def ball_body(f: LogConcaveFn, p=None) -> GaugeOracleBody:
    """K_p(f) as a gauge-oracle convex body (default p = n)."""
    f0 = f(np.zeros(f.dim))
    if f0 <= 0:
        raise ZeroAtOrigin("ball body needs f(0) > 0")

    def gfn(X):
        return np.array([ball_body_gauge(f, row, p) for row in np.atleast_2d(X)])

    return GaugeOracleBody(gfn, f.dim, f.bounding_radius + 1.0, label="ball_body")


@dataclass(frozen=True)
class EpigraphLevelSet:
    """One superlevel set {x : f(x) >= t sup f} of a log-concave f."""

    t: float
    body: ConvexBody


def level_set(f: LogConcaveFn, t: float) -> EpigraphLevelSet:
    """Superlevel set at height t * sup f, exact for the closed
    families: indicators return the body itself, the power family
    returns ((-log t)/c)^(1/p) times the gauge body.  Generic functions
    get a gauge oracle built by ray bisection (sup must sit at 0)."""
    if t > 1.0:
        raise EmptyLevelSet(f"level {t} exceeds the supremum")
    if t <= 0.0:
        raise ValueError("level must be in (0, 1]")
    if f.family == "indicator":
        return EpigraphLevelSet(t, f.body)
    if f.is_power:
        if t == 1.0:
            raise EmptyLevelSet("level 1 collapses to the single point {0}")
        lam = ((-math.log(t)) / f.coeff) ** (1.0 / f.p)
        return EpigraphLevelSet(t, scale(f.gauge_body, lam))
    s = sup_norm(f)
    if f(np.zeros(f.dim)) < t * s * (1.0 - 1e-9):
        raise EmptyLevelSet("generic level sets need the sup attained at 0")

    def gauge_rows(X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        out = np.zeros(len(X))
        for i, row in enumerate(X):
            if not row.any():
                continue
            lo, hi = 0.0, 1.0
            while f(hi * row) >= t * s and hi < 1e9:
                hi *= 2.0
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if f(mid * row) >= t * s:
                    lo = mid
                else:
                    hi = mid
            out[i] = 1.0 / max(0.5 * (lo + hi), 1e-300)
        return out

    return EpigraphLevelSet(t, GaugeOracleBody(gauge_rows, f.dim,
                                               f.bounding_radius, label="level_set"))


def check_log_concavity(f: LogConcaveFn, trials: int = 200, seed: int = 0,
                        tol: float = 1e-9) -> float:
    """Largest violation of f(lx+(1-l)y) >= f(x)^l f(y)^(1-l) on random
    triples; nonpositive (up to tol) for genuinely log-concave f."""
    rng = np.random.default_rng(seed)
    R = f.bounding_radius
    X = rng.uniform(-R, R, size=(trials, f.dim))
    Y = rng.uniform(-R, R, size=(trials, f.dim))
    lam = rng.uniform(0.0, 1.0, size=trials)
    mid = lam[:, None] * X + (1.0 - lam[:, None]) * Y
    lhs = f(mid)
    rhs = f(X) ** lam * f(Y) ** (1.0 - lam)
    return float((rhs - lhs).max())
