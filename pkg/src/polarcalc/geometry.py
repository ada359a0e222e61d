"""Convex bodies and the polar / lp-sum calculus on them.

Bodies come in two flavours: explicit polytopes (exact vertex and facet
data, hence exact support function and gauge) and oracle bodies whose
support or gauge is evaluated on demand.  Composite constructions keep
whichever side of the support/gauge duality admits a closed form exact
and fall back to directional-grid maximisation on the other side:

* ``polar(K)`` swaps support and gauge, so the polar of a body with an
  exact gauge has an exact support function and vice versa.
* an lp-sum has the exact support ``(h_K^p + h_L^p)^(1/p)``; its gauge
  is the numeric dual value ``sup_u <x,u>/h(u)``.
* an lp-intersection is the polar of the lp-sum of the polars, so its
  gauge ``(|x|_K^q + |x|_L^q)^(1/q)`` is exact whenever the operand
  gauges are.

All bodies are immutable after construction and safe to evaluate from
multiple threads.  Randomised constructors take explicit seeds.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection, QhullError


class OriginNotInterior(ValueError):
    """The operation needs 0 strictly inside the body."""


class BadExponent(ValueError):
    """lp exponent outside [1, infinity]."""


class DegenerateInstance(RuntimeError):
    """Random instance construction kept producing degenerate data."""


class DimMismatch(ValueError):
    """Operands live in different ambient dimensions."""


GEOM_TOL = 1e-9

# Directional grids used by the numeric gauge/support fallback.  The
# n >= 3 grids are random but seeded once per (dim, size), so every
# oracle evaluation is deterministic.
_GRID_SEED = 0x5EED
_grid_cache: dict[tuple[int, int], np.ndarray] = {}


def as_vector(x, dim=None):
    v = np.asarray(x, dtype=float)
    if v.ndim == 0:
        v = v.reshape(1)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise DimMismatch(f"expected dimension {dim}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def conjugate_exponent(p):
    """Hoelder conjugate q with 1/p + 1/q = 1; handles p in {1, inf}."""
    check_exponent(p)
    if p == 1:
        return math.inf
    if p == math.inf:
        return 1.0
    return p / (p - 1.0)


def check_exponent(p):
    if p == math.inf:
        return
    if not (isinstance(p, (int, float)) and p >= 1):
        raise BadExponent(f"lp exponent must be >= 1 or inf, got {p!r}")


def sphere_directions(dim, size, seed=_GRID_SEED):
    """Deterministic unit directions: evenly spaced on the circle for
    dim 2, a seeded Gaussian sample on the sphere otherwise."""
    if dim == 1:
        return np.array([[1.0], [-1.0]])
    if dim == 2:
        theta = np.linspace(0.0, 2.0 * np.pi, size, endpoint=False)
        return np.column_stack([np.cos(theta), np.sin(theta)])
    rng = np.random.default_rng(seed)
    u = rng.standard_normal((size, dim))
    return u / np.linalg.norm(u, axis=1, keepdims=True)


def _cached_grid(dim, size):
    key = (dim, size)
    if key not in _grid_cache:
        _grid_cache[key] = sphere_directions(dim, size)
    return _grid_cache[key]


def _default_grid_size(dim):
    return {1: 2, 2: 1024, 3: 4096}.get(dim, 8192)


def _dual_value_batch(phi_batch, X, dim, rounds=None, grid_size=None,
                      chunk=8192):
    """max over unit u of <x, u> / phi(u), rowwise for X.

    This is the gauge of {phi <= 1}'s polar evaluated from the support
    oracle phi (or, dually, the support of a body given by its gauge):
    the points u/phi(u) trace the polar boundary, so the maximum over
    the grid is the support of an inner polytope of the polar body.
    A coarse global grid is refined locally around the incumbent; the
    work is chunked so large Monte Carlo batches stay cache-friendly.
    Small batches get more refinement rounds since they back pointwise
    gauge queries rather than averaged volume estimates.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if grid_size is None:
        grid_size = _default_grid_size(dim)
    if rounds is None:
        rounds = 3 if len(X) <= 4096 else 1
    dirs = _cached_grid(dim, grid_size)
    h = np.asarray(phi_batch(dirs), dtype=float)
    if h.min() <= GEOM_TOL:
        raise OriginNotInterior("support oracle vanishes on the sphere")
    boundary = dirs / h[:, None]

    out = np.empty(len(X))
    for start in range(0, len(X), chunk):
        block = X[start:start + chunk]
        scores = block @ boundary.T
        best = scores.max(axis=1)
        idx = scores.argmax(axis=1)
        if dim == 1:
            out[start:start + chunk] = best
            continue
        if dim == 2:
            best = _refine_circle(phi_batch, block, best,
                                  np.arctan2(dirs[idx, 1], dirs[idx, 0]),
                                  2.0 * (2.0 * np.pi / grid_size), rounds)
        else:
            best = _refine_caps(phi_batch, block, best, dirs[idx],
                                4.0 / math.sqrt(grid_size), rounds, dim)
        out[start:start + chunk] = best
    return out


def _refine_circle(phi_batch, X, best, theta_best, width, rounds, n_local=33):
    for _ in range(rounds):
        offs = np.linspace(-width, width, n_local)
        theta = theta_best[:, None] + offs[None, :]
        local = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        hv = np.asarray(phi_batch(local.reshape(-1, 2)), dtype=float)
        sc = np.einsum("ni,nki->nk", X, local) / hv.reshape(theta.shape)
        k = sc.argmax(axis=1)
        rows = np.arange(len(X))
        better = sc[rows, k] > best
        best = np.where(better, sc[rows, k], best)
        theta_best = np.where(better, theta[rows, k], theta_best)
        width *= 2.0 * 2.0 / (n_local - 1)
    return best


def _refine_caps(phi_batch, X, best, u_best, spread, rounds, dim, n_local=128):
    rng = np.random.default_rng(_GRID_SEED + 1)
    for _ in range(rounds):
        pert = rng.standard_normal((len(X), n_local, dim)) * spread
        local = u_best[:, None, :] + pert
        local /= np.linalg.norm(local, axis=2, keepdims=True)
        hv = np.asarray(phi_batch(local.reshape(-1, dim)), dtype=float)
        sc = np.einsum("ni,nki->nk", X, local) / hv.reshape(len(X), n_local)
        k = sc.argmax(axis=1)
        rows = np.arange(len(X))
        better = sc[rows, k] > best
        best = np.where(better, sc[rows, k], best)
        u_best = np.where(better[:, None], local[rows, k], u_best)
        spread /= 6.0
    return best


class ConvexBody:
    """Base class: a compact convex set with non-empty interior.

    Subclasses fill in ``support_batch`` and/or ``gauge_batch``; the
    flags ``exact_support`` / ``exact_gauge`` say which side is closed
    form and which is a numeric fallback.
    """

    dim: int
    origin_interior: bool = False
    exact_support: bool = False
    exact_gauge: bool = False

    def support(self, u) -> float:
        return float(self.support_batch(as_vector(u, self.dim)[None, :])[0])

    def gauge(self, x) -> float:
        return float(self.gauge_batch(as_vector(x, self.dim)[None, :])[0])

    def support_batch(self, U) -> np.ndarray:
        if self.origin_interior:
            return _dual_value_batch(self.gauge_batch, U, self.dim)
        raise NotImplementedError

    def gauge_batch(self, X) -> np.ndarray:
        if not self.origin_interior:
            raise OriginNotInterior(
                f"{type(self).__name__} does not contain 0 in its interior")
        return _dual_value_batch(self.support_batch, X, self.dim)

    def contains_batch(self, X, tol=1e-9) -> np.ndarray:
        return self.gauge_batch(X) <= 1.0 + tol

    def contains(self, x, tol=1e-9) -> bool:
        return bool(self.contains_batch(as_vector(x, self.dim)[None, :], tol)[0])

    # Half-width of the smallest origin-centred cube containing the body.
    def cube_halfwidth(self) -> float:
        axes = np.vstack([np.eye(self.dim), -np.eye(self.dim)])
        return float(self.support_batch(axes).max())

    def euclidean_radius(self) -> float:
        return math.sqrt(self.dim) * self.cube_halfwidth()

    def describe(self) -> dict:
        return {"kind": type(self).__name__, "dim": self.dim}


class Polytope(ConvexBody):
    """Convex polytope with both representations kept in sync.

    ``vertices`` is an (m, n) array of extreme points; ``normals`` /
    ``offsets`` give the facet inequalities <a_i, x> <= b_i with unit
    normals.  Both support function (max over vertices) and, when 0 is
    interior, gauge (max over facet ratios) are exact.
    """

    exact_support = True

    def __init__(self, points):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.ndim != 2 or pts.shape[0] < 2:
            raise ValueError("need at least two points")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite")
        n = pts.shape[1]
        self.dim = n
        if n == 1:
            lo, hi = float(pts.min()), float(pts.max())
            if hi - lo <= GEOM_TOL:
                raise DegenerateInstance("1-d polytope has empty interior")
            self.vertices = np.array([[lo], [hi]])
            self.normals = np.array([[1.0], [-1.0]])
            self.offsets = np.array([hi, -lo])
        else:
            try:
                hull = ConvexHull(pts)
            except QhullError as exc:
                raise DegenerateInstance(f"degenerate point set: {exc}") from exc
            if n == 2:
                # counter-clockwise order straight from qhull
                self.vertices = pts[hull.vertices]
            else:
                order = np.lexsort(pts[hull.vertices].T[::-1])
                self.vertices = pts[hull.vertices][order]
            self.normals, self.offsets = _dedupe_facets(hull.equations, n)
            self._hull = hull
        self._finish()

    @classmethod
    def _from_reps(cls, vertices, normals, offsets):
        """Trusted constructor used by exact operations (polar, affine
        maps) where both representations are already known."""
        self = cls.__new__(cls)
        self.dim = vertices.shape[1]
        if self.dim >= 3:
            order = np.lexsort(vertices.T[::-1])
            vertices = vertices[order]
        self.vertices = np.asarray(vertices, dtype=float)
        self.normals = np.asarray(normals, dtype=float)
        self.offsets = np.asarray(offsets, dtype=float)
        self._finish()
        return self

    def _finish(self):
        self.origin_interior = bool(self.offsets.min() > GEOM_TOL)
        self.exact_gauge = self.origin_interior
        self._scale = max(1.0, float(np.abs(self.vertices).max()))

    def support_batch(self, U):
        U = np.atleast_2d(np.asarray(U, dtype=float))
        return (U @ self.vertices.T).max(axis=1)

    def gauge_batch(self, X):
        if not self.origin_interior:
            raise OriginNotInterior("polytope does not contain 0 in its interior")
        X = np.atleast_2d(np.asarray(X, dtype=float))
        ratios = (X @ self.normals.T) / self.offsets
        return np.maximum(ratios.max(axis=1), 0.0)

    def contains_batch(self, X, tol=1e-9):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        slack = tol * self._scale
        return ((X @ self.normals.T) <= self.offsets + slack).all(axis=1)

    def cube_halfwidth(self):
        return float(np.abs(self.vertices).max())

    def euclidean_radius(self):
        return float(np.linalg.norm(self.vertices, axis=1).max())

    def hull(self):
        if not hasattr(self, "_hull"):
            self._hull = ConvexHull(self.vertices)
        return self._hull

    def simplices(self):
        """Fan triangulation: one simplex per hull facet simplex plus
        the vertex centroid.  Valid for any dimension."""
        c = self.vertices.mean(axis=0)
        if self.dim == 1:
            yield self.vertices
            return
        hull = self.hull()
        for facet in hull.simplices:
            yield np.vstack([hull.points[facet], c])

    def describe(self):
        return {"kind": "polytope", "dim": self.dim,
                "vertices": np.round(self.vertices, 12).tolist()}

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": self.vertices.tolist()}

    @classmethod
    def from_json(cls, payload) -> "Polytope":
        verts = np.asarray(payload["vertices"], dtype=float)
        if verts.shape[1] != payload["dim"]:
            raise ValueError("vertex dimension disagrees with 'dim'")
        return cls(verts)


def _dedupe_facets(equations, n):
    """qhull gives one equation per simplicial facet; merge coplanar
    duplicates and sort for determinism.  Rows are a.x + c <= 0 with
    unit normals, returned as (normals, offsets) for a.x <= b."""
    eq = np.unique(np.round(equations, 9), axis=0)
    normals = eq[:, :n]
    offsets = -eq[:, n]
    norms = np.linalg.norm(normals, axis=1)
    normals = normals / norms[:, None]
    offsets = offsets / norms
    order = np.lexsort(np.column_stack([normals, offsets]).T[::-1])
    return normals[order], offsets[order]


class EuclideanBall(ConvexBody):
    """Origin-centred Euclidean ball of a given radius."""

    exact_support = True
    exact_gauge = True
    origin_interior = True

    def __init__(self, radius, dim=2):
        if radius <= 0:
            raise ValueError("radius must be positive")
        self.radius = float(radius)
        self.dim = int(dim)

    def support_batch(self, U):
        U = np.atleast_2d(np.asarray(U, dtype=float))
        return self.radius * np.linalg.norm(U, axis=1)

    def gauge_batch(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return np.linalg.norm(X, axis=1) / self.radius

    def cube_halfwidth(self):
        return self.radius

    def euclidean_radius(self):
        return self.radius

    def describe(self):
        return {"kind": "ball", "dim": self.dim, "radius": self.radius}


class LpSumBody(ConvexBody):
    """Body defined by the support function (h_K^p + h_L^p)^(1/p).

    The support side is exact whenever the summands' supports are; the
    gauge side is the numeric dual value.  For 1 < p < inf both bodies
    must contain the origin so the powers are well defined.
    """

    def __init__(self, first, second, p):
        check_exponent(p)
        if first.dim != second.dim:
            raise DimMismatch("lp-sum of bodies with different dimensions")
        if p != 1 and p != math.inf:
            for part in (first, second):
                if not part.contains(np.zeros(part.dim)):
                    raise OriginNotInterior(
                        "lp-sum with 1 < p < inf needs 0 in both bodies")
        self.parts = (first, second)
        self.p = p
        self.dim = first.dim
        if p == 1:
            self.origin_interior = first.origin_interior and second.origin_interior
        else:
            # K +_p L contains both summands when their supports are nonnegative
            self.origin_interior = first.origin_interior or second.origin_interior
        self.exact_support = first.exact_support and second.exact_support
        self.exact_gauge = False

    def support_batch(self, U):
        ha = np.asarray(self.parts[0].support_batch(U), dtype=float)
        hb = np.asarray(self.parts[1].support_batch(U), dtype=float)
        if self.p == 1:
            return ha + hb
        if self.p == math.inf:
            return np.maximum(ha, hb)
        return (ha ** self.p + hb ** self.p) ** (1.0 / self.p)

    def describe(self):
        return {"kind": "lp_sum", "p": exponent_to_json(self.p),
                "parts": [b.describe() for b in self.parts]}


class PolarBody(ConvexBody):
    """Lazy polar: support and gauge of the base body swap roles."""

    def __init__(self, base):
        if not base.origin_interior:
            raise OriginNotInterior("polar needs 0 in the interior")
        self.base = base
        self.dim = base.dim
        self.origin_interior = True
        self.exact_support = base.exact_gauge
        self.exact_gauge = base.exact_support

    def support_batch(self, U):
        return self.base.gauge_batch(U)

    def gauge_batch(self, X):
        return self.base.support_batch(X)

    def describe(self):
        return {"kind": "polar", "base": self.base.describe()}


class GaugeOracleBody(ConvexBody):
    """Body given by a gauge callable (vectorised over rows)."""

    exact_gauge = True
    origin_interior = True

    def __init__(self, gauge_fn, dim, bounding_radius, label="gauge_oracle"):
        self._gauge = gauge_fn
        self.dim = dim
        self._radius = float(bounding_radius)
        self.label = label

    def gauge_batch(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return np.asarray(self._gauge(X), dtype=float)

    def cube_halfwidth(self):
        return self._radius

    def describe(self):
        return {"kind": self.label, "dim": self.dim}


class AffineBody(ConvexBody):
    """Image s*K + z of a base body (s nonzero, possibly negative)."""

    def __init__(self, base, scale_factor=1.0, shift=None):
        if scale_factor == 0:
            raise ValueError("scale factor must be nonzero")
        self.base = base
        self.s = float(scale_factor)
        self.shift = (np.zeros(base.dim) if shift is None
                      else as_vector(shift, base.dim))
        self.dim = base.dim
        self.exact_support = base.exact_support
        centred = not self.shift.any()
        self.exact_gauge = base.exact_gauge and centred
        if centred:
            self.origin_interior = base.origin_interior
        else:
            try:
                self.origin_interior = bool(self.contains(np.zeros(self.dim), tol=-1e-9))
            except Exception:
                self.origin_interior = False

    def support_batch(self, U):
        U = np.atleast_2d(np.asarray(U, dtype=float))
        inner = self.base.support_batch(U if self.s > 0 else -U)
        return abs(self.s) * inner + U @ self.shift

    def gauge_batch(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if not self.shift.any():
            return self.base.gauge_batch(X if self.s > 0 else -X) / abs(self.s)
        if not self.origin_interior:
            raise OriginNotInterior("affine image does not contain 0")
        return _bisect_gauge(self.contains_batch, X)

    def contains_batch(self, X, tol=1e-9):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return self.base.contains_batch((X - self.shift) / self.s, tol)

    def cube_halfwidth(self):
        return abs(self.s) * self.base.cube_halfwidth() + float(np.abs(self.shift).max(initial=0.0))

    def describe(self):
        return {"kind": "affine", "scale": self.s,
                "shift": self.shift.tolist(), "base": self.base.describe()}


def _bisect_gauge(contains_batch, X, iters=80):
    """Gauge from a membership oracle: per-row bisection on the ray
    scale.  Converges to ~1e-16 relative in 80 halvings."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    lo = np.zeros(len(X))
    hi = np.ones(len(X))
    # grow hi until x/hi is inside (gauge <= hi)
    for _ in range(200):
        inside = contains_batch(X / np.maximum(hi, 1e-300)[:, None])
        if inside.all():
            break
        hi[~inside] *= 2.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        inside = contains_batch(X / np.maximum(mid, 1e-300)[:, None])
        hi = np.where(inside, mid, hi)
        lo = np.where(inside, lo, mid)
    out = 0.5 * (lo + hi)
    return np.where(np.linalg.norm(X, axis=1) == 0.0, 0.0, out)


# ---------------------------------------------------------------------------
# operations


def support(K: ConvexBody, u) -> float:
    """Support function h_K(u) = max_{y in K} <u, y>."""
    return K.support(u)


def gauge(K: ConvexBody, x) -> float:
    """Minkowski gauge |x|_K = inf{lam > 0 : x in lam K}; needs 0 in int K."""
    return K.gauge(x)


def polar(K: ConvexBody) -> ConvexBody:
    """Polar body {x : <x,y> <= 1 for all y in K}.

    Polytopes map exactly (facets become vertices and vice versa);
    other bodies get a lazy wrapper that swaps support and gauge, and
    a double wrap collapses back to the base body.
    """
    if isinstance(K, PolarBody):
        return K.base
    if isinstance(K, Polytope):
        if not K.origin_interior:
            raise OriginNotInterior("polar needs 0 in the interior")
        verts = K.normals / K.offsets[:, None]
        vnorms = np.linalg.norm(K.vertices, axis=1)
        normals = K.vertices / vnorms[:, None]
        offsets = 1.0 / vnorms
        return Polytope._from_reps(verts, normals, offsets)
    if isinstance(K, EuclideanBall):
        return EuclideanBall(1.0 / K.radius, K.dim)
    if isinstance(K, AffineBody) and not K.shift.any():
        return AffineBody(polar(K.base), 1.0 / K.s)
    return PolarBody(K)


def negate(K: ConvexBody) -> ConvexBody:
    """Reflection -K; h_{-K}(u) = h_K(-u)."""
    if isinstance(K, Polytope):
        return Polytope._from_reps(-K.vertices, -K.normals, K.offsets)
    if isinstance(K, EuclideanBall):
        return K
    if isinstance(K, AffineBody):
        return AffineBody(K.base, -K.s, -K.shift)
    return AffineBody(K, -1.0)


def translate(K: ConvexBody, z) -> ConvexBody:
    """Translate K + z; h_{K+z}(u) = h_K(u) + <z, u>."""
    z = as_vector(z, K.dim)
    if isinstance(K, Polytope):
        return Polytope._from_reps(K.vertices + z, K.normals,
                                   K.offsets + K.normals @ z)
    if isinstance(K, AffineBody):
        return AffineBody(K.base, K.s, K.shift + z)
    return AffineBody(K, 1.0, z)


def scale(K: ConvexBody, lam: float) -> ConvexBody:
    """Dilate lam*K for lam > 0; h_{lam K} = lam h_K."""
    if lam <= 0:
        raise ValueError("scale factor must be positive")
    if isinstance(K, Polytope):
        return Polytope._from_reps(lam * K.vertices, K.normals, lam * K.offsets)
    if isinstance(K, EuclideanBall):
        return EuclideanBall(lam * K.radius, K.dim)
    if isinstance(K, AffineBody):
        return AffineBody(K.base, lam * K.s, lam * K.shift)
    return AffineBody(K, lam)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    """Exact Minkowski sum of two polytopes via pairwise vertex sums."""
    if P.dim != Q.dim:
        raise DimMismatch("Minkowski sum of bodies with different dimensions")
    pts = (P.vertices[:, None, :] + Q.vertices[None, :, :]).reshape(-1, P.dim)
    return Polytope(pts)


def convex_hull_of(P: Polytope, Q: Polytope) -> Polytope:
    """Exact conv{P, Q} of two polytopes."""
    if P.dim != Q.dim:
        raise DimMismatch("hull of bodies with different dimensions")
    return Polytope(np.vstack([P.vertices, Q.vertices]))


def intersect_polytopes(P: Polytope, Q: Polytope) -> Polytope:
    """Exact intersection of two polytopes.

    Works for bodies that need not contain the origin: an interior
    point of the intersection is found by a Chebyshev-centre LP and
    the combined facet system is vertex-enumerated around it.
    """
    if P.dim != Q.dim:
        raise DimMismatch("intersection of bodies with different dimensions")
    A = np.vstack([P.normals, Q.normals])
    b = np.concatenate([P.offsets, Q.offsets])
    n = P.dim
    # maximise t subject to A x + t <= b  (normals are unit length)
    res = linprog(c=np.r_[np.zeros(n), -1.0],
                  A_ub=np.column_stack([A, np.ones(len(b))]),
                  b_ub=b, bounds=[(None, None)] * n + [(0, None)],
                  method="highs")
    if not res.success or res.x[-1] <= 1e-9:
        raise DegenerateInstance("intersection has empty interior")
    centre = res.x[:n]
    if n == 1:
        lo = max(P.vertices.min(), Q.vertices.min())
        hi = min(P.vertices.max(), Q.vertices.max())
        return Polytope(np.array([[lo], [hi]]))
    hs = HalfspaceIntersection(np.column_stack([A, -b]), centre)
    return Polytope(hs.intersections)


def lp_sum(K: ConvexBody, L: ConvexBody, p) -> ConvexBody:
    """lp-sum K +_p L: support function (h_K^p + h_L^p)^(1/p).

    p = 1 is the Minkowski sum and p = inf is conv{K, L}; for two
    polytopes both of those stay exact polytopes.  Balls combine in
    closed form.  Everything else becomes a support oracle.
    """
    check_exponent(p)
    if K.dim != L.dim:
        raise DimMismatch("lp-sum of bodies with different dimensions")
    if isinstance(K, Polytope) and isinstance(L, Polytope):
        if p == 1:
            return minkowski_sum(K, L)
        if p == math.inf:
            return convex_hull_of(K, L)
    if isinstance(K, EuclideanBall) and isinstance(L, EuclideanBall):
        if p == math.inf:
            return EuclideanBall(max(K.radius, L.radius), K.dim)
        return EuclideanBall((K.radius ** p + L.radius ** p) ** (1.0 / p), K.dim)
    return LpSumBody(K, L, p)


def lp_intersection(K: ConvexBody, L: ConvexBody, p) -> ConvexBody:
    """lp-intersection via duality: (K^polar +_q L^polar)^polar with
    1/p + 1/q = 1.  p = 1 gives the plain intersection, p = inf gives
    the polar of the Minkowski sum of the polars."""
    check_exponent(p)
    if not (K.origin_interior and L.origin_interior):
        raise OriginNotInterior("lp-intersection needs 0 interior to both bodies")
    q = conjugate_exponent(p)
    return polar(lp_sum(polar(K), polar(L), q))


def lp_intersection_support_direct(K, L, p, x, splits=41, rounds=3):
    """Numeric inf-convolution cross-check for the support function of
    the lp-intersection: minimises (h_K^p(y) + h_L^p(x-y))^(1/p) over
    a refined grid of splits y.  Only used to validate the duality
    route, never as a primary path."""
    check_exponent(p)
    x = as_vector(x, K.dim)
    width = max(K.cube_halfwidth(), L.cube_halfwidth(), float(np.abs(x).max())) * 2.0
    centre = 0.5 * x

    def objective(Y):
        ha = np.maximum(K.support_batch(Y), 0.0)
        hb = np.maximum(L.support_batch(x[None, :] - Y), 0.0)
        if p == math.inf:
            return np.maximum(ha, hb)
        return (ha ** p + hb ** p) ** (1.0 / p)

    best_val = math.inf
    best_y = centre
    for _ in range(rounds):
        axes = [np.linspace(c - width, c + width, splits) for c in centre]
        mesh = np.meshgrid(*axes, indexing="ij")
        Y = np.column_stack([m.ravel() for m in mesh])
        vals = objective(Y)
        k = int(vals.argmin())
        if vals[k] < best_val:
            best_val = float(vals[k])
            best_y = Y[k]
        centre = best_y
        width *= 2.0 * 2.0 / (splits - 1)
    return best_val


def barycenter(K: ConvexBody, trials=200_000, seed=0):
    """Volume centroid of K, with a standard-error vector.

    Exact (stderr 0) for polytopes in dimension <= 3 via the fan
    triangulation, for balls, and for affine images of those; Monte
    Carlo over the bounding cube otherwise.
    """
    if isinstance(K, EuclideanBall):
        return np.zeros(K.dim), np.zeros(K.dim)
    if isinstance(K, Polytope) and K.dim <= 3:
        return _polytope_barycenter(K), np.zeros(K.dim)
    if isinstance(K, AffineBody):
        inner, err = barycenter(K.base, trials, seed)
        return K.s * inner + K.shift, abs(K.s) * err
    rng = np.random.default_rng(seed)
    R = K.cube_halfwidth()
    X = rng.uniform(-R, R, size=(trials, K.dim))
    inside = K.contains_batch(X)
    hits = X[inside]
    if len(hits) < 2:
        raise DegenerateInstance("no Monte Carlo hits while estimating barycenter")
    mean = hits.mean(axis=0)
    err = hits.std(axis=0, ddof=1) / math.sqrt(len(hits))
    return mean, err


def _polytope_barycenter(P: Polytope):
    if P.dim == 1:
        return P.vertices.mean(axis=0)
    hull = P.hull()
    c = hull.points[hull.vertices].mean(axis=0)
    total = 0.0
    acc = np.zeros(P.dim)
    fact = math.factorial(P.dim)
    for facet in hull.simplices:
        simplex = hull.points[facet]
        vol = abs(np.linalg.det(simplex - c)) / fact
        centroid = (simplex.sum(axis=0) + c) / (P.dim + 1)
        total += vol
        acc += vol * centroid
    return acc / total


def center(K: ConvexBody, trials=200_000, seed=0) -> ConvexBody:
    """Translate K so its barycenter sits at the origin."""
    bc, _ = barycenter(K, trials, seed)
    return translate(K, -bc)


def random_polytope(n, m, seed, radius_range=(0.5, 1.5),
                    ensure_origin_interior=False, margin=0.05,
                    max_tries=100) -> Polytope:
    """Random polytope: hull of m points drawn as random sphere
    directions scaled by radii in ``radius_range``.

    Resamples on degeneracy (affinely dependent points) and, when
    ``ensure_origin_interior`` is set, until every facet clears the
    origin by ``margin``.
    """
    if not (1 <= n <= 4):
        raise ValueError("dimension must be in 1..4")
    if m < n + 1:
        raise ValueError("need at least n+1 points")
    rng = np.random.default_rng(seed)
    lo, hi = radius_range
    for _ in range(max_tries):
        u = rng.standard_normal((m, n))
        u /= np.linalg.norm(u, axis=1, keepdims=True)
        r = rng.uniform(lo, hi, size=m)
        pts = u * r[:, None]
        try:
            P = Polytope(pts)
        except DegenerateInstance:
            continue
        if ensure_origin_interior and P.offsets.min() <= margin:
            continue
        return P
    raise DegenerateInstance(
        f"could not draw a valid polytope in {max_tries} attempts")


def exponent_to_json(p):
    return "inf" if p == math.inf else p


def exponent_from_json(token):
    if token in ("inf", "Infinity", math.inf):
        return math.inf
    p = float(token)
    check_exponent(p)
    return p


def body_to_json(K: ConvexBody) -> dict:
    """JSON payload for CLI-facing bodies; polytopes round-trip through
    the {"dim", "vertices"} schema, balls through {"dim", "radius"}."""
    if isinstance(K, Polytope):
        return K.to_json()
    if isinstance(K, EuclideanBall):
        return {"dim": K.dim, "radius": K.radius}
    raise TypeError(f"only polytopes and balls serialise; got {type(K).__name__}")


def body_from_json(payload) -> ConvexBody:
    if "vertices" in payload:
        return Polytope.from_json(payload)
    if "radius" in payload:
        return EuclideanBall(payload["radius"], payload["dim"])
    raise ValueError("unrecognised body payload")
