"""Volume computation along three routes with error accounting.

* exact: fan triangulation of polytopes (shoelace in 2-d, signed
  tetrahedra in 3-d) and closed forms for balls;
* mc: hit-or-miss sampling inside the smallest origin-centred
  bounding cube, with the binomial standard error;
* gamma: spherical Monte Carlo where the radial integral of
  exp(-(r h(u))^p) is closed form, giving the polar volume
  |K^polar| = (1/Gamma(1+n/p)) * integral of exp(-h_K^p)
  directly from the support function.

The gamma route doubles as a radial-function estimator: the volume of
any body with a computable gauge is |B_2^n| * E[gauge(u)^-n] over
random unit directions u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (ConvexBody, EuclideanBall, OriginNotInterior,
                       Polytope, polar)


class DimensionTooLarge(ValueError):
    """Exact polytope volume is only wired up for dimension <= 3."""


@dataclass(frozen=True)
class VolumeEstimate:
    """A volume value with its statistical error and provenance."""

    value: float
    stderr: float
    method: str  # "exact" | "mc" | "gamma"
    samples: int = 0

    def __post_init__(self):
        if self.value < 0 or self.stderr < 0:
            raise ValueError("volume and stderr must be nonnegative")
        if self.method == "exact" and self.stderr != 0:
            raise ValueError("exact estimates carry zero stderr")

    def to_json(self) -> dict:
        return {"value": self.value, "stderr": self.stderr,
                "method": self.method, "samples": self.samples}

    def scaled(self, factor: float) -> "VolumeEstimate":
        return VolumeEstimate(self.value * factor, self.stderr * abs(factor),
                              self.method, self.samples)


def unit_ball_volume(n: int) -> float:
    return math.pi ** (n / 2.0) / math.gamma(n / 2.0 + 1.0)


def sphere_area(n: int) -> float:
    return n * unit_ball_volume(n)


def volume_exact(K) -> VolumeEstimate:
    """Exact volume of a polytope (n <= 3) or a ball."""
    if isinstance(K, EuclideanBall):
        return VolumeEstimate(unit_ball_volume(K.dim) * K.radius ** K.dim, 0.0, "exact")
    if not isinstance(K, Polytope):
        raise TypeError("exact volume needs a polytope or a ball")
    if K.dim > 3:
        raise DimensionTooLarge("exact polytope volume is limited to n <= 3")
    if K.dim == 1:
        return VolumeEstimate(float(K.vertices.max() - K.vertices.min()), 0.0, "exact")
    fact = math.factorial(K.dim)
    total = 0.0
    for simplex in K.simplices():
        total += abs(np.linalg.det(simplex[:-1] - simplex[-1])) / fact
    return VolumeEstimate(float(total), 0.0, "exact")


def shoelace_area(points) -> float:
    """Polygon area from an ordered vertex loop (2-d only)."""
    pts = np.asarray(points, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def volume_mc(K: ConvexBody, n_samples: int, seed: int) -> VolumeEstimate:
    """Hit-or-miss estimate over the bounding cube [-R, R]^n.

    The standard error is the binomial one; when no sample lands
    inside, a rule-of-three error is reported instead of a spuriously
    exact zero.
    """
    rng = np.random.default_rng(seed)
    R = K.cube_halfwidth()
    n = K.dim
    cube = (2.0 * R) ** n
    X = rng.uniform(-R, R, size=(n_samples, n))
    hits = int(K.contains_batch(X).sum())
    p_hat = hits / n_samples
    if hits == 0:
        return VolumeEstimate(0.0, 3.0 * cube / n_samples, "mc", n_samples)
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / n_samples) * cube
    return VolumeEstimate(p_hat * cube, stderr, "mc", n_samples)


def volume_polar_gamma(K: ConvexBody, p=1.0, n_dirs: int = 100_000,
                       seed: int = 0) -> VolumeEstimate:
    """|K^polar| from the support function of K.

    Evaluates integral of exp(-h_K^p) by spherical Monte Carlo: for a
    direction u the radial part is Gamma(n/p) / (p h_K(u)^n) exactly,
    and dividing the spherical average by Gamma(1 + n/p) yields the
    polar volume whatever the exponent.
    """
    if not K.origin_interior:
        raise OriginNotInterior("gamma-route volume needs 0 in the interior")
    if not (p >= 1 and p != math.inf):
        raise ValueError("gamma route needs a finite exponent p >= 1")
    n = K.dim
    rng = np.random.default_rng(seed)
    dirs = rng.standard_normal((n_dirs, n))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    h = np.asarray(K.support_batch(dirs), dtype=float)
    radial = math.gamma(n / p) / (p * h ** n)
    scalefac = sphere_area(n) / math.gamma(1.0 + n / p)
    vals = scalefac * radial
    value = float(vals.mean())
    stderr = float(vals.std(ddof=1)) / math.sqrt(n_dirs) if n_dirs > 1 else 0.0
    return VolumeEstimate(value, stderr, "gamma", n_dirs)


def volume_radial(K: ConvexBody, n_dirs: int = 100_000, seed: int = 0) -> VolumeEstimate:
    """|K| from the gauge: |B_2^n| * E[gauge_K(u)^-n] on the sphere.

    Same estimator as the gamma route applied to the polar body."""
    return volume_polar_gamma(polar(K), 1.0, n_dirs, seed)


def volume(K: ConvexBody, n_samples: int = 100_000, seed: int = 0) -> VolumeEstimate:
    """Best-available volume: exact when the body supports it, the
    radial (gamma) route when the gauge is exact, hit-or-miss when only
    membership is reliable, radial with the numeric gauge otherwise."""
    if isinstance(K, EuclideanBall):
        return volume_exact(K)
    if isinstance(K, Polytope) and K.dim <= 3:
        return volume_exact(K)
    if K.exact_gauge and K.origin_interior:
        return volume_radial(K, n_samples, seed)
    if isinstance(K, Polytope):
        return volume_mc(K, n_samples, seed)
    if K.origin_interior:
        return volume_radial(K, n_samples, seed)
    return volume_mc(K, n_samples, seed)


def gamma_ratio(n: int, p) -> float:
    """Gamma(1 + n/p)^2 / Gamma(1 + 2n/p).

    p = 1 is returned as the exact reciprocal central binomial
    1/C(2n, n); p = inf is the limit 1.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if p == math.inf:
        return 1.0
    if p < 1:
        raise ValueError("exponent must be >= 1 or inf")
    if p == 1:
        return 1.0 / math.comb(2 * n, n)
    return math.gamma(1.0 + n / p) ** 2 / math.gamma(1.0 + 2.0 * n / p)
