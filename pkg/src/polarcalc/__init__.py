"""polarcalc: convex bodies, log-concave calculus, and a verification
harness for polar-volume inequalities at desk scale (dimensions 1-4)."""

from .geometry import (BadExponent, ConvexBody, DegenerateInstance,
                       DimMismatch, EuclideanBall, OriginNotInterior,
                       Polytope, barycenter, center, gauge, lp_intersection,
                       lp_sum, negate, polar, random_polytope, scale, support,
                       translate)
from .logconcave import (EmptyLevelSet, LogConcaveFn, NotIntegrable,
                         UnboundedConjugate, ZeroAtOrigin, asplund,
                         barycenter_fn, convolution_at, entropy,
                         exp_neg_gauge_pow, exp_neg_support_pow, gaussian,
                         indicator, integral, legendre, level_set, polar_fn,
                         sup_norm)
from .volume import (DimensionTooLarge, VolumeEstimate, gamma_ratio, volume,
                     volume_exact, volume_mc, volume_polar_gamma)

__version__ = "0.1.0"
