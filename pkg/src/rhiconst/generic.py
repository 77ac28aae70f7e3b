"""Supremum search over intervals for arbitrary function specs.

The two suprema of interest are the half-line constant (best mean ratio
over subintervals of the positive axis) and its analogue for the even
extension.  Both are suprema over infinitely many intervals, so what a
search can honestly return is the largest ratio it actually evaluated,
together with the witness interval.  converged only means the final local
refinement stopped moving the incumbent.

Reductions from the structure of the input shrink the search space:

* monotone inputs: the half-line supremum is approached on intervals
  anchored at the origin, so the search is one-dimensional in the right
  endpoint.  For a table the anchor is pinned to the left edge of the
  data instead of 0, which leaves the reduction heuristic; the estimate
  is flagged reduction_certified=False.
* even extensions: it suffices to search straddling shapes (-eps*b, b)
  with eps in [0, 1].
* pure powers: scale invariance under x -> lambda*x collapses the
  extension search to eps alone at b = 1.

Unknown monotonicity is never upgraded from samples; those inputs get
the full two-dimensional (start, width) search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classconst import general_upper_bound
from .core import (
    DataError,
    DomainError,
    ExponentPair,
    Interval,
    NumericError,
    QuadratureError,
    SearchConfig,
)
from .means import (
    EvenExtensionView,
    FunctionSpec,
    Monotonicity,
    PowerLaw,
    SampledTable,
    mean_ratio,
)

__all__ = [
    "EvenExtensionView",
    "ExtensionRatio",
    "SupremumEstimate",
    "estimate_extension",
    "estimate_halfline",
    "extension_ratio",
]

# Fraction of a table's span used as the smallest searched width.
_TABLE_WIDTH_FLOOR = 1e-6

# Smallest straddle fraction seeded below the uniform eps grid.
_EPS_TAIL_FLOOR = 1e-6


@dataclass(frozen=True)
class SupremumEstimate:
    """Largest mean ratio observed, with the interval that produced it.

    value is a lower bound on the true supremum.  converged reports that
    the last refinement round improved the incumbent by less than the
    configured relative amount; it is not an upper-bound certificate.
    reduction_certified is False when a dimensional reduction was applied
    outside the setting that justifies it.
    """

    value: float
    witness: Interval
    search_points: int
    converged: bool
    reduction_certified: bool = True

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or self.value < 1.0 - 1e-6:
            raise NumericError("a mean-ratio supremum is at least 1")
        if self.search_points < 1:
            raise NumericError("search_points must be positive")


@dataclass(frozen=True)
class ExtensionRatio:
    """Half-line and extension estimates with their growth ratio."""

    halfline: SupremumEstimate
    extension: SupremumEstimate
    ratio: float
    upper_bound: float

    def __post_init__(self) -> None:
        expected = self.extension.value / self.halfline.value
        if not math.isclose(self.ratio, expected, rel_tol=1e-12):
            raise NumericError("ratio inconsistent with its factors")
        if self.ratio < 1.0 - 1e-6:
            raise NumericError("extension estimate fell below the half-line estimate")
        if self.ratio > self.upper_bound + 1e-6:
            raise NumericError(
                f"growth ratio {self.ratio:.9g} exceeds the proven bound"
                f" {self.upper_bound:.9g}"
            )


# ---------------------------------------------------------------------------
# Search engines
# ---------------------------------------------------------------------------
#
# ratio_at callables return -inf for intervals that cannot be evaluated
# (overflow, exhausted quadrature, degenerate cells); the engines treat
# those as plain non-maxima.  Coordinates are whatever the caller chose
# (log-scale or linear); refinement is linear in that coordinate.


def _search_1d(ratio_at, seeds, cfg: SearchConfig, lo_cap: float, hi_cap: float):
    vals = [ratio_at(float(u)) for u in seeds]
    i = int(np.argmax(vals))
    best, best_u = vals[i], float(seeds[i])
    if not math.isfinite(best):
        raise NumericError("no interval in the search family could be evaluated")
    evals = len(seeds)
    lo = float(seeds[i - 1]) if i > 0 else best_u
    hi = float(seeds[i + 1]) if i + 1 < len(seeds) else best_u
    converged = False
    for _ in range(cfg.refine_rounds):
        previous = best
        for u in np.linspace(lo, hi, 9):
            v = ratio_at(float(u))
            evals += 1
            if v > best:
                best, best_u = v, float(u)
        if (best - previous) / previous < cfg.converge_rtol:
            converged = True
            break
        half = (hi - lo) / (2.0 * cfg.refine_shrink)
        lo = max(lo_cap, best_u - half)
        hi = min(hi_cap, best_u + half)
    return best_u, best, evals, converged


def _search_2d(ratio_at, useeds, vseeds, cfg: SearchConfig, ubox, vbox):
    nu, nv = len(useeds), len(vseeds)
    vals = np.full((nu, nv), -math.inf)
    for i, u in enumerate(useeds):
        for j, v in enumerate(vseeds):
            vals[i, j] = ratio_at(float(u), float(v))
    i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
    best = float(vals[i, j])
    if not math.isfinite(best):
        raise NumericError("no interval in the search family could be evaluated")
    best_u, best_v = float(useeds[i]), float(vseeds[j])
    evals = nu * nv
    ulo = float(useeds[i - 1]) if i > 0 else best_u
    uhi = float(useeds[i + 1]) if i + 1 < nu else best_u
    vlo = float(vseeds[j - 1]) if j > 0 else best_v
    vhi = float(vseeds[j + 1]) if j + 1 < nv else best_v
    converged = False
    for _ in range(cfg.refine_rounds):
        previous = best
        for u in np.linspace(ulo, uhi, 9):
            for v in np.linspace(vlo, vhi, 9):
                r = ratio_at(float(u), float(v))
                evals += 1
                if r > best:
                    best, best_u, best_v = r, float(u), float(v)
        if (best - previous) / previous < cfg.converge_rtol:
            converged = True
            break
        uhalf = (uhi - ulo) / (2.0 * cfg.refine_shrink)
        vhalf = (vhi - vlo) / (2.0 * cfg.refine_shrink)
        ulo, uhi = max(ubox[0], best_u - uhalf), min(ubox[1], best_u + uhalf)
        vlo, vhi = max(vbox[0], best_v - vhalf), min(vbox[1], best_v + vhalf)
    return best_u, best_v, best, evals, converged


def _guarded(fn):
    """Wrap a ratio evaluation; degenerate cells become -inf."""

    def call(*args):
        try:
            return fn(*args)
        except (DomainError, NumericError, QuadratureError):
            return -math.inf

    return call


def _check_input(f: FunctionSpec, pair: ExponentPair, touches_origin: bool) -> None:
    lo, _ = f.domain
    if lo < 0.0:
        raise DomainError("expected a function on the positive half-line")
    if (pair.alpha < 0.0 or pair.beta < 0.0) and not f.strictly_positive:
        raise DomainError("negative orders need a strictly positive function")
    if touches_origin and lo == 0.0:
        for order in (pair.alpha, pair.beta):
            s = f.zero_power_exponent(order)
            if s is not None and s <= -1.0:
                raise DomainError(
                    f"f**{order:g} is not summable at the origin; no interval"
                    " touching 0 has finite means"
                )


# ---------------------------------------------------------------------------
# Half-line supremum
# ---------------------------------------------------------------------------


def estimate_halfline(
    f: FunctionSpec,
    pair: ExponentPair,
    cfg: SearchConfig | None = None,
    *,
    use_reduction: bool = True,
) -> SupremumEstimate:
    """Searched lower bound on the half-line mean-ratio supremum.

    Monotone inputs use the one-dimensional origin-anchored family; a
    use_reduction=False override forces the two-dimensional search, which
    exists mostly so the reduction itself can be cross-checked.
    """
    cfg = cfg or SearchConfig()
    _check_input(f, pair, touches_origin=True)
    dom_lo, dom_hi = f.domain
    tol, levels = cfg.quad_tol, cfg.quad_max_levels

    monotone = f.monotonicity is not Monotonicity.UNKNOWN
    if use_reduction and monotone and not isinstance(f, SampledTable):

        def ratio_at(u: float) -> float:
            return mean_ratio(f, Interval(0.0, math.exp(u)), pair, tol, levels)

        seeds = np.linspace(math.log(cfg.scale_min), math.log(cfg.scale_max), cfg.interval_grid)
        u, value, evals, converged = _search_1d(
            _guarded(ratio_at), seeds, cfg, seeds[0], seeds[-1]
        )
        return SupremumEstimate(value, Interval(0.0, math.exp(u)), evals, converged)

    if use_reduction and monotone:
        # Bounded table: anchor at the left data edge.  The reduction to a
        # one-dimensional family is not justified on a bounded domain, so
        # the result is marked accordingly.
        span = dom_hi - dom_lo

        def ratio_at(u: float) -> float:
            return mean_ratio(f, Interval(dom_lo, dom_lo + math.exp(u)), pair, tol, levels)

        seeds = np.linspace(
            math.log(span * _TABLE_WIDTH_FLOOR), math.log(span), cfg.interval_grid
        )
        u, value, evals, converged = _search_1d(
            _guarded(ratio_at), seeds, cfg, seeds[0], seeds[-1]
        )
        return SupremumEstimate(
            value,
            Interval(dom_lo, dom_lo + math.exp(u)),
            evals,
            converged,
            reduction_certified=False,
        )

    # Full 2-D search over (start, width).  The start axis is linear so a
    # 0 anchor can participate; the width axis lives in log space.
    if math.isinf(dom_hi):
        starts = np.concatenate(
            ([0.0], np.geomspace(cfg.scale_min, cfg.scale_max, cfg.interval_grid - 1))
        )
        wlo, whi = math.log(cfg.scale_min), math.log(cfg.scale_max)
    else:
        span = dom_hi - dom_lo
        starts = dom_lo + span * np.concatenate(
            ([0.0], np.geomspace(_TABLE_WIDTH_FLOOR, 1.0, cfg.interval_grid - 1)[:-1])
        )
        wlo, whi = math.log(span * _TABLE_WIDTH_FLOOR), math.log(span)
    wseeds = np.linspace(wlo, whi, cfg.interval_grid)

    def ratio_at2(a: float, w: float) -> float:
        hi = a + math.exp(w)
        if hi > dom_hi:
            if hi <= dom_hi * (1.0 + 1e-12):
                hi = dom_hi
            else:
                return -math.inf
        return mean_ratio(f, Interval(a, hi), pair, tol, levels)

    a, w, value, evals, converged = _search_2d(
        _guarded(ratio_at2),
        starts,
        wseeds,
        cfg,
        (float(starts[0]), float(starts[-1])),
        (wlo, whi),
    )
    hi = min(a + math.exp(w), dom_hi)
    return SupremumEstimate(value, Interval(a, hi), evals, converged)


# ---------------------------------------------------------------------------
# Even-extension supremum
# ---------------------------------------------------------------------------


def _eps_seeds(n: int) -> np.ndarray:
    # Uniform coverage of [0, 1] plus a short log tail: maximizing
    # straddles can sit at very lopsided shapes.
    return np.unique(
        np.concatenate(
            (np.linspace(0.0, 1.0, n), np.geomspace(_EPS_TAIL_FLOOR, 0.1, 16))
        )
    )


def estimate_extension(
    f: FunctionSpec, pair: ExponentPair, cfg: SearchConfig | None = None
) -> SupremumEstimate:
    """Searched lower bound on the mean-ratio supremum of the even extension.

    Only straddling shapes (-eps*b, b) need to be searched.  Pure powers
    drop the b axis by scale invariance.  Tables are rejected: their even
    extension is undefined on the gap around the origin.
    """
    cfg = cfg or SearchConfig()
    if isinstance(f, SampledTable):
        raise DataError(
            "even extension of a table is undefined near the origin;"
            " supply an analytic function spec"
        )
    if isinstance(f, EvenExtensionView):
        raise DomainError("input is already an even extension")
    _check_input(f, pair, touches_origin=True)
    tol, levels = cfg.quad_tol, cfg.quad_max_levels
    extended = EvenExtensionView(f)

    if isinstance(f, PowerLaw):

        def ratio_at(eps: float) -> float:
            return mean_ratio(extended, Interval(-eps, 1.0), pair, tol, levels)

        eps, value, evals, converged = _search_1d(
            _guarded(ratio_at), _eps_seeds(cfg.interval_grid), cfg, 0.0, 1.0
        )
        return SupremumEstimate(value, Interval(-eps, 1.0), evals, converged)

    bseeds = np.linspace(math.log(cfg.scale_min), math.log(cfg.scale_max), cfg.interval_grid)

    def ratio_at2(eps: float, w: float) -> float:
        b = math.exp(w)
        return mean_ratio(extended, Interval(-eps * b, b), pair, tol, levels)

    eps, w, value, evals, converged = _search_2d(
        _guarded(ratio_at2),
        _eps_seeds(cfg.interval_grid),
        bseeds,
        cfg,
        (0.0, 1.0),
        (float(bseeds[0]), float(bseeds[-1])),
    )
    b = math.exp(w)
    return SupremumEstimate(value, Interval(-eps * b, b), evals, converged)


def extension_ratio(
    f: FunctionSpec, pair: ExponentPair, cfg: SearchConfig | None = None
) -> ExtensionRatio:
    """Growth of the supremum under even extension, checked against the bound.

    Both searches must converge; the ratio of two unsettled lower bounds
    says nothing and is refused rather than reported.
    """
    cfg = cfg or SearchConfig()
    halfline = estimate_halfline(f, pair, cfg)
    extension = estimate_extension(f, pair, cfg)
    if not (halfline.converged and extension.converged):
        raise NumericError("supremum searches did not converge; ratio withheld")
    return ExtensionRatio(
        halfline=halfline,
        extension=extension,
        ratio=extension.value / halfline.value,
        upper_bound=general_upper_bound(pair),
    )
