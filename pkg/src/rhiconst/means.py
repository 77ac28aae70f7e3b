"""Power means of nonnegative inputs on the half-line.

The mean of order r of f over a bounded interval I is

    M_r(f, I) = ( (1/|I|) * integral_I f(x)**r dx )**(1/r),    r != 0.

Means are increasing in r, so for a validated exponent pair the ratio
M_beta / M_alpha is always >= 1.  This module provides the input family
(pure powers, shifted powers, exponential decay, sampled tables and the
even-extension wrapper), a closed form for pure powers on origin-anchored
intervals, and an adaptive quadrature evaluator for everything else.

Quadrature strategy
-------------------
Composite 16-point Gauss-Legendre panels.  Origin-anchored segments are
integrated after the substitution x = T * u**p with p chosen from the known
power behavior of f**r near 0, which turns an integrable endpoint blowup
into a function vanishing at least quadratically; the u-mesh is graded
geometrically toward 0.  Interior segments use linear or geometric panels
depending on the endpoint ratio.  The mesh is refined by whole levels and
the error estimate is the difference between the last two levels.  Inputs
never get evaluated at panel edges, only at interior Gauss nodes, so an
endpoint blowup of f itself is harmless.

0**r is treated as 0 for r > 0.  For r < 0 it is inadmissible and the
entry points reject the configurations that would produce it.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DataError,
    DomainError,
    ExponentPair,
    Interval,
    NumericError,
    QuadratureError,
)

__all__ = [
    "AffinePower",
    "EvenExtensionView",
    "ExpDecay",
    "FunctionSpec",
    "MeanValue",
    "Monotonicity",
    "PowerLaw",
    "SampledTable",
    "mean_ratio",
    "power_mean_closed",
    "quad_mean",
    "table_from_csv",
]


class Monotonicity(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# Input family
# ---------------------------------------------------------------------------


class FunctionSpec:
    """A nonnegative input on (part of) the positive half-line.

    Subclasses provide vectorized evaluation, a domain, declared
    monotonicity, and the power behavior of f**order near the origin so
    the quadrature can pick a suitable substitution.
    """

    monotonicity: Monotonicity

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def power_values(self, x: np.ndarray, order: float) -> np.ndarray:
        """Pointwise f(x)**order.

        The default composes evaluate with a power, which can underflow
        halfway even when the composite is representable; subclasses that
        know the composite in closed form override this with the stable
        one-step version.
        """
        return np.power(self.evaluate(x), order)

    @property
    def domain(self) -> tuple[float, float]:
        """Closure of the admissible abscissa range, (0, inf) by default."""
        return (0.0, math.inf)

    def zero_power_exponent(self, order: float) -> float | None:
        """Exponent s with f(x)**order ~ c * x**s as x -> 0+, None if regular."""
        return None

    @property
    def strictly_positive(self) -> bool:
        return True

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class PowerLaw(FunctionSpec):
    """f(x) = x**gamma."""

    gamma: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.gamma):
            raise DomainError("power-law exponent must be finite")

    @property
    def monotonicity(self) -> Monotonicity:
        if self.gamma < 0.0:
            return Monotonicity.DECREASING
        return Monotonicity.INCREASING

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.power(x, self.gamma)

    def power_values(self, x: np.ndarray, order: float) -> np.ndarray:
        # x**gamma can leave double range at abscissae where x**(gamma*order)
        # is perfectly representable, so fold the exponents first.
        return np.power(x, self.gamma * order)

    def zero_power_exponent(self, order: float) -> float | None:
        s = self.gamma * order
        return s if s != 0.0 else None

    def describe(self) -> str:
        return f"pow:gamma={self.gamma:g}"


@dataclass(frozen=True)
class AffinePower(FunctionSpec):
    """f(x) = scale * x**gamma + offset with scale > 0 and offset >= 0."""

    scale: float
    gamma: float
    offset: float

    def __post_init__(self) -> None:
        for name in ("scale", "gamma", "offset"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.scale <= 0.0:
            raise DomainError("scale must be positive")
        if self.offset < 0.0:
            raise DomainError("offset must be nonnegative")

    @property
    def monotonicity(self) -> Monotonicity:
        if self.gamma < 0.0:
            return Monotonicity.DECREASING
        return Monotonicity.INCREASING

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return self.scale * np.power(x, self.gamma) + self.offset

    def zero_power_exponent(self, order: float) -> float | None:
        # A negative gamma blows up at 0 regardless of the offset; a
        # positive gamma pins f(0) = offset, singular only when that is 0.
        if self.gamma < 0.0 or (self.gamma > 0.0 and self.offset == 0.0):
            s = self.gamma * order
            return s if s != 0.0 else None
        return None

    def describe(self) -> str:
        return f"affpow:a={self.scale:g},gamma={self.gamma:g},c={self.offset:g}"


@dataclass(frozen=True)
class ExpDecay(FunctionSpec):
    """f(x) = exp(-rate * x) with rate > 0."""

    rate: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rate) and self.rate > 0.0):
            raise DomainError("decay rate must be positive and finite")

    @property
    def monotonicity(self) -> Monotonicity:
        return Monotonicity.DECREASING

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.exp(-self.rate * x)

    def describe(self) -> str:
        return f"expdecay:lambda={self.rate:g}"


@dataclass(frozen=True, eq=False)
class SampledTable(FunctionSpec):
    """Piecewise-linear interpolant of sampled values, no extrapolation.

    Abscissae must be strictly increasing and positive, values nonnegative
    and finite, at least two points.  A declared monotonicity is checked
    against the data at construction; UNKNOWN is never upgraded.
    """

    xs: np.ndarray
    fs: np.ndarray
    monotonicity: Monotonicity = field(default=Monotonicity.UNKNOWN)

    def __post_init__(self) -> None:
        xs = np.asarray(self.xs, dtype=float).copy()
        fs = np.asarray(self.fs, dtype=float).copy()
        if xs.ndim != 1 or fs.ndim != 1 or xs.size != fs.size:
            raise DataError("table abscissae and values must be 1-d and equal length")
        if xs.size < 2:
            raise DataError("table needs at least two samples")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(fs))):
            raise DataError("table entries must be finite")
        if xs[0] <= 0.0:
            raise DataError("table abscissae must be positive")
        if not np.all(np.diff(xs) > 0.0):
            raise DataError("table abscissae must be strictly increasing")
        if np.any(fs < 0.0):
            raise DataError("table values must be nonnegative")
        d = np.diff(fs)
        if self.monotonicity is Monotonicity.INCREASING and np.any(d < 0.0):
            raise DataError("declared increasing but values decrease somewhere")
        if self.monotonicity is Monotonicity.DECREASING and np.any(d > 0.0):
            raise DataError("declared decreasing but values increase somewhere")
        xs.setflags(write=False)
        fs.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "fs", fs)

    @property
    def domain(self) -> tuple[float, float]:
        return (float(self.xs[0]), float(self.xs[-1]))

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.interp(x, self.xs, self.fs)

    @property
    def strictly_positive(self) -> bool:
        return bool(np.all(self.fs > 0.0))

    def describe(self) -> str:
        return f"table:n={self.xs.size},range=[{self.xs[0]:g},{self.xs[-1]:g}]"


@dataclass(frozen=True)
class EvenExtensionView(FunctionSpec):
    """Reflection of a half-line input across the origin.

    Evaluation at x delegates to the base input at |x|, so means over
    origin-spanning intervals become sums of two half-line segments.  The
    view itself is not monotone; the base's declaration stays available
    through .base.
    """

    base: FunctionSpec

    def __post_init__(self) -> None:
        if isinstance(self.base, EvenExtensionView):
            raise DomainError("even extension cannot be nested")

    @property
    def monotonicity(self) -> Monotonicity:
        return Monotonicity.UNKNOWN

    @property
    def domain(self) -> tuple[float, float]:
        lo, hi = self.base.domain
        return (-hi, hi)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return self.base.evaluate(np.abs(x))

    def power_values(self, x: np.ndarray, order: float) -> np.ndarray:
        return self.base.power_values(np.abs(x), order)

    def zero_power_exponent(self, order: float) -> float | None:
        return self.base.zero_power_exponent(order)

    @property
    def strictly_positive(self) -> bool:
        return self.base.strictly_positive

    def describe(self) -> str:
        return f"even({self.base.describe()})"


def table_from_csv(path: str, monotonicity: Monotonicity = Monotonicity.UNKNOWN) -> SampledTable:
    """Load a SampledTable from a CSV file with header ``x,f``."""
    try:
        with open(path, newline="") as fh:
            rows = [row for row in csv.reader(fh) if row]
    except OSError as exc:
        raise DataError(f"cannot read table file {path!r}: {exc}") from exc
    if not rows:
        raise DataError(f"empty table file {path!r}")
    header = [cell.strip() for cell in rows[0]]
    if header != ["x", "f"]:
        raise DataError(f"expected CSV header 'x,f', got {','.join(header)!r}")
    xs: list[float] = []
    fs: list[float] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise DataError(f"{path}:{lineno}: expected two columns")
        try:
            xs.append(float(row[0]))
            fs.append(float(row[1]))
        except ValueError as exc:
            raise DataError(f"{path}:{lineno}: non-numeric entry") from exc
    if not xs:
        raise DataError(f"{path}: no data rows")
    return SampledTable(np.array(xs), np.array(fs), monotonicity)


# ---------------------------------------------------------------------------
# Closed form for pure powers
# ---------------------------------------------------------------------------


def power_mean_closed(gamma: float, order: float, eps: float) -> float:
    """Mean of order ``order`` of x**gamma over (0, eps), in closed form.

    Integrating x**(gamma*order) gives

        M = eps**gamma * (gamma*order + 1)**(-1/order),

    valid exactly when gamma*order > -1 (summability at the origin).
    """
    if order == 0.0 or not math.isfinite(order):
        raise DomainError("mean order must be nonzero and finite")
    if not (math.isfinite(eps) and eps > 0.0):
        raise DomainError("interval endpoint eps must be positive and finite")
    if not math.isfinite(gamma):
        raise DomainError("gamma must be finite")
    s = gamma * order
    if s <= -1.0:
        raise DomainError(
            f"x**{gamma} has no order-{order} mean at the origin (gamma*order <= -1)"
        )
    return math.pow(eps, gamma) * math.pow(s + 1.0, -1.0 / order)


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MeanValue:
    """A quadrature mean plus the bookkeeping needed to trust it."""

    value: float
    order: float
    interval: Interval
    abs_error_estimate: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.value) and self.value > 0.0):
            raise NumericError(f"mean value must be positive and finite, got {self.value!r}")
        if not (math.isfinite(self.abs_error_estimate) and self.abs_error_estimate >= 0.0):
            raise NumericError("error estimate must be nonnegative and finite")


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _composite_gl(fn, edges: np.ndarray) -> float:
    """Gauss-Legendre on each cell of ``edges``; nodes stay strictly interior."""
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    x = mid[:, None] + half[:, None] * _GL_NODES[None, :]
    # Deliberately quiet: an overflowing cell makes the total non-finite,
    # which raises right below with a clearer message than the warning.
    # divide fires when a deep exp tail underflows to 0 under a negative
    # order and is handled the same way.
    with np.errstate(over="ignore", divide="ignore"):
        vals = fn(x.ravel()).reshape(x.shape)
        total = float(np.sum((half[:, None] * _GL_WEIGHTS[None, :]) * vals))
    if not math.isfinite(total):
        raise NumericError("integrand overflowed during quadrature")
    return total


def _substitution_exponent(s: float | None) -> float:
    # p turns x**s near 0 into u**(p*(s+1)-1); aim for at least quadratic
    # vanishing, cap p so transformed abscissae stay inside double range.
    if s is None or s >= 2.0:
        return 1.0
    if s >= 0.0:
        return 2.0
    return min(max(3.0 / (s + 1.0), 2.0), 40.0)


def _zero_anchored_integral(fo, hi: float, s: float | None, level: int) -> float:
    p = _substitution_exponent(s)
    m = 10 + 4 * level
    edges = np.concatenate(([0.0], 2.0 ** -np.arange(m, -1.0, -1.0)))
    if p == 1.0:
        return _composite_gl(fo, hi * edges)

    def transformed(u: np.ndarray) -> np.ndarray:
        return p * hi * u ** (p - 1.0) * fo(hi * u**p)

    return _composite_gl(transformed, edges)


def _interior_integral(fo, lo: float, hi: float, level: int) -> float:
    n = 16 << level
    if hi / lo > 10.0:
        edges = np.geomspace(lo, hi, n + 1)
    else:
        edges = np.linspace(lo, hi, n + 1)
    return _composite_gl(fo, edges)


def _table_integral(fo, table: SampledTable, lo: float, hi: float, level: int) -> float:
    # The integrand is smooth only between knots, so every knot becomes a
    # mesh edge and cells are split uniformly per level.
    inner = table.xs[(table.xs > lo) & (table.xs < hi)]
    base = np.concatenate(([lo], inner, [hi]))
    splits = 2 << level
    edges = (base[:-1, None] + np.diff(base)[:, None] * np.linspace(0.0, 1.0, splits + 1)[None, :])
    edges = np.concatenate((edges[:, :-1].ravel(), [hi]))
    return _composite_gl(fo, edges)


def _segments(f: FunctionSpec, interval: Interval) -> tuple[FunctionSpec, list[tuple[float, float]]]:
    """Fold an interval onto the base input's half-line domain."""
    lo, hi = interval.lo, interval.hi
    if isinstance(f, EvenExtensionView):
        base = f.base
        if lo >= 0.0:
            segs = [(lo, hi)]
        elif hi <= 0.0:
            segs = [(-hi, -lo)]
        else:
            segs = [(0.0, -lo), (0.0, hi)]
        return base, segs
    if lo < 0.0:
        raise DomainError(
            "interval extends below 0; wrap the input in EvenExtensionView first"
        )
    return f, [(lo, hi)]


def _check_segment(base: FunctionSpec, order: float, lo: float, hi: float) -> None:
    dom_lo, dom_hi = base.domain
    if isinstance(base, SampledTable):
        if lo < dom_lo or hi > dom_hi:
            raise DataError(
                f"interval ({lo:g}, {hi:g}) leaves the table range"
                f" [{dom_lo:g}, {dom_hi:g}]; no extrapolation is performed"
            )
        if order < 0.0 and not base.strictly_positive:
            raise DomainError(
                "negative-order mean of a table containing zero values"
            )
        return
    if lo == 0.0:
        s = base.zero_power_exponent(order)
        if s is not None and s <= -1.0:
            raise DomainError(
                f"f**{order:g} behaves like x**{s:g} at 0 and is not summable"
            )


def quad_mean(
    f: FunctionSpec,
    interval: Interval,
    order: float,
    tol: float = 1e-10,
    max_levels: int = 12,
) -> MeanValue:
    """Power mean of f over an interval by adaptive composite quadrature.

    The result satisfies |value - true| <= tol * (1 + |true|) up to the
    reliability of the two-level error estimate; the achieved estimate is
    returned.  QuadratureError is raised when the level budget runs out
    before the tolerance is met.
    """
    if order == 0.0 or not math.isfinite(order):
        raise DomainError("mean order must be nonzero and finite")
    if not (0.0 < tol < 1.0):
        raise DomainError("tolerance must lie in (0, 1)")
    base, segs = _segments(f, interval)
    for lo, hi in segs:
        _check_segment(base, order, lo, hi)

    def fo(x: np.ndarray) -> np.ndarray:
        return base.power_values(x, order)

    length = interval.length
    previous = None
    for level in range(max_levels):
        total = 0.0
        for lo, hi in segs:
            if isinstance(base, SampledTable):
                total += _table_integral(fo, base, lo, hi, level)
            elif lo == 0.0:
                total += _zero_anchored_integral(fo, hi, base.zero_power_exponent(order), level)
            else:
                total += _interior_integral(fo, lo, hi, level)
        if total <= 0.0:
            raise DomainError("mean undefined: integral of f**order is not positive")
        if total < 1e-300:
            # Near the subnormal floor the panel sums carry almost no
            # mantissa; a mean built from them looks plausible but is
            # rounding noise, so refuse rather than return it.
            raise NumericError("integral of f**order underflows double range")
        exponent = math.log(total / length) / order
        if exponent > 700.0:
            raise NumericError("mean overflows double range")
        if exponent < -700.0:
            raise NumericError("mean underflows double range")
        value = math.exp(exponent)
        if previous is not None:
            diff = abs(value - previous)
            if diff <= tol * (1.0 + abs(value)):
                return MeanValue(value, order, interval, diff)
        previous = value
    raise QuadratureError(
        f"mean of order {order:g} over ({interval.lo:g}, {interval.hi:g})"
        f" did not reach tol={tol:g} within {max_levels} refinement levels"
    )


def mean_ratio(
    f: FunctionSpec,
    interval: Interval,
    pair: ExponentPair,
    tol: float = 1e-9,
    max_levels: int = 12,
) -> float:
    """M_beta / M_alpha over one interval, accurate to ~tol relatively.

    The mixed tolerance handed to quad_mean is rescaled by each mean's own
    magnitude so the ratio keeps relative accuracy even when the means
    themselves are far from 1.  For valid inputs the result is >= 1 - tol.
    """
    if not (0.0 < tol < 1.0):
        raise DomainError("tolerance must lie in (0, 1)")
    third = tol / 3.0

    def refined(order: float) -> float:
        rough = quad_mean(f, interval, order, third, max_levels)
        if rough.value >= 1.0:
            return rough.value
        return quad_mean(f, interval, order, third * rough.value, max_levels).value

    return refined(pair.beta) / refined(pair.alpha)
