"""Exact economic-life classification.

The yearly ownership cost is piecewise smooth with at most one interior
critical point, so its global minimizers admit a complete case analysis in
the four asset parameters.  Two derived quantities organize it:

* ``slope_threshold`` -- the maintenance-slope level at which the cost stops
  having an interior minimum beyond the full-depreciation age; and
* ``acquisition_threshold`` -- the purchase price at which keeping the asset
  to its interior optimum costs exactly as much as replacing it immediately.

``classify`` names the regime, ``economic_life`` additionally returns the
minimizer set and the minimum yearly cost in closed form; the interior
optimum is expressed through the Lambert W function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .cost_model import AssetParams, property_cost
from .lambert_w import w0
from .numerics import expm1_minus

__all__ = [
    "CaseLabel",
    "MinimizerSet",
    "EconomicLifeResult",
    "gap",
    "interior_minimum_age",
    "slope_threshold",
    "acquisition_threshold",
    "classify",
    "economic_life",
]


class CaseLabel(Enum):
    """Regimes of the global minimum of the yearly ownership cost.

    C1   -- cost increasing everywhere; replace immediately (minimum at 0).
    C2   -- cost flat up to the full-depreciation age, then increasing;
            every holding age in [0, junction] is optimal.
    C3   -- cost decreasing up to the full-depreciation age, then increasing;
            minimum exactly at the junction.
    C4_1 -- local minima at 0 and at the interior optimum; 0 wins.
    C4_2 -- the same two local minima tie exactly.
    C4_3 -- the same two local minima; the interior optimum wins.
    C5   -- cost decreasing until the interior optimum; minimum there.

    C2 and C3 require the maintenance slope to reach ``slope_threshold``
    while equal to (resp. below) depreciation_rate * interest_rate, which the
    threshold itself rules out; they are retained for completeness but are
    unreachable under exact comparison.
    """

    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4_1 = "C4_1"
    C4_2 = "C4_2"
    C4_3 = "C4_3"
    C5 = "C5"


@dataclass(frozen=True)
class MinimizerSet:
    """Global minimizers of the cost: a point, two points, or an interval."""

    kind: str  # "single_point" | "two_points" | "interval"
    values: tuple[float, ...]

    _KINDS = ("single_point", "two_points", "interval")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"kind must be one of {self._KINDS}")
        if any(not (math.isfinite(v) and v >= 0.0) for v in self.values):
            raise ValueError("minimizers must be finite and >= 0")
        if self.kind == "single_point":
            if len(self.values) != 1:
                raise ValueError("single_point carries exactly one value")
        elif len(self.values) != 2 or not self.values[0] < self.values[1]:
            raise ValueError(f"{self.kind} carries two strictly ordered values")

    @classmethod
    def point(cls, t: float) -> "MinimizerSet":
        return cls("single_point", (float(t),))

    @classmethod
    def pair(cls, first: float, second: float) -> "MinimizerSet":
        return cls("two_points", (float(first), float(second)))

    @classmethod
    def closed_interval(cls, lo: float, hi: float) -> "MinimizerSet":
        return cls("interval", (float(lo), float(hi)))


@dataclass(frozen=True)
class EconomicLifeResult:
    """Classification outcome plus the quantities behind it.

    min_cost is the minimum yearly ownership cost, attained at every member
    of ``minimizers``.  ``interior_minimum_age`` is present whenever the cost
    has an interior critical point (maint_slope below ``slope_threshold``);
    ``acquisition_threshold`` whenever maint_slope exceeds
    depreciation_rate * interest_rate.
    """

    case: CaseLabel
    minimizers: MinimizerSet
    min_cost: float
    interior_minimum_age: float | None
    cost_ratio: float
    slope_threshold: float
    acquisition_threshold: float | None


def gap(tau):
    """tau - 1 + e**(-tau): strictly increasing from 0 on tau >= 0.

    Its level sets locate the interior critical point of the ownership cost:
    the optimum age satisfies gap(rate * age) == cost_ratio.  Accepts scalars
    or arrays.
    """
    arr = np.asarray(tau, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0.0):
        raise ValueError("gap is defined for tau >= 0")
    return expm1_minus(-arr)


def _cost_ratio(params: AssetParams) -> float:
    r = params.interest_rate
    return params.acquisition_cost * r * r / params.maint_slope


def _scaled_interior_age(params: AssetParams) -> float:
    """rate * interior age, via the Lambert W closed form."""
    c = _cost_ratio(params)
    return 1.0 + c + w0(-math.exp(-1.0 - c))


def interior_minimum_age(params: AssetParams) -> float:
    """Age of the interior critical point of the ownership cost.

    Defined by gap(rate * age) == cost_ratio, solved in closed form through
    the Lambert W function.  It is a genuine local minimum (and lies beyond
    the full-depreciation age) exactly when maint_slope < slope_threshold;
    the formula itself is total over valid parameters.
    """
    return _scaled_interior_age(params) / params.interest_rate


def slope_threshold(params: AssetParams) -> float:
    """Maintenance-slope level separating interior-optimum regimes.

    For maint_slope below the threshold, the cost keeps falling past the
    full-depreciation age and turns back up at the interior optimum; at or
    above it, the cost is increasing beyond the junction.  Always strictly
    greater than depreciation_rate * interest_rate.
    """
    r = params.interest_rate
    return params.acquisition_cost * r * r / gap(r * params.junction)


def acquisition_threshold(params: AssetParams) -> float:
    """Purchase price at which immediate replacement ties the interior optimum.

    Defined only when maint_slope > depreciation_rate * interest_rate (below
    that the comparison never arises); diverges as the two approach.
    """
    a = params.maint_slope
    b = params.depreciation_rate
    r = params.interest_rate
    ratio = b * r / a
    if ratio >= 1.0:
        raise ValueError(
            "acquisition_threshold requires maint_slope > depreciation_rate * interest_rate"
        )
    return -(a / (r * r)) * math.log1p(-ratio) - b / r


def _relatively_close(x: float, y: float, rel_tol: float) -> bool:
    if rel_tol > 0.0:
        return abs(x - y) <= rel_tol * max(abs(x), abs(y))
    return x == y


def classify(params: AssetParams, rel_tol: float = 0.0) -> CaseLabel:
    """Name the minimizer regime of the ownership cost.

    Comparisons are exact floating-point by default.  A positive ``rel_tol``
    widens equality detection, letting callers ask whether the parameters sit
    within a relative band of a knife-edge case (C2 or C4_2).
    """
    a = params.maint_slope
    depreciation_speed = params.depreciation_rate * params.interest_rate
    a_threshold = slope_threshold(params)

    if _relatively_close(a, depreciation_speed, rel_tol):
        return CaseLabel.C2 if a >= a_threshold else CaseLabel.C5
    if a > depreciation_speed:
        if a >= a_threshold:
            return CaseLabel.C1
        A_threshold = acquisition_threshold(params)
        if _relatively_close(params.acquisition_cost, A_threshold, rel_tol):
            return CaseLabel.C4_2
        if params.acquisition_cost > A_threshold:
            return CaseLabel.C4_1
        return CaseLabel.C4_3
    return CaseLabel.C3 if a >= a_threshold else CaseLabel.C5


def economic_life(params: AssetParams, rel_tol: float = 0.0) -> EconomicLifeResult:
    """Global minimizers of the ownership cost and the minimum yearly cost.

    The minimum cost uses the closed forms
    ``(e^r - 1)(A r + b)/r`` at age zero and
    ``(e^r - 1)/r^2 * (a + A r^2 + a W0(-e^(-1-c)))`` at the interior optimum,
    rather than re-evaluating the piecewise cost.
    """
    label = classify(params, rel_tol)
    A = params.acquisition_cost
    a = params.maint_slope
    b = params.depreciation_rate
    r = params.interest_rate
    i_eff = math.expm1(r)

    c = _cost_ratio(params)
    a_threshold = slope_threshold(params)
    interior_age = None
    if a < a_threshold:
        interior_age = interior_minimum_age(params)
    A_threshold = None
    if a > b * r:
        A_threshold = acquisition_threshold(params)

    cost_at_zero = i_eff * (A * r + b) / r

    def cost_at_interior() -> float:
        # equals i_eff * a * (rate * interior age) / r^2
        return i_eff * a * _scaled_interior_age(params) / (r * r)

    if label in (CaseLabel.C1, CaseLabel.C4_1):
        minimizers = MinimizerSet.point(0.0)
        min_cost = cost_at_zero
    elif label is CaseLabel.C2:
        minimizers = MinimizerSet.closed_interval(0.0, params.junction)
        min_cost = cost_at_zero
    elif label is CaseLabel.C3:
        minimizers = MinimizerSet.point(params.junction)
        min_cost = property_cost(params, params.junction)
    elif label is CaseLabel.C4_2:
        minimizers = MinimizerSet.pair(0.0, interior_age)
        min_cost = cost_at_zero
    else:  # C4_3, C5
        minimizers = MinimizerSet.point(interior_age)
        min_cost = cost_at_interior()

    return EconomicLifeResult(
        case=label,
        minimizers=minimizers,
        min_cost=min_cost,
        interior_minimum_age=interior_age,
        cost_ratio=c,
        slope_threshold=a_threshold,
        acquisition_threshold=A_threshold,
    )
