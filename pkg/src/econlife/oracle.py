"""Independent numerical ground truth for the closed forms.

Two derivative-free tools, deliberately ignorant of the classification
machinery: adaptive quadrature for the discounted-maintenance integral, and
a grid scan plus golden-section / quadratic-fit refinement that locates the
global minimizers of the ownership cost by value comparison alone.  Tests and
the fleet ``--verify`` mode use these to cross-check the closed-form path;
nothing here is consulted by that path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cost_model import MAX_RATE_AGE, AssetParams, property_cost
from .errors import NumericError

__all__ = [
    "MinimizationReport",
    "integrate_discounted_maintenance",
    "brute_force_minimize",
    "check_against_search",
]

#: Grid values within this relative band of the minimum count as tied.
TIE_RTOL = 1e-12
#: A run of at least this many tied grid points is reported as a plateau.
PLATEAU_MIN_POINTS = 3
_GOLDEN_WIDTH = 1e-10
_MAX_QUAD_DEPTH = 60
_CHUNK = 1 << 20
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MinimizationReport:
    """Outcome of a brute-force scan of the ownership cost.

    argmin_points holds the refined minimizer locations; plateau is the span
    of value-tied grid points when the minimum is flat at grid resolution.
    Every reported point attains min_value to within the tie tolerance.
    """

    argmin_points: tuple[float, ...]
    plateau: tuple[float, float] | None
    min_value: float
    grid_step: float
    refinements: int


def integrate_discounted_maintenance(params: AssetParams, t: float, tol: float = 1e-10) -> float:
    """Discounted upkeep accumulated to age t, by adaptive Simpson quadrature.

    Integrates maint_slope * s * e**(-rate*s) over [0, t] to an
    absolute-plus-relative tolerance ``tol``, bisecting intervals until the
    local fifth-order error estimate passes.  Independent of the closed-form
    antiderivative, which the tests compare against.
    """
    if t < 0.0:
        raise ValueError("integration age must be >= 0")
    if not tol > 0.0:
        raise ValueError("tol must be > 0")
    if t == 0.0:
        return 0.0
    a = params.maint_slope
    r = params.interest_rate

    def integrand(s: float) -> float:
        return a * s * math.exp(-r * s)

    lo, hi = 0.0, float(t)
    f_lo, f_mid, f_hi = integrand(lo), integrand(0.5 * (lo + hi)), integrand(hi)
    whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi)
    budget = tol * max(1.0, abs(whole))
    return _adaptive_simpson(integrand, lo, hi, f_lo, f_mid, f_hi, whole, budget, _MAX_QUAD_DEPTH)


def _adaptive_simpson(f, lo, hi, f_lo, f_mid, f_hi, whole, tol, depth):
    mid = 0.5 * (lo + hi)
    left_mid = 0.5 * (lo + mid)
    right_mid = 0.5 * (mid + hi)
    f_lm = f(left_mid)
    f_rm = f(right_mid)
    left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid)
    right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_hi)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise NumericError(
            f"adaptive quadrature did not converge on [{lo!r}, {hi!r}] "
            f"after {_MAX_QUAD_DEPTH} bisection levels"
        )
    return _adaptive_simpson(
        f, lo, mid, f_lo, f_lm, f_mid, left, 0.5 * tol, depth - 1
    ) + _adaptive_simpson(f, mid, hi, f_mid, f_rm, f_hi, right, 0.5 * tol, depth - 1)


def brute_force_minimize(params: AssetParams, t_max: float, step: float) -> MinimizationReport:
    """Locate all global minimizers of the ownership cost on [0, t_max].

    Scans the grid 0, step, ..., t_max, refines every candidate basin (grid
    local minima and the left boundary) by golden-section search to width
    1e-10 followed by shrinking quadratic fits, and keeps the basins whose
    refined values tie the best one within ``TIE_RTOL``.  Runs of >= 3 grid
    points value-tied with the minimum are reported as a plateau: there the
    cost is flat at rounding level and no value comparison can single out a
    point.  Uses only value comparisons of ``property_cost``.
    """
    if not step > 0.0:
        raise ValueError("step must be > 0")
    floor = max(2.0 * params.junction, 10.0)
    if t_max < floor:
        raise ValueError(f"scan horizon t_max must be >= {floor:g} for these parameters")
    n = int(math.floor(t_max / step + 1e-9))

    def h(age: float) -> float:
        return property_cost(params, age)

    h_min, argmin_index, basin_indices = _grid_scan(params, n, step)
    threshold = h_min + TIE_RTOL * abs(h_min)
    runs = _tied_runs(params, n, step, threshold)

    plateau = None
    plateau_runs = [run for run in runs if run[1] - run[0] + 1 >= PLATEAU_MIN_POINTS]
    if plateau_runs:
        widest = max(plateau_runs, key=lambda run: run[1] - run[0])
        plateau = (widest[0] * step, widest[1] * step)

    refined: list[tuple[float, float]] = []
    refinements = 0
    for index in sorted(set(basin_indices) | {argmin_index}):
        bracket_lo = max(index - 1, 0) * step
        bracket_hi = min(index + 1, n) * step
        location, value = _golden_section(h, bracket_lo, bracket_hi, _GOLDEN_WIDTH)
        refinements += 1
        location, value = _quadratic_polish(h, location, value, step)
        if index <= 1:
            h_zero = h(0.0)
            if h_zero <= value:
                location, value = 0.0, h_zero
        refined.append((location, value))

    best_value = min([value for _, value in refined], default=h_min)
    best_value = min(best_value, h_min)
    tie_band = best_value + TIE_RTOL * abs(best_value)

    points: list[float] = []
    for location, value in sorted(refined):
        if value > tie_band:
            continue
        if plateau is not None and plateau[0] - step <= location <= plateau[1] + step:
            continue  # already represented by the plateau
        if points and abs(location - points[-1]) <= 2.0 * step:
            continue  # same basin reached from two candidate indices
        points.append(location)

    if not points:
        points.append(argmin_index * step)
    return MinimizationReport(
        argmin_points=tuple(points),
        plateau=plateau,
        min_value=best_value,
        grid_step=step,
        refinements=refinements,
    )


# At most two genuine basins exist (the left boundary and the interior
# optimum); extra candidates only ever arise from rounding jitter in flat
# stretches, so a small fixed budget loses nothing.
_MAX_BASINS = 16


def _grid_scan(params, n, step, chunk=_CHUNK):
    """Grid minimum plus candidate basin indices (strict local minima)."""
    h_min = math.inf
    argmin_index = 0
    candidates: list[tuple[float, int]] = []
    carry = np.empty(0)
    first_value = None
    second_value = None
    for lo in range(0, n + 1, chunk):
        hi = min(lo + chunk, n + 1)
        ages = np.arange(lo, hi, dtype=float) * step
        values = property_cost(params, ages)
        i = int(np.argmin(values))
        if values[i] < h_min:
            h_min = float(values[i])
            argmin_index = lo + i
        if first_value is None:
            first_value = float(values[0])
            if len(values) > 1:
                second_value = float(values[1])
        extended = np.concatenate([carry, values])
        interior = extended[1:-1]
        strict = np.flatnonzero((interior < extended[:-2]) & (interior < extended[2:]))
        for j in strict:
            index = lo - len(carry) + int(j) + 1
            candidates.append((float(extended[int(j) + 1]), index))
        candidates = sorted(candidates)[:_MAX_BASINS]
        carry = extended[-2:] if len(extended) >= 2 else extended
    basins = [index for _, index in candidates]
    if second_value is None or first_value <= second_value:
        basins.append(0)
    if n >= 1 and carry.size == 2 and carry[1] <= carry[0]:
        basins.append(n)
    return h_min, argmin_index, basins


def _tied_runs(params, n, step, threshold, chunk=_CHUNK):
    """Inclusive (start, end) index runs where the grid ties the minimum."""
    runs: list[tuple[int, int]] = []
    open_start = None
    previous_tied = False
    for lo in range(0, n + 1, chunk):
        hi = min(lo + chunk, n + 1)
        ages = np.arange(lo, hi, dtype=float) * step
        tied = property_cost(params, ages) <= threshold
        transitions = np.diff(np.concatenate(([previous_tied], tied)).astype(np.int8))
        starts = [lo + int(j) for j in np.flatnonzero(transitions == 1)]
        ends = [lo + int(j) - 1 for j in np.flatnonzero(transitions == -1)]
        # Transitions alternate, so each end pairs the carried-over run first
        # and then the chunk's own starts in order.
        for end in ends:
            if open_start is not None:
                runs.append((open_start, end))
                open_start = None
            else:
                runs.append((starts.pop(0), end))
        if starts:
            open_start = starts.pop(0)
        previous_tied = bool(tied[-1])
    if open_start is not None:
        runs.append((open_start, n))
    return runs


def _golden_section(f, lo, hi, width):
    span = hi - lo
    c = hi - _INVPHI * span
    d = lo + _INVPHI * span
    f_c, f_d = f(c), f(d)
    while hi - lo > width:
        if f_c < f_d:
            hi, d, f_d = d, c, f_c
            c = hi - _INVPHI * (hi - lo)
            f_c = f(c)
        else:
            lo, c, f_c = c, d, f_d
            d = lo + _INVPHI * (hi - lo)
            f_d = f(d)
    return (c, f_c) if f_c <= f_d else (d, f_d)


def _quadratic_polish(f, v, f_v, span, levels=12):
    """Sharpen a minimizer location with shrinking three-point parabola fits.

    Comparison-based search cannot localize a smooth minimum better than the
    sqrt(eps)-wide band where values tie at rounding level; a parabola fitted
    at half-width d instead pins the vertex to ~(noise/curvature)/d, so
    marching d downward until the curvature signal drowns in rounding noise
    gains several orders of magnitude in location accuracy.
    """
    best_value = f_v
    d = span
    for _ in range(levels):
        d = min(d, v)  # keep the left sample at a valid age
        if d <= 0.0:
            break
        f_lo = f(v - d)
        f_hi = f(v + d)
        best_value = min(best_value, f_lo, f_hi)
        curvature = (f_lo - f_v) + (f_hi - f_v)
        if not curvature > 64.0 * np.finfo(float).eps * abs(f_v):
            break
        shift = 0.5 * d * (f_lo - f_hi) / curvature
        shift = max(-d, min(d, shift))
        v = v + shift
        f_v = f(v)
        best_value = min(best_value, f_v)
        d /= 8.0
    return v, best_value


def check_against_search(
    params: AssetParams,
    result,
    step: float = 1e-3,
    value_rtol: float = 1e-9,
    point_tol: float = 1e-6,
    plateau_tol: float = 1e-3,
) -> str | None:
    """Compare a closed-form classification against the brute-force scan.

    Returns None on agreement, otherwise a one-line description of the first
    discrepancy.  Point minimizers must match within ``point_tol`` (or fall
    inside a reported plateau: a minimum whose basin is flat to within the
    tie tolerance cannot be localized more tightly by value comparison).
    """
    t_max = max(2.0 * params.junction, 10.0)
    if result.interior_minimum_age is not None:
        t_max = max(t_max, 1.5 * result.interior_minimum_age)
    cap = 0.98 * MAX_RATE_AGE / params.interest_rate
    if cap < t_max:
        if cap < max(2.0 * params.junction, 10.0):
            return "scan horizon exceeds the overflow guard; not verifiable"
        t_max = cap
    report = brute_force_minimize(params, t_max, step)

    scale = max(abs(result.min_cost), 1e-300)
    if abs(report.min_value - result.min_cost) > value_rtol * scale:
        return (
            f"min cost mismatch: closed form {result.min_cost!r} vs "
            f"search {report.min_value!r}"
        )

    claimed = result.minimizers
    if claimed.kind == "interval":
        if report.plateau is None:
            return "closed form claims an interval of minimizers; search found none"
        lo, hi = claimed.values
        if abs(report.plateau[0] - lo) > plateau_tol or abs(report.plateau[1] - hi) > plateau_tol:
            return (
                f"plateau mismatch: closed form [{lo!r}, {hi!r}] vs "
                f"search [{report.plateau[0]!r}, {report.plateau[1]!r}]"
            )
        return None

    for point in claimed.values:
        in_plateau = report.plateau is not None and (
            report.plateau[0] - plateau_tol <= point <= report.plateau[1] + plateau_tol
        )
        near_point = any(abs(point - found) <= point_tol for found in report.argmin_points)
        if not (in_plateau or near_point):
            return (
                f"minimizer {point!r} not reproduced by search "
                f"(found {report.argmin_points!r}, plateau {report.plateau!r})"
            )
    if report.plateau is None:
        for found in report.argmin_points:
            if not any(abs(point - found) <= point_tol for point in claimed.values):
                return f"search found an extra minimizer at {found!r}"
    return None
