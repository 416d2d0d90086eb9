"""Cash-flow equivalence utilities.

Conversions between future values, present values and level yearly payments
(ordinary annuities, deposits at the end of periods 1..N), plus the
nominal-to-effective interest conversion whose continuous-compounding limit
e**r - 1 links these discrete formulas to the continuous cost model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "CashFlowSeries",
    "future_value_of_annuity",
    "capital_recovery",
    "present_value",
    "effective_rate",
    "continuous_effective_rate",
]


@dataclass(frozen=True)
class CashFlowSeries:
    """Irregular end-of-period deposits over a fixed horizon.

    deposits: (period index k in 1..horizon, amount) pairs, distinct periods.
    horizon:  number of periods N.
    rate:     effective interest per period, > 0.
    """

    deposits: tuple[tuple[int, float], ...]
    horizon: int
    rate: float

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError("horizon must be >= 1")
        if not self.rate > 0.0:
            raise ValueError("rate must be > 0")
        periods = [k for k, _ in self.deposits]
        if any(not (isinstance(k, int) and 1 <= k <= self.horizon) for k in periods):
            raise ValueError("deposit periods must be integers in [1, horizon]")
        if len(set(periods)) != len(periods):
            raise ValueError("deposit periods must be distinct")

    def future_value(self) -> float:
        """Value of all deposits at the end of the horizon."""
        return sum(amount * (1.0 + self.rate) ** (self.horizon - k) for k, amount in self.deposits)

    def equivalent_annuity(self) -> float:
        """Level end-of-period deposit with the same future value."""
        return self.future_value() * self.rate / math.expm1(self.horizon * math.log1p(self.rate))


def future_value_of_annuity(annuity: float, rate: float, periods: int) -> float:
    """Future value of a level deposit made at the end of each period.

    Closed form annuity * ((1+i)^N - 1) / i of the geometric sum.
    """
    if periods < 1:
        raise ValueError("periods must be >= 1")
    if not rate > 0.0:
        raise ValueError("rate must be > 0")
    return annuity * math.expm1(periods * math.log1p(rate)) / rate


def capital_recovery(present: float, rate: float, periods: int) -> float:
    """Level payment that repays a present value over N periods.

    present * i (1+i)^N / ((1+i)^N - 1); the zero-interest limit is present/N.
    """
    if periods < 1:
        raise ValueError("periods must be >= 1")
    if rate < 0.0:
        raise ValueError("rate must be >= 0")
    if rate == 0.0:
        return present / periods
    # (1+i)^N - 1 via expm1/log1p: the direct difference cancels for tiny i
    growth_minus_one = math.expm1(periods * math.log1p(rate))
    return present * rate * (growth_minus_one + 1.0) / growth_minus_one


def present_value(annuity: float, rate: float, periods: int) -> float:
    """Present value of a level end-of-period payment; inverse of capital_recovery."""
    if periods < 1:
        raise ValueError("periods must be >= 1")
    if rate < 0.0:
        raise ValueError("rate must be >= 0")
    if rate == 0.0:
        return annuity * periods
    growth_minus_one = math.expm1(periods * math.log1p(rate))
    return annuity * growth_minus_one / (rate * (growth_minus_one + 1.0))


def effective_rate(nominal: float, periods_per_year: int) -> float:
    """Effective yearly rate of a nominal rate compounded M times a year."""
    if not nominal > 0.0:
        raise ValueError("nominal rate must be > 0")
    if periods_per_year < 1:
        raise ValueError("periods_per_year must be >= 1")
    return math.expm1(periods_per_year * math.log1p(nominal / periods_per_year))


def continuous_effective_rate(nominal: float) -> float:
    """Limit of ``effective_rate`` as compounding becomes continuous: e**r - 1.

    With i defined this way the discount factors agree exactly:
    e**(-r t) == (1 + i)**(-t).
    """
    if not nominal > 0.0:
        raise ValueError("nominal rate must be > 0")
    return math.expm1(nominal)
