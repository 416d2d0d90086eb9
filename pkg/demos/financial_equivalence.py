"""Cash-flow equivalences behind the annual-equivalent cost model.

Any stream of payments can be restated as a level yearly amount with the
same present value, which is what makes holding horizons comparable.  This
script converts an irregular series into its level equivalent, shows the
capital-recovery/present-value inverse pair, and follows the effective rate
of a compounded nominal rate into its continuous limit e^r - 1, the constant
that the continuous-time cost formulas are built on.

Run:  python demos/financial_equivalence.py
"""

import math

from econlife import (
    CashFlowSeries,
    capital_recovery,
    continuous_effective_rate,
    effective_rate,
    future_value_of_annuity,
    present_value,
)

print("irregular deposits -> level deposits (10% per period, horizon 5):")
series = CashFlowSeries(deposits=((1, 300.0), (2, 0.0), (3, 150.0), (5, 75.0)), horizon=5, rate=0.10)
level = series.equivalent_annuity()
print(f"  future value of the irregular series: {series.future_value():.4f}")
print(f"  level deposit with the same future value: {level:.4f}")
print(f"  check: {future_value_of_annuity(level, 0.10, 5):.4f}\n")

print("capital recovery and present value are inverses:")
loan = 10_000.0
payment = capital_recovery(loan, 0.07, 15)
print(f"  repaying {loan:.0f} over 15 years at 7%: {payment:.2f} per year")
print(f"  present value of that payment stream: {present_value(payment, 0.07, 15):.2f}\n")

print("zero-interest limits split evenly:")
print(f"  capital_recovery(100, 0, 4) = {capital_recovery(100.0, 0.0, 4):.2f}")
print(f"  present_value(25, 0, 4)     = {present_value(25.0, 0.0, 4):.2f}\n")

nominal = 0.10
print(f"effective yearly rate of a {nominal:.0%} nominal rate:")
for periods in (1, 2, 4, 12, 52, 365, 10**6):
    print(f"  compounded {periods:>7} times: {effective_rate(nominal, periods):.10f}")
limit = continuous_effective_rate(nominal)
print(f"  continuous limit e^r - 1:  {limit:.10f}")
print(f"\nwith i = e^r - 1 the discount factors agree exactly: "
      f"e^(-r t) - (1+i)^(-t) = {math.exp(-nominal * 3) - (1 + limit) ** -3:.1e} at t = 3")
