"""Small numerical kernels shared by the cost formulas."""

import numpy as np

# Below this the direct form e^x - 1 - x loses ~eps/x of its value to
# cancellation; the factored series is exact to a few ulp instead.
_SERIES_CUTOFF = 1e-3


def expm1_minus(x):
    """e**x - 1 - x, safe against cancellation for small ``|x|``.

    Accepts scalars or numpy arrays and preserves the input shape.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore"):
        direct = np.expm1(x) - x
    x2 = x * x
    # e^x - 1 - x = (x^2/2) (1 + x/3 + x^2/12 + x^3/60 + x^4/360 + ...)
    series = 0.5 * x2 * (1.0 + x / 3.0 + x2 / 12.0 + x2 * x / 60.0 + x2 * x2 / 360.0)
    out = np.where(np.abs(x) < _SERIES_CUTOFF, series, direct)
    return float(out[()]) if out.ndim == 0 else out
