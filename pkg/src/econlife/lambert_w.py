"""Principal real branch of the Lambert W function.

``w0(z)`` solves ``w * exp(w) = z`` for the unique real ``w >= -1``, defined
for ``z >= -1/e``.  The evaluation uses regime-specific starting guesses
(Maclaurin series near zero, square-root expansion near the branch point,
iterated-log asymptotics for large arguments) refined by Halley's method,
following the classical treatment in Corless, Gonnet, Hare, Jeffrey and
Knuth, "On the Lambert W function", Adv. Comput. Math. 5 (1996).

No external special-function library is used; the residual ``w e^w - z`` is
driven to a few ulp, which the test suite checks directly.
"""

import math

from .errors import NumericError

__all__ = ["BRANCH_POINT", "w0", "w0_series", "w0_inverse"]

#: Left edge of the real domain, -1/e.  w0(BRANCH_POINT) = -1.
BRANCH_POINT = -1.0 / math.e

_RTOL = 1e-15
_MAX_ITER = 50
_EPS = 2.0 ** -52
# Within this offset of the branch point the square-root expansion is already
# exact to double precision, while Halley's denominator degenerates (the
# derivative of w e^w vanishes at w = -1).
_EXPANSION_BAND = 1e-9


def w0(z: float) -> float:
    """Evaluate the principal branch W0 at a real argument.

    Parameters
    ----------
    z : real number, must satisfy z >= -1/e.

    Returns
    -------
    The unique w >= -1 with ``w * exp(w) == z``.  Monotone increasing in z,
    negative exactly for z < 0, and w0(-1/e) = -1.

    Raises
    ------
    ValueError
        If z is NaN or below -1/e (no real value exists there).
    NumericError
        If the iteration fails to converge (not expected to occur).
    """
    if math.isnan(z) or z < BRANCH_POINT:
        raise ValueError(
            f"Lambert W0 is real only for z >= -1/e ~ {BRANCH_POINT:.17g}; got z = {z!r}"
        )
    if z == 0.0:
        return 0.0
    if z - BRANCH_POINT <= _EXPANSION_BAND:
        return _branch_point_expansion(z)

    w = _initial_guess(z)
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        residual = w * ew - z
        # The computed residual cannot fall below rounding noise of z; once it
        # does, w is as converged as the conditioning of w e^w allows (near the
        # branch point that is well before the step criterion can trigger).
        if abs(residual) <= 4.0 * _EPS * abs(z):
            return w
        wp1 = w + 1.0
        # Halley update for f(w) = w e^w - z:
        #   w <- w - f / (f' - f f'' / (2 f')) with f' = e^w (1+w), f'' = e^w (2+w)
        step = residual / (ew * wp1 - (w + 2.0) * residual / (2.0 * wp1))
        w -= step
        if w < -1.0:
            # Overshoot past the branch value; pull back inside the domain of
            # the branch.  True roots this deep are handled by the expansion.
            w = -1.0 + 1e-8
        if abs(step) <= _RTOL * abs(w):
            return w
    raise NumericError(f"Halley iteration for w0({z!r}) did not converge in {_MAX_ITER} steps")


def w0_series(z: float, n_terms: int) -> float:
    """Partial sum of the Maclaurin series of W0.

    The series is sum_{n>=1} (-n)^(n-1)/n! * z^n, convergent for |z| < 1/e.
    Useful as an independent cross-check of :func:`w0` near the origin.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if not abs(z) < 1.0 / math.e:
        raise ValueError(f"series converges only for |z| < 1/e ~ {1.0 / math.e:.6g}; got z = {z!r}")
    total = 0.0
    term = z
    for n in range(1, n_terms + 1):
        total += term
        # (-(n+1))^n / (n+1)!  =  (-n)^(n-1)/n! * (-((n+1)/n)^(n-1))
        term *= -z * ((n + 1.0) / n) ** (n - 1)
    return total


def w0_inverse(w: float) -> float:
    """The inverse map ``w * exp(w)``, restricted to the branch w > -1."""
    if not w > -1.0:
        raise ValueError(f"w0_inverse is the inverse of w0 only for w > -1; got w = {w!r}")
    return w * math.exp(w)


def _branch_point_expansion(z: float) -> float:
    # W0(-1/e + d) = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + 769 p^5/17280 + ...
    # with p = sqrt(2 (e z + 1)) = sqrt(2 e d).
    p = math.sqrt(2.0 * (math.e * z + 1.0))
    return -1.0 + p * (
        1.0
        + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0))))
    )


def _initial_guess(z: float) -> float:
    if z < -0.30:
        # Within ~0.07 of the branch point; the expansion lands well inside
        # Halley's basin even though p is no longer tiny.
        return _branch_point_expansion(z)
    if z <= 0.30:
        return w0_series(z, 8)
    if z < 3.0:
        # Crude interpolation between the series and asymptotic regimes.
        return math.log1p(z)
    lz = math.log(z)
    llz = math.log(lz)
    return lz - llz + llz / lz
