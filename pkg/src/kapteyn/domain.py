"""Convergence geometry of the Kapteyn series and its power series.

Two radii matter for F(z,t) = sum t^n J_n(nz):

* r(t): the Kapteyn series converges for |z| < r(t), where
      r e^{sqrt(1+r^2)} / (1 + sqrt(1+r^2)) * t = 1
  (the binding direction is the imaginary axis, so the bound involves
  sqrt(1 + r^2); r(1) is the classical Laplace limit 0.6627434...).

* R(t): the radius of the power series sum A_n(t) z^n, defined implicitly
  by
      e^{-sqrt 2}(1+sqrt 2) R e^{sqrt(1+R^2)}/(1+sqrt(1+R^2)) * t = 1   (0 < t <= 1)
      R e^{sqrt(1-R^2)}/(1+sqrt(1-R^2)) * t = 1                        (t >= 1)
  with R(1) = 1 from both branches.

Each left-hand side is continuous and strictly increasing in the radius,
so plain bisection with bracket doubling is unconditionally convergent.
The bisection refines to a relative interval width of 1e-15: an absolute
width target cannot hold the residual below 1e-12 once t is large and the
radius is ~1/t, because d(residual)/d(radius) grows like 1/radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bessel import _require_finite, sqrt1mz2
from .coeffs import a_eval_logabs
from .errors import DomainError, KapteynError, ZeroCoefficientError

_SQRT2 = math.sqrt(2.0)
# prefactor of the small-t implicit equation; equals exp(-sqrt(2))*(1+sqrt(2))
_SMALL_T_PREFACTOR = math.exp(-_SQRT2) * (1.0 + _SQRT2)
# constant in the small-t asymptote of psi: sqrt(2) + ln(sqrt(2)-1)
_PSI_SMALL_CONST = _SQRT2 + math.log(_SQRT2 - 1.0)
_REL_WIDTH = 1e-15


@dataclass(frozen=True)
class RadiusResult:
    """Solved radius with the residual |LHS - 1| of its implicit equation."""

    t: float
    radius: float
    branch: str  # "small_t", "large_t", or "kapteyn_domain"
    residual: float
    iterations: int


def omega(z: complex) -> float:
    """The Kapteyn modulus |z exp(sqrt(1-z^2)) / (1 + sqrt(1-z^2))|.

    Uses the Re >= 0 branch of sqrt1mz2, under which 1 + sqrt(1-z^2)
    never vanishes and omega is continuous on the real interval (-1, 1)
    with omega(0) = 0.
    """
    z = _require_finite(z)
    az = abs(z)
    if az == 0.0:
        return 0.0
    s = sqrt1mz2(z)
    log_om = math.log(az) + s.real - math.log(abs(1.0 + s))
    try:
        return math.exp(log_om)
    except OverflowError:
        return math.inf


def kapteyn_converges(z: complex, t: float) -> bool:
    """True iff omega(z) * |t| < 1, the convergence test for sum t^n J_n(nz)."""
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t}")
    if t == 0.0:
        return True
    return omega(z) * abs(t) < 1.0


def _lhs_kapteyn(x: float) -> float:
    s = math.sqrt(1.0 + x * x)
    try:
        return x * math.exp(s) / (1.0 + s)
    except OverflowError:
        return math.inf  # bracket-expansion probes far beyond any root


def _lhs_power_small(x: float) -> float:
    return _SMALL_T_PREFACTOR * _lhs_kapteyn(x)


def _lhs_power_large(x: float) -> float:
    # (1-x)(1+x) instead of 1-x^2: keeps precision near the R = 1 seam
    s = math.sqrt((1.0 - x) * (1.0 + x))
    return x * math.exp(s) / (1.0 + s)


def _bisect_increasing(g, t: float, hi_cap: float | None) -> tuple[float, int]:
    """Root of g(x)*t = 1 for strictly increasing g, x > 0.

    Doubles the upper bracket until the sign changes (unless hi_cap pins
    it), then bisects to relative width 1e-15.
    """
    lo = 1e-300
    if hi_cap is None:
        hi = 1.0
        while g(hi) * t < 1.0:
            hi *= 2.0
            if hi > 1e300:
                raise KapteynError("bracket expansion ran away")
    else:
        hi = hi_cap
    iterations = 0
    while hi - lo > _REL_WIDTH * max(lo, 1e-300):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if g(mid) * t < 1.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    # the final bracket is a few ulps wide; hand back whichever candidate
    # leaves the smallest residual.  The cap is listed first so that a root
    # sitting exactly on it (R(1) = 1) is recovered exactly on a tie.
    candidates = ([] if hi_cap is None else [hi_cap]) + [0.5 * (lo + hi), lo, hi]
    return min(candidates, key=lambda x: abs(g(x) * t - 1.0)), iterations


def solve_r(t: float) -> RadiusResult:
    """Kapteyn-domain radius r(t): unique positive root of its implicit equation."""
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    root, iters = _bisect_increasing(_lhs_kapteyn, t, None)
    residual = abs(_lhs_kapteyn(root) * t - 1.0)
    return RadiusResult(t=t, radius=root, branch="kapteyn_domain",
                        residual=residual, iterations=iters)


def _solve_R_small(t: float) -> RadiusResult:
    root, iters = _bisect_increasing(_lhs_power_small, t, None)
    residual = abs(_lhs_power_small(root) * t - 1.0)
    return RadiusResult(t=t, radius=root, branch="small_t",
                        residual=residual, iterations=iters)


def _solve_R_large(t: float) -> RadiusResult:
    # sqrt(1 - R^2) confines the search to (0, 1]; R(t) <= 1 for t >= 1
    root, iters = _bisect_increasing(_lhs_power_large, t, 1.0)
    residual = abs(_lhs_power_large(root) * t - 1.0)
    return RadiusResult(t=t, radius=root, branch="large_t",
                        residual=residual, iterations=iters)


def solve_R(t: float) -> RadiusResult:
    """Power-series radius R(t); branch picked by t, both meeting at R(1) = 1."""
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    if t >= 1.0:
        result = _solve_R_large(t)
        if t == 1.0:
            # both implicit equations must hand back the same unit radius
            other = _solve_R_small(t)
            assert abs(result.radius - other.radius) < 1e-10
        return result
    return _solve_R_small(t)


def psi_small_t(t: float) -> float:
    """Small-t asymptote of psi(t) = 1/R(t): 1/(-ln t + sqrt 2 + ln(sqrt 2 - 1))."""
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in (0, 1), got {t}")
    return 1.0 / (-math.log(t) + _PSI_SMALL_CONST)


def psi_large_t(t: float) -> float:
    """Large-t asymptote of psi(t) = 1/R(t): (e/2) t.

    Asymptotic only: at t = 1 it returns e/2 = 1.359... although the exact
    value is psi(1) = 1.  The mismatch is inherent to the asymptote; use
    solve_R for the implicit-equation value.
    """
    return 0.5 * math.e * t


def coeff_radius_estimate(n: int, t: float) -> float:
    """Radius estimate |A_n(t)|^(-1/n) from the exact log-magnitude path.

    For n as large as 500 this tracks solve_R(t) to a few percent, which
    is what the radius-versus-estimate figure data demonstrates.
    """
    log_abs, sign = a_eval_logabs(n, t)
    if sign == 0:
        raise ZeroCoefficientError(
            f"A_{n}({t!r}) is exactly zero; perturb t to estimate the radius"
        )
    return math.exp(-log_abs / n)
