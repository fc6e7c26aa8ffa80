"""Sharp operator-norm bounds and the regime classification.

Three extremal families compete: a ball indicator (p = 1), a Gaussian
(subcritical) and a truncated Gaussian (supercritical).  The classifier
compares (B/A)^p against kappa^d (time-frequency) or 4 pi sigma (wavelet);
ties are classified as gaussian, where the two formulas coincide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import gammainc

from .core import ConstraintSet
from .errors import InvalidInputError, RegimeError

__all__ = ["G", "G_beta", "BoundReport", "gabor_bound", "wavelet_bound", "lambda_root"]


def G(s, d: int = 1):
    """Concentration ceiling for phase-space sets of volume s in R^{2d}.

    Equals 1 - e^{-s} for d = 1; in general it is the regularized lower
    incomplete gamma P(d, (d! s)^{1/d}), strictly increasing and concave
    with G(s) <= s and limit 1.
    """
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise InvalidInputError("G is defined for s >= 0")
    if d < 1:
        raise InvalidInputError("dimension must be a positive integer")
    x = (math.factorial(d) * s) ** (1.0 / d)
    out = gammainc(d, x)
    return out if out.ndim else float(out)


def G_beta(s, beta: float):
    """Wavelet analogue: G_beta(s) = 1 - (1 + s/(4 pi))^{-2 beta}."""
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise InvalidInputError("G_beta is defined for s >= 0")
    if beta <= 0:
        raise InvalidInputError("beta must be positive")
    out = 1.0 - (1.0 + s / (4.0 * math.pi)) ** (-2.0 * beta)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class BoundReport:
    """Result of a sharp-bound evaluation.

    regime is 'ball', 'gaussian' or 'truncated'; lam is the extremal-profile
    peak level (None in the ball regime); critical_ratio is (B/A)^p divided
    by the regime threshold, with inf at p = 1.
    """

    regime: str
    bound: float
    lam: float | None
    critical_ratio: float
    inputs: ConstraintSet

    def as_dict(self) -> dict:
        return {
            "transform": self.inputs.transform,
            "regime": self.regime,
            "bound": self.bound,
            "lambda": self.lam,
            "critical_ratio": self.critical_ratio,
        }


# ---------------------------------------------------------------------------
# time-frequency (Gabor) bounds
# ---------------------------------------------------------------------------

def _exp_or_inf(x: float) -> float:
    # extreme B/A ratios push the extremal peak level out of float range;
    # the bound formulas stay finite, so report the level as inf
    return math.exp(x) if x < 709.0 else math.inf


def _u_gabor(t, lam: float, p: float, d: int):
    """Distribution function of the (possibly truncated) Gaussian profile."""
    t = np.asarray(t, dtype=float)
    return ((p - 1.0) * np.maximum(np.log(lam / t), 0.0)) ** d / math.factorial(d)


def _moment_gabor(lam: float, c: ConstraintSet) -> float:
    """h(lam) = p * int_0^A t^{p-1} u_lam(t) dt by adaptive quadrature."""
    p, d = c.p, c.d
    upper = min(c.A, lam)
    val, _ = quad(lambda t: p * t ** (p - 1.0) * _u_gabor(t, lam, p, d),
                  0.0, upper, epsabs=1e-14, epsrel=1e-13, limit=200)
    return val


def _truncated_gabor_bound_quad(c: ConstraintSet, lam: float) -> float:
    """int_0^A G(u_lam(t)) dt; the general-d route for the supercritical bound."""
    val, _ = quad(lambda t: G(_u_gabor(t, lam, c.p, c.d), c.d),
                  0.0, c.A, epsabs=1e-12, epsrel=1e-12, limit=200)
    return val


def lambda_root(c: ConstraintSet, rtol: float = 1e-12) -> float:
    """Peak level of the supercritical extremal, from the saturation equation.

    Bisection on the strictly increasing h(lam) = p int t^{p-1} u_lam dt over
    an expanding bracket [A, A 2^k]; stops when |h - B^p| / B^p < rtol.
    """
    if c.transform != "gabor":
        raise RegimeError("lambda_root handles the time-frequency case")
    target = c.B ** c.p
    if c.p == 1 or math.isinf(c.A) or c.b_over_a_pow_p <= c.kappa ** c.d:
        raise RegimeError("lambda_root requires the supercritical regime")
    # bracket multiplicatively: h grows only like (log lam)^d, so the root
    # can sit far beyond A (or beyond float range altogether -> inf)
    log_a = math.log(c.A)
    prev_span = 0.0
    span = math.log(2.0)
    while _moment_gabor(math.exp(log_a + span), c) < target:
        prev_span, span = span, 2.0 * span
        if log_a + span > 700.0:
            return math.inf
    lo, hi = log_a + prev_span, log_a + span
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        h = _moment_gabor(math.exp(mid), c)
        if abs(h - target) < rtol * target:
            return math.exp(mid)
        if h < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 4e-16 * max(abs(hi), 1.0):
            break
    return math.exp(0.5 * (lo + hi))


def gabor_bound(c: ConstraintSet, root_tol: float = 1e-12) -> BoundReport:
    """Sharp bound for the norm of a time-frequency localization operator.

    p = 1: A G(B/A), attained by a ball indicator.
    Subcritical ((B/A)^p <= kappa^d): kappa^{d kappa} B, attained by a Gaussian
    of peak lam = B kappa^{-d/p}.
    Supercritical: int_0^A G(u_lam) dt with lam > A from ``lambda_root``; for
    d = 1 both lam and the bound have closed forms.
    """
    if c.transform != "gabor":
        raise InvalidInputError("constraint set is not tagged gabor")
    p, A, B, d = c.p, c.A, c.B, c.d

    if p == 1:
        return BoundReport("ball", A * G(B / A, d), None, math.inf, c)

    kd = c.kappa ** d
    ratio = c.b_over_a_pow_p / kd
    if ratio <= 1.0:
        lam = B * c.kappa ** (-d / p)
        return BoundReport("gaussian", c.kappa ** (d * c.kappa) * B, lam, ratio, c)

    if d == 1:
        lam = A * _exp_or_inf(c.b_over_a_pow_p / (p - 1.0) - 1.0 / p)
        bound = A * (1.0 - math.exp(max(c.kappa - c.b_over_a_pow_p, -745.0)) / p)
    else:
        lam = lambda_root(c, rtol=root_tol)
        # beyond float range the level sets fill (0, A) and the bound is A
        bound = A if math.isinf(lam) else _truncated_gabor_bound_quad(c, lam)
    return BoundReport("truncated", bound, lam, ratio, c)


# ---------------------------------------------------------------------------
# wavelet bounds
# ---------------------------------------------------------------------------

def wavelet_bound(c: ConstraintSet) -> BoundReport:
    """Sharp bound for the norm of a Cauchy-wavelet localization operator.

    Same three regimes with threshold 4 pi sigma; all formulas are closed
    form, including the supercritical peak level lam.
    """
    if c.transform != "wavelet":
        raise InvalidInputError("constraint set is not tagged wavelet")
    p, A, B, beta = c.p, c.A, c.B, c.beta

    if p == 1:
        return BoundReport("ball", A * G_beta(B / A, beta), None, math.inf, c)

    sigma, alpha = c.sigma, c.alpha
    fourpisigma = 4.0 * math.pi * sigma
    ratio = c.b_over_a_pow_p / fourpisigma
    if ratio <= 1.0:
        lam = B * fourpisigma ** (-1.0 / p)
        bound = 2.0 * beta / (4.0 * math.pi) ** (1.0 / p) * sigma ** c.kappa * B
        return BoundReport("gaussian", bound, lam, ratio, c)

    base = (4.0 * math.pi * A ** p * p * sigma
            / (alpha * (B ** p + 4.0 * A ** p * math.pi)))
    lam = A * _exp_or_inf(-math.log(base) / alpha)
    bound = A * (1.0 - p ** (2.0 * beta) * (sigma / alpha) ** (2.0 * beta + 1.0)
                 * (1.0 + c.b_over_a_pow_p / (4.0 * math.pi)) ** (-2.0 * beta))
    return BoundReport("truncated", bound, lam, ratio, c)
