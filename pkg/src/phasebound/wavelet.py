"""Cauchy-wavelet transform, hyperbolic geometry, and wavelet operator spectra.

The transform maps Hardy-space signals isometrically into L^2 of the upper
half-plane with the invariant measure y^{-2} dx dy.  Through the Cayley map
w = (z - i)/(z + i) everything radial about i becomes radial in the disc
coordinate x = |w|^2, where symbols diagonalize against the Beta(k+1, 2 beta)
densities.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import betainc, betaln, eval_genlaguerre, gammaln

from .bounds import G_beta
from .errors import (DivergenceError, InvalidInputError, NormalizationError,
                     RegimeError)
from .gabor import OperatorSpectrum, _tail_estimate

__all__ = [
    "cauchy_norm_const",
    "HardySignal",
    "cauchy_wavelet",
    "disc_basis_frequency",
    "HalfPlaneGrid",
    "HalfPlaneField",
    "wavelet_transform",
    "wavelet_transform_at",
    "wavelet_transform_grid",
    "bergman_basis",
    "HyperbolicDisc",
    "hyperbolic_disc_mask",
    "DiscProfile",
    "bergman_radial_eigenvalues",
    "assemble_wavelet_operator",
    "lp_norm_nu",
    "nu_window_integral",
    "distribution_norm_bound_nu",
]

FOUR_PI = 4.0 * math.pi


def cauchy_norm_const(beta: float) -> float:
    """c_beta with c_beta^2 = 2 pi 2^{-2 beta} Gamma(2 beta)."""
    if beta <= 0:
        raise InvalidInputError("beta must be positive")
    return math.sqrt(2.0 * math.pi * math.exp(-2.0 * beta * math.log(2.0)
                                              + gammaln(2.0 * beta)))


@lru_cache(maxsize=8)
def _frequency_rule(n: int):
    """Gauss-Laguerre nodes with weights converted for plain int_0^inf dω.

    Beyond ~180 nodes the raw weights underflow; those far nodes carry
    e^{-omega} factors below double precision for every integrand here, so
    their converted weights are set to zero.
    """
    om, w = np.polynomial.laguerre.laggauss(n)
    with np.errstate(divide="ignore"):
        logw = np.log(w)
    return om, np.where(np.isfinite(logw), np.exp(logw + om), 0.0)


# ---------------------------------------------------------------------------
# Hardy-space signals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HardySignal:
    """Frequency samples of f-hat on a positive-axis quadrature grid.

    ``weights`` integrate smooth functions against d omega on (0, inf), so
    every L^2 pairing is a plain weighted dot product.
    """

    omegas: np.ndarray
    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        om = np.asarray(self.omegas, float)
        v = np.asarray(self.values, complex)
        w = np.asarray(self.weights, float)
        if not (om.shape == v.shape == w.shape) or om.ndim != 1:
            raise InvalidInputError("omegas, values, weights must be matching 1-d arrays")
        if np.any(om <= 0):
            raise InvalidInputError("Hardy signals live on omega > 0")
        object.__setattr__(self, "omegas", om)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_function(cls, fhat, n_freq: int = 160) -> "HardySignal":
        om, w = _frequency_rule(n_freq)
        return cls(om, np.asarray(fhat(om), complex), w)

    @classmethod
    def on_uniform_grid(cls, fhat, omega_max: float = 60.0, n_freq: int = 6000) -> "HardySignal":
        """Uniform grid with midpoint weights.

        Denser near zero than Gauss-Laguerre; the transform then stays
        accurate out to |x| of order pi / spacing, which windowed-quadrature
        oracles need.
        """
        dw = omega_max / n_freq
        om = (np.arange(n_freq) + 0.5) * dw
        return cls(om, np.asarray(fhat(om), complex), np.full(n_freq, dw))

    @classmethod
    def from_disc_coeffs(cls, coeffs, beta: float, n_freq: int = 160) -> "HardySignal":
        coeffs = np.asarray(coeffs, complex)
        om, w = _frequency_rule(n_freq)
        vals = np.zeros(om.size, dtype=complex)
        for k, c in enumerate(coeffs):
            if c != 0:
                vals += c * disc_basis_frequency(k, beta, om)
        return cls(om, vals, w)

    def l2_norm(self) -> float:
        return float(math.sqrt(np.sum(self.weights * np.abs(self.values) ** 2)))

    def disc_coefficients(self, beta: float, K: int) -> np.ndarray:
        out = np.empty(K, dtype=complex)
        for k in range(K):
            ek = disc_basis_frequency(k, beta, self.omegas)
            out[k] = np.sum(self.weights * self.values * ek)
        return out


def cauchy_wavelet(beta: float, n_freq: int = 160) -> HardySignal:
    """The analyzing wavelet: f-hat = omega^beta e^{-omega} / c_beta."""
    cb = cauchy_norm_const(beta)
    return HardySignal.from_function(lambda om: om ** beta * np.exp(-om) / cb, n_freq)


def disc_basis_frequency(k: int, beta: float, omegas) -> np.ndarray:
    """Orthonormal Hardy basis whose transforms are disc monomials.

    e_k-hat = n_k omega^beta e^{-omega} L_k^{(2 beta)}(2 omega); e_0 is the
    normalized analyzing wavelet.
    """
    om = np.asarray(omegas, float)
    nk = math.exp(0.5 * ((2 * beta + 1) * math.log(2.0)
                         + gammaln(k + 1) - gammaln(k + 2 * beta + 1)))
    return nk * om ** beta * np.exp(-om) * eval_genlaguerre(k, 2 * beta, 2 * om)


# ---------------------------------------------------------------------------
# half-plane grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HalfPlaneGrid:
    """Cells uniform in x and logarithmic in y, with exact hyperbolic masses."""

    x_edges: np.ndarray
    y_edges: np.ndarray

    @classmethod
    def logarithmic(cls, x_min: float, x_max: float, nx: int,
                    y_min: float, y_max: float, ny: int) -> "HalfPlaneGrid":
        if y_min <= 0:
            raise InvalidInputError("grid must stay strictly inside y > 0")
        return cls(np.linspace(x_min, x_max, nx + 1),
                   np.geomspace(y_min, y_max, ny + 1))

    @property
    def x(self) -> np.ndarray:
        return 0.5 * (self.x_edges[:-1] + self.x_edges[1:])

    @property
    def y(self) -> np.ndarray:
        return np.sqrt(self.y_edges[:-1] * self.y_edges[1:])

    def cell_masses(self) -> np.ndarray:
        """Exact nu-mass per cell: dx * (1/y_lo - 1/y_hi)."""
        dx = np.diff(self.x_edges)
        dyinv = 1.0 / self.y_edges[:-1] - 1.0 / self.y_edges[1:]
        return np.outer(dx, dyinv)


@dataclass(frozen=True)
class HalfPlaneField:
    grid: HalfPlaneGrid
    values: np.ndarray  # shape (nx, ny)

    def __post_init__(self):
        v = np.asarray(self.values, complex)
        want = (self.grid.x.size, self.grid.y.size)
        if v.shape != want:
            raise InvalidInputError(f"values must have shape {want}")
        object.__setattr__(self, "values", v)

    def ess_sup(self) -> float:
        return float(np.max(np.abs(self.values)))


def lp_norm_nu(field: HalfPlaneField, p: float) -> float:
    """L^p norm of the field against the hyperbolic measure."""
    if p < 1:
        raise InvalidInputError("p must be >= 1")
    return float(np.sum(np.abs(field.values) ** p * field.grid.cell_masses()) ** (1.0 / p))


# ---------------------------------------------------------------------------
# the transform
# ---------------------------------------------------------------------------

def wavelet_transform_at(f: HardySignal, beta: float, x, y) -> np.ndarray:
    """Wf at arbitrary points: sqrt(y) int f-hat(om) conj(psi-hat(y om)) e^{i x om} d om.

    The frequency-domain kernel follows from the time-domain definition by
    Parseval under the unitary Fourier convention; the isometry onto
    L^2(d nu) pins its normalization.
    """
    x = np.asarray(x, float).ravel()
    y = np.asarray(y, float).ravel()
    if x.shape != y.shape:
        raise InvalidInputError("x and y must have matching shapes")
    if np.any(y <= 0):
        raise InvalidInputError("evaluation points must satisfy y > 0")
    cb = cauchy_norm_const(beta)
    om = f.omegas
    coef = f.weights * f.values / cb
    out = np.empty(x.size, dtype=complex)
    block = max(1, 4_000_000 // om.size)
    for start in range(0, x.size, block):
        sl = slice(start, start + block)
        kern = (np.sqrt(y[sl, None]) * (y[sl, None] * om[None, :]) ** beta
                * np.exp(-y[sl, None] * om[None, :] + 1j * x[sl, None] * om[None, :]))
        out[sl] = kern @ coef
    return out


def wavelet_transform_grid(f: HardySignal, beta: float, xs, ys) -> np.ndarray:
    """Wf on the tensor grid xs x ys, shape (len(xs), len(ys)).

    Separability turns the evaluation into a single matrix product over the
    frequency samples, which is what makes windowed quadratures affordable.
    """
    xs = np.asarray(xs, float).ravel()
    ys = np.asarray(ys, float).ravel()
    if np.any(ys <= 0):
        raise InvalidInputError("evaluation points must satisfy y > 0")
    cb = cauchy_norm_const(beta)
    om = f.omegas
    phase = np.exp(1j * np.outer(xs, om))                       # (nx, n_om)
    radial = (np.sqrt(ys)[:, None] * (ys[:, None] * om[None, :]) ** beta
              * np.exp(-ys[:, None] * om[None, :]))             # (ny, n_om)
    return phase @ (radial * (f.weights * f.values / cb)[None, :]).T


def wavelet_transform(f: HardySignal, beta: float, grid: HalfPlaneGrid) -> HalfPlaneField:
    """Wf sampled at the cell centers of a half-plane grid."""
    return HalfPlaneField(grid, wavelet_transform_grid(f, beta, grid.x, grid.y))


def bergman_basis(K: int, beta: float, x, y, center: complex = 1j) -> np.ndarray:
    """Closed-form transforms W e_0 .. W e_{K-1}, optionally recentered.

    Built from the Laplace integral of the Laguerre basis; the recurrence
    multiplies by the Cayley coordinate w(z).  Recentring uses the unitary
    dilation-translation covariance of the transform.
    """
    x = np.asarray(x, float).ravel()
    y = np.asarray(y, float).ravel()
    if np.any(y <= 0):
        raise InvalidInputError("basis evaluation needs y > 0")
    x0, y0 = float(np.real(center)), float(np.imag(center))
    if y0 <= 0:
        raise InvalidInputError("center must lie in the upper half-plane")
    xc = (x - x0) / y0
    yc = y / y0
    z = xc + 1j * yc
    q2 = 0.5 * (1.0 - 1j * z)           # Re > 0: principal powers are safe
    w = (z - 1j) / (z + 1j)
    cb = cauchy_norm_const(beta)
    n0 = math.exp(0.5 * ((2 * beta + 1) * math.log(2.0) - gammaln(2 * beta + 1)))
    c0 = n0 * math.exp(gammaln(2 * beta + 1) - (2 * beta + 1) * math.log(2.0)) / cb
    out = np.empty((K, x.size), dtype=complex)
    out[0] = yc ** (beta + 0.5) * c0 * q2 ** (-(2 * beta + 1))
    for k in range(1, K):
        out[k] = out[k - 1] * w * math.sqrt((2 * beta + k) / k)
    return out


# ---------------------------------------------------------------------------
# hyperbolic discs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HyperbolicDisc:
    """Open hyperbolic disc given by a Moebius-quotient threshold."""

    center: complex
    nu_measure: float

    def __post_init__(self):
        if self.center.imag <= 0:
            raise InvalidInputError("disc center must have positive imaginary part")
        if self.nu_measure < 0:
            raise InvalidInputError("measure must be nonnegative")

    @property
    def threshold(self) -> float:
        """|(z - z0)/(z - conj z0)|^2 < threshold defines membership."""
        return 1.0 - 1.0 / (1.0 + self.nu_measure / FOUR_PI)

    def contains(self, z) -> np.ndarray:
        z = np.asarray(z, complex)
        q = np.abs((z - self.center) / (z - np.conj(self.center))) ** 2
        return q < self.threshold


def hyperbolic_disc_mask(disc: HyperbolicDisc, grid: HalfPlaneGrid) -> HalfPlaneField:
    """Cell-center indicator of the disc (carries the grid's nu masses)."""
    X, Y = np.meshgrid(grid.x, grid.y, indexing="ij")
    inside = disc.contains(X + 1j * Y)
    return HalfPlaneField(grid, inside.astype(complex))


# ---------------------------------------------------------------------------
# disc-model radial symbols
# ---------------------------------------------------------------------------

_DISC_KINDS = ("disc_indicator", "power", "truncated_power", "sampled", "constant")


@dataclass(frozen=True)
class DiscProfile:
    """Radial symbol rho(x), x = |w|^2 in the disc model, about ``center``.

    kinds:
      disc_indicator  amplitude on x < x_threshold
      power           amplitude * (1 - x)^exponent  (exponent > 0: decreasing)
      truncated_power min(amplitude * (1 - x)^exponent, cap)
      sampled         left-continuous steps on knots in (0, 1)
      constant        amplitude
    """

    kind: str
    amplitude: float = 1.0
    exponent: float = 1.0
    x_threshold: float = 0.0
    cap: float = math.inf
    knots: np.ndarray | None = None
    knot_values: np.ndarray | None = None
    center: complex = 1j

    def __post_init__(self):
        if self.kind not in _DISC_KINDS:
            raise InvalidInputError(f"unknown disc profile kind {self.kind!r}")
        if self.amplitude < 0:
            raise InvalidInputError("amplitude must be nonnegative")
        if self.center.imag <= 0:
            raise InvalidInputError("center must lie in the upper half-plane")
        if self.kind == "disc_indicator" and not (0 < self.x_threshold < 1):
            raise InvalidInputError("indicator threshold must lie in (0, 1)")
        if self.kind == "truncated_power" and not (0 < self.cap < self.amplitude):
            raise InvalidInputError("truncation requires 0 < cap < amplitude")
        if self.kind == "sampled":
            xk = np.asarray(self.knots, float)
            v = np.asarray(self.knot_values, float)
            if xk.ndim != 1 or xk.shape != v.shape or xk.size == 0:
                raise InvalidInputError("sampled profile needs matching knots/values")
            if xk[0] <= 0 or xk[-1] >= 1 or np.any(np.diff(xk) <= 0):
                raise InvalidInputError("knots must increase strictly inside (0, 1)")
            if np.any(v < 0) or np.any(np.diff(v) > 0):
                raise InvalidInputError("values must be nonnegative and nonincreasing")
            object.__setattr__(self, "knots", xk)
            object.__setattr__(self, "knot_values", v)

    # -- constructors --------------------------------------------------
    @classmethod
    def indicator(cls, amplitude: float, nu_measure: float, center: complex = 1j) -> "DiscProfile":
        xs = nu_measure / (nu_measure + FOUR_PI)
        return cls("disc_indicator", amplitude=amplitude, x_threshold=xs, center=center)

    @classmethod
    def power(cls, amplitude: float, exponent: float, center: complex = 1j) -> "DiscProfile":
        return cls("power", amplitude=amplitude, exponent=exponent, center=center)

    @classmethod
    def truncated_power(cls, amplitude: float, exponent: float, cap: float,
                        center: complex = 1j) -> "DiscProfile":
        return cls("truncated_power", amplitude=amplitude, exponent=exponent,
                   cap=cap, center=center)

    @classmethod
    def constant(cls, level: float, center: complex = 1j) -> "DiscProfile":
        return cls("constant", amplitude=level, center=center)

    @classmethod
    def sampled(cls, knots, values, center: complex = 1j) -> "DiscProfile":
        return cls("sampled", knots=np.asarray(knots, float),
                   knot_values=np.asarray(values, float), center=center)

    # -- evaluation ------------------------------------------------------
    def __call__(self, x):
        x = np.asarray(x, float)
        if self.kind == "disc_indicator":
            return np.where(x < self.x_threshold, self.amplitude, 0.0)
        if self.kind == "power":
            return self.amplitude * (1.0 - x) ** self.exponent
        if self.kind == "truncated_power":
            return np.minimum(self.amplitude * (1.0 - x) ** self.exponent, self.cap)
        if self.kind == "constant":
            return np.full_like(x, float(self.amplitude))
        idx = np.searchsorted(self.knots, x, side="left")
        out = np.zeros_like(x, dtype=float)
        inside = idx < self.knots.size
        out[inside] = self.knot_values[idx[inside]]
        return out

    def ess_sup(self) -> float:
        if self.kind == "truncated_power":
            return self.cap
        if self.kind == "sampled":
            return float(self.knot_values[0])
        return float(self.amplitude)

    def on_grid(self, grid: HalfPlaneGrid) -> HalfPlaneField:
        X, Y = np.meshgrid(grid.x, grid.y, indexing="ij")
        z = X + 1j * Y
        x = np.abs((z - self.center) / (z - np.conj(self.center))) ** 2
        return HalfPlaneField(grid, self(x).astype(complex))

    # -- integrals ---------------------------------------------------------
    def lp_norm(self, p: float) -> float:
        """L^p norm against nu: (4 pi int_0^1 rho(x)^p (1-x)^{-2} dx)^{1/p}."""
        if p < 1:
            raise InvalidInputError("p must be >= 1")
        if self.kind == "disc_indicator":
            s = FOUR_PI * (1.0 / (1.0 - self.x_threshold) - 1.0)
            return float(self.amplitude * s ** (1.0 / p))
        if self.kind == "power":
            if p * self.exponent <= 1:
                raise DivergenceError("power profile not in L^p(d nu): need p * exponent > 1")
            return float(self.amplitude
                         * (FOUR_PI / (p * self.exponent - 1.0)) ** (1.0 / p))
        if self.kind == "truncated_power":
            one_minus = (self.cap / self.amplitude) ** (1.0 / self.exponent)
            cap_part = self.cap ** p * (1.0 / one_minus - 1.0)
            tail = (self.amplitude ** p * one_minus ** (p * self.exponent - 1.0)
                    / (p * self.exponent - 1.0))
            return float((FOUR_PI * (cap_part + tail)) ** (1.0 / p))
        if self.kind == "constant":
            raise DivergenceError("constant symbol is not in L^p(d nu)")
        edges = np.concatenate([[0.0], self.knots])
        ann = 1.0 / (1.0 - edges[1:]) - 1.0 / (1.0 - edges[:-1])
        return float((FOUR_PI * np.sum(self.knot_values ** p * ann)) ** (1.0 / p))

    def nu_distribution(self, t) -> np.ndarray:
        """mu(t) = nu-measure of the superlevel set {rho > t}."""
        t = np.asarray(t, float)
        if self.kind == "disc_indicator":
            s = FOUR_PI * (1.0 / (1.0 - self.x_threshold) - 1.0)
            return np.where(t < self.amplitude, s, 0.0)
        if self.kind in ("power", "truncated_power"):
            ess = self.ess_sup()
            mu = np.zeros_like(t)
            good = t < ess
            mu[good] = FOUR_PI * ((t[good] / self.amplitude)
                                  ** (-1.0 / self.exponent) - 1.0)
            return mu
        if self.kind == "constant":
            raise DivergenceError("constant symbol has infinite superlevel sets")
        masses = FOUR_PI * (1.0 / (1.0 - self.knots) - 1.0)
        counts = np.searchsorted(-self.knot_values, -t, side="left")
        return np.where(counts > 0, masses[np.maximum(counts - 1, 0)], 0.0)


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

def _beta_ratio(k: np.ndarray, beta: float, shift: float) -> np.ndarray:
    """B(k+1, 2 beta + shift) / B(k+1, 2 beta), elementwise in k."""
    return np.exp(betaln(k + 1, 2 * beta + shift) - betaln(k + 1, 2 * beta))


def _self_check(beta: float):
    # disc indicator of measure s must reproduce G_beta(s) through the Beta
    # integral; any drift here is an implementation bug, not tolerable noise
    for s in (0.25, 1.0, 7.0):
        xs = s / (s + FOUR_PI)
        lam0 = betainc(1.0, 2.0 * beta, xs)
        ref = 1.0 - (1.0 - xs) ** (2.0 * beta)
        if abs(lam0 - ref) > 1e-12 or abs(ref - G_beta(s, beta)) > 1e-12:
            raise NormalizationError(
                f"disc-indicator identity violated at beta={beta}, s={s}: "
                f"{lam0} vs {ref}")


def bergman_radial_eigenvalues(rho: DiscProfile, beta: float, K: int) -> OperatorSpectrum:
    """Spectrum of a nu-radial symbol about i, by Beta-density averages.

    lambda_k = int_0^1 rho(x) x^k (1-x)^{2 beta - 1} dx / B(k+1, 2 beta).
    The disc-indicator identity lambda_0 = G_beta(s) is checked on every
    call and aborts on failure.
    """
    if beta <= 0:
        raise InvalidInputError("beta must be positive")
    if K < 1:
        raise InvalidInputError("K must be >= 1")
    if rho.center != 1j:
        raise RegimeError("eigenvalues require the symbol centered at i; "
                          "recenter via the Moebius covariance first")
    _self_check(beta)
    ks = np.arange(K, dtype=float)

    if rho.kind == "disc_indicator":
        lam = rho.amplitude * betainc(ks + 1, 2 * beta, rho.x_threshold)
    elif rho.kind == "power":
        if 2 * beta + rho.exponent <= 0:
            raise DivergenceError(
                f"Beta integral diverges: exponent {rho.exponent} <= -2 beta")
        lam = rho.amplitude * _beta_ratio(ks, beta, rho.exponent)
    elif rho.kind == "truncated_power":
        xstar = 1.0 - (rho.cap / rho.amplitude) ** (1.0 / rho.exponent)
        lam = (rho.cap * betainc(ks + 1, 2 * beta, xstar)
               + rho.amplitude * _beta_ratio(ks, beta, rho.exponent)
               * (1.0 - betainc(ks + 1, 2 * beta + rho.exponent, xstar)))
    elif rho.kind == "constant":
        lam = np.full(K, float(rho.amplitude))
    else:
        edges = np.concatenate([[0.0], rho.knots])
        P = betainc(ks[:, None] + 1, 2 * beta, edges[None, :])
        lam = np.diff(P, axis=1) @ rho.knot_values

    lam = np.sort(lam)[::-1]
    return OperatorSpectrum(lam, K, _tail_estimate(lam))


def assemble_wavelet_operator(F: HalfPlaneField, beta: float, K: int,
                              center: complex = 1j) -> np.ndarray:
    """K x K matrix of L_{F, beta} by hyperbolic quadrature on the grid.

    Entries are int F W e_j conj(W e_k) d nu against the basis recentered at
    ``center`` (covariance makes the recentered family orthonormal too).
    """
    if K < 1:
        raise InvalidInputError("K must be >= 1")
    X, Y = np.meshgrid(F.grid.x, F.grid.y, indexing="ij")
    masses = F.grid.cell_masses().ravel()
    fvals = F.values.ravel()
    phi = bergman_basis(K, beta, X.ravel(), Y.ravel(), center=center)
    M = (phi * (masses * fvals)) @ phi.conj().T
    if np.all(F.values.imag == 0.0):
        M = 0.5 * (M + M.conj().T)
    return M


def nu_window_integral(fun, x_span=(-20.0, 20.0), y_span=(5e-3, 100.0),
                       nx_panels: int = 160, ny_panels: int = 96, order: int = 3) -> float:
    """int fun dnu over a window, by Gauss-Legendre panels in (x, log y).

    ``fun`` receives the separable node arrays (xs, ys) and must return
    values of shape (len(xs), len(ys)); the y^{-2} density is absorbed into
    the log-coordinate weights.
    """
    g, gw = np.polynomial.legendre.leggauss(order)

    def panel_nodes(a, b, n):
        edges = np.linspace(a, b, n + 1)
        half = 0.5 * (edges[1:] - edges[:-1])
        mid = 0.5 * (edges[1:] + edges[:-1])
        return (mid[:, None] + half[:, None] * g[None, :]).ravel(), \
               (half[:, None] * gw[None, :]).ravel()

    xs, xw = panel_nodes(x_span[0], x_span[1], nx_panels)
    ss, sw = panel_nodes(math.log(y_span[0]), math.log(y_span[1]), ny_panels)
    ys = np.exp(ss)
    vals = np.asarray(fun(xs, ys), float)
    if vals.shape != (xs.size, ys.size):
        raise InvalidInputError("fun must return values on the tensor grid")
    # d nu = y^{-2} dx dy = e^{-s} dx ds
    return float(np.einsum("i,j,ij->", xw, sw / ys, vals))


def distribution_norm_bound_nu(w, beta: float) -> float:
    """int_0^inf G_beta(mu(t)) dt, the distribution-function norm bound.

    Exact step sums for gridded fields; adaptive quadrature with the
    analytic mu for disc profiles.
    """
    if isinstance(w, HalfPlaneField):
        vals = np.abs(w.values).ravel()
        masses = w.grid.cell_masses().ravel()
        order = np.argsort(vals)[::-1]
        v = vals[order]
        cum = np.cumsum(masses[order])
        v_next = np.concatenate([v[1:], [0.0]])
        return float(np.sum(G_beta(cum, beta) * (v - v_next)))
    if isinstance(w, DiscProfile):
        if w.kind == "sampled":
            # step mu: exact sum over the knot levels
            s = FOUR_PI * (1.0 / (1.0 - w.knots) - 1.0)
            v = w.knot_values
            v_next = np.concatenate([v[1:], [0.0]])
            return float(np.sum(G_beta(s, beta) * (v - v_next)))
        ess = w.ess_sup()
        pts = None
        if w.kind == "truncated_power":
            pts = [w.cap * (1.0 - 1e-12)]
        val, _ = quad(lambda t: float(G_beta(float(w.nu_distribution(np.atleast_1d(t))[0]), beta)),
                      0.0, ess, points=pts, epsabs=1e-12, epsrel=1e-11, limit=300)
        return val
    raise InvalidInputError(f"unsupported weight type {type(w).__name__}")
