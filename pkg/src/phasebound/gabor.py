"""Gaussian-window STFT, Hermite phase-space basis, and operator spectra (d = 1).

A real radial weight diagonalizes in the Hermite basis; the k-th eigenvalue
is the profile averaged against the Gamma(k+1) density in the area
coordinate s = pi r^2.  Assembly by 2-d quadrature provides the independent
route to the same spectra and handles arbitrary gridded weights.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.linalg import eigh
from scipy.special import gammainc, gammaincc, gammainccinv, gammaln

from .core import RadialProfile, WeightField
from .errors import (AliasingError, BasisTruncationError, InvalidInputError,
                     RegimeError)

__all__ = [
    "Signal",
    "OperatorSpectrum",
    "gaussian_window",
    "hermite_function",
    "stft",
    "hermite_phase_basis",
    "assemble_operator",
    "radial_eigenvalues",
    "operator_norm",
    "expectation",
    "concentration",
    "lieb_quotient",
    "ball_mask",
]

DEFAULT_TIME_HALF_SPAN = 8.0
DEFAULT_TIME_SAMPLES = 2048


def gaussian_window(t):
    """The unit-norm window 2^{1/4} e^{-pi t^2}."""
    t = np.asarray(t, dtype=float)
    return 2.0 ** 0.25 * np.exp(-math.pi * t * t)


def hermite_function(k: int, t):
    """k-th Hermite function, orthonormal on R with h_0 the Gaussian window."""
    return _hermite_stack(k + 1, np.asarray(t, dtype=float))[k]


def _hermite_stack(K: int, t: np.ndarray) -> np.ndarray:
    """h_0..h_{K-1} by the stable three-term recurrence, shape (K, len(t))."""
    out = np.empty((K, t.size), dtype=float)
    out[0] = gaussian_window(t)
    if K > 1:
        nu = math.sqrt(2.0 * math.pi)
        out[1] = nu * t * math.sqrt(2.0) * out[0]
        for k in range(1, K - 1):
            out[k + 1] = (nu * t * math.sqrt(2.0 / (k + 1)) * out[k]
                          - math.sqrt(k / (k + 1.0)) * out[k - 1])
    return out


# ---------------------------------------------------------------------------
# signals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Signal:
    """A signal given as uniform time samples, Hermite coefficients, or a
    shifted-modulated Gaussian pulse (x0, omega0, unimodular phase)."""

    times: np.ndarray | None = None
    values: np.ndarray | None = None
    coeffs: np.ndarray | None = None
    pulse: tuple[float, float, complex] | None = None

    @classmethod
    def from_samples(cls, times, values) -> "Signal":
        times = np.asarray(times, dtype=float)
        values = np.ascontiguousarray(values, dtype=complex)
        if times.ndim != 1 or times.shape != values.shape or times.size < 2:
            raise InvalidInputError("need matching 1-d times/values")
        dt = np.diff(times)
        if not np.allclose(dt, dt[0], rtol=1e-9, atol=0.0):
            raise InvalidInputError("time grid must be uniform")
        if not (np.all(np.isfinite(values.real)) and np.all(np.isfinite(values.imag))):
            raise InvalidInputError("signal samples must be finite")
        return cls(times=times, values=values)

    @classmethod
    def from_hermite(cls, coeffs) -> "Signal":
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise InvalidInputError("need a 1-d coefficient vector")
        return cls(coeffs=coeffs)

    @classmethod
    def gaussian_pulse(cls, x0: float, omega0: float, phase: complex = 1.0) -> "Signal":
        if abs(abs(phase) - 1.0) > 1e-12:
            raise InvalidInputError("pulse phase must be unimodular")
        return cls(pulse=(float(x0), float(omega0), complex(phase)))

    # -- representations ---------------------------------------------------
    def time_samples(self, half_span: float = DEFAULT_TIME_HALF_SPAN,
                     n: int = DEFAULT_TIME_SAMPLES):
        if self.times is not None:
            return self.times, self.values
        t = np.linspace(-half_span, half_span, n)
        if self.pulse is not None:
            x0, w0, c = self.pulse
            vals = c * np.exp(2j * math.pi * t * w0) * gaussian_window(t - x0)
            return t, vals
        H = _hermite_stack(self.coeffs.size, t)
        return t, self.coeffs @ H

    def hermite_coefficients(self, K: int) -> np.ndarray:
        if self.coeffs is not None:
            out = np.zeros(K, dtype=complex)
            out[: min(K, self.coeffs.size)] = self.coeffs[:K]
            return out
        if self.pulse is not None:
            # <pulse, h_k> is the conjugate STFT of h_k at the pulse center
            x0, w0, c = self.pulse
            return c * np.conj(_phase_basis_stack(K, np.array([x0]), np.array([w0]))[:, 0])
        t, v = self.times, self.values
        dt = t[1] - t[0]
        return (_hermite_stack(K, t) @ v) * dt

    def l2_norm(self) -> float:
        if self.coeffs is not None:
            return float(np.linalg.norm(self.coeffs))
        if self.pulse is not None:
            return 1.0
        dt = self.times[1] - self.times[0]
        return float(math.sqrt(np.sum(np.abs(self.values) ** 2) * dt))


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def stft(f: Signal, half_width: float = 6.0, n: int = 128,
         time_half_span: float = DEFAULT_TIME_HALF_SPAN,
         time_samples: int = DEFAULT_TIME_SAMPLES) -> WeightField:
    """Short-time Fourier transform with Gaussian window, on a square grid.

    Vf(x, omega) = int e^{-2 pi i y omega} f(y) window(x - y) dy, evaluated
    by midpoint quadrature in y (geometrically convergent for these
    integrands).  Raises when the time grid cannot support the requested
    frequency range.
    """
    t, v = f.time_samples(time_half_span, time_samples)
    dt = t[1] - t[0]
    # window frequency content is dead beyond ~4, so Nyquist must cover hw + 4
    if 1.0 / (2.0 * dt) < half_width + 4.0:
        raise AliasingError(
            f"time step {dt:.4g} cannot resolve frequencies up to {half_width}; "
            f"need at least {int(2 * (half_width + 4) * (t[-1] - t[0]))} samples"
        )
    ax = -half_width + (np.arange(n) + 0.5) * (2.0 * half_width / n)
    kernel = np.exp(-2j * math.pi * np.outer(t, ax))   # (n_t, n_omega)
    window = gaussian_window(ax[:, None] - t[None, :])  # (n_x, n_t)
    values = (window * v[None, :] * dt) @ kernel
    return WeightField(half_width, n, values)


def hermite_phase_basis(k: int, x, omega):
    """Closed-form STFT of the k-th Hermite function.

    V h_k(x, omega) = e^{-i pi x omega} sqrt(pi^k / k!) (x - i omega)^k
    e^{-pi |z|^2 / 2}; its square modulus is the Gamma(k+1) density in the
    area coordinate, which is what diagonalizes radial weights.
    """
    if k < 0:
        raise InvalidInputError("k must be >= 0")
    x = np.asarray(x, dtype=float)
    omega = np.asarray(omega, dtype=float)
    return _phase_basis_stack(k + 1, x.ravel(), omega.ravel())[k].reshape(x.shape)


def _phase_basis_stack(K: int, x: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """V h_0 .. V h_{K-1} at the given points, shape (K, npts)."""
    z2 = x * x + omega * omega
    out = np.empty((K, x.size), dtype=complex)
    out[0] = np.exp(-1j * math.pi * x * omega - math.pi * z2 / 2.0)
    zbar = x - 1j * omega
    for k in range(1, K):
        out[k] = out[k - 1] * zbar * math.sqrt(math.pi / k)
    return out


# ---------------------------------------------------------------------------
# operator assembly
# ---------------------------------------------------------------------------

def _check_truncation(K: int, half_width: float):
    leak = gammaincc(K, math.pi * half_width ** 2)
    if leak > 1e-6:
        need = math.sqrt(gammainccinv(K, 1e-6) / math.pi)
        raise BasisTruncationError(
            f"basis size {K} leaks mass {leak:.2e} outside the box; "
            f"use half_width >= {need:.2f}", need)


def _accumulate(K: int, xs, ws_axis, weights, fvals, hermitize: bool) -> np.ndarray:
    """Sum w_i F_i Vh_j(z_i) conj(Vh_k(z_i)) in node blocks."""
    M = np.zeros((K, K), dtype=complex)
    block = max(1, 2_000_000 // K)
    wf = weights * fvals
    for start in range(0, xs.size, block):
        sl = slice(start, start + block)
        phi = _phase_basis_stack(K, xs[sl], ws_axis[sl])
        M += (phi * wf[sl]) @ phi.conj().T
    if hermitize:
        M = 0.5 * (M + M.conj().T)
    return M


def assemble_operator(F, K: int, *, points_per_cell: int = 2,
                      n_theta: int | None = None) -> np.ndarray:
    """K x K matrix of the localization operator in the Hermite basis.

    Entries are int F(z) Vh_j(z) conj(Vh_k(z)) dz.  Gridded weights use
    tensor Gauss-Legendre points per cell (piecewise-constant F); radial
    profiles use a polar rule around their center, whose uniform angular
    grid resolves every harmonic below K exactly.
    """
    if K < 1:
        raise InvalidInputError("K must be >= 1")

    if isinstance(F, WeightField):
        _check_truncation(K, F.half_width)
        g, gw = np.polynomial.legendre.leggauss(points_per_cell)
        half = 0.5 * F.cell
        offsets = half * g
        sub_w = half * gw
        centers = F.axis
        xs = (centers[:, None] + offsets[None, :]).ravel()
        nodes_x, nodes_y = np.meshgrid(xs, xs, indexing="ij")
        cell_w = np.outer(sub_w, sub_w)
        weights = np.tile(cell_w, (F.n, F.n)).reshape(F.n * points_per_cell,
                                                      F.n * points_per_cell)
        fvals = np.repeat(np.repeat(F.values, points_per_cell, axis=0),
                          points_per_cell, axis=1)
        real_f = np.all(F.values.imag == 0.0)
        return _accumulate(K, nodes_x.ravel(), nodes_y.ravel(),
                           weights.ravel(), fvals.ravel(), real_f)

    if not isinstance(F, RadialProfile):
        raise InvalidInputError(f"cannot assemble from {type(F).__name__}")
    if F.dim != 1:
        raise RegimeError("spectral computation is restricted to d = 1")

    # polar rule: radial Gauss-Legendre panels split at profile breakpoints,
    # uniform angles (trapezoid is exact for harmonics below n_theta)
    r_max = math.sqrt(gammainccinv(K, 1e-14) / math.pi)
    breakpoints = []
    if F.kind == "ball_indicator":
        breakpoints = [F.radius]
        r_max = max(r_max, F.radius * 1.05)
    elif F.kind == "truncated_gaussian":
        breakpoints = [math.sqrt(F.scale * math.log(F.amplitude / F.cap) / math.pi)]
        r_max = max(r_max, math.sqrt(F.scale * 45.0 / math.pi))
    elif F.kind == "gaussian":
        r_max = max(r_max, math.sqrt(F.scale * 45.0 / math.pi))
    elif F.kind == "sampled":
        if F.knots.size > 1024:
            raise InvalidInputError(
                "polar assembly supports at most 1024 knots; "
                "use radial_eigenvalues for finely sampled profiles")
        breakpoints = list(F.knots)
        r_max = max(r_max, float(F.knots[-1]))

    edges = np.unique(np.concatenate([np.linspace(0.0, r_max, 97),
                                      [b for b in breakpoints if b < r_max]]))
    g, gw = np.polynomial.legendre.leggauss(8)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    r = ((lo + half)[:, None] + half[:, None] * g[None, :]).ravel()
    rw = (half[:, None] * gw[None, :]).ravel()

    ntheta = n_theta if n_theta is not None else max(4 * K, 16)
    theta = 2.0 * math.pi * np.arange(ntheta) / ntheta
    x0, y0 = F.center
    xs = (x0 + np.outer(r, np.cos(theta))).ravel()
    ys = (y0 + np.outer(r, np.sin(theta))).ravel()
    weights = np.outer(rw * r, np.full(ntheta, 2.0 * math.pi / ntheta)).ravel()
    fvals = np.repeat(F(r), ntheta)
    return _accumulate(K, xs, ys, weights, fvals, hermitize=True)


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OperatorSpectrum:
    """Sorted eigenvalues with a truncation-error estimate for the norm."""

    eigenvalues: np.ndarray
    basis_size: int
    tail_bound: float

    def norm(self) -> float:
        return float(np.max(np.abs(self.eigenvalues)))


def _tail_estimate(eigs_sorted_desc: np.ndarray) -> float:
    a = np.abs(eigs_sorted_desc)
    if a.size < 2 or a[-1] == 0.0:
        return float(a[-1]) if a.size else 0.0
    ratio = min(a[-1] / max(a[-2], 1e-300), 0.9)
    return float(a[-1] * ratio / (1.0 - ratio))


def spectrum_from_matrix(M: np.ndarray) -> OperatorSpectrum:
    eigs = np.sort(eigh(_checked_hermitian(M), eigvals_only=True))[::-1]
    return OperatorSpectrum(eigs, M.shape[0], _tail_estimate(eigs))


def radial_eigenvalues(rho: RadialProfile, K: int, method: str = "auto") -> OperatorSpectrum:
    """Spectrum of the operator with radial weight rho, centered at the origin.

    lambda_k = (1/k!) int_0^inf rho(sqrt(s/pi)) s^k e^{-s} ds.  'auto' uses
    the closed form of each kind (incomplete-gamma algebra; exact step sums
    for sampled profiles); 'quadrature' integrates the Gamma densities
    adaptively and is the independent cross-check.
    """
    if rho.center != (0.0, 0.0):
        raise RegimeError("radial eigenvalues require a profile centered at the origin")
    if rho.dim != 1:
        raise RegimeError("spectral computation is restricted to d = 1")
    if K < 1:
        raise InvalidInputError("K must be >= 1")
    ks = np.arange(K)

    if method == "quadrature":
        lam = np.empty(K)
        pts = _profile_breaks_s(rho)
        for k in ks:
            lam[k] = _gamma_average_quad(rho, k, pts)
    elif method == "auto":
        lam = _radial_eigs_closed(rho, ks)
    else:
        raise InvalidInputError(f"unknown method {method!r}")

    order = np.argsort(lam)[::-1]
    lam = lam[order]
    return OperatorSpectrum(lam, K, _tail_estimate(lam))


def _radial_eigs_closed(rho: RadialProfile, ks: np.ndarray) -> np.ndarray:
    if rho.kind == "ball_indicator":
        return rho.amplitude * gammainc(ks + 1, math.pi * rho.radius ** 2)
    if rho.kind == "gaussian":
        return rho.amplitude * (rho.scale / (1.0 + rho.scale)) ** (ks + 1.0)
    if rho.kind == "truncated_gaussian":
        s0 = rho.scale * math.log(rho.amplitude / rho.cap)
        c = 1.0 + 1.0 / rho.scale
        return (rho.cap * gammainc(ks + 1, s0)
                + rho.amplitude * (1.0 / c) ** (ks + 1.0) * gammaincc(ks + 1, c * s0))
    if rho.kind == "constant":
        return np.full(ks.size, float(rho.amplitude))
    s_edges = math.pi * rho.knots ** 2
    P = gammainc(ks[:, None] + 1, s_edges[None, :])
    P = np.concatenate([np.zeros((ks.size, 1)), P], axis=1)
    return np.diff(P, axis=1) @ rho.knot_values


def _profile_breaks_s(rho: RadialProfile) -> list[float]:
    if rho.kind == "ball_indicator":
        return [math.pi * rho.radius ** 2]
    if rho.kind == "truncated_gaussian":
        return [rho.scale * math.log(rho.amplitude / rho.cap)]
    if rho.kind == "sampled":
        return list(math.pi * rho.knots ** 2)[:50]
    return []


def _gamma_average_quad(rho: RadialProfile, k: int, pts: list[float]) -> float:
    lg = gammaln(k + 1)

    def integrand(s):
        if s <= 0.0:
            return 0.0
        return float(rho(math.sqrt(s / math.pi))) * math.exp(k * math.log(s) - s - lg)

    upper = k + 1 + 40.0 * math.sqrt(k + 1.0) + 40.0
    if rho.kind in ("ball_indicator", "sampled"):
        upper = min(upper, max(pts) if pts else upper)
    val, _ = quad(integrand, 0.0, upper, points=[p for p in pts if p < upper] or None,
                  epsabs=1e-13, epsrel=1e-12, limit=300)
    return val


def _checked_hermitian(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M)
    scale = max(1.0, float(np.max(np.abs(M))))
    if np.max(np.abs(M - M.conj().T)) > 1e-10 * scale:
        raise InvalidInputError("matrix is not Hermitian within 1e-10")
    return M


def operator_norm(op) -> float:
    """L^2 -> L^2 norm: the largest |eigenvalue| of the Hermitian matrix."""
    if isinstance(op, OperatorSpectrum):
        return op.norm()
    return float(np.max(np.abs(eigh(_checked_hermitian(op), eigvals_only=True))))


def expectation(M: np.ndarray, f_coeffs: np.ndarray, g_coeffs: np.ndarray | None = None) -> complex:
    """<L_F f, g> from basis coefficients and an assembled matrix."""
    g = f_coeffs if g_coeffs is None else g_coeffs
    return complex(np.dot(f_coeffs, M @ np.conj(g)))


# ---------------------------------------------------------------------------
# concentration functionals
# ---------------------------------------------------------------------------

def ball_mask(half_width: float, n: int, area: float, center=(0.0, 0.0)) -> np.ndarray:
    """Cell-center membership mask of the disc with the given area."""
    r = math.sqrt(area / math.pi)
    ax = -half_width + (np.arange(n) + 0.5) * (2.0 * half_width / n)
    dx = ax[:, None] - center[0]
    dy = ax[None, :] - center[1]
    return dx * dx + dy * dy < r * r


def concentration(f: Signal, mask: np.ndarray, half_width: float = 6.0, **stft_kw) -> float:
    """Fraction of phase-space energy inside the masked region."""
    mask = np.asarray(mask, dtype=bool)
    if mask.ndim != 2 or mask.shape[0] != mask.shape[1]:
        raise InvalidInputError("mask must be a square boolean grid")
    field = stft(f, half_width, mask.shape[0], **stft_kw)
    return float(np.sum(np.abs(field.values[mask]) ** 2) * field.cell_area)


def lieb_quotient(f: Signal, p: float, half_width: float = 6.0, n: int = 256) -> float:
    """||Vf||_{L^p} over the plane; at most (2/p)^{1/p} for unit-norm f."""
    if p < 2:
        raise InvalidInputError("the phase-space L^p bound holds for p >= 2")
    field = stft(f, half_width, n)
    return float(np.sum(np.abs(field.values) ** p * field.cell_area) ** (1.0 / p))
