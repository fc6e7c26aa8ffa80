"""CSV interchange for weights, profiles and spectra.

Formats:
  weight field   header ``x,omega,re,im``, row-major over the square grid
  radial profile header ``r,value`` with strictly increasing r
  disc profile   header ``x,value`` with strictly increasing x in (0, 1)
  half-plane     header ``x,y,re,im``
  spectrum       header ``k,eigenvalue``
"""
from __future__ import annotations

import csv
import math

import numpy as np

from .core import RadialProfile, WeightField
from .errors import InvalidInputError
from .gabor import OperatorSpectrum
from .wavelet import DiscProfile, HalfPlaneField, HalfPlaneGrid

__all__ = [
    "write_weight_field", "read_weight_field",
    "write_radial_profile", "read_radial_profile",
    "write_disc_profile", "read_disc_profile",
    "write_halfplane_field", "read_halfplane_field",
    "write_spectrum", "write_matrix", "sniff_weight_file",
]


def _read_rows(path, expected_header):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != expected_header:
            raise InvalidInputError(
                f"{path}: expected header {','.join(expected_header)}")
        try:
            return [[float(x) for x in row] for row in reader if row]
        except ValueError as exc:
            raise InvalidInputError(f"{path}: non-numeric entry ({exc})") from exc


def write_weight_field(field: WeightField, path):
    ax = field.axis
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "omega", "re", "im"])
        for i in range(field.n):
            for j in range(field.n):
                v = field.values[i, j]
                w.writerow([repr(float(ax[i])), repr(float(ax[j])),
                            repr(float(v.real)), repr(float(v.imag))])


def read_weight_field(path) -> WeightField:
    rows = np.asarray(_read_rows(path, ["x", "omega", "re", "im"]), dtype=float)
    n = int(round(math.sqrt(rows.shape[0])))
    if n * n != rows.shape[0] or n < 2:
        raise InvalidInputError(f"{path}: row count {rows.shape[0]} is not a square grid")
    xs = np.unique(rows[:, 0])
    cell = xs[1] - xs[0]
    half_width = (xs[-1] - xs[0] + cell) / 2.0
    values = (rows[:, 2] + 1j * rows[:, 3]).reshape(n, n)
    return WeightField(half_width, n, values)


def write_radial_profile(profile: RadialProfile, path, n_samples: int = 512,
                         r_max: float | None = None):
    """Sample the profile on a uniform radius grid and write r,value rows."""
    if profile.kind == "sampled" and r_max is None:
        rs, vals = profile.knots, profile.knot_values
    else:
        if r_max is None:
            r_max = _profile_extent(profile)
        rs = np.linspace(r_max / n_samples, r_max, n_samples)
        vals = profile(rs)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["r", "value"])
        for r, v in zip(rs, vals):
            w.writerow([repr(float(r)), repr(float(v))])


def _profile_extent(profile: RadialProfile) -> float:
    if profile.kind == "ball_indicator":
        return profile.radius * 1.25
    if profile.kind in ("gaussian", "truncated_gaussian"):
        # radius where the Gaussian factor has decayed to 1e-12
        return math.sqrt(profile.scale * 12.0 * math.log(10.0) / math.pi)
    if profile.kind == "sampled":
        return float(profile.knots[-1])
    raise InvalidInputError(f"cannot choose an extent for kind {profile.kind!r}")


def read_radial_profile(path) -> RadialProfile:
    rows = np.asarray(_read_rows(path, ["r", "value"]), dtype=float)
    if rows.size == 0:
        raise InvalidInputError(f"{path}: empty profile")
    return RadialProfile.sampled(rows[:, 0], np.maximum(rows[:, 1], 0.0))


def write_disc_profile(profile: DiscProfile, path, n_samples: int = 512):
    if profile.kind == "sampled":
        xs, vals = profile.knots, profile.knot_values
    else:
        xs = np.linspace(0.0, 1.0, n_samples + 2)[1:-1]
        vals = profile(xs)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "value"])
        for x, v in zip(xs, vals):
            w.writerow([repr(float(x)), repr(float(v))])


def read_disc_profile(path) -> DiscProfile:
    rows = np.asarray(_read_rows(path, ["x", "value"]), dtype=float)
    if rows.size == 0:
        raise InvalidInputError(f"{path}: empty profile")
    vals = np.maximum(rows[:, 1], 0.0)
    # enforce the nonincreasing invariant up to round-off from sampling
    vals = np.minimum.accumulate(vals)
    return DiscProfile.sampled(rows[:, 0], vals)


def write_halfplane_field(field: HalfPlaneField, path):
    xs, ys = field.grid.x, field.grid.y
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "y", "re", "im"])
        for i in range(xs.size):
            for j in range(ys.size):
                v = field.values[i, j]
                w.writerow([repr(float(xs[i])), repr(float(ys[j])),
                            repr(float(v.real)), repr(float(v.imag))])


def read_halfplane_field(path) -> HalfPlaneField:
    rows = np.asarray(_read_rows(path, ["x", "y", "re", "im"]), dtype=float)
    xs = np.unique(rows[:, 0])
    ys = np.unique(rows[:, 1])
    if xs.size * ys.size != rows.shape[0]:
        raise InvalidInputError(f"{path}: rows do not form a tensor grid")
    # rebuild edges from centers: uniform in x, geometric in y
    dx = xs[1] - xs[0]
    x_edges = np.concatenate([xs - dx / 2.0, [xs[-1] + dx / 2.0]])
    ry = math.sqrt(ys[1] / ys[0])
    y_edges = np.concatenate([ys / ry, [ys[-1] * ry]])
    grid = HalfPlaneGrid(x_edges, y_edges)
    values = (rows[:, 2] + 1j * rows[:, 3]).reshape(xs.size, ys.size)
    return HalfPlaneField(grid, values)


def write_matrix(M: np.ndarray, path):
    """Dump an assembled operator matrix (j,k,re,im rows) for debugging."""
    M = np.asarray(M, complex)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["j", "k", "re", "im"])
        for j in range(M.shape[0]):
            for k in range(M.shape[1]):
                w.writerow([j, k, repr(float(M[j, k].real)), repr(float(M[j, k].imag))])


def write_spectrum(spectrum: OperatorSpectrum, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["k", "eigenvalue"])
        for k, lam in enumerate(spectrum.eigenvalues):
            w.writerow([k, repr(float(lam))])


def sniff_weight_file(path) -> str:
    """Return the format tag of a weight CSV: field, radial, disc, halfplane."""
    with open(path, newline="") as fh:
        header = [h.strip() for h in next(csv.reader(fh), [])]
    known = {
        ("x", "omega", "re", "im"): "field",
        ("r", "value"): "radial",
        ("x", "value"): "disc",
        ("x", "y", "re", "im"): "halfplane",
    }
    try:
        return known[tuple(header)]
    except KeyError:
        raise InvalidInputError(f"{path}: unrecognized header {header}") from None
