from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import map_coordinates

from .._typing import BoolArray, FloatArray
from .._validation import as_1d_float, as_count
from ..errors import InsufficientDataError, InterfaceGeometryError
from ..field import Field, Grid2D
from ..field.spectral import gradient_arrays
from ..fracops import ScalarHistory, rl_integral
from ..model import Mobility, ModelParams
from ..oracle.profile import PROFILE
from ..utils.warnings import WarningCategory, warn

logger = logging.getLogger(__name__)

MIN_RESOLVED_CELLS = 3.0
MIN_FLUX_SNAPSHOTS = 32
FLUX_FLOOR = 1e-8
DEFAULT_ANGLES = 128
# Radial fit windows for the mu-jump, in grid cells from the interface.
DEFAULT_FIT_OFFSETS = (3.0, 8.0)


def _phase_sign(phase: int) -> int:
    if phase not in (1, -1):
        raise ValueError(f"phase must be +1 or -1; got {phase!r}.")
    return int(phase)


@dataclass(frozen=True)
class InterfaceTrack:
    """
    Radius history of a radial benchmark.

    ``phase`` is the sign of u inside the disk; the normal points out of the
    +1 region, so a +1 disk that grows has V > 0. ``velocity`` is dR/dt by
    central differences (one-sided at the ends).
    """

    times: FloatArray
    radius: FloatArray
    phase: int = 1

    def __post_init__(self) -> None:
        t = as_1d_float(self.times, name="times")
        r = as_1d_float(self.radius, name="radius")
        if t.size != r.size:
            raise ValueError(f"times and radius must have equal length; got {t.size} and {r.size}.")
        if np.any(r <= 0.0):
            raise ValueError("radius must stay > 0 while tracked.")
        if t.size > 1 and not np.all(np.diff(t) > 0.0):
            raise ValueError("times must be strictly increasing.")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "radius", r)
        object.__setattr__(self, "phase", _phase_sign(self.phase))

    @classmethod
    def from_fields(
        cls, times: Sequence[float], fields: Sequence[Field], phase: int = 1
    ) -> InterfaceTrack:
        return cls(
            times=np.asarray(times, dtype=np.float64),
            radius=np.array([track_radius(u, phase=phase) for u in fields]),
            phase=phase,
        )

    @property
    def velocity(self) -> FloatArray:
        if self.radius.size < 2:
            return np.zeros_like(self.radius)
        return np.gradient(self.radius, self.times)

    @property
    def curvature(self) -> FloatArray:
        return 1.0 / self.radius

    @property
    def current_radius(self) -> float:
        return float(self.radius[-1])


def _phase_mask(u: Field, phase: int) -> BoolArray:
    return (phase * u.values) > 0.0


def _phase_fraction(u: Field, phase: int) -> FloatArray:
    # Per-cell fill of the region: signed distance d ~ phase*u / |grad u|
    # ramped over one cell, so the area moves continuously with the front.
    g = u.grid
    gx, gy = gradient_arrays(g, u.values)
    slope = np.hypot(gx, gy)
    level = phase * u.values
    steep = slope > 0.0
    d = np.where(
        steep,
        level / np.where(steep, slope, 1.0),
        np.where(level > 0.0, np.inf, -np.inf),
    )
    return np.clip(0.5 + d / g.spacing, 0.0, 1.0)


def track_radius(u: Field, *, phase: int = 1) -> float:
    """
    Area-equivalent radius sqrt(A / pi) of the region where phase * u > 0.

    A is a sub-cell estimate: each cell contributes the fraction of it on the
    phase side of the zero level, read off a linear ramp one cell wide. Emits
    a ``non_circular`` warning when the region wraps across the periodic
    domain (a full row or column of the grid).
    """
    phase = _phase_sign(phase)
    mask = _phase_mask(u, phase)
    count = int(mask.sum())
    if count == 0 or count == mask.size:
        raise InterfaceGeometryError(
            "track_radius needs a nonempty region that does not fill the domain."
        )
    if not u.grid.is_1d and (mask.all(axis=0).any() or mask.all(axis=1).any()):
        warn(WarningCategory.NON_CIRCULAR, "region spans the periodic domain; R is area-equivalent only.")
    area = float(np.sum(_phase_fraction(u, phase))) * u.grid.cell_area
    return float(np.sqrt(area / np.pi))


def phase_centroid(u: Field, *, phase: int = 1) -> tuple[float, float]:
    """Periodic (circular-mean) centroid of the region phase * u > 0."""
    phase = _phase_sign(phase)
    w = _phase_mask(u, phase).astype(np.float64)
    if w.sum() == 0.0:
        raise InterfaceGeometryError("centroid of an empty region.")
    g = u.grid
    xx, yy = g.mesh
    cx = np.angle(np.sum(w * np.exp(2j * np.pi * xx / g.lx))) * g.lx / (2.0 * np.pi)
    cy = np.angle(np.sum(w * np.exp(2j * np.pi * yy / g.ly))) * g.ly / (2.0 * np.pi)
    return float(cx % g.lx), float(cy % g.ly)


def sample_on_circle(
    f: Field, center: tuple[float, float], radius: float, n_angles: int = DEFAULT_ANGLES
) -> FloatArray:
    """Bilinear samples of f at n_angles equispaced points of a circle."""
    g = f.grid
    theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
    x = center[0] + radius * np.cos(theta)
    y = center[1] + radius * np.sin(theta)
    coords = np.vstack([y / g.dy, x / g.dx])
    return np.asarray(map_coordinates(f.values, coords, order=1, mode="grid-wrap"))


def _check_resolved(grid: Grid2D, radius: float) -> None:
    if radius < MIN_RESOLVED_CELLS * grid.spacing:
        raise InterfaceGeometryError(
            f"radius {radius:.4g} is below {MIN_RESOLVED_CELLS:g} grid cells ({grid.spacing:.4g} each)."
        )


def gibbs_thomson_target(p: ModelParams, radius: float, *, phase: int = 1) -> float:
    """phase * epsilon * (S / [U]) / R: positive inside a +1 disk."""
    return _phase_sign(phase) * p.epsilon * PROFILE.gibbs_thomson_coefficient / radius


def gibbs_thomson_residual(
    u: Field,
    mu: Field,
    track: InterfaceTrack | float,
    p: ModelParams,
    *,
    n_angles: int = DEFAULT_ANGLES,
) -> float:
    """
    Relative deviation of the mean mu on the interface circle from the
    Gibbs-Thomson value eps * (S / [U]) * kappa.

    The circle is centred at the periodic centroid of the disk phase and has
    the current tracked radius. Passing a bare radius assumes a +1 disk.

    Raises
    ------
    InterfaceGeometryError
        If R is below 3 grid cells.
    """
    if isinstance(track, InterfaceTrack):
        radius, phase = track.current_radius, track.phase
    else:
        radius, phase = float(track), 1
    n_angles = as_count(n_angles, name="n_angles", minimum=64)
    _check_resolved(u.grid, radius)
    center = phase_centroid(u, phase=phase)
    measured = float(np.mean(sample_on_circle(mu, center, radius, n_angles)))
    target = gibbs_thomson_target(p, radius, phase=phase)
    logger.debug("gibbs-thomson: R=%.4g mu_meas=%.4e mu_gt=%.4e", radius, measured, target)
    return abs(measured - target) / abs(target)


def interface_mean_potential(u: Field, mu: Field, band: float = 0.5) -> float:
    """Mean of mu over the diffuse layer |u| < band."""
    sel = np.abs(u.values) < band
    if not sel.any():
        raise InterfaceGeometryError(f"no cells with |u| < {band:g}.")
    return float(np.mean(mu.values[sel]))


def radial_profile(
    mu: Field,
    center: tuple[float, float],
    radii: FloatArray,
    n_angles: int = DEFAULT_ANGLES,
) -> FloatArray:
    """Angular mean of mu on each circle of ``radii``."""
    return np.array([np.mean(sample_on_circle(mu, center, float(r), n_angles)) for r in radii])


def _slope(mu: Field, center: tuple[float, float], lo: float, hi: float, n_angles: int) -> float:
    radii = np.linspace(lo, hi, 11)
    prof = radial_profile(mu, center, radii, n_angles)
    return float(np.polyfit(radii, prof, 1)[0])


@dataclass(frozen=True)
class FluxLawResult:
    lhs: float
    rhs: float
    residual: float

    def __iter__(self) -> Iterator[float]:
        return iter((self.lhs, self.rhs, self.residual))


def _side_mobilities(mobility: Mobility, phase: int) -> tuple[float, float]:
    # (M inside, M outside); one-sided M = 1 + u is 2 in the +1 phase, 0 in the -1 phase.
    if mobility is Mobility.CONSTANT:
        return 1.0, 1.0
    return (2.0, 0.0) if phase == 1 else (0.0, 2.0)


def flux_law_residual(
    snapshots: Sequence[tuple[Field, Field]],
    times: Sequence[float],
    p: ModelParams,
    *,
    track: InterfaceTrack | None = None,
    alpha: float | None = None,
    phase: int = 1,
    offsets: tuple[float, float] = DEFAULT_FIT_OFFSETS,
    n_angles: int = DEFAULT_ANGLES,
) -> FluxLawResult:
    """
    Compare the fractional interface velocity law at the last snapshot.

    lhs = I^(1-alpha) V at the final time (identity at alpha = 1), with
    V = dR/dt from the tracked radii. rhs = phase * (M_out dmu/dr|out -
    M_in dmu/dr|in) / [U], where each slope is a linear fit of the angular
    mean of mu on [R + offsets[0] dx, R + offsets[1] dx] (outside) and
    [R - offsets[1] dx, R - offsets[0] dx] (inside). For one-sided mobility
    only the +1 side carries flux.

    Parameters
    ----------
    snapshots
        (u, mu) pairs at ``times``; uniform cadence starting at t = 0.
    track
        Precomputed radius history; built from the snapshots when omitted.
    alpha
        Caputo order; defaults to ``p.alpha``.

    Raises
    ------
    InsufficientDataError
        Fewer than 32 snapshots.
    InterfaceGeometryError
        The fit windows leave the disk or reach the periodic image.
    """
    if len(snapshots) < MIN_FLUX_SNAPSHOTS:
        raise InsufficientDataError(
            f"flux law needs at least {MIN_FLUX_SNAPSHOTS} snapshots; got {len(snapshots)}."
        )
    if len(times) != len(snapshots):
        raise ValueError("times and snapshots must have equal length.")
    hist_t = ScalarHistory.from_samples(times, np.zeros(len(times)))
    a = p.order.alpha if alpha is None else float(alpha)
    phase = _phase_sign(phase if track is None else track.phase)
    if track is None:
        track = InterfaceTrack.from_fields(times, [s[0] for s in snapshots], phase=phase)

    v = track.velocity
    gamma = 1.0 - a
    if gamma <= 0.0:
        lhs = float(v[-1])
    else:
        lhs = rl_integral(gamma, ScalarHistory(values=v, tau=hist_t.tau), hist_t.tau)

    u, mu = snapshots[-1]
    g = u.grid
    radius = track.current_radius
    _check_resolved(g, radius)
    d_lo, d_hi = float(offsets[0]) * g.spacing, float(offsets[1]) * g.spacing
    half_box = 0.5 * (g.lx if g.is_1d else min(g.lx, g.ly))
    if radius - d_hi <= 0.0 or radius + d_hi >= half_box:
        raise InterfaceGeometryError(
            f"fit windows [R-{d_hi:.3g}, R+{d_hi:.3g}] around R={radius:.4g} leave the domain."
        )
    center = phase_centroid(u, phase=phase)
    slope_out = _slope(mu, center, radius + d_lo, radius + d_hi, n_angles)
    slope_in = _slope(mu, center, radius - d_hi, radius - d_lo, n_angles)
    m_in, m_out = _side_mobilities(p.mobility, phase)
    rhs = phase * (m_out * slope_out - m_in * slope_in) / PROFILE.U_jump
    residual = abs(lhs - rhs) / (abs(rhs) + FLUX_FLOOR)
    logger.debug("flux law: lhs=%.4e rhs=%.4e residual=%.3g", lhs, rhs, residual)
    return FluxLawResult(lhs=lhs, rhs=rhs, residual=residual)


__all__ = [
    "DEFAULT_ANGLES",
    "DEFAULT_FIT_OFFSETS",
    "FLUX_FLOOR",
    "MIN_FLUX_SNAPSHOTS",
    "MIN_RESOLVED_CELLS",
    "FluxLawResult",
    "InterfaceTrack",
    "flux_law_residual",
    "gibbs_thomson_residual",
    "gibbs_thomson_target",
    "interface_mean_potential",
    "phase_centroid",
    "radial_profile",
    "sample_on_circle",
    "track_radius",
]
