"""Closed-form orbit curves and wave profiles, with residual oracles.

The homoclinic level set factors as y^2 = (3/4)(z-kappa)^2 (z-z_+)(z-z_-),
and solving dz/dzeta = y gives the solitary profiles as kappa plus a
sech-type deviation

    Phi(zeta) = -2*AB / (den(zeta)),   AB = 6 kappa^2 - 12 kappa + 4,
    den_dark   = 2 cosh(mu zeta) sqrt(4k - 2k^2) + 4k - 4,
    den_bright = 4k - 4 - 2 cosh(mu zeta) sqrt(4k - 2k^2),
    mu = sqrt(18 kappa^2 - 36 kappa + 12) / 2.

Note the profiles returned here are the absolute amplitude kappa + Phi:
Phi alone does not lie on the level set (Phi(0) + kappa equals the turning
point z_+ or z_-, which the orbit passes through).  The heteroclinic level
y = +-(sqrt(3)/2) z (z-2) integrates to the kink pair z = 2/(1 + e^{+-
sqrt(3) zeta}), obtained by solving the orbit equation from z(0) = 1; its
endpoints are the saddles 0 and 2.

Every closed form is backed by two oracles: ode_residual checks the profile
against the unperturbed second-order equation using exact derivatives of
the closed form (no finite differences), and level_residual checks
membership in the conserved level set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bifurcation import (
    BRIGHT_SOLITARY,
    DARK_SOLITARY,
    KAPPA_BRIGHT_MAX,
    KAPPA_DARK_MIN,
    turning_points,
)
from .model import _p, first_integral, homoclinic_level

SQRT3 = math.sqrt(3.0)

DARK = "dark"
BRIGHT = "bright"
KINK = "kink"
ANTIKINK = "antikink"
SOLITARY_KINDS = (DARK, BRIGHT)
HETEROCLINIC_KINDS = (KINK, ANTIKINK)

_COSH_GUARD = 700.0  # beyond this cosh/exp overflow; profile is saddle-flat anyway


@dataclass
class WaveProfile:
    """Sampled profile: rows of (zeta, z, y) plus the closed-form parameters."""

    kind: str
    kappa: float
    samples: np.ndarray
    meta: dict = field(default_factory=dict)


def homoclinic_y(z: float, kappa: float, branch: int = 1, tol: float = 1e-9) -> float:
    """y on the chosen branch of the homoclinic level set at abscissa z.

    Zero at z in {kappa, z_+, z_-}; raises off the orbit where the radicand
    is negative beyond ``tol``.
    """
    zp, zm = turning_points(kappa)
    rad = 0.75 * (z - kappa) ** 2 * (z - zp) * (z - zm)
    if rad < -tol:
        raise ValueError(f"off-orbit abscissa z={z!r} for kappa={kappa!r}")
    return branch * math.sqrt(max(rad, 0.0))


def heteroclinic_y(z: float, branch: int = 1) -> float:
    """y = branch * (sqrt(3)/2) z (z - 2) on the heteroclinic level set."""
    return branch * (SQRT3 / 2.0) * z * (z - 2.0)


def _solitary_check(kind: str, kappa: float) -> None:
    if kind == DARK and not (KAPPA_DARK_MIN < kappa < 2.0):
        raise ValueError(f"dark profile needs kappa in ({KAPPA_DARK_MIN:.6f}, 2); got {kappa!r}")
    if kind == BRIGHT and not (0.0 < kappa < KAPPA_BRIGHT_MAX):
        raise ValueError(f"bright profile needs kappa in (0, {KAPPA_BRIGHT_MAX:.6f}); got {kappa!r}")


def _solitary_state(kind: str, zeta: float, kappa: float) -> tuple[float, float, float]:
    """(z, dz/dzeta, d2z/dzeta2) of a solitary profile, exact derivatives."""
    _solitary_check(kind, kappa)
    ab = 6.0 * kappa * kappa - 12.0 * kappa + 4.0
    mu = 0.5 * math.sqrt(18.0 * kappa * kappa - 36.0 * kappa + 12.0)
    s = math.sqrt(kappa * (4.0 - 2.0 * kappa))
    if abs(mu * zeta) > _COSH_GUARD:
        return (kappa, 0.0, 0.0)
    sign = 1.0 if kind == DARK else -1.0
    ch = math.cosh(mu * zeta)
    sh = math.sinh(mu * zeta)
    den = sign * 2.0 * s * ch + (4.0 * kappa - 4.0)
    dden = sign * 2.0 * s * mu * sh
    d2den = sign * 2.0 * s * mu * mu * ch
    n = -2.0 * ab
    z = kappa + n / den
    dz = -n * dden / (den * den)
    d2z = (-n * d2den + 2.0 * n * dden * dden / den) / (den * den)
    return (z, dz, d2z)


def dark_profile(zeta: float, kappa: float) -> float:
    """Dark solitary amplitude: background kappa dipping to z_+ at zeta = 0."""
    return _solitary_state(DARK, zeta, kappa)[0]


def bright_profile(zeta: float, kappa: float) -> float:
    """Bright solitary amplitude: background kappa peaking at z_- at zeta = 0."""
    return _solitary_state(BRIGHT, zeta, kappa)[0]


def kink_profile(zeta: float, sign: int = 1) -> float:
    """Kink (sign=+1, from 2 down to 0) or anti-kink (sign=-1) amplitude.

    z(zeta) = 2 / (1 + e^{sign * sqrt(3) * zeta}), with z(0) = 1.
    """
    arg = sign * SQRT3 * zeta
    if arg > _COSH_GUARD:
        return 0.0
    if arg < -_COSH_GUARD:
        return 2.0
    return 2.0 / (1.0 + math.exp(arg))


def _kink_state(kind: str, zeta: float) -> tuple[float, float, float]:
    sign = 1 if kind == KINK else -1
    z = kink_profile(zeta, sign)
    y = heteroclinic_y(z, branch=sign)
    # z'' = (sqrt(3)/2)(2z - 2) * z' on either branch
    d2z = (SQRT3 / 2.0) * (2.0 * z - 2.0) * y * sign
    return (z, y, d2z)


def profile_state(kind: str, zeta: float, kappa: float = 0.0) -> tuple[float, float]:
    """(z, y) along the closed-form profile of the given kind."""
    if kind in SOLITARY_KINDS:
        z, dz, _ = _solitary_state(kind, zeta, kappa)
        return (z, dz)
    if kind in HETEROCLINIC_KINDS:
        z, y, _ = _kink_state(kind, zeta)
        return (z, y)
    raise ValueError(f"unknown profile kind {kind!r}")


def sample_profile(kind: str, kappa: float, zeta_grid) -> WaveProfile:
    """Sample (zeta, z, y) along a profile on the given grid."""
    rows = np.empty((len(zeta_grid), 3))
    for i, zeta in enumerate(zeta_grid):
        z, y = profile_state(kind, float(zeta), kappa)
        rows[i] = (zeta, z, y)
    meta: dict = {}
    if kind in SOLITARY_KINDS:
        zp, zm = turning_points(kappa)
        meta = {"z_plus": zp, "z_minus": zm, "mu": 0.5 * math.sqrt(18 * kappa**2 - 36 * kappa + 12)}
    return WaveProfile(kind=kind, kappa=kappa, samples=rows, meta=meta)


def ode_residual(kind: str, kappa: float, zeta_grid) -> float:
    """Max over the grid of |z'' - (P(z) - P(kappa))| with exact derivatives.

    This is the oracle proving the closed form solves the unperturbed
    traveling-wave equation; kappa must be 0 or 2 for the kink pair.
    """
    pk = _p(kappa)
    worst = 0.0
    for zeta in zeta_grid:
        if kind in SOLITARY_KINDS:
            z, _, d2z = _solitary_state(kind, float(zeta), kappa)
        else:
            z, _, d2z = _kink_state(kind, float(zeta))
        worst = max(worst, abs(d2z - (_p(z) - pk)))
    return worst


def level_residual(kind: str, kappa: float, zeta_grid) -> float:
    """Max over the grid of |H(z, y) - h(kappa)| along the profile."""
    target = homoclinic_level(kappa)
    worst = 0.0
    for zeta in zeta_grid:
        z, y = profile_state(kind, float(zeta), kappa)
        worst = max(worst, abs(first_integral((z, y), kappa) - target))
    return worst


def wave_solution(kind: str, kappa: float, c: float, x: float, t: float) -> float:
    """Physical velocity component u(x, t) = c * z(c * (x - c t))."""
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError("wave speed c must be positive and finite")
    zeta = c * (x - c * t)
    if kind in SOLITARY_KINDS:
        return c * _solitary_state(kind, zeta, kappa)[0]
    if kind == KINK:
        return c * kink_profile(zeta, 1)
    if kind == ANTIKINK:
        return c * kink_profile(zeta, -1)
    raise ValueError(f"unknown profile kind {kind!r}")
