"""Equilibria and qualitative regimes of the reduced planar system.

Equilibria sit at the real roots of F(z) = 1.5 z^3 - 4.5 z^2 + 3 z + G and
their linearization [[0, 1], [F'(z), 0]] classifies them by the sign of
F'(z): positive gives a saddle, negative a center, and a vanishing
derivative a degenerate (cusp) point.  The cubic has three real roots for
|G| < sqrt(3)/3, a double root at equality and a single root beyond, which
partitions the G axis into the qualitative regimes below.  On the saddle
parametrization G = -P(kappa), the level set through (kappa, 0) meets y = 0
again at the turning points z_pm = -kappa + 2 +- sqrt(-2 kappa^2 + 4 kappa).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .model import _w_coeff, kappa_to_G, real_cubic_roots

SQRT3_OVER_3 = math.sqrt(3.0) / 3.0
KAPPA_BRIGHT_MAX = 1.0 - SQRT3_OVER_3
KAPPA_DARK_MIN = 1.0 + SQRT3_OVER_3

# equilibrium kinds
SADDLE = "Saddle"
CENTER = "Center"
DEGENERATE = "Degenerate"

# G regimes
SINGLE_SADDLE = "SingleSaddle"
SADDLE_CUSP = "SaddleCusp"
HOMOCLINIC_RIGHT = "HomoclinicRight"
HETEROCLINIC_LOOP = "HeteroclinicLoop"
HOMOCLINIC_LEFT = "HomoclinicLeft"

# kappa regimes
BRIGHT_SOLITARY = "BrightSolitary"
DARK_SOLITARY = "DarkSolitary"
KINK_PAIR = "KinkPair"
NO_HOMOCLINIC = "NoHomoclinic"


@dataclass(frozen=True)
class Equilibrium:
    """Fixed point (z, 0) with its linearization class and F'(z)."""

    z: float
    kind: str
    fprime: float


@dataclass(frozen=True)
class Regime:
    tag: str
    G: float


class TurningPoints(NamedTuple):
    """Non-saddle intersections of the homoclinic level set with y = 0."""

    z_plus: float
    z_minus: float


def find_equilibria(G: float, tol: float = 1e-10) -> list[Equilibrium]:
    """All equilibria of the planar system for constant G, sorted by z.

    The cusp threshold ``tol`` bounds |F'(z)| below which a root is tagged
    Degenerate rather than Saddle/Center.
    """
    if not math.isfinite(G):
        raise ValueError("G must be finite")
    out = []
    for z in real_cubic_roots(-3.0, 2.0, G / 1.5):
        fp = _w_coeff(z)
        if fp > tol:
            kind = SADDLE
        elif fp < -tol:
            kind = CENTER
        else:
            kind = DEGENERATE
        out.append(Equilibrium(z=z, kind=kind, fprime=fp))
    return out


def classify_regime(G: float, tol: float = 1e-9) -> Regime:
    """Qualitative regime of the unperturbed phase portrait at constant G."""
    if not math.isfinite(G):
        raise ValueError("G must be finite")
    a = abs(G)
    if abs(a - SQRT3_OVER_3) <= tol:
        tag = SADDLE_CUSP
    elif a > SQRT3_OVER_3:
        tag = SINGLE_SADDLE
    elif a <= tol:
        tag = HETEROCLINIC_LOOP
    elif G < 0.0:
        tag = HOMOCLINIC_RIGHT
    else:
        tag = HOMOCLINIC_LEFT
    return Regime(tag=tag, G=G)


def turning_points(kappa: float) -> TurningPoints:
    """Turning points z_pm = -kappa + 2 +- sqrt(-2 kappa^2 + 4 kappa).

    Real only for kappa in [0, 2].  In the open solitary intervals the
    ordering z_- < z_+ < kappa (dark side) or kappa < z_- < z_+ (bright
    side) is checked before returning.
    """
    rad = kappa * (4.0 - 2.0 * kappa)
    if rad < 0.0:
        raise ValueError("turning points complex: kappa outside [0, 2]")
    root = math.sqrt(rad)
    tp = TurningPoints(z_plus=-kappa + 2.0 + root, z_minus=-kappa + 2.0 - root)
    if KAPPA_DARK_MIN < kappa < 2.0 and not (tp.z_minus < tp.z_plus < kappa):
        raise AssertionError("turning-point ordering violated on the dark side")
    if 0.0 < kappa < KAPPA_BRIGHT_MAX and not (kappa < tp.z_minus < tp.z_plus):
        raise AssertionError("turning-point ordering violated on the bright side")
    return tp


def kappa_regime(kappa: float, tol: float = 1e-9) -> str:
    """Which connecting orbit (if any) the saddle at kappa carries.

    Open intervals only: the endpoints 1 +- sqrt(3)/3 (cusps) classify as
    NoHomoclinic, kappa in {0, 2} as the kink/anti-kink pair.
    """
    if abs(kappa) <= tol or abs(kappa - 2.0) <= tol:
        return KINK_PAIR
    if 0.0 < kappa < KAPPA_BRIGHT_MAX and abs(kappa - KAPPA_BRIGHT_MAX) > tol:
        return BRIGHT_SOLITARY
    if KAPPA_DARK_MIN < kappa < 2.0 and abs(kappa - KAPPA_DARK_MIN) > tol:
        return DARK_SOLITARY
    return NO_HOMOCLINIC


def solitary_interval(kappa: float) -> str:
    """Validate kappa lies in one of the two open solitary intervals."""
    reg = kappa_regime(kappa)
    if reg not in (BRIGHT_SOLITARY, DARK_SOLITARY):
        raise ValueError(
            f"kappa={kappa!r} carries no homoclinic orbit; need kappa in "
            f"(0, {KAPPA_BRIGHT_MAX:.6f}) or ({KAPPA_DARK_MIN:.6f}, 2)"
        )
    return reg


def regime_from_kappa(kappa: float) -> Regime:
    """Regime of the G value induced by the saddle parametrization."""
    return classify_regime(kappa_to_G(kappa))
