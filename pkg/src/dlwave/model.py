"""Traveling-wave reduction of the perturbed dispersive long wave equation.

In the co-moving frame xi = x - c*t the velocity component u = c*z(zeta)
with zeta = c*xi, and the scaled amplitude z obeys (to first order in the
perturbation strength eps) the planar system

    dz/dzeta = y
    dy/dzeta = P(z) + G + eps * c * y * (W(z) + 1/c^2)

with P(z) = 1.5 z^3 - 4.5 z^2 + 3 z,  W(z) = P'(z) = 4.5 z^2 - 9 z + 3,
and integration constant G.  Writing G = -P(kappa) places a saddle of the
unperturbed flow at (kappa, 0), which is the parametrization used by all
orbit analyses.

The singular origin of the planar system is the three-dimensional slow/fast
pair in (z, y, w): the slow form divides by eps*c, the fast form is regular
at eps = 0 and degenerates to the layer flow whose equilibria form the
critical manifold w = P(z) + G.  The first-order invariant slow manifold
adds the correction eps * c * y * (W(z) + 1/c^2).

Everything here is a pure function of its arguments; polynomials are
evaluated in Horner form so equilibrium and symmetry identities hold to
round-off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple


class PhasePoint(NamedTuple):
    """State (z, y) of the reduced planar system."""

    z: float
    y: float


class SlowPoint(NamedTuple):
    """State (z, y, w) of the three-dimensional slow/fast system."""

    z: float
    y: float
    w: float


class PhysicalWaveSample(NamedTuple):
    """Physical-frame sample: velocity component u and elevation v at (x, t)."""

    x: float
    t: float
    u: float
    v: float


def _p(z: float) -> float:
    # P(z) = 1.5 z^3 - 4.5 z^2 + 3 z, Horner form
    return z * (3.0 + z * (-4.5 + 1.5 * z))


def _w_coeff(z: float) -> float:
    # W(z) = P'(z) = 4.5 z^2 - 9 z + 3, Horner form
    return 3.0 + z * (-9.0 + 4.5 * z)


def kappa_to_G(kappa: float) -> float:
    """Integration constant G = -P(kappa) that puts a saddle at (kappa, 0)."""
    if not math.isfinite(kappa):
        raise ValueError("kappa must be finite")
    return -_p(kappa)


def real_cubic_roots(b2: float, b1: float, b0: float) -> list[float]:
    """All real roots of the monic cubic t^3 + b2 t^2 + b1 t + b0, ascending.

    Closed-form trigonometric/Cardano evaluation followed by one Newton
    polish per root.  Double roots (discriminant ~ 0) are returned once, so
    the root count is 1, 2 or 3.
    """
    # depress: t = s - b2/3
    shift = b2 / 3.0
    p = b1 - b2 * b2 / 3.0
    q = b0 - b1 * b2 / 3.0 + 2.0 * b2**3 / 27.0
    disc = -4.0 * p**3 - 27.0 * q * q

    if abs(disc) <= 1e-12 * max(1.0, abs(p) ** 3, q * q):
        if abs(p) < 1e-14:
            roots = [-shift + (-q) ** (1.0 / 3.0) if q <= 0 else -shift - q ** (1.0 / 3.0)]
        else:
            # one simple root and one double root
            roots = sorted({3.0 * q / p - shift, -1.5 * q / p - shift})
    elif disc > 0.0:
        # three distinct real roots, trigonometric form (p < 0 here)
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        roots = sorted(m * math.cos(theta - 2.0 * math.pi * k / 3.0) - shift for k in range(3))
    else:
        # single real root, Cardano
        half_q = q / 2.0
        rad = math.sqrt(half_q * half_q + (p / 3.0) ** 3)
        u = math.copysign(abs(-half_q + rad) ** (1.0 / 3.0), -half_q + rad)
        v = math.copysign(abs(-half_q - rad) ** (1.0 / 3.0), -half_q - rad)
        roots = [u + v - shift]

    def f(t: float) -> float:
        return b0 + t * (b1 + t * (b2 + t))

    def fp(t: float) -> float:
        return b1 + t * (2.0 * b2 + 3.0 * t)

    polished = []
    for r in roots:
        for _ in range(2):
            d = fp(r)
            if abs(d) < 1e-6:
                break
            r -= f(r) / d
        polished.append(r)

    polished.sort()
    out: list[float] = []
    for r in polished:
        if not out or abs(r - out[-1]) > 1e-8:
            out.append(r)
    return out


def G_to_kappa_roots(G: float) -> list[float]:
    """Real solutions kappa of G = -P(kappa), sorted ascending.

    Inverts :func:`kappa_to_G`; i.e. the real roots of
    1.5 k^3 - 4.5 k^2 + 3 k + G = 0.
    """
    if not math.isfinite(G):
        raise ValueError("G must be finite")
    return real_cubic_roots(-3.0, 2.0, G / 1.5)


@dataclass(frozen=True)
class Params:
    """Knobs of every analysis: wave speed c, perturbation eps, saddle kappa.

    When ``kappa`` is given it is the source of truth and G is derived from
    it; construct with ``kappa=None`` and an explicit ``G`` to reach regimes
    (|G| > sqrt(3)/3) where no saddle-at-kappa parametrization exists.
    """

    c: float
    eps: float = 0.0
    kappa: float | None = None
    G: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise ValueError("wave speed c must be positive and finite")
        if not (math.isfinite(self.eps) and self.eps >= 0.0):
            raise ValueError("eps must be >= 0 and finite")
        if self.kappa is not None:
            object.__setattr__(self, "G", kappa_to_G(self.kappa))
        elif not math.isfinite(self.G):
            raise ValueError("G must be finite")


def reduced_rhs(p: PhasePoint | tuple, params: Params) -> tuple[float, float]:
    """Vector field of the reduced planar system, truncated at first order in eps.

    Returns (dz/dzeta, dy/dzeta).  The saddle (kappa, 0) is an equilibrium
    for every eps at this truncation order.
    """
    z, y = p
    c = params.c
    dy = _p(z) + params.G
    if params.eps != 0.0:
        dy += params.eps * c * y * (_w_coeff(z) + 1.0 / (c * c))
    return (y, dy)


def slow_rhs(p: SlowPoint | tuple, params: Params) -> tuple[float, float, float]:
    """Vector field of the 3D slow system; singular at eps = 0.

    Returns (dz, dy, dw)/dzeta with dw multiplied out of eps*c*dw/dzeta =
    w - P(z) - G - (eps/c) y.
    """
    if params.eps == 0.0:
        raise ValueError("singular limit; use reduced_rhs or fast_rhs")
    z, y, w = p
    dw = (w - _p(z) - params.G - (params.eps / params.c) * y) / (params.eps * params.c)
    return (y, w, dw)


def fast_rhs(p: SlowPoint | tuple, params: Params) -> tuple[float, float, float]:
    """Vector field of the fast system; well-defined at eps = 0 (layer flow)."""
    z, y, w = p
    dw = (w - _p(z) - params.G - (params.eps / params.c) * y) / params.c
    return (params.eps * y, params.eps * w, dw)


def critical_manifold_w(z: float, G: float) -> float:
    """Graph w = P(z) + G of the critical manifold (layer equilibria)."""
    return _p(z) + G


def slow_manifold_w(p: PhasePoint | tuple, params: Params) -> float:
    """First-order slow manifold w = P(z) + G + eps*c*y*(W(z) + 1/c^2)."""
    z, y = p
    c = params.c
    return critical_manifold_w(z, params.G) + params.eps * (c * y * (_w_coeff(z) + 1.0 / (c * c)))


def layer_eigenvalues(c: float) -> tuple[float, float, float]:
    """Eigenvalues (0, 0, 1/c) of the layer linearization.

    The single nonzero transverse eigenvalue makes the critical manifold
    normally hyperbolic (and repelling in forward fast time).
    """
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError("wave speed c must be positive and finite")
    return (0.0, 0.0, 1.0 / c)


def first_integral(p: PhasePoint | tuple, kappa: float) -> float:
    """Conserved quantity H of the unperturbed planar flow.

    H(z, y) = y^2/2 - (3/8) z^4 + (3/2) z^3 - (3/2) z^2 + P(kappa) z.
    """
    z, y = p
    return 0.5 * y * y + z * (_p(kappa) + z * (-1.5 + z * (1.5 - 0.375 * z)))


def homoclinic_level(kappa: float) -> float:
    """Value of H on the orbit homoclinic to the saddle (kappa, 0).

    Equals first_integral((kappa, 0), kappa) = (9/8)k^4 - 3k^3 + (3/2)k^2;
    zero at kappa in {0, 2} where the level set is the heteroclinic loop.
    """
    return kappa * kappa * (1.5 + kappa * (-3.0 + 1.125 * kappa))


def physical_wave(
    z_profile: Callable[[float], float], params: Params, x: float, t: float
) -> PhysicalWaveSample:
    """Map a scaled profile z(zeta) to the physical fields at (x, t).

    u = c * z(c * (x - c t)) and v = c*u - u^2/2 (the elevation relation
    obtained with vanishing integration constant in the first equation).
    """
    c = params.c
    zeta = c * (x - c * t)
    u = c * z_profile(zeta)
    return PhysicalWaveSample(x=x, t=t, u=u, v=c * u - 0.5 * u * u)
