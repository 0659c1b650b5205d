"""Melnikov integrals and persistence wave speeds.

The first-order splitting of the connecting orbits under the perturbation
is governed by

    M_hom(c, kappa) = I(kappa)/c^2 + J(kappa),
    I = loop integral of y^2 dzeta,  J = loop integral of W(z) y^2 dzeta,

taken around the homoclinic orbit through the saddle (kappa, 0), with
W(z) = 4.5 z^2 - 9 z + 3.  Converting dzeta to dz on the orbit reduces both
to definite integrals of polynomial multiples of sqrt((z-z_+)(z-z_-)) over
[z_+, kappa] (dark side) or [kappa, z_-] (bright side); those evaluate in
closed form through the antiderivative table below.  Since I > 0 and J < 0
on the solitary intervals, M_hom has the unique positive root
c(kappa) = sqrt(-I/J).  The heteroclinic analogue integrates a polynomial
over [0, 2], giving M_het(c) = -2 sqrt(3) (3 c^2 - 5) / (15 c^2) with root
c* = sqrt(15)/3.

Every closed form is paired with an independent adaptive Gauss-Legendre
quadrature of the defining integral; the quadrature removes the square-root
turning-point singularity with the substitution z = z_turn + (z_saddle -
z_turn) sin^2(theta), after which the integrand is analytic.  The
logarithmic antiderivative is evaluated with an absolute value, ln|2
sqrt(c1 R) + 2 c1 x + b|, which keeps it real on the bright side where the
plain logarithm's branch condition fails; agreement with quadrature is the
correctness criterion, enforced in the test suite at 1e-8 relative.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bifurcation import DARK_SOLITARY, KAPPA_BRIGHT_MAX, KAPPA_DARK_MIN, solitary_interval, turning_points

SQRT3 = math.sqrt(3.0)

CLOSED_FORM = "closed"
QUADRATURE = "quad"

QUAD_ABS_TARGET = 1e-11
ENDPOINT_GUARD = 1e-3  # kappa this close to a cusp endpoint is ill-conditioned
CLOSED_QUAD_RTOL = 1e-7


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to meet its target; carries best estimate."""

    def __init__(self, message: str, best: float, bound: float):
        super().__init__(f"{message} (best estimate {best!r}, error bound {bound!r})")
        self.best = best
        self.bound = bound


@dataclass(frozen=True)
class RadicalBasis:
    """Coefficients of R(x) = a + b x + c1 x^2 under the square root.

    For the orbit integrals R = (x - z_+)(x - z_-), so a = z_+ z_-,
    b = -(z_+ + z_-), c1 = 1 and delta = 4 a c1 - b^2 < 0.
    """

    a: float
    b: float
    c1: float = 1.0

    def __post_init__(self):
        if self.c1 <= 0.0:
            raise ValueError("radical basis requires c1 > 0")

    @property
    def delta(self) -> float:
        return 4.0 * self.a * self.c1 - self.b * self.b

    @classmethod
    def from_kappa(cls, kappa: float) -> "RadicalBasis":
        zp, zm = turning_points(kappa)
        return cls(a=zp * zm, b=-(zp + zm), c1=1.0)


def antiderivative_table(
    basis: RadicalBasis, x: float, tol: float = 1e-9
) -> tuple[float, float, float, float, float]:
    """Antiderivatives (F0..F4) of x^k sqrt(R) for k = -0..3 at abscissa x.

    F0 integrates 1/sqrt(R); F1..F4 integrate sqrt(R), x sqrt(R), x^2
    sqrt(R), x^3 sqrt(R).  Definite integrals are differences of these
    values.  The log term uses ln|.| so the table stays real wherever
    R >= 0, regardless of the sign of 2 c1 x + b.
    """
    a, b, c1 = basis.a, basis.b, basis.c1
    r = a + x * (b + c1 * x)
    if r < -tol:
        raise ValueError(f"outside radical domain: R({x!r}) = {r!r} < 0")
    r = max(r, 0.0)
    sr = math.sqrt(r)
    d = basis.delta
    f0 = math.log(abs(2.0 * math.sqrt(c1 * r) + 2.0 * c1 * x + b)) / math.sqrt(c1)
    f1 = (2.0 * c1 * x + b) * sr / (4.0 * c1) + d / (8.0 * c1) * f0
    f2 = sr**3 / (3.0 * c1) - (2.0 * c1 * x + b) * b * sr / (8.0 * c1 * c1) - b * d / (16.0 * c1 * c1) * f0
    f3 = (x / (4.0 * c1) - 5.0 * b / (24.0 * c1 * c1)) * sr**3 + (
        5.0 * b * b / (16.0 * c1 * c1) - a / (4.0 * c1)
    ) * f1
    f4 = (
        x * x / (5.0 * c1)
        - 7.0 * b * x / (40.0 * c1 * c1)
        + 7.0 * b * b / (48.0 * c1**3)
        - 2.0 * a / (15.0 * c1 * c1)
    ) * sr**3 - (7.0 * b**3 / (32.0 * c1**3) - 3.0 * a * b / (8.0 * c1 * c1)) * f1
    return (f0, f1, f2, f3, f4)


@lru_cache(maxsize=1)
def _gl_nodes() -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(15)


def _adaptive_gl(f, a: float, b: float, abs_tol: float, max_depth: int = 40) -> tuple[float, float]:
    """Adaptive panel-bisection Gauss-Legendre quadrature of a vectorized f.

    Panel error is estimated by comparing one 15-point panel with its two
    halves; panels split until the estimate meets the (per-width) budget.
    """
    xs, ws = _gl_nodes()

    def panel(lo: float, hi: float) -> float:
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        return half * float(np.dot(ws, f(mid + half * xs)))

    total = 0.0
    err = 0.0
    stack = [(a, b, panel(a, b), abs_tol, 0)]
    while stack:
        lo, hi, whole, tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = panel(lo, mid)
        right = panel(mid, hi)
        delta = abs(left + right - whole)
        if delta <= tol:
            total += left + right
            err += delta
        elif depth >= max_depth:
            raise QuadratureError(
                "adaptive quadrature did not converge", best=total + left + right, bound=delta
            )
        else:
            stack.append((lo, mid, left, tol / 2.0, depth + 1))
            stack.append((mid, hi, right, tol / 2.0, depth + 1))
    return total, err


def _orbit_quad(kappa: float, weighted: bool) -> tuple[float, float]:
    """Loop integral of y^2 dzeta (or W(z) y^2 dzeta) by quadrature.

    On the orbit the loop integral equals 2 * int |y| dz (respectively with
    the weight) between the turning point and the saddle; the sin^2
    substitution makes the integrand analytic at the turning point.
    """
    reg = solitary_interval(kappa)
    zp, zm = turning_points(kappa)
    turn = zp if reg == DARK_SOLITARY else zm
    span = kappa - turn

    def f(theta: np.ndarray) -> np.ndarray:
        st = np.sin(theta)
        z = turn + span * st * st
        rad = (z - zp) * (z - zm)
        absy = (SQRT3 / 2.0) * np.abs(z - kappa) * np.sqrt(np.maximum(rad, 0.0))
        dz = abs(span) * np.abs(np.sin(2.0 * theta))
        if weighted:
            return (3.0 + z * (-9.0 + 4.5 * z)) * absy * dz
        return absy * dz

    val, err = _adaptive_gl(f, 0.0, 0.5 * math.pi, QUAD_ABS_TARGET)
    return 2.0 * val, 2.0 * err


def I_quad(kappa: float) -> float:
    """Quadrature oracle for I(kappa), the loop integral of y^2 dzeta."""
    return _orbit_quad(kappa, weighted=False)[0]


def J_quad(kappa: float) -> float:
    """Quadrature oracle for J(kappa), the W(z)-weighted loop integral."""
    return _orbit_quad(kappa, weighted=True)[0]


def I_closed(kappa: float) -> float:
    """Closed-form I(kappa) via the antiderivative table.

    Dark side: sqrt(3) [kappa * int sqrt(R) - int z sqrt(R)] over
    [z_+, kappa]; bright side mirrors with the opposite sign pattern over
    [kappa, z_-].
    """
    reg = solitary_interval(kappa)
    basis = RadicalBasis.from_kappa(kappa)
    zp, zm = turning_points(kappa)
    if reg == DARK_SOLITARY:
        df = np.subtract(antiderivative_table(basis, kappa), antiderivative_table(basis, zp))
        return SQRT3 * (kappa * df[1] - df[2])
    df = np.subtract(antiderivative_table(basis, zm), antiderivative_table(basis, kappa))
    return SQRT3 * (df[2] - kappa * df[1])


def J_closed(kappa: float) -> float:
    """Closed-form J(kappa) via the antiderivative table.

    The weight expands as W(z)|z - kappa| = -+(4.5 z^3 - (4.5 kappa + 9) z^2
    + (9 kappa + 3) z - 3 kappa), so J combines the four table entries F1..F4.
    """
    reg = solitary_interval(kappa)
    basis = RadicalBasis.from_kappa(kappa)
    zp, zm = turning_points(kappa)
    if reg == DARK_SOLITARY:
        df = np.subtract(antiderivative_table(basis, kappa), antiderivative_table(basis, zp))
        return SQRT3 * (-4.5 * df[4] + (4.5 * kappa + 9.0) * df[3] - (9.0 * kappa + 3.0) * df[2] + 3.0 * kappa * df[1])
    df = np.subtract(antiderivative_table(basis, zm), antiderivative_table(basis, kappa))
    return SQRT3 * (4.5 * df[4] - (4.5 * kappa + 9.0) * df[3] + (9.0 * kappa + 3.0) * df[2] - 3.0 * kappa * df[1])


@dataclass(frozen=True)
class MelnikovResult:
    """I, J and the Melnikov value M = I/c^2 + J with evaluation metadata."""

    I: float
    J: float
    M: float
    method: str
    err_estimate: float = 0.0


def m_hom(c: float, kappa: float, method: str = CLOSED_FORM) -> MelnikovResult:
    """Homoclinic Melnikov function M_hom(c, kappa) = I/c^2 + J."""
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError("wave speed c must be positive and finite")
    if method == CLOSED_FORM:
        i, j = I_closed(kappa), J_closed(kappa)
        err = 0.0
    elif method == QUADRATURE:
        (i, ei) = _orbit_quad(kappa, weighted=False)
        (j, ej) = _orbit_quad(kappa, weighted=True)
        err = ei / (c * c) + ej
    else:
        raise ValueError(f"unknown method {method!r}")
    return MelnikovResult(I=i, J=j, M=i / (c * c) + j, method=method, err_estimate=err)


def m_hom_c_derivative(c: float, kappa: float, method: str = CLOSED_FORM) -> float:
    """d/dc of M_hom at fixed kappa: -2 I / c^3 (negative since I > 0)."""
    i = I_closed(kappa) if method == CLOSED_FORM else I_quad(kappa)
    return -2.0 * i / c**3


_HET_I = 2.0 * SQRT3 / 3.0  # int y^2 dzeta over the heteroclinic connection
_HET_J = -2.0 * SQRT3 / 5.0  # weighted counterpart


def m_het(c: float, method: str = CLOSED_FORM) -> MelnikovResult:
    """Heteroclinic Melnikov function M_het(c) = -2 sqrt(3)(3 c^2 - 5)/(15 c^2)."""
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError("wave speed c must be positive and finite")
    if method == CLOSED_FORM:
        m = -2.0 * SQRT3 * (3.0 * c * c - 5.0) / (15.0 * c * c)
        return MelnikovResult(I=_HET_I, J=_HET_J, M=m, method=method)
    if method == QUADRATURE:
        inv_c2 = 1.0 / (c * c)

        def f(z: np.ndarray) -> np.ndarray:
            return (SQRT3 / 2.0) * (3.0 + z * (-9.0 + 4.5 * z) + inv_c2) * z * (2.0 - z)

        val, err = _adaptive_gl(f, 0.0, 2.0, 1e-14)
        iq, ierr = _adaptive_gl(lambda z: (SQRT3 / 2.0) * z * (2.0 - z), 0.0, 2.0, 1e-14)
        return MelnikovResult(I=iq, J=val - iq * inv_c2, M=val, method=method, err_estimate=err + ierr)
    raise ValueError(f"unknown method {method!r}")


def m_het_c_derivative(c: float) -> float:
    """d/dc of M_het: -4 sqrt(3) / (3 c^3); equals -12 sqrt(5)/25 at the root."""
    return -4.0 * SQRT3 / (3.0 * c**3)


def wave_speed_het() -> float:
    """Unique positive root c* = sqrt(15)/3 of M_het, with transversality check."""
    c = math.sqrt(15.0) / 3.0
    if abs(m_het(c).M) > 1e-13:
        raise AssertionError("heteroclinic Melnikov root identity violated")
    if abs(m_het_c_derivative(c) + 12.0 * math.sqrt(5.0) / 25.0) > 1e-10:
        raise AssertionError("heteroclinic transversality identity violated")
    return c


def hom_speed_diagnostics(kappa: float) -> dict:
    """Closed-form and quadrature speeds with their cross-validation status."""
    near_endpoint = min(abs(kappa - KAPPA_BRIGHT_MAX), abs(kappa - KAPPA_DARK_MIN)) < ENDPOINT_GUARD
    iq, jq = I_quad(kappa), J_quad(kappa)
    c_quad = math.sqrt(-iq / jq)
    out = {
        "I_quad": iq,
        "J_quad": jq,
        "c_quad": c_quad,
        "near_endpoint": near_endpoint,
    }
    ic, jc = I_closed(kappa), J_closed(kappa)
    rel = max(abs(ic - iq) / abs(iq), abs(jc - jq) / abs(jq))
    out.update(
        {
            "I_closed": ic,
            "J_closed": jc,
            "c_closed": math.sqrt(-ic / jc),
            "closed_quad_rel_diff": rel,
            "validated": rel <= CLOSED_QUAD_RTOL,
        }
    )
    return out


def wave_speed_hom(kappa: float, method: str = "auto") -> float:
    """Persistence speed c(kappa) = sqrt(-I/J) of the solitary wave.

    ``method`` "closed" or "quad" force one evaluation route; "auto"
    prefers the closed form but cross-validates it against quadrature at
    1e-7 relative and falls back (with a warning) on disagreement.  Within
    1e-3 of the cusp endpoints both integrals vanish and the ratio is
    ill-conditioned; quadrature is used and a warning issued.
    """
    if method == CLOSED_FORM:
        return math.sqrt(-I_closed(kappa) / J_closed(kappa))
    if method == QUADRATURE:
        return math.sqrt(-I_quad(kappa) / J_quad(kappa))
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    diag = hom_speed_diagnostics(kappa)
    if diag["near_endpoint"]:
        warnings.warn(
            f"kappa={kappa!r} is within {ENDPOINT_GUARD} of a cusp endpoint; "
            "I and J both vanish there and the speed is ill-conditioned",
            stacklevel=2,
        )
        return diag["c_quad"]
    if not diag["validated"]:
        warnings.warn(
            f"closed-form I/J disagree with quadrature beyond {CLOSED_QUAD_RTOL} "
            f"(rel diff {diag['closed_quad_rel_diff']:.3e}); returning quadrature speed",
            stacklevel=2,
        )
        return diag["c_quad"]
    return diag["c_closed"]
