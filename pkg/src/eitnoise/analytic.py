"""Closed-form quadrature spectra for a coherent pump and squeezed probe.

``resonance_p`` is in internal units (1/length). Positions passed to and
returned from the other functions are reduced, i.e. ``z C / gamma``.
The probe squeezing is taken from ``ctx.drive.xi2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .model import DriveState, MediumParams, c_prefactor


@dataclass(frozen=True)
class ClosedFormContext:
    drive: DriveState
    params: MediumParams

    def __post_init__(self):
        if not self.c_prefactor > 0:
            raise ValueError("closed forms need a positive prefactor C")

    @property
    def c_prefactor(self) -> float:
        return c_prefactor(self.params, self.drive)

    @property
    def omega_sq(self) -> float:
        return self.drive.omega1 ** 2 + self.drive.omega2 ** 2


class LengthScales(NamedTuple):
    z_abs: float
    z_osc: float
    z_max_transfer: float


def f_factor(xi, theta):
    """``1 - exp(2 xi) cos^2 theta - exp(-2 xi) sin^2 theta``; zero for coherent light."""
    return 1.0 - np.exp(2 * xi) * np.cos(theta) ** 2 - np.exp(-2 * xi) * np.sin(theta) ** 2


def resonance_p(omega, delta, ctx: ClosedFormContext):
    """Resonance curve ``P(omega, delta)`` in 1/length."""
    omega = np.asarray(omega, dtype=float)
    gam = ctx.params.gamma
    den = (gam / 2) ** 2 * omega ** 2 + (omega ** 2 - ctx.omega_sq) ** 2
    val = ctx.c_prefactor * np.abs(omega ** 2 - np.asarray(delta) ** 2) / den
    return val[()] if val.ndim == 0 else val


def _rates(omega, ctx):
    # decay and oscillation rates per reduced length
    unit = ctx.params.gamma / ctx.c_prefactor
    gam = ctx.params.gamma
    absorb = gam * resonance_p(omega, 0.0, ctx) * unit
    osc = resonance_p(omega, math.sqrt(ctx.omega_sq), ctx) * np.asarray(omega) * unit
    return absorb, osc


def _theta(ctx, theta):
    return ctx.drive.theta if theta is None else theta


def closed_form_spectra(z, omega, ctx: ClosedFormContext, theta: Optional[float] = None):
    """Pump and probe spectra ``(s1, s2)`` at reduced position ``z``."""
    f = f_factor(ctx.drive.xi2, _theta(ctx, theta))
    om1, om2, om4 = ctx.drive.omega1 ** 2, ctx.drive.omega2 ** 2, ctx.omega_sq ** 2
    absorb, osc = _rates(omega, ctx)
    z = np.asarray(z, dtype=float)
    full = np.exp(-absorb * z)
    half = np.exp(-absorb * z / 2)
    cos = np.cos(osc * z)
    s1 = 1.0 - f / om4 * om1 * om2 * (1.0 + full - 2.0 * half * cos)
    s2 = 1.0 - f / om4 * (om2 ** 2 + om1 ** 2 * full + 2.0 * om1 * om2 * half * cos)
    return s1, s2


def asymptotic_spectra(ctx: ClosedFormContext, theta: Optional[float] = None):
    """Spectra deep inside the medium, where both exponentials have died out."""
    f = f_factor(ctx.drive.xi2, _theta(ctx, theta))
    om1, om2, om4 = ctx.drive.omega1 ** 2, ctx.drive.omega2 ** 2, ctx.omega_sq ** 2
    # grouped so that equal drives give bitwise equal asymptotes
    return 1.0 - f * (om1 * om2) / om4, 1.0 - f * (om2 * om2) / om4


def approx_spectra(zeta, ctx: ClosedFormContext, theta: Optional[float] = None):
    """Spectra when absorption is negligible, as functions of ``zeta = z / z_osc``.

    Here ``s1 + s2 = 2 - f`` for every ``zeta``.
    """
    f = f_factor(ctx.drive.xi2, _theta(ctx, theta))
    om1, om2, om4 = ctx.drive.omega1 ** 2, ctx.drive.omega2 ** 2, ctx.omega_sq ** 2
    sin_sq = np.sin(zeta) ** 2
    s1 = 1.0 - f * 4 * om1 * om2 / om4 * sin_sq
    s2 = 1.0 - f / om4 * ((om1 - om2) ** 2 + 4 * om1 * om2 * np.cos(zeta) ** 2)
    return s1, s2


def approx_uncertainty_product(zeta, ctx: ClosedFormContext, beam: int = 1):
    """``S(theta) S(theta + pi/2)`` of the low-absorption spectra.

    Independent of ``theta``; equals ``1 + (2 cosh 2xi - 2) K (1 - K)`` where
    ``K`` is the transferred fraction, so it exceeds 1 except at ``K in {0, 1}``.
    """
    idx = beam - 1
    a = approx_spectra(zeta, ctx, 0.0)[idx]
    b = approx_spectra(zeta, ctx, math.pi / 2)[idx]
    return a * b


def length_scales(omega: float, ctx: ClosedFormContext) -> LengthScales:
    """Absorption length, oscillation length and first maximal-transfer position.

    All in reduced units; a scale that diverges (``omega = 0`` or, for the
    oscillation, ``omega = Omega``) is returned as ``inf``.
    """
    absorb, osc = _rates(omega, ctx)
    z_abs = math.inf if absorb == 0 else 1.0 / absorb
    z_osc = math.inf if osc == 0 else 2.0 / abs(osc)
    return LengthScales(float(z_abs), float(z_osc), float(math.pi / 2 * z_osc))


def peak_positions(ctx: ClosedFormContext):
    """``(mean_value_peak, fluctuation_peak)`` frequencies of the absorption curves.

    The mean-value peak sits at ``Omega^(3/2) / sqrt(Omega1)`` and the peak of
    ``P(omega, 0)`` at ``Omega``.
    """
    om1 = ctx.drive.omega1
    if om1 <= 0:
        raise ValueError("peak positions need a non-zero pump Rabi frequency")
    return ctx.omega_sq ** 0.75 / math.sqrt(om1), math.sqrt(ctx.omega_sq)

