"""Adiabatic elimination of the atoms at a fixed sideband frequency.

Field fluctuations are collected in ``v = (da1(w), da2(w), da1*(-w), da2*(-w))``
and obey, in the frame moving with the light,

    d v / dz = A(w) v + F(z, w),    <F F^H> = N(w) delta(z - z')

with ``A`` and ``N`` returned here in internal units (1/length). The field
is normalized to photon flux so that vacuum corresponds to zero normally
ordered covariance.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import LimitEvaluationWarning
from .langevin import ATOMIC, FluctuationBlock
from .model import ORDERING, DriveState, MediumParams, length_unit

# couple columns (a2*, a1*, a1, a2) -> v order (a1, a2, a1*, a2*)
_TO_V = [2, 3, 1, 0]
_SINGULAR_COND = 1e12
_LIMIT_STEP = 1e-6


@dataclass(frozen=True)
class FieldGenerator:
    """Spatial propagation generator for one sideband frequency.

    ``length_unit`` is the physical length of one reduced position unit
    (``gamma / C``) and converts ``a_mat`` and ``n_mat`` for propagation over
    reduced positions. ``limit`` is set when the atomic response was singular
    at ``omega`` and the generator was obtained as a limit.
    """

    omega: float
    a_mat: np.ndarray
    n_mat: Optional[np.ndarray]
    eigen: np.ndarray
    length_unit: float = 1.0
    limit: bool = False


class EigenReport(NamedTuple):
    absorption_rate: float
    oscillation_rate: float
    bright: np.ndarray
    degenerate: bool


def _projection(params: MediumParams) -> np.ndarray:
    """Rows pick the polarization sourcing each component of ``v``."""
    scale = params.n_atoms / params.c
    proj = np.zeros((4, 8), dtype=complex)
    proj[0, ATOMIC.index("s_1e")] = -1j * params.g1 * scale
    proj[1, ATOMIC.index("s_2e")] = -1j * params.g2 * scale
    proj[2, ATOMIC.index("s_e1")] = 1j * params.g1 * scale
    proj[3, ATOMIC.index("s_e2")] = 1j * params.g2 * scale
    return proj


def _response(jac, omega):
    return np.linalg.inv(1j * omega * np.eye(8) - jac)


def _is_singular(jac, omega):
    return np.linalg.cond(1j * omega * np.eye(8) - jac) > _SINGULAR_COND


def _generator(block, params, omega):
    return _projection(params) @ _response(block.jac, omega) @ block.couple[:, _TO_V]


def _noise(block, params, omega):
    proj = _projection(params)
    resp = _response(block.jac, omega)
    perm = ORDERING.atomic_conjugation()
    # <f_x f_y^*> = D_{x, conj(y)}
    dconj = block.diff[:, perm]
    # collective noise carries L/N, flux normalization contributes c/L
    scale = (params.quant_length / params.n_atoms) * (params.c / params.quant_length)
    return scale * proj @ resp @ dconj @ resp.conj().T @ proj.conj().T


def _evaluate(func, block, params, omega):
    if not _is_singular(block.jac, omega):
        return func(block, params, omega), False
    # symmetric limit: the part odd in the offset cancels
    eps = _LIMIT_STEP * max(params.gamma, 1.0)
    value = 0.5 * (func(block, params, omega + eps) + func(block, params, omega - eps))
    return value, True


def noise_injection(block: FluctuationBlock, params: MediumParams, omega: float) -> np.ndarray:
    """Rate matrix ``N(w)`` of normally ordered noise fed into the fields by the atoms."""
    if block.diff is None:
        raise ValueError("block has no diffusion matrix")
    value, _ = _evaluate(_noise, block, params, omega)
    return value


def field_generator(block: FluctuationBlock, drive: DriveState, params: MediumParams,
                    omega: float) -> FieldGenerator:
    """Build ``A(w)`` (and ``N(w)`` when ``block.diff`` is present)."""
    a_mat, limit = _evaluate(_generator, block, params, omega)
    if limit:
        warnings.warn(f"atomic response singular at omega={omega:g}; "
                      "generator evaluated as a limit", LimitEvaluationWarning, stacklevel=2)
    n_mat = None
    if block.diff is not None:
        n_mat, _ = _evaluate(_noise, block, params, omega)
    return FieldGenerator(omega=float(omega), a_mat=a_mat, n_mat=n_mat,
                          eigen=np.linalg.eigvals(a_mat),
                          length_unit=length_unit(params, drive), limit=limit)


def eigen_report(gen: FieldGenerator, tol: float = 1e-10) -> EigenReport:
    """Absorption and oscillation rates of the bright field modes.

    The two eigenvalues of largest modulus belong to the bright modes (one per
    conjugate block). ``absorption_rate = -2 Re(lambda)`` and
    ``oscillation_rate = |Im(lambda)|`` are averaged over the pair.
    ``degenerate`` flags that the bright pair cannot be told apart from the
    dark pair.
    """
    ev = gen.eigen[np.argsort(np.abs(gen.eigen))]
    dark, bright = ev[:2], ev[2:]
    scale = max(np.abs(gen.a_mat).max(), 1.0)
    degenerate = bool(np.abs(bright).min() - np.abs(dark).max() <= tol * scale)
    return EigenReport(absorption_rate=float(-2.0 * bright.real.mean()),
                       oscillation_rate=float(np.abs(bright.imag).mean()),
                       bright=bright, degenerate=degenerate)
