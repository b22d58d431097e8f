"""Propagation of the field covariance along the medium and spectrum extraction.

Positions are in reduced units ``z C / gamma``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import ConsistencyError, IntegrationError, UnsupportedFeatureError
from .langevin import atomic_jacobian, diffusion_matrix, FluctuationBlock
from .model import DriveState, MediumParams
from .steady_state import dark_state, steady_state_numeric
from .transfer import FieldGenerator, field_generator

# largest |A| * step used in one matrix exponential
_MAX_STEP_NORM = 0.5


@dataclass(frozen=True)
class CovarianceMap:
    """Normally ordered covariance of ``v`` along ``z_grid`` at one sideband frequency.

    ``sigma[k, i, j] = <v_i v_j^*>`` at ``z_grid[k]``; ``s1`` and ``s2`` are
    the pump and probe spectra at quadrature angle ``theta``.
    """

    omega: float
    z_grid: np.ndarray
    sigma: np.ndarray
    theta: float
    s1: np.ndarray
    s2: np.ndarray


def input_covariance(drive: DriveState) -> np.ndarray:
    """Normally ordered covariance of broadband squeezed vacuum on both beams.

    With ``a -> a cosh(xi) + a^dag sinh(xi)`` one has ``<a^dag a> = sinh^2 xi``
    and ``<a a> = cosh xi sinh xi``, so that the ``theta = 0`` quadrature
    spectrum equals ``exp(2 xi)``.
    """
    sigma = np.zeros((4, 4), dtype=complex)
    for j, xi in enumerate((drive.xi1, drive.xi2)):
        if np.iscomplexobj(xi) and np.imag(xi) != 0:
            raise UnsupportedFeatureError("only real squeezing parameters are supported")
        xi = float(np.real(xi))
        n = math.sinh(xi) ** 2
        m = math.cosh(xi) * math.sinh(xi)
        sigma[j, j] = sigma[j + 2, j + 2] = n
        sigma[j, j + 2] = sigma[j + 2, j] = m
    return sigma


def spectrum(sigma: np.ndarray, theta: float, beam: int, tol: float = 1e-10) -> float:
    """Quadrature noise spectrum of one beam, equal to 1 for coherent light.

    ``S = 1 + exp(-2i theta) <da da> + exp(2i theta) <da* da*> + 2 <da* da>``

    Raises
    ------
    ConsistencyError
        If the result has an imaginary part above ``tol`` (relative to ``max(1, |S|)``).
    """
    if beam not in (1, 2):
        raise ValueError("beam must be 1 (pump) or 2 (probe)")
    j = beam - 1
    phase = np.exp(-2j * theta)
    val = (1.0 + sigma[j, j] + sigma[j + 2, j + 2]
           + phase * sigma[j, j + 2] + np.conj(phase) * sigma[j + 2, j])
    if abs(val.imag) > tol * max(1.0, abs(val.real)):
        raise ConsistencyError(f"spectrum has imaginary part {val.imag:.3g}")
    return float(val.real)


def uncertainty_product(sigma: np.ndarray, theta: float, beam: int) -> float:
    """``S(theta) * S(theta + pi/2)``; at least 1 for any physical state."""
    return spectrum(sigma, theta, beam) * spectrum(sigma, theta + math.pi / 2, beam)


def _step_maps(a_red, n_red, h):
    # Van Loan: the top blocks of expm([[A, N], [0, -A^H]] h) give the
    # transfer matrix and the accumulated noise over one step
    big = np.zeros((8, 8), dtype=complex)
    big[:4, :4] = a_red
    big[:4, 4:] = n_red
    big[4:, 4:] = -a_red.conj().T
    ex = scipy.linalg.expm(big * h)
    trans = ex[:4, :4]
    return trans, ex[:4, 4:] @ trans.conj().T


def propagate_covariance(sigma0: np.ndarray, gen: FieldGenerator, z_grid: Sequence[float],
                         theta: float = 0.0) -> CovarianceMap:
    """Solve ``d sigma/dz = A sigma + sigma A^H + N`` from ``z = 0`` over ``z_grid``.

    ``A`` is independent of ``z``, so each interval is advanced with exact
    matrix exponentials, subdivided only to keep them well conditioned.
    """
    z_grid = np.asarray(z_grid, dtype=float)
    if z_grid.ndim != 1 or z_grid.size == 0:
        raise ValueError("z_grid must be a non-empty 1-d sequence")
    if z_grid[0] < 0 or np.any(np.diff(z_grid) < 0):
        raise ValueError("z_grid must be ascending and start at z >= 0")

    a_red = gen.a_mat * gen.length_unit
    n_red = np.zeros((4, 4), dtype=complex) if gen.n_mat is None else gen.n_mat * gen.length_unit
    norm = max(np.linalg.norm(a_red, 1), np.linalg.norm(n_red, 1))
    cache = {}

    sigma = np.array(sigma0, dtype=complex)
    out = np.empty((z_grid.size, 4, 4), dtype=complex)
    z_now = 0.0
    for k, z in enumerate(z_grid):
        dz = z - z_now
        if dz > 0:
            nsub = max(1, math.ceil(norm * dz / _MAX_STEP_NORM))
            h = dz / nsub
            key = round(h, 12)
            if key not in cache:
                cache[key] = _step_maps(a_red, n_red, h)
            trans, noise = cache[key]
            # overflow surfaces as non-finite entries, reported below
            with np.errstate(over="ignore", invalid="ignore"):
                for _ in range(nsub):
                    sigma = trans @ sigma @ trans.conj().T + noise
            sigma = 0.5 * (sigma + sigma.conj().T)
            z_now = z
        if not np.all(np.isfinite(sigma)):
            raise IntegrationError(f"non-finite covariance at omega={gen.omega:g}, z={z:g}",
                                   position=float(z))
        out[k] = sigma

    s1 = np.array([spectrum(s, theta, 1) for s in out])
    s2 = np.array([spectrum(s, theta, 2) for s in out])
    return CovarianceMap(omega=gen.omega, z_grid=z_grid, sigma=out, theta=float(theta),
                         s1=s1, s2=s2)


def _pipeline(drive, params, omega, z_grid, theta, mean):
    block = atomic_jacobian(mean, drive, params)
    block = FluctuationBlock(block.jac, block.couple, diffusion_matrix(mean, drive, params))
    gen = field_generator(block, drive, params, omega)
    return propagate_covariance(input_covariance(drive), gen, z_grid, theta)


def simulate(drive: DriveState, params: MediumParams, omega: float, z_grid: Sequence[float],
             theta: float = 0.0) -> CovarianceMap:
    """Numerical pipeline around the closed-form dark state (ideal coherence)."""
    if params.gamma12 != 0:
        raise ValueError("simulate() needs gamma12 = 0; use simulate_decoherence()")
    return _pipeline(drive, params, omega, z_grid, theta, dark_state(drive))


def simulate_decoherence(drive: DriveState, params: MediumParams, omega: float,
                         z_grid: Sequence[float], theta: float = 0.0) -> CovarianceMap:
    """Full pipeline with a damped ground-state coherence.

    Mean values come from the master equation and are assumed not to change
    along the medium. For ``gamma12 = 0`` this reproduces :func:`simulate`.
    """
    return _pipeline(drive, params, omega, z_grid, theta, steady_state_numeric(drive, params))


def sweep(drive: DriveState, params: MediumParams, omegas: Sequence[float],
          z_grid: Sequence[float], theta: float = 0.0, decoherence: bool = False,
          workers: int = 1) -> list:
    """One :class:`CovarianceMap` per frequency, in the order of ``omegas``."""
    func = partial(simulate_decoherence if decoherence else simulate, drive, params,
                   z_grid=z_grid, theta=theta)
    if workers <= 1:
        return [func(w) for w in omegas]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, omegas))
