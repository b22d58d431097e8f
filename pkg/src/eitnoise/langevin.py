"""Linearized atomic fluctuations: drift Jacobian, field coupling and diffusion.

The atomic variables are ordered as ``ORDERING.atomic``::

    s_e2, s_e1, s_12, w1, w2, s_21, s_1e, s_2e

and the field fluctuations entering the atomic equations as
``(da2*, da1*, da1, da2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _atom
from .errors import InconsistentStateError
from .model import ORDERING, DriveState, MediumParams
from .steady_state import MeanValues

ATOMIC = ORDERING.atomic
COUPLE_FIELDS = ("a2*", "a1*", "a1", "a2")


@dataclass(frozen=True)
class FluctuationBlock:
    """Atomic drift ``jac`` (8x8), field coupling ``couple`` (8x4) and diffusion ``diff`` (8x8).

    ``diff[x, y]`` is the coefficient ``D_xy`` in ``<f_x(t) f_y(t')> = D_xy delta(t - t')``
    for a single atom, with all products in normal order. It is ``None`` for
    blocks returned by :func:`atomic_jacobian`.
    """

    jac: np.ndarray
    couple: np.ndarray
    diff: Optional[np.ndarray] = None


def drift_terms(params: MediumParams) -> dict:
    """Right-hand sides of the atomic Heisenberg-Langevin equations.

    Each entry maps a variable to a list of ``(coefficient, atom, field)``
    with ``None`` standing for a missing factor, so that
    ``d/dt x = sum coef * atom * field`` (Langevin forces omitted).
    """
    g1, g2, gam, dec = params.g1, params.g2, params.gamma, params.gamma12
    k1 = -(params.gamma1 + gam) / 3.0
    k2 = -(params.gamma2 + gam) / 3.0
    return {
        "w1": [(k1, None, None), (k1, "w1", None), (k1, "w2", None),
               (-2j * g1, "s_e1", "a1"), (2j * g1, "s_1e", "a1*"),
               (-1j * g2, "s_e2", "a2"), (1j * g2, "s_2e", "a2*")],
        "w2": [(k2, None, None), (k2, "w1", None), (k2, "w2", None),
               (-1j * g1, "s_e1", "a1"), (1j * g1, "s_1e", "a1*"),
               (-2j * g2, "s_e2", "a2"), (2j * g2, "s_2e", "a2*")],
        "s_1e": [(-gam / 2, "s_1e", None), (1j * g1, "w1", "a1"), (-1j * g2, "s_12", "a2")],
        "s_2e": [(-gam / 2, "s_2e", None), (1j * g2, "w2", "a2"), (-1j * g1, "s_21", "a1")],
        "s_21": [(-1j * g1, "s_2e", "a1*"), (1j * g2, "s_e1", "a2"), (-dec, "s_21", None)],
        # conjugate equations
        "s_e1": [(-gam / 2, "s_e1", None), (-1j * g1, "w1", "a1*"), (1j * g2, "s_21", "a2*")],
        "s_e2": [(-gam / 2, "s_e2", None), (-1j * g2, "w2", "a2*"), (1j * g1, "s_12", "a1*")],
        "s_12": [(1j * g1, "s_e2", "a1"), (-1j * g2, "s_1e", "a2*"), (-dec, "s_12", None)],
    }


def _carriers(drive):
    return {"a1": drive.alpha1, "a2": drive.alpha2,
            "a1*": np.conj(drive.alpha1), "a2*": np.conj(drive.alpha2)}


def atomic_drift(x: np.ndarray, fields: dict, params: MediumParams) -> np.ndarray:
    """Evaluate the deterministic atomic drift at atomic values ``x``."""
    terms = drift_terms(params)
    out = np.zeros(8, dtype=complex)
    for i, name in enumerate(ATOMIC):
        for coef, atom, fld in terms[name]:
            val = coef
            if atom is not None:
                val = val * x[ATOMIC.index(atom)]
            if fld is not None:
                val = val * fields[fld]
            out[i] += val
    return out


def stationarity_residual(mean: MeanValues, drive: DriveState, params: MediumParams) -> float:
    """Largest time derivative of the mean values under the drift."""
    return float(np.abs(atomic_drift(mean.atomic_vector(), _carriers(drive), params)).max())


def _check_stationary(mean, drive, params, tol):
    res = stationarity_residual(mean, drive, params)
    if res > tol:
        raise InconsistentStateError(
            f"mean values are not stationary for this drive (residual {res:.3g})")


def atomic_jacobian(mean: MeanValues, drive: DriveState, params: MediumParams,
                    tol: float = 1e-8) -> FluctuationBlock:
    """First-order expansion of the atomic drift around ``(mean, carriers)``.

    A product ``X * a`` contributes ``<X> da`` to ``couple`` and ``alpha dX`` to ``jac``.
    """
    _check_stationary(mean, drive, params, tol)
    xbar = mean.atomic_vector()
    carriers = _carriers(drive)
    jac = np.zeros((8, 8), dtype=complex)
    couple = np.zeros((8, 4), dtype=complex)
    terms = drift_terms(params)
    for i, name in enumerate(ATOMIC):
        for coef, atom, fld in terms[name]:
            if atom is None and fld is None:
                continue
            if fld is None:
                jac[i, ATOMIC.index(atom)] += coef
            elif atom is None:
                couple[i, COUPLE_FIELDS.index(fld)] += coef
            else:
                jac[i, ATOMIC.index(atom)] += coef * carriers[fld]
                couple[i, COUPLE_FIELDS.index(fld)] += coef * xbar[ATOMIC.index(atom)]
    return FluctuationBlock(jac=jac, couple=couple)


def normal_ordered_covariance(mean: MeanValues) -> np.ndarray:
    """Equal-time covariance ``<N(x y)> - <x><y>`` of the atomic variables for one atom."""
    rho = mean.density_matrix()
    xbar = mean.atomic_vector()
    ops = _atom.OPERATORS
    cov = np.empty((8, 8), dtype=complex)
    for i in range(8):
        for j in range(8):
            prod = ops[i] @ ops[j] if i <= j else ops[j] @ ops[i]
            cov[i, j] = _atom.expect(rho, prod) - xbar[i] * xbar[j]
    return cov


def diffusion_matrix(mean: MeanValues, drive: DriveState, params: MediumParams,
                     tol: float = 1e-8) -> np.ndarray:
    """Normally ordered c-number diffusion coefficients of a single atom.

    The operator coefficients follow from the generalized Einstein relation,
    which for a Markovian system only involves the dissipator::

        D_xy = < L(x y) - L(x) y - x L(y) >

    The c-number equations need products in normal order, so whenever the
    drift of ``x`` (or ``y``) contains an operator standing on the wrong side
    of ``y`` (or ``x``), the reordering commutator is added.
    """
    _check_stationary(mean, drive, params, tol)
    jac = atomic_jacobian(mean, drive, params, tol).jac
    rho = mean.density_matrix()
    ops = _atom.OPERATORS
    diss = [_atom.heisenberg_dissipator(op, params) for op in ops]
    diff = np.zeros((8, 8), dtype=complex)
    for i in range(8):
        for j in range(i, 8):
            x, y = ops[i], ops[j]
            val = _atom.expect(rho, _atom.heisenberg_dissipator(x @ y, params)
                               - diss[i] @ y - x @ diss[j])
            for k in range(j + 1, 8):
                val += jac[i, k] * _atom.expect(rho, ops[k] @ y - y @ ops[k])
            for k in range(i):
                val += jac[j, k] * _atom.expect(rho, x @ ops[k] - ops[k] @ x)
            diff[i, j] = diff[j, i] = val
    return diff


def fluctuation_block(drive: DriveState, params: MediumParams,
                      mean: Optional[MeanValues] = None, tol: float = 1e-8) -> FluctuationBlock:
    """Jacobian, coupling and diffusion in one block.

    ``mean`` defaults to the numerically computed steady state.
    """
    if mean is None:
        from .steady_state import steady_state_numeric
        mean = steady_state_numeric(drive, params)
    block = atomic_jacobian(mean, drive, params, tol)
    diff = diffusion_matrix(mean, drive, params, tol)
    return FluctuationBlock(jac=block.jac, couple=block.couple, diff=diff)


def einstein_residual(block: FluctuationBlock, mean: MeanValues) -> float:
    """Largest entry of ``J S + S J^T + D`` with ``S`` the normally ordered covariance.

    Vanishes when the diffusion is consistent with stationarity of all second moments.
    """
    cov = normal_ordered_covariance(mean)
    return float(np.abs(block.jac @ cov + cov @ block.jac.T + block.diff).max())
