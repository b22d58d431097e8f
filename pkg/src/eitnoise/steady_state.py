"""Stationary single-atom mean values under resonant two-beam driving."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import _atom
from .errors import UndefinedStateError
from .model import DriveState, MediumParams


@dataclass(frozen=True)
class MeanValues:
    """Single-atom expectation values.

    ``coh12`` is ``<s_12>``, and ``pol1e``, ``pol2e`` are ``<s_1e>``, ``<s_2e>``.
    """

    pop1: float
    pop2: float
    pope: float
    coh12: complex = 0.0
    pol1e: complex = 0.0
    pol2e: complex = 0.0

    @property
    def w1(self) -> float:
        return self.pope - self.pop1

    @property
    def w2(self) -> float:
        return self.pope - self.pop2

    def atomic_vector(self) -> np.ndarray:
        """Expectation values in the atomic normal order (s_e2 ... s_2e)."""
        return np.array([np.conj(self.pol2e), np.conj(self.pol1e), self.coh12,
                         self.w1, self.w2, np.conj(self.coh12), self.pol1e, self.pol2e],
                        dtype=complex)

    def density_matrix(self) -> np.ndarray:
        # <|m><n|> = rho[n, m]
        rho = np.diag([self.pop1, self.pop2, self.pope]).astype(complex)
        rho[1, 0] = self.coh12
        rho[2, 0] = self.pol1e
        rho[2, 1] = self.pol2e
        rho[0, 1] = np.conj(self.coh12)
        rho[0, 2] = np.conj(self.pol1e)
        rho[1, 2] = np.conj(self.pol2e)
        return rho

    @classmethod
    def from_density_matrix(cls, rho: np.ndarray) -> "MeanValues":
        return cls(pop1=float(rho[0, 0].real), pop2=float(rho[1, 1].real),
                   pope=float(rho[2, 2].real), coh12=complex(rho[1, 0]),
                   pol1e=complex(rho[2, 0]), pol2e=complex(rho[2, 1]))

    def is_physical(self, tol: float = 1e-12) -> bool:
        """Unit trace and a positive semidefinite density matrix."""
        if abs(self.pop1 + self.pop2 + self.pope - 1.0) > tol:
            return False
        return bool(np.linalg.eigvalsh(self.density_matrix()).min() >= -tol)


def dark_state(drive: DriveState) -> MeanValues:
    """Closed-form EIT dark state for an ideal ground-state coherence.

    The atom sits in ``(Omega2 |1> - Omega1 |2>) / Omega``, which is annihilated
    by the interaction with real, positive carriers. No excited-state
    population and no optical polarization remain.

    Raises
    ------
    UndefinedStateError
        If both Rabi frequencies vanish.
    """
    om1, om2 = drive.omega1, drive.omega2
    om_sq = om1 ** 2 + om2 ** 2
    if om_sq == 0:
        raise UndefinedStateError("dark state is undefined without any drive")
    return MeanValues(pop1=om2 ** 2 / om_sq, pop2=om1 ** 2 / om_sq, pope=0.0,
                      coh12=complex(-om1 * om2 / om_sq))


def steady_state_numeric(drive: DriveState, params: MediumParams,
                         tol: float = 1e-10) -> MeanValues:
    """Steady state from the null space of the single-atom master equation.

    Works for any ``gamma12 >= 0``. The null space must be one-dimensional,
    otherwise the stationary state is not unique and an error is raised.
    """
    lv = _atom.liouvillian(drive, params)
    _, sv, vh = scipy.linalg.svd(lv)
    kernel_dim = int(np.sum(sv <= tol * max(sv[0], 1.0)))
    if kernel_dim != 1:
        raise UndefinedStateError(
            f"master equation has a {kernel_dim}-dimensional stationary space")
    rho = vh[-1].conj().reshape(3, 3)
    rho = rho / np.trace(rho)
    rho = 0.5 * (rho + rho.conj().T)
    return MeanValues.from_density_matrix(rho)
