"""Parameters, drive state and the canonical ordering of system variables.

Internal units: the total excited-state linewidth and the speed of light are
both 1 for the default parameters, so frequencies are in units of gamma.
Positions are reported in units of ``gamma / C`` where
``C = N (g1^2 Omega2^2 + g2^2 Omega1^2) / (c Omega^2)`` (see :func:`c_prefactor`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


def _check_finite(**values):
    for name, value in values.items():
        if not np.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class MediumParams:
    """Atomic and medium constants.

    Parameters
    ----------
    gamma1, gamma2 : float
        Spontaneous decay rates from ``|e>`` into ``|1>`` and ``|2>``.
    g1, g2 : float
        Dipole coupling constants of the pump (1) and probe (2) transitions.
    n_atoms : float
        Number of atoms in the quantization volume.
    c : float
        Speed of light.
    gamma12 : float
        Damping rate of the ground-state coherence. Zero is the ideal case.
    quant_length : float
        Quantization length ``L``. It cancels from every observable and only
        exists so that this cancellation can be checked.
    """

    gamma1: float = 0.5
    gamma2: float = 0.5
    g1: float = 1.0 / 60.0
    g2: float = 1.0 / 60.0
    n_atoms: float = 1.0e4
    c: float = 1.0
    gamma12: float = 0.0
    quant_length: float = 1.0

    def __post_init__(self):
        _check_finite(gamma1=self.gamma1, gamma2=self.gamma2, g1=self.g1, g2=self.g2,
                      n_atoms=self.n_atoms, c=self.c, gamma12=self.gamma12,
                      quant_length=self.quant_length)
        for name in ("gamma1", "gamma2", "gamma12"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        for name in ("g1", "g2", "n_atoms", "c", "quant_length"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")

    @property
    def gamma(self) -> float:
        """Total linewidth of the excited state."""
        return self.gamma1 + self.gamma2


@dataclass(frozen=True)
class DriveState:
    """Carrier amplitudes, Rabi frequencies and input squeezing.

    Build instances with :func:`build_drive` or :func:`drive_from_rabi` so that
    the Rabi frequencies stay consistent with the amplitudes.
    """

    alpha1: float
    alpha2: float
    omega1: float
    omega2: float
    xi1: float = 0.0
    xi2: float = 0.0
    theta: float = 0.0

    @property
    def omega_total(self) -> float:
        return math.hypot(self.omega1, self.omega2)


def build_drive(params: MediumParams, alpha1: float, alpha2: float,
                xi2: float = 0.0, theta: float = 0.0) -> DriveState:
    """Resonant drive with a coherent pump and a squeezed probe.

    The carriers are taken real and non-negative, and ``Omega_j = |g_j alpha_j|``.

    Examples
    --------
    >>> p = MediumParams(g1=1/60, g2=1/60)
    >>> d = build_drive(p, 60.0, 60.0, xi2=-3.0)
    >>> round(d.omega1, 12), round(d.omega2, 12)
    (1.0, 1.0)
    """
    _check_finite(alpha1=alpha1, alpha2=alpha2, xi2=xi2, theta=theta)
    if alpha1 < 0 or alpha2 < 0:
        raise ValueError("carrier amplitudes must be real and non-negative")
    return DriveState(alpha1=float(alpha1), alpha2=float(alpha2),
                      omega1=abs(params.g1 * alpha1), omega2=abs(params.g2 * alpha2),
                      xi1=0.0, xi2=float(xi2), theta=float(theta))


def drive_from_rabi(params: MediumParams, omega1: float, omega2: float,
                    xi2: float = 0.0, theta: float = 0.0) -> DriveState:
    """Same as :func:`build_drive` but parametrized by the Rabi frequencies."""
    _check_finite(omega1=omega1, omega2=omega2)
    return build_drive(params, omega1 / params.g1, omega2 / params.g2, xi2, theta)


def c_prefactor(params: MediumParams, drive: DriveState) -> float:
    """Prefactor ``C = N (g1^2 Omega2^2 + g2^2 Omega1^2) / (c Omega^2)`` of the resonance curve."""
    om_sq = drive.omega1 ** 2 + drive.omega2 ** 2
    if om_sq == 0:
        raise ValueError("C is undefined when both Rabi frequencies vanish")
    num = params.g1 ** 2 * drive.omega2 ** 2 + params.g2 ** 2 * drive.omega1 ** 2
    return params.n_atoms * num / (params.c * om_sq)


def length_unit(params: MediumParams, drive: DriveState) -> float:
    """Physical length of one reduced position unit, ``gamma / C``."""
    return params.gamma / c_prefactor(params, drive)


_NAMES = ("a2*", "a1*", "s_e2", "s_e1", "s_12", "w1", "w2", "s_21", "s_1e", "s_2e", "a1", "a2")
_CONJ = {"a2*": "a2", "a1*": "a1", "s_e2": "s_2e", "s_e1": "s_1e", "s_12": "s_21",
         "w1": "w1", "w2": "w2"}
_CONJ.update({v: k for k, v in list(_CONJ.items())})


@dataclass(frozen=True)
class SystemOrdering:
    """Normal-order convention for the twelve c-number system variables.

    ``s_mn`` stands for the atomic operator ``|m><n|``, ``w_j`` for the
    inversion ``s_ee - s_jj`` and ``aj``/``aj*`` for the field amplitudes.
    Every product of operators is understood in this left-to-right order.
    """

    names: tuple = field(default=_NAMES)

    @property
    def atomic(self) -> tuple:
        """Names of the eight atomic variables (indices 2..9)."""
        return self.names[2:10]

    @property
    def field_indices(self) -> tuple:
        return (0, 1, 10, 11)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def name(self, i: int) -> str:
        return self.names[i]

    def conjugate(self, i: int) -> int:
        """Index of the conjugate partner of variable ``i``."""
        return self.index(_CONJ[self.names[i]])

    def atomic_index(self, name: str) -> int:
        return self.atomic.index(name)

    def atomic_conjugation(self) -> np.ndarray:
        """Permutation ``p`` with ``atomic[p[i]]`` conjugate to ``atomic[i]``."""
        return np.array([self.atomic.index(_CONJ[n]) for n in self.atomic])


ORDERING = SystemOrdering()
