"""Single-atom operator algebra on the basis (|1>, |2>, |e>).

Used to evaluate operator expectation values and the dissipative part of the
dynamics. Fields are treated as classical carriers here.
"""

import numpy as np

from .model import ORDERING, DriveState, MediumParams

_LEVEL = {"1": 0, "2": 1, "e": 2}


def sigma(m: str, n: str) -> np.ndarray:
    """Transition operator ``|m><n|``."""
    op = np.zeros((3, 3), dtype=complex)
    op[_LEVEL[m], _LEVEL[n]] = 1.0
    return op


def operator(name: str) -> np.ndarray:
    """Matrix of the atomic variable ``name`` (see :class:`SystemOrdering`)."""
    if name == "w1":
        return sigma("e", "e") - sigma("1", "1")
    if name == "w2":
        return sigma("e", "e") - sigma("2", "2")
    _, idx = name.split("_")
    return sigma(idx[0], idx[1])


OPERATORS = tuple(operator(n) for n in ORDERING.atomic)

# columns: identity followed by the eight atomic operators
_BASIS = np.column_stack([np.eye(3).ravel()] + [op.ravel() for op in OPERATORS])


def decompose(op: np.ndarray) -> np.ndarray:
    """Coefficients of ``op`` in the basis (1, atomic operators...)."""
    return np.linalg.solve(_BASIS, op.ravel())


def hamiltonian(drive: DriveState, params: MediumParams) -> np.ndarray:
    """Interaction Hamiltonian (hbar = 1) with the carriers as c-numbers."""
    h = np.zeros((3, 3), dtype=complex)
    for j, g, a in (("1", params.g1, drive.alpha1), ("2", params.g2, drive.alpha2)):
        h += g * (a * sigma("e", j) + np.conj(a) * sigma(j, "e"))
    return h


def _jumps(params):
    return (np.sqrt(params.gamma1) * sigma("1", "e"),
            np.sqrt(params.gamma2) * sigma("2", "e"))


def _ground_dephasing(op, params):
    # damps only the |1><2| and |2><1| components, at rate gamma12
    p1, p2 = sigma("1", "1"), sigma("2", "2")
    return -params.gamma12 * (p1 @ op @ p2 + p2 @ op @ p1)


def heisenberg_dissipator(op: np.ndarray, params: MediumParams) -> np.ndarray:
    """Dissipative part of the adjoint generator acting on an operator."""
    out = _ground_dephasing(op, params)
    for jump in _jumps(params):
        jd = jump.conj().T
        out += jd @ op @ jump - 0.5 * (jd @ jump @ op + op @ jd @ jump)
    return out


def heisenberg_generator(op, drive, params):
    h = hamiltonian(drive, params)
    return 1j * (h @ op - op @ h) + heisenberg_dissipator(op, params)


def schrodinger_generator(rho, drive, params):
    h = hamiltonian(drive, params)
    out = -1j * (h @ rho - rho @ h) + _ground_dephasing(rho, params)
    for jump in _jumps(params):
        jd = jump.conj().T
        out += jump @ rho @ jd - 0.5 * (jd @ jump @ rho + rho @ jd @ jump)
    return out


def liouvillian(drive: DriveState, params: MediumParams) -> np.ndarray:
    """9x9 matrix of the master-equation generator on row-major vectorized rho."""
    mat = np.zeros((9, 9), dtype=complex)
    for k in range(9):
        unit = np.zeros(9, dtype=complex)
        unit[k] = 1.0
        mat[:, k] = schrodinger_generator(unit.reshape(3, 3), drive, params).ravel()
    return mat


def expect(rho: np.ndarray, op: np.ndarray) -> complex:
    return complex(np.trace(rho @ op))
