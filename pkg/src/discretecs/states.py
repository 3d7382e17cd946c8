"""Fiducial state, discrete coherent states and Dicke expansions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotSymmetric, ThetaOutOfRange
from .gf2n import FieldSpec
from .pauli import FourierOperator, PhasePoint, displacement, squeeze
from .vector import StateVector

SYMMETRIC_THETA = math.pi / 4


@dataclass(frozen=True)
class FiducialParams:
    """Angle ``theta`` and the amplitude ratio ``xi`` it fixes.

    ``xi = (sqrt(1 + cos^2 theta) - cos theta) e^{i theta}`` is the branch
    that makes the fiducial Q-function symmetric under swapping axes.
    """

    theta: float
    xi: complex

    @classmethod
    def from_theta(cls, theta: float = SYMMETRIC_THETA) -> FiducialParams:
        if not -math.pi / 2 < theta < math.pi / 2:
            raise ThetaOutOfRange(f"theta={theta} outside (-pi/2, pi/2)")
        c = math.cos(theta)
        r = math.sqrt(1.0 + c * c) - c
        return cls(theta, complex(r * math.cos(theta), r * math.sin(theta)))


def xi_from_theta(theta: float = SYMMETRIC_THETA) -> complex:
    return FiducialParams.from_theta(theta).xi


def product_state(field: FieldSpec, xi: complex) -> StateVector:
    """``(1 + |xi|^2)^{-n/2} sum_kappa xi^{h(kappa)} |kappa>`` for arbitrary ``xi``."""
    n = field.n
    powers = np.array([xi**k for k in range(n + 1)], dtype=np.complex128)
    amps = powers[field.h_table] / (1.0 + abs(xi) ** 2) ** (n / 2)
    return StateVector(amps, field)


def fiducial(field: FieldSpec, theta: float = SYMMETRIC_THETA, xi: complex | None = None) -> StateVector:
    """The symmetric product fiducial; ``xi`` overrides the ``theta`` parametrisation."""
    if xi is None:
        xi = xi_from_theta(theta)
    return product_state(field, xi)


def single_qubit(xi: complex) -> np.ndarray:
    """``(|0> + xi |1>) / sqrt(1 + |xi|^2)`` as a length-2 array."""
    return np.array([1.0, xi], dtype=np.complex128) / math.sqrt(1.0 + abs(xi) ** 2)


def coherent_state(
    field: FieldSpec,
    point,
    theta: float = SYMMETRIC_THETA,
    xi: complex | None = None,
) -> StateVector:
    """``|alpha, beta> = D(alpha, beta) |xi>``."""
    point = PhasePoint(*point)
    return displacement(field, point).apply(fiducial(field, theta, xi))


def squeezed_fiducial(field: FieldSpec, zeta: int, theta: float = SYMMETRIC_THETA) -> StateVector:
    return squeeze(field, zeta).apply(fiducial(field, theta))


def superpose(*states: StateVector) -> StateVector:
    """Normalised sum of the given states."""
    acc = states[0]
    for s in states[1:]:
        acc = acc + s
    return acc.normalized()


def dicke_expansion(psi: StateVector, atol: float = 1e-10) -> dict[int, complex]:
    """Coefficients ``<k, n|psi>`` on the Dicke states.

    Raises :class:`NotSymmetric` when amplitudes sharing the same number of
    excitations differ, i.e. the state is not permutation symmetric.
    """
    field = psi.field
    out = {}
    for k in range(field.n + 1):
        amps = psi.amplitudes[field.h_table == k]
        if np.max(np.abs(amps - amps[0])) > atol:
            raise NotSymmetric(f"amplitudes with h = {k} are not all equal")
        out[k] = complex(amps.sum() / math.sqrt(len(amps)))
    return out


def fourier_eigen_candidates() -> tuple[float, float]:
    """The two real ``xi`` whose product states are Fourier eigenvectors."""
    r = math.sqrt(2.0)
    return r - 1.0, -r - 1.0


def verify_fourier_eigen(field: FieldSpec, xi: complex) -> tuple[int, float]:
    """Return ``(sign, residual)`` minimising ``||F|xi> - sign |xi>||``."""
    psi = product_state(field, xi)
    f_psi = FourierOperator(field).apply(psi).amplitudes
    res = {s: float(np.linalg.norm(f_psi - s * psi.amplitudes)) for s in (1, -1)}
    sign = min(res, key=res.get)
    return sign, res[sign]


def bloch_vector(xi: complex) -> tuple[float, float, float]:
    """``(<sx>, <sy>, <sz>)`` of the single-qubit state with amplitude ratio ``xi``."""
    v = single_qubit(xi)
    sx = np.array([[0, 1], [1, 0]])
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]])
    return tuple(float(np.real(np.vdot(v, m @ v))) for m in (sx, sy, sz))
