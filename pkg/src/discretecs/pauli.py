"""Generalised Pauli group and the unitaries built from it.

Every operator acts matrix-free on :class:`~discretecs.vector.StateVector`.
Monomial operators (a permutation of basis labels times phases) cover
``Z``, ``X``, displacements, ``Q`` rotations, squeezing and XOR gates; the
Fourier transform runs as a Walsh-Hadamard transform in tensor order.
Dense matrices are only available for ``n <= 6`` and exist for testing.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ._backend import kernels
from .errors import EqualIndices, FieldMismatch, IndexOutOfRange, ZeroScaling
from .gf2n import FieldSpec
from .vector import StateVector

DENSE_MAX_N = 6


class PhasePoint(NamedTuple):
    """A point of the ``2^n x 2^n`` grid: ``alpha`` horizontal, ``beta`` vertical."""

    alpha: int
    beta: int


def characters(field: FieldSpec, a: int) -> np.ndarray:
    """``chi(a * lambda)`` for every label ``lambda``, as a float array of +-1."""
    prods = field.mul_array(a, field.elements())
    return 1.0 - 2.0 * field.trace_table[prods]


def _popcount(x: int) -> int:
    return bin(x).count("1")


class Operator:
    """Base class: a unitary acting on state vectors of one field."""

    kind = "operator"

    def __init__(self, field: FieldSpec, params=()):
        self.field = field
        self.params = tuple(params)

    def _check(self, psi: StateVector):
        if psi.field != self.field:
            raise FieldMismatch(f"{self.kind} built for {self.field}, state lives in {psi.field}")

    def apply(self, psi: StateVector) -> StateVector:
        raise NotImplementedError

    def __call__(self, psi: StateVector) -> StateVector:
        return self.apply(psi)

    def __matmul__(self, other: Operator) -> Operator:
        if isinstance(other, Operator):
            return ProductOperator([self, other])
        return NotImplemented

    def dense(self) -> np.ndarray:
        """Materialise the ``2^n x 2^n`` matrix in field-integer ordering."""
        if self.field.n > DENSE_MAX_N:
            raise ValueError(f"dense matrices are capped at n <= {DENSE_MAX_N}")
        q = self.field.order
        cols = [self.apply(StateVector.basis(self.field, k)).amplitudes for k in range(q)]
        return np.column_stack(cols)

    def __repr__(self):
        return f"{type(self).__name__}({self.kind}, params={self.params})"


class MonomialOperator(Operator):
    """``U|lam> = phase[lam] |perm[lam]>``."""

    def __init__(self, field, perm, phase, kind="monomial", params=()):
        super().__init__(field, params)
        self.kind = kind
        self.perm = np.asarray(perm, dtype=np.int64)
        self.phase = np.asarray(phase, dtype=np.complex128)

    def apply(self, psi):
        self._check(psi)
        out = np.empty(self.field.order, dtype=np.complex128)
        out[self.perm] = self.phase * psi.amplitudes
        return StateVector(out, self.field)

    def dense(self):
        if self.field.n > DENSE_MAX_N:
            raise ValueError(f"dense matrices are capped at n <= {DENSE_MAX_N}")
        q = self.field.order
        m = np.zeros((q, q), dtype=np.complex128)
        m[self.perm, np.arange(q)] = self.phase
        return m

    def adjoint(self) -> MonomialOperator:
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(self.field.order)
        phase = np.empty_like(self.phase)
        phase[self.perm] = np.conj(self.phase)
        return MonomialOperator(self.field, inv, phase, f"{self.kind}^dag", self.params)

    def __matmul__(self, other):
        if isinstance(other, MonomialOperator):
            if other.field != self.field:
                raise FieldMismatch("operators live in different fields")
            perm = self.perm[other.perm]
            phase = other.phase * self.phase[other.perm]
            return MonomialOperator(self.field, perm, phase, f"{self.kind}*{other.kind}")
        return super().__matmul__(other)


class FourierOperator(Operator):
    """``F = 2^{-n/2} sum chi(lam lam') |lam><lam'|``; a Hadamard on every qubit."""

    kind = "Fourier"

    def apply(self, psi):
        self._check(psi)
        t = np.ascontiguousarray(psi.tensor()).reshape(1, -1)
        kernels.fwht(t)
        t /= np.sqrt(self.field.order)
        return StateVector.from_tensor(t[0], self.field)

    def adjoint(self):
        return self


class ProductOperator(Operator):
    """Composition; the rightmost factor acts first."""

    kind = "product"

    def __init__(self, factors):
        field = factors[0].field
        if any(f.field != field for f in factors):
            raise FieldMismatch("operators live in different fields")
        super().__init__(field)
        self.factors = list(factors)

    def apply(self, psi):
        for f in reversed(self.factors):
            psi = f.apply(psi)
        return psi

    def adjoint(self):
        return ProductOperator([f.adjoint() for f in reversed(self.factors)])


# -- constructors -------------------------------------------------------------


def Z(field: FieldSpec, alpha: int) -> MonomialOperator:
    q = field.order
    return MonomialOperator(field, np.arange(q), characters(field, alpha), "Z", (alpha,))


def X(field: FieldSpec, beta: int) -> MonomialOperator:
    q = field.order
    return MonomialOperator(field, np.arange(q) ^ beta, np.ones(q), "X", (beta,))


def displacement_phase(field: FieldSpec, alpha: int, beta: int) -> complex:
    """``exp(i Phi) = i ** sum_i a_i b_i`` with self-dual coordinates of alpha, beta."""
    k = _popcount(int(field.sd_index[alpha]) & int(field.sd_index[beta]))
    return 1j**k


def displacement(field: FieldSpec, alpha, beta: int | None = None) -> MonomialOperator:
    """Hermitian displacement ``D(alpha, beta) = e^{i Phi} Z_alpha X_beta``.

    Accepts either a :class:`PhasePoint` or the two field elements.
    """
    if beta is None:
        alpha, beta = alpha
    alpha, beta = int(alpha), int(beta)
    lam = field.elements()
    shifted = lam ^ beta
    phase = displacement_phase(field, alpha, beta) * characters(field, alpha)[shifted]
    return MonomialOperator(field, shifted, phase, "D", (alpha, beta))


def fourier_operator(field: FieldSpec) -> FourierOperator:
    return FourierOperator(field)


def rotation_coefficients(field: FieldSpec, nu: int) -> np.ndarray:
    """Solve ``c[lam + a] = c[a] c[lam] chi(nu a lam)``, ``c[0] = 1``.

    The free values on the self-dual basis are taken as
    ``c[theta_i] = i ** tr(nu theta_i^2)``.
    """
    c = np.zeros(field.order, dtype=np.complex128)
    c[0] = 1.0
    span = np.array([0], dtype=np.int64)
    for th in field.self_dual_basis:
        seed = 1j ** field.trace(field.mul(nu, field.mul(th, th)))
        chi = 1.0 - 2.0 * field.trace_table[field.mul_array(field.mul(nu, th), span)]
        c[span ^ th] = seed * c[span] * chi
        span = np.concatenate([span, span ^ th])
    return c


def rot_Q(field: FieldSpec, nu: int) -> MonomialOperator:
    """x-rotation ``Q_nu``, diagonal in the ``Z`` eigenbasis."""
    q = field.order
    return MonomialOperator(field, np.arange(q), rotation_coefficients(field, nu), "Qrot", (nu,))


def rot_P(field: FieldSpec, mu: int) -> ProductOperator:
    """z-rotation ``P_mu = F Q_mu F``, diagonal in the ``X`` eigenbasis."""
    f = FourierOperator(field)
    op = ProductOperator([f, rot_Q(field, mu), f])
    op.kind, op.params = "Prot", (mu,)
    return op


def squeeze(field: FieldSpec, zeta: int) -> MonomialOperator:
    """``S_zeta = sum_lam |lam><zeta lam|``, i.e. ``S|mu> = |mu / zeta>``."""
    if zeta == 0:
        raise ZeroScaling("squeezing by 0 is not invertible")
    perm = field.mul_array(field.inv(zeta), field.elements())
    return MonomialOperator(field, perm, np.ones(field.order), "Squeeze", (zeta,))


def xor_operator(field: FieldSpec, p: int, q: int) -> MonomialOperator:
    """XOR gate adding the self-dual coordinate of qubit ``p`` to qubit ``q`` (1-based)."""
    n = field.n
    for k in (p, q):
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"qubit index {k} outside 1..{n}")
    if p == q:
        raise EqualIndices("XOR needs two distinct qubits")
    s = field.sd_index
    flipped = s ^ (((s >> (n - p)) & 1) << (n - q))
    return MonomialOperator(
        field, field.sd_element[flipped], np.ones(field.order), "Xor", (p, q)
    )


# -- state-level conveniences ---------------------------------------------------


def apply_Z(alpha: int, psi: StateVector) -> StateVector:
    return Z(psi.field, alpha).apply(psi)


def apply_X(beta: int, psi: StateVector) -> StateVector:
    return X(psi.field, beta).apply(psi)


def fourier(psi: StateVector) -> StateVector:
    return FourierOperator(psi.field).apply(psi)


def xor_gate(p: int, q: int, psi: StateVector) -> StateVector:
    return xor_operator(psi.field, p, q).apply(psi)


def squeeze_matrix(field: FieldSpec, zeta: int) -> np.ndarray:
    """GF(2) matrix ``M[j, i] = tr(zeta theta_i theta_j)``.

    Row ``j`` gives the self-dual coordinate ``j`` of ``zeta * kappa`` as a
    sum of the coordinates of ``kappa``.
    """
    b = field.self_dual_basis
    return np.array(
        [[field.trace(field.mul(zeta, field.mul(ti, tj))) for ti in b] for tj in b],
        dtype=np.int64,
    )


def phase_space_P(field: FieldSpec, mu: int, point: PhasePoint) -> PhasePoint:
    """``(alpha, beta) -> (alpha, beta + mu alpha)``."""
    a, b = point
    return PhasePoint(a, b ^ field.mul(mu, a))


def phase_space_Q(field: FieldSpec, nu: int, point: PhasePoint) -> PhasePoint:
    """``(alpha, beta) -> (alpha + nu beta, beta)``."""
    a, b = point
    return PhasePoint(a ^ field.mul(nu, b), b)
