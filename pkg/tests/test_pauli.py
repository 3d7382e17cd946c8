import itertools
from functools import reduce

import numpy as np
import pytest

from discretecs import StateVector, build_field
from discretecs import pauli
from discretecs.errors import EqualIndices, IndexOutOfRange, ZeroScaling

SZ = np.diag([1.0, -1.0])
SX = np.array([[0.0, 1.0], [1.0, 0.0]])
I2 = np.eye(2)


def kron_all(ms):
    return reduce(np.kron, ms)


def to_tensor(f, m):
    """Permute a field-indexed dense operator into qubit tensor order."""
    idx = f.sd_element
    return m[np.ix_(idx, idx)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_Z_X_factorize(n):
    f = build_field(n)
    for a in range(f.order):
        bits = f.sd_coords(a)
        zt = kron_all([np.linalg.matrix_power(SZ, b) for b in bits])
        xt = kron_all([np.linalg.matrix_power(SX, b) for b in bits])
        assert np.allclose(to_tensor(f, pauli.Z(f, a).dense()), zt)
        assert np.allclose(to_tensor(f, pauli.X(f, a).dense()), xt)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_displacement_dense(n):
    f = build_field(n)
    q = f.order
    ds = {(a, b): pauli.displacement(f, a, b).dense() for a in range(q) for b in range(q)}
    for (a, b), d in ds.items():
        assert np.allclose(d, d.conj().T)
        assert np.allclose(d @ d.conj().T, np.eye(q))
        z, x = pauli.Z(f, a).dense(), pauli.X(f, b).dense()
        assert np.allclose(z @ x, f.character(f.mul(a, b)) * x @ z)
    for (p, d1), (p2, d2) in itertools.combinations_with_replacement(ds.items(), 2):
        tr = np.trace(d1 @ d2)
        assert abs(tr - (q if p == p2 else 0)) < 1e-12


def test_displacement_n1_is_pauli():
    f = build_field(1)
    d = pauli.displacement(f, 1, 1).dense()
    sy = np.array([[0, -1j], [1j, 0]])
    assert np.allclose(d, -sy)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fourier_dense(n):
    f = build_field(n)
    F = pauli.fourier_operator(f).dense()
    assert np.allclose(F @ F, np.eye(f.order))
    for mu in range(f.order):
        assert np.allclose(F @ pauli.Z(f, mu).dense() @ F, pauli.X(f, mu).dense())


@pytest.mark.parametrize("n", [2, 3])
def test_rotations_map_monomials(n):
    f = build_field(n)
    for mu, a in itertools.product(range(1, f.order), range(f.order)):
        P = pauli.rot_P(f, mu).dense()
        lhs = P @ pauli.Z(f, a).dense() @ P.conj().T
        tgt = pauli.Z(f, a).dense() @ pauli.X(f, f.mul(mu, a)).dense()
        c = np.vdot(tgt, lhs) / f.order
        assert abs(abs(c) - 1) < 1e-12 and np.allclose(lhs, c * tgt)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_squeeze(n):
    f = build_field(n)
    with pytest.raises(ZeroScaling):
        pauli.squeeze(f, 0)
    for z in range(1, f.order):
        S = pauli.squeeze(f, z).dense()
        assert np.allclose(S @ S.conj().T, np.eye(f.order))
        for b in range(f.order):
            X = pauli.X(f, b).dense()
            Z = pauli.Z(f, b).dense()
            assert np.allclose(S.conj().T @ X @ S, pauli.X(f, f.mul(b, z)).dense())
            assert np.allclose(S.conj().T @ Z @ S, pauli.Z(f, f.div(b, z)).dense())
    # composition S_a S_b = S_{ab}
    a, b = f.power(1), f.power(2)
    lhs = pauli.squeeze(f, a).dense() @ pauli.squeeze(f, b).dense()
    assert np.allclose(lhs, pauli.squeeze(f, f.mul(a, b)).dense())


def test_squeeze_matrix_n5():
    f = build_field(5)
    # M[j, i] = tr(zeta theta_i theta_j); S permutes self-dual coordinates by M^{-1}
    z = f.power(-7 % 31)
    M = pauli.squeeze_matrix(f, z)
    assert M.shape == (5, 5)
    perm = pauli.squeeze(f, z).perm
    for lam in range(f.order):
        bits = np.array(f.sd_coords(lam))
        assert tuple((M @ np.array(f.sd_coords(perm[lam]))) % 2) == tuple(bits)


def test_xor_gate():
    f = build_field(2)
    th = f.self_dual_basis
    ket = StateVector.basis(f, th[0])  # |10>
    out = pauli.xor_gate(1, 2, ket)
    assert out.allclose(StateVector.basis(f, th[0] ^ th[1]))  # |11>
    rng = np.random.default_rng(0)
    f3 = build_field(3)
    psi = StateVector(rng.normal(size=8) + 0j, f3).normalized()
    assert pauli.xor_gate(1, 3, pauli.xor_gate(1, 3, psi)).allclose(psi)
    with pytest.raises(EqualIndices):
        pauli.xor_operator(f3, 2, 2)
    with pytest.raises(IndexOutOfRange):
        pauli.xor_operator(f3, 0, 4)


def test_xor_matches_cnot_tensor():
    f = build_field(2)
    cnot = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert np.allclose(to_tensor(f, pauli.xor_operator(f, 1, 2).dense()), cnot)


def test_phase_space_maps():
    f = build_field(4)
    for mu in range(1, f.order):
        for a in range(f.order):
            pt = pauli.phase_space_P(f, mu, pauli.PhasePoint(a, 0))
            assert pt == (a, f.mul(mu, a))
