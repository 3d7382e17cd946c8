import math

import numpy as np
import pytest

from discretecs import StateVector, build_field, pauli
from discretecs.errors import NotSymmetric, ThetaOutOfRange
from discretecs.quasidist import coherent_state_table
from discretecs.states import (
    FiducialParams,
    bloch_vector,
    coherent_state,
    dicke_expansion,
    fiducial,
    fourier_eigen_candidates,
    single_qubit,
    verify_fourier_eigen,
    xi_from_theta,
)

XI_SYM = np.exp(1j * np.pi / 4) * (np.sqrt(3) - 1) / np.sqrt(2)


def test_symmetric_xi():
    assert abs(xi_from_theta() - XI_SYM) < 1e-15
    with pytest.raises(ThetaOutOfRange):
        FiducialParams.from_theta(np.pi / 2)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_fiducial_is_tensor_power(n):
    f = build_field(n)
    one = single_qubit(XI_SYM)
    expected = one
    for _ in range(n - 1):
        expected = np.kron(expected, one)
    assert np.allclose(fiducial(f).tensor(), expected, atol=1e-14)
    assert abs(fiducial(f).norm() - 1) < 1e-14


def test_dicke_n3():
    f = build_field(3)
    c = dicke_expansion(fiducial(f))
    # |xi>^3 = sum_k sqrt(C(3,k)) xi^k |k,3> / (1 + |xi|^2)^{3/2}
    norm = (1 + abs(XI_SYM) ** 2) ** 1.5
    for k in range(4):
        assert abs(c[k] - math.sqrt(math.comb(3, k)) * XI_SYM**k / norm) < 1e-12


def test_dicke_rejects_asymmetric():
    f = build_field(3)
    psi = pauli.X(f, f.self_dual_basis[0]).apply(fiducial(f))
    with pytest.raises(NotSymmetric):
        dicke_expansion(psi)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coherent_resolution_of_identity(n):
    f = build_field(n)
    cs = coherent_state_table(f)
    # sum_p |p><p| = 2^n * 1
    assert np.allclose(cs.T @ cs.conj(), f.order * np.eye(f.order), atol=1e-12)


def test_coherent_state_self_overlap():
    f = build_field(3)
    psi = coherent_state(f, (f.power(2), f.power(5)))
    assert abs(abs(psi.inner(psi)) - 1) < 1e-14


def test_fourier_eigenstates():
    plus, minus = fourier_eigen_candidates()
    assert plus == pytest.approx(np.sqrt(2) - 1) and minus == pytest.approx(-np.sqrt(2) - 1)
    for n in (1, 2, 3):
        f = build_field(n)
        s, r = verify_fourier_eigen(f, plus)
        assert s == 1 and r < 1e-12
        s, r = verify_fourier_eigen(f, minus)
        assert s == (-1) ** n and r < 1e-12
    _, res = verify_fourier_eigen(build_field(1), XI_SYM)
    assert res > 0.1


def test_bloch():
    v = bloch_vector(XI_SYM)
    assert np.allclose(v, np.ones(3) / np.sqrt(3), atol=1e-12)


def test_state_json_round_trip(tmp_path):
    f = build_field(3)
    psi = coherent_state(f, (3, 5))
    back = StateVector.from_json(psi.to_json())
    assert back.field == f
    assert np.array_equal(back.amplitudes, psi.amplitudes)
