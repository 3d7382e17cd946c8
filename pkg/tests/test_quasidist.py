import math

import numpy as np
import pytest

from discretecs import build_field, pauli
from discretecs.errors import NotNormalized, SingularPFunction
from discretecs.quasidist import (
    overlap_closed_form,
    p_function,
    profile_f,
    q_closed_form_fiducial,
    q_function,
    q_general_closed_form,
    smearing_check,
    sum_q_squared,
)
from discretecs.states import coherent_state, fiducial
from discretecs.vector import StateVector
from discretecs.verify import random_density_matrix


def direct_q(psi, theta=np.pi / 4):
    f = psi.field
    fid = fiducial(f, theta)
    out = np.empty((f.order, f.order))
    for a in range(f.order):
        for b in range(f.order):
            cs = pauli.displacement(f, a, b).apply(fid)
            out[a, b] = abs(cs.inner(psi)) ** 2
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_q_matches_direct(n):
    f = build_field(n)
    rng = np.random.default_rng(n)
    psi = StateVector(rng.normal(size=f.order) + 1j * rng.normal(size=f.order), f).normalized()
    assert np.allclose(q_function(psi).values, direct_q(psi), atol=1e-12)


def test_q_n1_values():
    f = build_field(1)
    q = q_function(fiducial(f)).values
    assert np.allclose(q, [[1, 1 / 3], [1 / 3, 1 / 3]], atol=1e-14)


@pytest.mark.parametrize("theta", [np.pi / 6, np.pi / 4, np.pi / 3])
def test_closed_forms(theta):
    f = build_field(4)
    direct = q_function(fiducial(f, theta), theta).values
    assert np.allclose(direct, q_general_closed_form(f, theta).values, atol=1e-12)
    if theta == np.pi / 4:
        assert np.allclose(direct, q_closed_form_fiducial(f).values, atol=1e-12)


@pytest.mark.parametrize("n", [2, 3])
def test_covariance(n):
    f = build_field(n)
    psi = coherent_state(f, (f.power(1), 0))
    base = q_function(psi).values
    g, d = f.power(2), f.power(1)
    shifted = q_function(pauli.displacement(f, g, d).apply(psi)).values
    lam = f.elements()
    assert np.allclose(shifted, base[np.ix_(lam ^ g, lam ^ d)], atol=1e-12)


def test_mixed_state_q():
    f = build_field(2)
    rho = np.eye(4) / 4
    assert np.allclose(q_function(rho, field=f).values, 0.25)
    with pytest.raises(NotNormalized):
        q_function(2 * rho, field=f)


def test_sum_q2():
    for n in (1, 3, 6):
        g = q_function(fiducial(build_field(n)))
        assert sum_q_squared(g) == pytest.approx((4 / 3) ** n, rel=1e-12)


def test_overlap_closed_form_modulus():
    f = build_field(3)
    fid = fiducial(f)
    for a in range(f.order):
        for b in range(f.order):
            direct = fid.inner(pauli.displacement(f, a, b).apply(fid))
            assert abs(abs(direct) - abs(overlap_closed_form(f, a, b, np.pi / 4))) < 1e-12


def test_p_single_qubit_zup():
    f = build_field(1)
    p = p_function(StateVector.basis(f, 0), np.pi / 4).values
    hi, lo = 0.25 + math.sqrt(3) / 4, 0.25 - math.sqrt(3) / 4
    assert np.allclose(np.sort(p.ravel()), [lo, lo, hi, hi], atol=1e-12)


def test_p_mixed_is_uniform():
    f = build_field(2)
    p = p_function(np.eye(4) / 4, field=f)
    # trace normalization forces 4^-n, not 2^-n
    assert np.allclose(p.values, 4.0**-f.n)


def test_p_singular():
    f = build_field(1)
    with pytest.raises(SingularPFunction) as exc:
        p_function(fiducial(f, 0.0), 0.0)
    assert exc.value.points


@pytest.mark.parametrize("n", [1, 2, 3])
def test_p_reconstruction(n):
    f = build_field(n)
    rng = np.random.default_rng(7)
    rho = random_density_matrix(f.order, rng)
    assert np.max(np.abs(p_function(rho, field=f).reconstruct() - rho)) < 1e-10


@pytest.mark.parametrize("n", [1, 2])
def test_smearing(n):
    f = build_field(n)
    rng = np.random.default_rng(3)
    psi = StateVector(rng.normal(size=f.order) + 1j * rng.normal(size=f.order), f).normalized()
    assert smearing_check(psi) < 1e-8


def test_profile_f():
    n = 3
    # strips: h=0 (1), h=1 (3), h=2 (3), h=3 (1)
    assert [profile_f(k, n) for k in range(8)] == pytest.approx(
        [1, 1 / 3, 1 / 3, 1 / 3, 1 / 9, 1 / 9, 1 / 9, 1 / 27]
    )
    with pytest.raises(ValueError):
        profile_f(8, 3)
