import importlib
import os
import subprocess
import sys

import numpy as np
import pytest

from discretecs import _kernels_py as py

try:
    from discretecs import _kernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled extension not built")
POLYS = {1: 0x3, 2: 0x7, 3: 0xB, 5: 0x25, 8: 0x11D, 10: 0x409}


def naive_fwht(a):
    q = a.shape[-1]
    idx = np.arange(q)
    pc = np.array([[bin(i & j).count("1") & 1 for j in idx] for i in idx])
    return a @ (1 - 2 * pc).T


@pytest.mark.parametrize("n", [1, 2, 5])
def test_python_fwht_matches_naive(n):
    rng = np.random.default_rng(n)
    a = rng.normal(size=(4, 1 << n)) + 1j * rng.normal(size=(4, 1 << n))
    b = a.copy()
    py.fwht(b)
    assert np.allclose(b, naive_fwht(a), atol=1e-12)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_python_displacement_amplitudes_direct(n):
    rng = np.random.default_rng(n)
    q = 1 << n
    bra = rng.normal(size=q) + 1j * rng.normal(size=q)
    ket = rng.normal(size=q) + 1j * rng.normal(size=q)
    out = py.displacement_amplitudes(bra, ket)
    pc = lambda x: bin(x).count("1") & 1
    for g in range(q):
        for d in range(q):
            ref = sum((-1) ** pc(g & l) * np.conj(bra[l]) * ket[l ^ d] for l in range(q))
            assert abs(out[g, d] - ref) < 1e-10


@needs_ext
@pytest.mark.parametrize("n", sorted(POLYS))
def test_backends_agree(n):
    rng = np.random.default_rng(n)
    q = 1 << n
    assert np.array_equal(cy.power_table(POLYS[n], n), py.power_table(POLYS[n], n))
    images = rng.integers(0, q, size=n)
    assert np.array_equal(cy.linear_table(images, n), py.linear_table(images, n))
    a = rng.normal(size=(3, q)) + 1j * rng.normal(size=(3, q))
    x, y = a.copy(), a.copy()
    cy.fwht(x)
    py.fwht(y)
    assert np.allclose(x, y, rtol=0, atol=1e-12)
    bra = rng.normal(size=q) + 1j * rng.normal(size=q)
    ket = rng.normal(size=q) + 1j * rng.normal(size=q)
    assert np.allclose(cy.displacement_amplitudes(bra, ket), py.displacement_amplitudes(bra, ket),
                       rtol=0, atol=1e-12)


def test_env_var_forces_fallback():
    code = "import discretecs; print(discretecs.BACKEND)"
    env = dict(os.environ, DISCRETECS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


@needs_ext
def test_default_backend_is_compiled():
    backend = importlib.import_module("discretecs._backend")
    if os.environ.get("DISCRETECS_PURE_PYTHON", "") in ("", "0"):
        assert backend.BACKEND == "cython"
