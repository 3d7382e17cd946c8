"""Pure-Python/numpy implementations of the hot kernels.

Every function here has a twin with the same signature in the compiled
``_kernels`` extension. The two are cross-checked in the test-suite.
"""

import numpy as np


def power_table(poly, n):
    """Return ``exp`` with ``exp[k] = x**k mod poly`` for ``k = 0 .. 2**n - 1``."""
    q = 1 << n
    out = np.empty(q, dtype=np.int64)
    v = 1
    for k in range(q):
        out[k] = v
        v <<= 1
        if v & q:
            v ^= poly
    return out


def linear_table(images, n):
    """Tabulate the GF(2)-linear map sending bit ``j`` to ``images[j]``.

    ``out[x]`` is the XOR of ``images[j]`` over the set bits ``j`` of ``x``.
    """
    out = np.zeros(1 << n, dtype=np.int64)
    for j in range(n):
        w = 1 << j
        out[w:2 * w] = out[:w] ^ int(images[j])
    return out


def fwht(a):
    """In-place unnormalised Walsh-Hadamard transform along the last axis.

    ``a`` must be a C-contiguous 2-D complex128 array with a power-of-two
    number of columns.
    """
    rows, size = a.shape
    h = 1
    while h < size:
        v = a.reshape(rows, size // (2 * h), 2, h)
        x = v[:, :, 0, :].copy()
        y = v[:, :, 1, :]
        v[:, :, 0, :] += y
        y *= -1
        y += x
        h *= 2
    return a


def displacement_amplitudes(bra, ket):
    """Return ``A[g, d] = sum_l (-1)**popcount(g & l) conj(bra[l]) ket[l ^ d]``.

    Both vectors are in tensor (self-dual coordinate) order.
    """
    size = bra.shape[0]
    idx = np.arange(size)
    # row d holds conj(bra[l]) * ket[l ^ d]
    w = np.conj(bra)[None, :] * ket[idx[:, None] ^ idx[None, :]]
    w = np.ascontiguousarray(w, dtype=np.complex128)
    fwht(w)
    return np.ascontiguousarray(w.T)
