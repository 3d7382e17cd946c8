"""Discrete Q- and P-functions over the ``2^n x 2^n`` phase space.

Grids are indexed ``values[alpha, beta]`` by field-element integers.
Both functions reduce to Walsh-Hadamard transforms once states are put in
tensor order, because ``chi(alpha lam) = (-1)^(a . l)`` in self-dual
coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from ._backend import kernels
from .errors import FieldMismatch, NotNormalized, SingularPFunction
from .gf2n import FieldSpec
from .pauli import displacement
from .states import SYMMETRIC_THETA, fiducial, xi_from_theta
from .vector import StateVector

GRID_MAX_N = 10
SINGULAR_TOL = 1e-12
NORM_TOL = 1e-9


@dataclass
class QGrid:
    """Q-function values ``values[alpha, beta]`` in field-integer order."""

    values: np.ndarray
    field: FieldSpec
    state_descr: str = ""
    theta: float = SYMMETRIC_THETA

    def total(self) -> float:
        return float(self.values.sum())

    def sum_squared(self) -> float:
        return sum_q_squared(self)

    def ordered(self, rows, cols=None) -> np.ndarray:
        """Values laid out along the given axis orders (label arrays or AxisOrder)."""
        rows = np.asarray(getattr(rows, "labels", rows))
        cols = rows if cols is None else np.asarray(getattr(cols, "labels", cols))
        return self.values[np.ix_(rows, cols)]


@dataclass
class PGrid:
    """P-function values ``values[alpha, beta]`` in field-integer order."""

    values: np.ndarray
    field: FieldSpec
    theta: float = SYMMETRIC_THETA
    xi: complex = dc_field(default_factory=lambda: xi_from_theta(SYMMETRIC_THETA))

    def reconstruct(self) -> np.ndarray:
        """``sum_p P(p) |p><p|`` as a dense matrix (``n <= 6``)."""
        cs = coherent_state_table(self.field, xi=self.xi)
        w = self.values.reshape(-1)
        return np.einsum("p,pi,pj->ij", w, cs, np.conj(cs))


# -- internals ----------------------------------------------------------------


def _to_field_grid(field: FieldSpec, sd_grid: np.ndarray) -> np.ndarray:
    s = field.sd_index
    return sd_grid[np.ix_(s, s)]


def _fid(field, theta, xi):
    return fiducial(field, theta, xi)


def _mixture(state, field):
    """Return ``(weights, vectors_in_tensor_order, field)`` for a pure or mixed state."""
    if isinstance(state, StateVector):
        if field is not None and field != state.field:
            raise FieldMismatch("state and field disagree")
        if abs(state.norm() - 1.0) > NORM_TOL:
            raise NotNormalized(f"state norm {state.norm()} != 1")
        return np.array([1.0]), [state.tensor()], state.field
    rho = np.asarray(state, dtype=np.complex128)
    if field is None:
        raise ValueError("a density matrix needs an explicit field")
    if rho.shape != (field.order, field.order):
        raise FieldMismatch(f"density matrix shape {rho.shape} does not fit GF(2^{field.n})")
    if abs(np.trace(rho).real - 1.0) > NORM_TOL:
        raise NotNormalized(f"trace {np.trace(rho).real} != 1")
    if not np.allclose(rho, rho.conj().T, atol=1e-12):
        raise ValueError("density matrix is not Hermitian")
    w, v = np.linalg.eigh(rho)
    keep = np.abs(w) > 1e-15
    perm = field.sd_element
    return w[keep], [v[perm, k] for k in np.flatnonzero(keep)], field


def displacement_amplitudes(bra: StateVector, ket: StateVector) -> np.ndarray:
    """``<bra| Z_gamma X_delta |ket>`` for all points, in field-integer order."""
    amps = kernels.displacement_amplitudes(bra.tensor(), ket.tensor())
    return _to_field_grid(bra.field, amps)


# -- Q function ---------------------------------------------------------------


def q_function(
    state,
    theta: float = SYMMETRIC_THETA,
    *,
    field: FieldSpec | None = None,
    xi: complex | None = None,
    descr: str = "",
) -> QGrid:
    """``Q(alpha, beta) = <alpha, beta| rho |alpha, beta>``.

    ``state`` is a normalised :class:`StateVector` or a density matrix (then
    ``field`` is required). Pure states never form ``rho``.
    """
    weights, vecs, fld = _mixture(state, field)
    if fld.n > GRID_MAX_N:
        raise ValueError(f"full grids are capped at n <= {GRID_MAX_N}")
    bra = _fid(fld, theta, xi).tensor()
    acc = np.zeros((fld.order, fld.order))
    for w, v in zip(weights, vecs):
        a = kernels.displacement_amplitudes(bra, v)
        acc += w * (a.real**2 + a.imag**2)
    return QGrid(_to_field_grid(fld, acc), fld, descr, theta)


def _h_grids(field):
    h = field.h_table
    lam = field.elements()
    return h[:, None] + h[None, :], h[lam[:, None] ^ lam[None, :]]


def q_closed_form_fiducial(field: FieldSpec, theta: float = SYMMETRIC_THETA) -> QGrid:
    """Fiducial Q-function from the h-function alone, no states involved.

    At ``theta = pi/4`` this is ``3^{-[h(a) + h(b) + h(a + b)] / 2}``.
    """
    if math.isclose(theta, SYMMETRIC_THETA, rel_tol=0, abs_tol=1e-15):
        hs, hsum = _h_grids(field)
        vals = (1.0 / math.sqrt(3.0)) ** (hs + hsum)
        return QGrid(vals, field, "fiducial (closed form)", theta)
    return q_general_closed_form(field, theta)


def q_general_closed_form(field: FieldSpec, theta: float) -> QGrid:
    """Closed form for any ``theta`` on the symmetric branch (also valid at pi/4)."""
    xi_from_theta(theta)  # range check
    hs, hsum = _h_grids(field)
    c, s = math.cos(theta), math.sin(theta)
    norm = math.sqrt(1.0 + c * c)
    vals = (c / norm) ** (2 * hsum) * (s / norm) ** (hs - hsum)
    return QGrid(vals, field, "fiducial (closed form)", theta)


def overlap_closed_form(
    field: FieldSpec,
    gamma: int,
    delta: int,
    theta: float = SYMMETRIC_THETA,
    xi: complex | None = None,
) -> float:
    """``|<xi| D(gamma, delta) |xi>|`` from the h-values of gamma, delta, gamma+delta."""
    if xi is None:
        xi = xi_from_theta(theta)
    hg, hd, hgd = field.h(gamma), field.h(delta), field.h(gamma ^ delta)
    n_z = (hg - hd + hgd) // 2
    n_x = (hd - hg + hgd) // 2
    n_y = (hg + hd - hgd) // 2
    den = 1.0 + abs(xi) ** 2
    fz = abs((1.0 - abs(xi) ** 2) / den)
    fx = abs(2.0 * xi.real / den)
    fy = abs(2.0 * xi.imag / den)
    return fz**n_z * fx**n_x * fy**n_y


def sum_q_squared(grid: QGrid) -> float:
    return float(np.sum(grid.values**2))


# -- P function ---------------------------------------------------------------


def p_function(
    state,
    theta: float = SYMMETRIC_THETA,
    *,
    field: FieldSpec | None = None,
    xi: complex | None = None,
) -> PGrid:
    """Expansion weights with ``rho = sum_p P(p) |p><p|``.

    ``P(alpha, beta) = Tr[rho Delta(alpha, beta)]`` where the kernel divides
    every displacement by its fiducial expectation; raises
    :class:`SingularPFunction` if any of those vanish.
    """
    weights, vecs, fld = _mixture(state, field)
    if xi is None:
        xi = xi_from_theta(theta)
    bra = _fid(fld, theta, xi).tensor()
    ref = kernels.displacement_amplitudes(bra, bra)
    bad = np.argwhere(np.abs(ref) < SINGULAR_TOL)
    if len(bad):
        el = fld.sd_element
        pts = [(int(el[g]), int(el[d])) for g, d in bad]
        raise SingularPFunction(
            f"P-function singular for theta={theta} (xi={xi}): "
            f"{len(pts)} vanishing overlaps, e.g. (gamma, delta)={pts[0]}",
            pts,
        )
    num = np.zeros_like(ref)
    for w, v in zip(weights, vecs):
        num += w * kernels.displacement_amplitudes(v, v)
    # the Hermitizing phase i^(g.d) is common to numerator and denominator
    r = np.ascontiguousarray(num / ref)
    kernels.fwht(r)
    r = np.ascontiguousarray(r.T)
    kernels.fwht(r)
    # r[a, b] = sum_{g,d} (-1)^(b.g + a.d) num[g, d] / ref[g, d]
    p_sd = r.real / fld.order**2
    return PGrid(_to_field_grid(fld, p_sd), fld, theta, xi)


def coherent_state_table(
    field: FieldSpec, theta: float = SYMMETRIC_THETA, xi: complex | None = None
) -> np.ndarray:
    """Array ``cs[alpha * 2^n + beta]`` of all coherent-state vectors."""
    fid = _fid(field, theta, xi)
    q = field.order
    out = np.empty((q * q, q), dtype=np.complex128)
    for a in range(q):
        for b in range(q):
            out[a * q + b] = displacement(field, a, b).apply(fid).amplitudes
    return out


def smearing_check(state, theta: float = SYMMETRIC_THETA, *, field: FieldSpec | None = None) -> float:
    """Max deviation between Q and the P-function smeared by the fiducial Q.

    The smearing sum is evaluated directly over all shifts.
    """
    q_direct = q_function(state, theta, field=field).values
    fld = state.field if isinstance(state, StateVector) else field
    p = p_function(state, theta, field=fld).values
    q_fid = q_function(fiducial(fld, theta), theta).values
    lam = fld.elements()
    smeared = np.zeros_like(q_direct)
    for g in range(fld.order):
        rows = lam ^ g
        for d in range(fld.order):
            smeared += q_fid[g, d] * p[np.ix_(rows, lam ^ d)]
    return float(np.max(np.abs(smeared - q_direct)))


def profile_f(k: int, n: int) -> float:
    """Step profile of the h-ordered fiducial Q along an axis.

    ``f(k) = delta_{k0} + sum_m 3^{-(m+1)} [H(k - S_m) - H(k - S_{m+1})]`` with
    ``S_m = sum_{r <= m} C(n, r)`` and ``H(0) = 1``.
    """
    if not 0 <= k < 2**n:
        raise ValueError(f"k={k} outside 0..{2**n - 1}")

    def step(x):
        return 1 if x >= 0 else 0

    cum = [sum(math.comb(n, r) for r in range(m + 1)) for m in range(n + 1)]
    val = 1.0 if k == 0 else 0.0
    for m in range(n):
        val += 3.0 ** -(m + 1) * (step(k - cum[m]) - step(k - cum[m + 1]))
    return val
