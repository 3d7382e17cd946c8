"""Executable checks of the closed-form identities.

Each check takes the largest ``n`` to exercise and a numpy ``Generator``
and returns ``(passed, detail)``. The ranges below are the nominal ones;
they are clipped to the requested ``max_n``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import pauli
from .errors import SingularPFunction
from .gf2n import build_field
from .ordering import center_position, order_axis, recenter, symmetrize
from .pauli import (
    FourierOperator,
    X,
    Z,
    displacement,
    phase_space_P,
    phase_space_Q,
    rot_P,
    rot_Q,
    rotation_coefficients,
    squeeze,
    xor_operator,
)
from .quasidist import (
    overlap_closed_form,
    p_function,
    profile_f,
    q_closed_form_fiducial,
    q_function,
    q_general_closed_form,
    displacement_amplitudes,
)
from .states import (
    bloch_vector,
    coherent_state,
    fiducial,
    fourier_eigen_candidates,
    squeezed_fiducial,
    verify_fourier_eigen,
    xi_from_theta,
)
from .vector import StateVector

MAX_VERIFY_N = 10
THETAS = (math.pi / 6, math.pi / 4, math.pi / 3)


@dataclass(frozen=True)
class Check:
    name: str
    criterion: int
    description: str
    run: Callable[[int, np.random.Generator], tuple[bool, str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    criterion: int
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] #{self.criterion:<2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"


CHECKS: list[Check] = []


def check(name, criterion, description):
    def deco(fn):
        CHECKS.append(Check(name, criterion, description, fn))
        return fn

    return deco


def _ns(lo, hi, max_n):
    return range(lo, min(hi, max_n) + 1)


def _random_state(field, rng):
    v = rng.normal(size=field.order) + 1j * rng.normal(size=field.order)
    return StateVector(v / np.linalg.norm(v), field)


def random_density_matrix(d, rng):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _rel(a, b):
    return abs(a - b) / abs(b)


def _proportional(m, t):
    """Return (max deviation of ``m`` from ``c t``, ``|c| - 1``) for the best ``c``."""
    c = np.vdot(t, m) / np.vdot(t, t)
    return float(np.max(np.abs(m - c * t))), abs(abs(c) - 1.0)


# -- 1 ------------------------------------------------------------------------


@check("q-normalization", 1, "sum Q = 2^n for fiducial, coherent, XOR and squeezed states")
def _q_normalization(max_n, rng):
    worst = 0.0
    in_range = True
    for n in _ns(1, 8, max_n):
        f = build_field(n)
        states = [fiducial(f), coherent_state(f, tuple(rng.integers(0, f.order, 2)))]
        if n >= 2:
            states.append(pauli.xor_gate(1, 2, states[1]))
        states.append(squeezed_fiducial(f, int(rng.integers(1, f.order))))
        for s in states:
            g = q_function(s)
            worst = max(worst, abs(g.total() - f.order))
            in_range &= bool(g.values.min() >= -1e-15 and g.values.max() <= 1 + 1e-12)
    return worst <= 1e-9 and in_range, f"max |sum Q - 2^n| = {worst:.2e}, entries in [0,1]: {in_range}"


# -- 2 ------------------------------------------------------------------------


@check("q-closed-form", 2, "direct fiducial Q equals the h-function closed forms")
def _q_closed_form(max_n, rng):
    worst = 0.0
    for n in _ns(1, 5, max_n):
        f = build_field(n)
        direct = q_function(fiducial(f)).values
        worst = max(worst, np.max(np.abs(direct - q_closed_form_fiducial(f).values)))
        for th in THETAS:
            d = q_function(fiducial(f, th), th).values
            worst = max(worst, np.max(np.abs(d - q_general_closed_form(f, th).values)))
    return worst <= 1e-10, f"max deviation {worst:.2e}"


# -- 3 ------------------------------------------------------------------------


@check("fiducial-q2", 3, "sum Q^2 of the fiducial is (4/3)^n")
def _fiducial_q2(max_n, rng):
    worst = 0.0
    for n in _ns(1, 8, max_n):
        worst = max(worst, _rel(q_function(fiducial(build_field(n))).sum_squared(), (4 / 3) ** n))
    return worst <= 1e-9, f"max relative error {worst:.2e}"


# -- 4, 5 -----------------------------------------------------------------------


def _placements(n):
    return [(p, q) for p in range(1, n + 1) for q in range(1, n + 1) if p != q]


@check("xor-q2", 4, "sum Q^2 after one XOR is 128/81 (4/3)^(n-2) for every displacement")
def _xor_q2(max_n, rng):
    worst, count = 0.0, 0
    for n in _ns(2, 6, max_n):
        f = build_field(n)
        fid = fiducial(f)
        expect = 128 / 81 * (4 / 3) ** (n - 2)
        if n <= 4:
            points = [(a, b) for a in range(f.order) for b in range(f.order)]
        else:
            points = [tuple(int(v) for v in rng.integers(0, f.order, 2)) for _ in range(100)]
        for p, q in _placements(n):
            gate = xor_operator(f, p, q)
            for pt in points:
                s = gate.apply(displacement(f, pt).apply(fid))
                worst = max(worst, _rel(q_function(s).sum_squared(), expect))
                count += 1
    return worst <= 1e-9, f"{count} states, max relative error {worst:.2e}"


@check("multi-xor-q2", 5, "k disjoint XOR gates give (128/81)^k (4/3)^(n-2k)")
def _multi_xor_q2(max_n, rng):
    worst, count = 0.0, 0
    for n in _ns(4, 6, max_n):
        f = build_field(n)
        for k in (1, 2):
            expect = (128 / 81) ** k * (4 / 3) ** (n - 2 * k)
            for _ in range(10):
                qubits = [int(x) + 1 for x in rng.permutation(n)[: 2 * k]]
                pt = tuple(int(v) for v in rng.integers(0, f.order, 2))
                s = coherent_state(f, pt)
                for j in range(k):
                    s = pauli.xor_gate(qubits[2 * j], qubits[2 * j + 1], s)
                worst = max(worst, _rel(q_function(s).sum_squared(), expect))
                count += 1
    return worst <= 1e-9, f"{count} states, max relative error {worst:.2e}"


# -- 6 ------------------------------------------------------------------------


def _all_displacements(f):
    return {(a, b): displacement(f, a, b).dense() for a in range(f.order) for b in range(f.order)}


@check("displacement-unitarity", 6, "D D^dag = 1 (dense, n <= 3)")
def _d_unitary(max_n, rng):
    worst = 0.0
    for n in _ns(1, 3, max_n):
        f = build_field(n)
        eye = np.eye(f.order)
        for d in _all_displacements(f).values():
            worst = max(worst, np.max(np.abs(d @ d.conj().T - eye)))
    return worst <= 1e-12, f"max deviation {worst:.2e}"


@check("displacement-hermiticity", 6, "D = D^dag (dense, n <= 3)")
def _d_hermitian(max_n, rng):
    worst = 0.0
    for n in _ns(1, 3, max_n):
        for d in _all_displacements(build_field(n)).values():
            worst = max(worst, np.max(np.abs(d - d.conj().T)))
    return worst <= 1e-12, f"max deviation {worst:.2e}"


@check("trace-orthonormality", 6, "Tr[D(p) D(p')] = 2^n delta (dense, n <= 3)")
def _trace_orth(max_n, rng):
    worst = 0.0
    for n in _ns(1, 3, max_n):
        f = build_field(n)
        ds = list(_all_displacements(f).values())
        stack = np.array(ds)
        gram = np.einsum("aij,bji->ab", stack, stack)
        worst = max(worst, np.max(np.abs(gram - f.order * np.eye(len(ds)))))
    return worst <= 1e-12, f"max deviation {worst:.2e}"


@check("weyl-commutation", 6, "Z_a X_b = chi(ab) X_b Z_a on random vectors, n <= 8")
def _weyl(max_n, rng):
    worst = 0.0
    for n in _ns(1, 8, max_n):
        f = build_field(n)
        psi = _random_state(f, rng).amplitudes
        lam = f.elements()
        shift = lam[:, None] ^ lam[None, :]  # [beta, lam] -> lam + beta
        chi_ab = 1.0 - 2.0 * f.trace_table[f.mul_array(lam[:, None], lam[None, :])]
        for a in range(f.order):
            za = chi_ab[a]
            # (Z_a X_b psi)[lam] = chi(a lam) psi[lam + b]
            zx = za[None, :] * psi[shift]
            # (X_b Z_a psi)[lam] = chi(a (lam + b)) psi[lam + b]
            xz = (za * psi)[shift]
            worst = max(worst, np.max(np.abs(zx - chi_ab[a][:, None] * xz)))
    return worst <= 1e-12, f"max deviation {worst:.2e}"


# -- 7 ------------------------------------------------------------------------


@check("rotation-covariance", 7, "P Z P^dag ~ Z X and Q X Q^dag ~ Z X with unimodular factors")
def _rotations(max_n, rng):
    worst_dev, worst_mod = 0.0, 0.0
    for n in _ns(1, 3, max_n):
        f = build_field(n)
        for mu in range(f.order):
            p = rot_P(f, mu).dense()
            qr = rot_Q(f, mu).dense()
            for a in range(f.order):
                m = p @ Z(f, a).dense() @ p.conj().T
                t = Z(f, a).dense() @ X(f, f.mul(mu, a)).dense()
                dev, mod = _proportional(m, t)
                m = qr @ X(f, a).dense() @ qr.conj().T
                t = Z(f, f.mul(mu, a)).dense() @ X(f, a).dense()
                dev2, mod2 = _proportional(m, t)
                worst_dev = max(worst_dev, dev, dev2)
                worst_mod = max(worst_mod, mod, mod2)
    ok = worst_dev <= 1e-12 and worst_mod <= 1e-12
    return ok, f"max deviation {worst_dev:.2e}, max ||c|-1| {worst_mod:.2e}"


@check("rotation-recurrence", 7, "c[l+a] = c[a] c[l] chi(nu a l) for all l, a, nu (n <= 5)")
def _recurrence(max_n, rng):
    worst = 0.0
    for n in _ns(1, 5, max_n):
        f = build_field(n)
        lam = f.elements()
        for nu in range(f.order):
            c = rotation_coefficients(f, nu)
            a, l = lam[:, None], lam[None, :]
            chi = 1.0 - 2.0 * f.trace_table[f.mul_array(f.mul_array(nu, a), l)]
            worst = max(worst, np.max(np.abs(c[a ^ l] - c[a] * c[l] * chi)))
    return worst <= 1e-12, f"max deviation {worst:.2e}"


# -- 8 ------------------------------------------------------------------------


@check("rotation-protocol", 8, "(kappa, 0) -> P_mu -> Q_nu lands on (alpha, beta)")
def _protocol(max_n, rng):
    bad, total = 0, 0
    for n in _ns(1, 8, max_n):
        f = build_field(n)
        lam = f.elements()
        alpha = np.repeat(lam, f.order - 1)
        beta = np.tile(lam[1:], f.order)
        kappa = f.sd_element[f.sd_index[alpha] | f.sd_index[beta]]
        inv = lambda x: f.exp_table[(-f.log_table[x]) % (f.order - 1)]  # noqa: E731
        mu = f.mul_array(beta, inv(kappa))
        nu = f.mul_array(alpha ^ kappa, inv(beta))
        # (kappa, 0) -P_mu-> (kappa, mu kappa) -Q_nu-> (kappa + nu mu kappa, mu kappa)
        b1 = f.mul_array(mu, kappa)
        a2 = kappa ^ f.mul_array(nu, b1)
        bad += int(np.count_nonzero((a2 != alpha) | (b1 != beta)))
        # the fiducial Q value is preserved: h(a) + h(b) + h(a + b) = 2 h(kappa)
        h = f.h_table
        bad += int(np.count_nonzero(h[alpha] + h[beta] + h[alpha ^ beta] != 2 * h[kappa]))
        total += len(alpha)
        if n <= 3:
            # spot-check the scalar maps against the vectorised path
            for a, b, m_, n_, k in zip(alpha[:16], beta[:16], mu[:16], nu[:16], kappa[:16]):
                pt = phase_space_Q(f, int(n_), phase_space_P(f, int(m_), (int(k), 0)))
                bad += int(pt != (a, b))
    return bad == 0, f"{total} points, {bad} failures"


# -- 9 ------------------------------------------------------------------------


def _uniform_p_formula(rho):
    sx = np.array([[0, 1], [1, 0]])
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]])
    ex, ey, ez = (float(np.real(np.trace(rho @ m))) for m in (sx, sy, sz))
    out = np.empty((2, 2))
    for a in (0, 1):
        for b in (0, 1):
            out[a, b] = 0.25 + math.sqrt(3) / 4 * ((-1) ** b * ez + (-1) ** a * ex + (-1) ** (a + b) * ey)
    return out


@check("p-function-qubit", 9, "single-qubit P equals 1/4 + sqrt3/4 [...] at theta = pi/4")
def _p_qubit(max_n, rng):
    f = build_field(1)
    rhos = [np.diag([1.0, 0.0]).astype(complex)] + [random_density_matrix(2, rng) for _ in range(10)]
    worst = 0.0
    for rho in rhos:
        p = p_function(rho, field=f).values
        worst = max(worst, np.max(np.abs(p - _uniform_p_formula(rho))))
    zup = p_function(StateVector.basis(f, 0)).values
    pattern = np.array([[0.25 + math.sqrt(3) / 4, 0.25 - math.sqrt(3) / 4]] * 2)
    worst = max(worst, np.max(np.abs(zup - pattern)))
    return worst <= 1e-12, f"max deviation {worst:.2e}"


@check("p-function-singular", 9, "SingularPFunction for theta = 0 and real/imaginary/|xi|=1 fiducials")
def _p_singular(max_n, rng):
    results = {}
    for n in _ns(1, 3, max_n):
        f = build_field(n)
        rho = StateVector.basis(f, 0)
        probes = {"theta=0": dict(theta=0.0), "xi real": dict(xi=0.5 + 0j),
                  "xi imaginary": dict(xi=0.5j), "|xi|=1": dict(xi=complex(math.cos(1.0), math.sin(1.0)))}
        for name, kw in probes.items():
            try:
                p_function(rho, **kw)
            except SingularPFunction:
                results.setdefault(name, True)
            else:
                results[name] = False
        try:
            p_function(rho)
        except SingularPFunction:
            results["pi/4 regular"] = False
        else:
            results.setdefault("pi/4 regular", True)
    ok = all(results.values())
    return ok, ", ".join(f"{k}: {'ok' if v else 'MISSING'}" for k, v in results.items())


@check("p-reconstruction", 9, "rho = sum P |p><p| on 20 random density matrices, n <= 3")
def _p_reconstruction(max_n, rng):
    worst = 0.0
    for n in _ns(1, 3, max_n):
        f = build_field(n)
        for _ in range(20):
            rho = random_density_matrix(f.order, rng)
            worst = max(worst, np.max(np.abs(p_function(rho, field=f).reconstruct() - rho)))
    return worst < 1e-8, f"max residual {worst:.2e}"


# -- 10 -----------------------------------------------------------------------


@check("fourier", 10, "F^2 = 1, F Z F = X, Fourier eigenstates xi = +-sqrt2 - 1")
def _fourier(max_n, rng):
    worst = 0.0
    for n in _ns(1, 3, max_n):
        f = build_field(n)
        F = FourierOperator(f).dense()
        worst = max(worst, np.max(np.abs(F @ F - np.eye(f.order))))
        for mu in range(f.order):
            worst = max(worst, np.max(np.abs(F @ Z(f, mu).dense() @ F - X(f, mu).dense())))
    f1 = build_field(1)
    xp, xm = fourier_eigen_candidates()
    sp, rp = verify_fourier_eigen(f1, xp)
    sm, rm = verify_fourier_eigen(f1, xm)
    _, r_fid = verify_fourier_eigen(f1, xi_from_theta())
    ok = worst <= 1e-12 and sp == 1 and sm == -1 and max(rp, rm) <= 1e-12 and r_fid > 0.1
    return ok, (
        f"operator dev {worst:.2e}; xi+ sign {sp:+d} res {rp:.1e}; "
        f"xi- sign {sm:+d} res {rm:.1e}; fiducial residual {r_fid:.3f}"
    )


# -- 11 -----------------------------------------------------------------------


@check("bloch-vector", 11, "single-qubit fiducial Bloch vector is (1,1,1)/sqrt3")
def _bloch(max_n, rng):
    v = np.array(bloch_vector(xi_from_theta()))
    dev = float(np.max(np.abs(v - 1 / math.sqrt(3))))
    return dev <= 1e-12, f"n = ({v[0]:.15f}, {v[1]:.15f}, {v[2]:.15f}), dev {dev:.1e}"


# -- 12 -----------------------------------------------------------------------


@check("ordering-profile", 12, "ordered fiducial axis profiles equal f(k); strip prefixes are cumulative binomials")
def _ordering_profile(max_n, rng):
    bad = 0
    for n in (5, 8):
        if n > max_n:
            continue
        f = build_field(n)
        order = order_axis(f)
        lab = order.array()
        q = q_closed_form_fiducial(f).values if n > 6 else q_function(fiducial(f)).values
        prof = np.array([profile_f(k, n) for k in range(f.order)])
        for axis in (q[lab, 0], q[0, lab], q[lab, lab]):
            bad += int(np.count_nonzero(np.abs(axis - prof) > 1e-12))
        h = order.h_profile()
        for m in range(n + 1):
            cum = sum(math.comb(n, r) for r in range(m + 1))
            bad += int(not (np.all(h[:cum] <= m) and np.all(h[cum:] > m)))
    return bad == 0, f"{bad} mismatches"


@check("recentered-peak", 12, "recentered coherent-state grid peaks (=1) at the centre cell")
def _recentered(max_n, rng):
    bad = 0
    cases = []
    if max_n >= 5:
        f5 = build_field(5)
        cases.append((f5, (f5.power(10), f5.power(10))))
    for n in _ns(1, 8, max_n):
        f = build_field(n)
        cases.append((f, tuple(int(v) for v in rng.integers(0, f.order, 2))))
    for f, (g, d) in cases:
        grid = q_function(coherent_state(f, (g, d)))
        for base in (order_axis(f), symmetrize(order_axis(f))):
            rows, cols = recenter(base, g), recenter(base, d)
            og = grid.ordered(rows, cols)
            c = center_position(base)
            peak = np.unravel_index(np.argmax(og), og.shape)
            bad += int(peak != (c, c) or abs(og[c, c] - 1.0) > 1e-12)
    return bad == 0, f"{len(cases)} states, {bad} misplaced peaks"


# -- 13 -----------------------------------------------------------------------


@check("squeezing", 13, "squeezing scales Z, X; S_{s7} lowers sum Q^2 at n = 5")
def _squeezing(max_n, rng):
    worst = 0.0
    for n in _ns(1, 3, max_n):
        f = build_field(n)
        for e in range(1, f.order):
            zeta = f.power(e)
            s = squeeze(f, zeta).dense()
            for b in range(f.order):
                # S^dag X_b S = X_{b zeta};  S^dag Z_b S = Z_{b / zeta}
                worst = max(worst, np.max(np.abs(s.conj().T @ X(f, b).dense() @ s - X(f, f.mul(b, zeta)).dense())))
                worst = max(worst, np.max(np.abs(s.conj().T @ Z(f, b).dense() @ s - Z(f, f.div(b, zeta)).dense())))
    detail = f"scaling dev {worst:.2e}"
    ok = worst <= 1e-12
    if max_n >= 5:
        sweep = squeeze_sweep(5)
        s7 = sweep[7]
        best = min(sweep.values())
        ok &= s7 < (4 / 3) ** 5
        winners = [e for e, v in sweep.items() if abs(v - best) < 1e-12]
        detail += f"; sum Q^2(S_s7) = {s7:.6f} < {(4 / 3) ** 5:.6f}; sweep minimum {best:.6f} at s^{winners}"
    return ok, detail


def squeeze_sweep(n: int = 5) -> dict[int, float]:
    """``sum Q^2`` of ``S_{sigma^e}|xi>`` for every exponent ``e``."""
    f = build_field(n)
    return {e: q_function(squeezed_fiducial(f, f.power(e))).sum_squared() for e in range(1, f.order)}


# -- 14 -----------------------------------------------------------------------


@check("overlap-closed-form", 14, "|<xi|D|xi>| matches the closed-form product, n <= 4")
def _overlap(max_n, rng):
    worst = 0.0
    for n in _ns(1, 4, max_n):
        f = build_field(n)
        for th in THETAS:
            fid = fiducial(f, th)
            direct = np.abs(displacement_amplitudes(fid, fid))
            closed = np.array([[overlap_closed_form(f, g, d, th) for d in range(f.order)] for g in range(f.order)])
            worst = max(worst, np.max(np.abs(direct - closed)))
    return worst <= 1e-10, f"max deviation {worst:.2e}"


# -- runner -----------------------------------------------------------------------


def check_names() -> list[str]:
    return [c.name for c in CHECKS]


def run_checks(max_n: int = 8, only=None, seed: int = 0, criteria=None) -> list[CheckResult]:
    if not 1 <= max_n <= MAX_VERIFY_N:
        raise ValueError(f"max_n must be in [1, {MAX_VERIFY_N}]")
    selected = [
        c for c in CHECKS
        if (not only or c.name in only) and (criteria is None or c.criterion in criteria)
    ]
    if only:
        unknown = set(only) - {c.name for c in CHECKS}
        if unknown:
            raise KeyError(f"unknown checks: {sorted(unknown)}")
    out = []
    for c in selected:
        rng = np.random.default_rng(seed)
        t0 = time.perf_counter()
        passed, detail = c.run(max_n, rng)
        out.append(CheckResult(c.name, c.criterion, bool(passed), detail, time.perf_counter() - t0))
    return out
