"""Arithmetic in GF(2^n) with a self-dual basis.

Field elements are plain integers: bit ``i`` is the coefficient of ``x**i``
in the polynomial basis, so addition is XOR. The powers of the primitive
element are labelled ``s1 .. s(2^n - 1)``, with ``s(2^n - 1) == 1``.

The self-dual coordinates of an element are packed into a *tensor index*
whose most significant bit belongs to qubit 1, i.e. the ordering used by
``numpy.kron`` with qubit 1 as the leftmost factor.
"""

from __future__ import annotations

import json
from typing import Iterator, Sequence

import numpy as np

from ._backend import kernels
from .errors import DivisionByZero, InvalidBasis, NoSelfDualBasis, PolynomialNotPrimitive

MAX_N = 20

# One primitive polynomial per degree, as bitmasks (bit i <-> x**i).
PRIMITIVE_POLYS = {
    1: 0x3,  # x + 1
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x83,  # x^7 + x + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
    17: 0x20009,  # x^17 + x^3 + 1
    18: 0x40081,  # x^18 + x^7 + 1
    19: 0x80027,  # x^19 + x^5 + x^2 + x + 1
    20: 0x100009,  # x^20 + x^3 + 1
}


def clmul_mod(a: int, b: int, poly: int, n: int) -> int:
    """Carry-less product of ``a`` and ``b`` reduced modulo ``poly``."""
    top = 1 << n
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


def _parity(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64)
    for s in (32, 16, 8, 4, 2, 1):
        x ^= x >> np.uint64(s)
    return (x & np.uint64(1)).astype(np.uint8)


def _popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64)
    out = np.zeros(x.shape, dtype=np.int64)
    while np.any(x):
        out += (x & np.uint64(1)).astype(np.int64)
        x >>= np.uint64(1)
    return out


class FieldSpec:
    """A constructed GF(2^n): tables, trace and a self-dual basis.

    Instances are immutable after construction and safe to share. Use
    :func:`build_field` rather than calling the constructor directly.
    """

    def __init__(self, n: int, poly: int, basis: Sequence[int] | None = None):
        self.n = n
        self.poly = poly
        self.order = 1 << n
        q = self.order

        exp = kernels.power_table(poly, n)
        if exp[q - 1] != 1 or (q > 2 and np.any(exp[1 : q - 1] == 1)):
            raise PolynomialNotPrimitive(f"0x{poly:x} does not generate GF(2^{n})*")
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        if np.any(log[1:] < 0):
            raise PolynomialNotPrimitive(f"0x{poly:x} does not generate GF(2^{n})*")
        self.exp_table = exp
        self.log_table = log
        self.exp_table.flags.writeable = False
        self.log_table.flags.writeable = False

        # trace is GF(2)-linear: tabulate from the Frobenius traces of x^j
        self._trace_mask = sum(self.frobenius_trace(1 << j) << j for j in range(n))
        self.trace_table = _parity(np.arange(q) & self._trace_mask)
        self.trace_table.flags.writeable = False

        if basis is None:
            basis = next(iter_self_dual_bases(self), None)
            if basis is None:
                raise NoSelfDualBasis(f"no self-dual basis found for GF(2^{n})")
        basis = tuple(int(b) for b in basis)
        self._check_basis(basis)
        self.self_dual_basis = basis

        # bit j of x contributes tr(x^j theta_i) to coordinate i
        images = []
        for j in range(n):
            img = 0
            for i, th in enumerate(basis):
                if self.trace(self.mul(1 << j, th)):
                    img |= 1 << (n - 1 - i)
            images.append(img)
        self.sd_index = kernels.linear_table(np.array(images, dtype=np.int64), n)
        self.sd_element = np.empty(q, dtype=np.int64)
        self.sd_element[self.sd_index] = np.arange(q)
        self.h_table = _popcount(self.sd_index)
        for arr in (self.sd_index, self.sd_element, self.h_table):
            arr.flags.writeable = False

    # -- construction helpers -------------------------------------------------

    def _check_basis(self, basis):
        if len(basis) != self.n or any(not 0 < b < self.order for b in basis):
            raise InvalidBasis(f"expected {self.n} nonzero field elements, got {basis}")
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                if self.trace(self.mul(a, b)) != (i == j):
                    raise InvalidBasis(f"tr(theta_{i + 1} theta_{j + 1}) != delta")

    # -- scalar arithmetic -----------------------------------------------------

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF(2^{self.n})")
        return a

    def add(self, a: int, b: int) -> int:
        return self._check(a) ^ self._check(b)

    def mul(self, a: int, b: int) -> int:
        a, b = self._check(a), self._check(b)
        if a == 0 or b == 0:
            return 0
        e = (self.log_table[a] + self.log_table[b]) % (self.order - 1)
        return int(self.exp_table[e])

    def inv(self, a: int) -> int:
        a = self._check(a)
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return int(self.exp_table[(-self.log_table[a]) % (self.order - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, k: int) -> int:
        """Return ``sigma**k``."""
        return int(self.exp_table[k % (self.order - 1)])

    def exponent(self, a: int) -> int:
        """Discrete log of ``a`` in ``1 .. 2^n - 1`` (so ``exponent(1) == 2^n - 1``)."""
        a = self._check(a)
        if a == 0:
            raise DivisionByZero("0 is not a power of the primitive element")
        return int(self.log_table[a]) or self.order - 1

    def frobenius_trace(self, a: int) -> int:
        """Trace by summing the ``n`` Frobenius conjugates ``a, a^2, a^4, ...``."""
        acc = t = a
        for _ in range(self.n - 1):
            t = clmul_mod(t, t, self.poly, self.n)
            acc ^= t
        if acc not in (0, 1):
            raise AssertionError(f"trace of {a} left GF(2): {acc}")
        return acc

    def trace(self, a: int) -> int:
        return int(self.trace_table[self._check(a)])

    def character(self, a: int) -> int:
        return 1 - 2 * self.trace(a)

    def sd_coords(self, a: int) -> tuple[int, ...]:
        """Self-dual coordinates ``(a_1, ..., a_n)`` with ``a_i = tr(a theta_i)``."""
        idx = int(self.sd_index[self._check(a)])
        return tuple((idx >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def from_sd_coords(self, coords: Sequence[int]) -> int:
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        acc = 0
        for c, th in zip(coords, self.self_dual_basis):
            if c % 2:
                acc ^= th
        return acc

    def h(self, a: int) -> int:
        return int(self.h_table[self._check(a)])

    def kappa_of(self, a: int, b: int) -> int:
        """Element whose self-dual coordinates are the OR of those of ``a`` and ``b``."""
        s = int(self.sd_index[self._check(a)]) | int(self.sd_index[self._check(b)])
        return int(self.sd_element[s])

    # -- vectorised helpers ---------------------------------------------------

    def mul_array(self, a, b) -> np.ndarray:
        """Elementwise product of integer arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        e = (self.log_table[a] + self.log_table[b]) % (self.order - 1)
        return np.where((a == 0) | (b == 0), 0, self.exp_table[e])

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    # -- labels ---------------------------------------------------------------

    def label(self, a: int) -> str:
        a = self._check(a)
        return "0" if a == 0 else f"s{self.exponent(a)}"

    def parse(self, text: str) -> int:
        """Parse ``"0"``, ``"1"``, ``"s<k>"`` (or ``"σ^k"``) into a field element."""
        t = text.strip().replace("σ", "s").replace("^", "")
        if t == "0":
            return 0
        if t == "1":
            return 1
        if t.startswith("s") and t[1:].isdigit():
            return self.power(int(t[1:]))
        if t.startswith("0x"):
            return self._check(int(t, 16))
        raise ValueError(f"cannot parse field element {text!r}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "poly": f"0x{self.poly:x}",
            "self_dual_basis": [self.exponent(b) for b in self.self_dual_basis],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __repr__(self):
        basis = ", ".join(self.label(b) for b in self.self_dual_basis)
        return f"FieldSpec(n={self.n}, poly=0x{self.poly:x}, basis=[{basis}])"

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.n, self.poly, self.self_dual_basis) == (
            other.n,
            other.poly,
            other.self_dual_basis,
        )

    def __hash__(self):
        return hash((self.n, self.poly, self.self_dual_basis))


def iter_self_dual_bases(field: FieldSpec) -> Iterator[tuple[int, ...]]:
    """Yield self-dual bases as sets, in lexicographic order of sorted exponents.

    Depth-first search over elements of trace one, ordered by exponent.
    A partial orthonormal set whose sum is 1 cannot be completed (its
    orthogonal complement lies in the trace-zero hyperplane, where the
    form is alternating), so such branches are pruned.
    """
    n, q = field.n, field.order
    m = q - 1
    # tr(sigma^k) for k = 1 .. q - 1, position k - 1
    exps = np.arange(1, q)
    tr_exp = field.trace_table[field.exp_table[exps % m]].astype(bool)

    def orth_mask(e):
        # tr(sigma^k sigma^e) == 0
        return ~tr_exp[(exps + e - 1) % m]

    def dfs(chosen, total, allowed, start):
        if len(chosen) == n:
            yield tuple(field.power(e) for e in chosen)
            return
        need = n - len(chosen)
        cand = np.flatnonzero(allowed[start:]) + start
        for pos in cand:
            if len(cand) - np.searchsorted(cand, pos) < need:
                return
            e = int(exps[pos])
            el = field.power(e)
            new_total = total ^ el
            if need > 1 and new_total == 1:
                continue
            yield from dfs(chosen + [e], new_total, allowed & orth_mask(e), pos + 1)

    yield from dfs([], 0, tr_exp.copy(), 0)


def build_field(n: int, poly: int | None = None, basis: Sequence[int] | None = None) -> FieldSpec:
    """Construct GF(2^n).

    Parameters
    ----------
    n : int
        Extension degree, ``1 <= n <= 20``.
    poly : int, optional
        Primitive polynomial as a bitmask of degree ``n``. Defaults to the
        built-in table (``x^5 + x^2 + 1`` for ``n = 5``).
    basis : sequence of int, optional
        Explicit self-dual basis ``theta_1 .. theta_n`` as field integers.
        By default the basis with the lexicographically smallest sorted
        exponent tuple is used.
    """
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_N:
        raise ValueError(f"n must be an integer in [1, {MAX_N}], got {n!r}")
    n = int(n)
    if poly is None:
        poly = PRIMITIVE_POLYS[n]
    poly = int(poly)
    if poly.bit_length() != n + 1:
        raise PolynomialNotPrimitive(f"0x{poly:x} does not have degree {n}")
    if not poly & 1:
        raise PolynomialNotPrimitive(f"0x{poly:x} is divisible by x")
    return FieldSpec(n, poly, basis)


def field_with_basis_exponents(n: int, exponents: Sequence[int], poly: int | None = None) -> FieldSpec:
    """Build a field whose self-dual basis is ``sigma**e`` for the given exponents."""
    poly = PRIMITIVE_POLYS[n] if poly is None else poly
    q = 1 << n
    exp = kernels.power_table(poly, n)
    return build_field(n, poly, [int(exp[e % (q - 1)]) for e in exponents])
