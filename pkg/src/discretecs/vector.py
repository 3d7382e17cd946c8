"""StateVector: amplitudes indexed by field-element integers."""

from __future__ import annotations

import json

import numpy as np

from .errors import FieldMismatch
from .gf2n import FieldSpec, field_with_basis_exponents


class StateVector:
    """A vector of ``2**n`` complex amplitudes, ``amplitudes[x] = <x|psi>``.

    The index ``x`` is the polynomial-basis integer of the field element.
    Use :meth:`tensor` / :meth:`from_tensor` to convert to the qubit
    ordering given by the self-dual coordinates.
    """

    __slots__ = ("amplitudes", "field")

    def __init__(self, amplitudes, field: FieldSpec):
        amps = np.array(amplitudes, dtype=np.complex128)
        if amps.shape != (field.order,):
            raise FieldMismatch(f"expected {field.order} amplitudes, got shape {amps.shape}")
        amps.flags.writeable = False
        self.amplitudes = amps
        self.field = field

    @classmethod
    def basis(cls, field: FieldSpec, label: int) -> StateVector:
        amps = np.zeros(field.order, dtype=np.complex128)
        amps[label] = 1.0
        return cls(amps, field)

    @classmethod
    def from_tensor(cls, tensor_amps, field: FieldSpec) -> StateVector:
        tensor_amps = np.asarray(tensor_amps, dtype=np.complex128)
        return cls(tensor_amps[field.sd_index], field)

    def tensor(self) -> np.ndarray:
        """Amplitudes in qubit tensor order (qubit 1 is the leftmost factor)."""
        return self.amplitudes[self.field.sd_element]

    @property
    def n(self) -> int:
        return self.field.n

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> StateVector:
        return StateVector(self.amplitudes / self.norm(), self.field)

    def inner(self, other: StateVector) -> complex:
        """``<self|other>``."""
        self._same_field(other)
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def _same_field(self, other):
        if other.field != self.field:
            raise FieldMismatch("states live in different fields")

    def __add__(self, other):
        self._same_field(other)
        return StateVector(self.amplitudes + other.amplitudes, self.field)

    def __mul__(self, scalar):
        return StateVector(self.amplitudes * scalar, self.field)

    __rmul__ = __mul__

    def allclose(self, other, atol=1e-12) -> bool:
        return other.field == self.field and np.allclose(
            self.amplitudes, other.amplitudes, rtol=0, atol=atol
        )

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, field: FieldSpec | None = None) -> StateVector:
        if field is None:
            meta = data["field"]
            n = int(meta["n"])
            poly = int(meta["poly"], 16)
            field = field_with_basis_exponents(n, meta["self_dual_basis"], poly)
        amps = np.array([complex(re, im) for re, im in data["amplitudes"]])
        return cls(amps, field)

    @classmethod
    def from_json(cls, text: str, field: FieldSpec | None = None) -> StateVector:
        return cls.from_dict(json.loads(text), field)

    def __repr__(self):
        return f"StateVector(n={self.n}, norm={self.norm():.6g})"

