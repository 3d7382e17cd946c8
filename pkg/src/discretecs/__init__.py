"""Symmetric discrete coherent states for n qubits over GF(2^n)."""

from ._backend import BACKEND
from .gf2n import FieldSpec, build_field, iter_self_dual_bases
from .ordering import AxisOrder, order_axis, recenter, symmetrize
from .pauli import (
    PhasePoint,
    displacement,
    fourier,
    rot_P,
    rot_Q,
    squeeze,
    xor_gate,
)
from .quasidist import (
    PGrid,
    QGrid,
    p_function,
    profile_f,
    q_closed_form_fiducial,
    q_function,
    sum_q_squared,
)
from .states import coherent_state, dicke_expansion, fiducial
from .vector import StateVector

__all__ = [
    "BACKEND",
    "AxisOrder",
    "FieldSpec",
    "PGrid",
    "PhasePoint",
    "QGrid",
    "StateVector",
    "build_field",
    "coherent_state",
    "dicke_expansion",
    "displacement",
    "fiducial",
    "fourier",
    "iter_self_dual_bases",
    "order_axis",
    "p_function",
    "profile_f",
    "q_closed_form_fiducial",
    "q_function",
    "recenter",
    "rot_P",
    "rot_Q",
    "squeeze",
    "sum_q_squared",
    "symmetrize",
    "xor_gate",
]
