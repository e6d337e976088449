"""Lowering of macro gates (NCX, SWAP, CCX) to the Clifford+T gate set."""
from __future__ import annotations

from .circuit import CX, H, TDG, Circuit, Gate, GateKind, Level, T, X
from .errors import LevelError, OperandError


def _distinct(*qubits: int) -> None:
    if len(set(qubits)) != len(qubits):
        raise OperandError(f"operands must be pairwise distinct, got {qubits}")


def expand_ncx(ctrl: int, tgt: int) -> list[Gate]:
    _distinct(ctrl, tgt)
    return [X(ctrl), CX(ctrl, tgt), X(ctrl)]


def expand_swap(a: int, b: int) -> list[Gate]:
    _distinct(a, b)
    return [CX(a, b), CX(b, a), CX(a, b)]


def expand_ccx(c1: int, c2: int, tgt: int) -> list[Gate]:
    """Toffoli as a 7-T, T-depth-3 network without ancillae.

    With the target in the Hadamard basis, the doubly controlled phase
    ``(-1)^(a*b*c)`` is written as a sum of parities,

        4abc = a + b + c - (a^b) - (a^c) - (b^c) + (a^b^c),

    and each parity gets one T or T-dagger. The seven parities are split
    into three mutually independent groups, one group per T layer:
    ``{a, b, c}``, ``{a^b^c, a^b, a^c}`` and ``{b^c}``. CNOTs move the
    wires between groups and back.
    """
    _distinct(c1, c2, tgt)
    a, b, t = c1, c2, tgt
    to_group2 = [CX(a, b), CX(a, t), CX(b, a), CX(t, a)]  # wires: a^b^c, a^b, a^c
    return [
        H(t),
        T(a), T(b), T(t),
        *to_group2,
        T(a), TDG(b), TDG(t),
        CX(t, b),  # b wire: b^c
        TDG(b),
        CX(t, b),
        *reversed(to_group2),
        H(t),
    ]


_EXPANSIONS = {
    GateKind.NCX: lambda q: expand_ncx(*q),
    GateKind.SWAP: lambda q: expand_swap(*q),
    GateKind.CCX: lambda q: expand_ccx(*q),
}


def expand_gate(gate: Gate) -> list[Gate]:
    rule = _EXPANSIONS.get(gate.kind)
    return [gate] if rule is None else rule(gate.qubits)


def expand_circuit(c: Circuit) -> Circuit:
    """Gate-for-gate lowering of a Macro circuit; X and CNOT pass through."""
    if c.level is not Level.MACRO:
        raise LevelError(f"expand_circuit needs a macro-level circuit, got {c.level.value}")
    gates: list[Gate] = []
    for g in c.gates:
        gates.extend(expand_gate(g))
    return Circuit(c.width, tuple(gates), Level.CLIFFORD_T, c.layout)

