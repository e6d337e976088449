import numpy as np
from hypothesis import strategies as st

from qsqrt.circuit import Circuit, Gate, GateKind, Level, MACRO_KINDS


@st.composite
def macro_circuits(draw, min_width=3, max_width=8, max_gates=40):
    width = draw(st.integers(min_width, max_width))
    kinds = sorted((k for k in MACRO_KINDS if k.arity <= width), key=lambda k: k.value)
    gates = []
    for _ in range(draw(st.integers(0, max_gates))):
        kind = draw(st.sampled_from(kinds))
        qubits = draw(st.permutations(range(width)))[:kind.arity]
        gates.append(Gate(kind, tuple(qubits)))
    return Circuit(width, tuple(gates), Level.MACRO)


def all_basis_states(width: int) -> np.ndarray:
    idx = np.arange(1 << width)
    return ((idx[:, None] >> np.arange(width)) & 1).astype(bool)


def pack(states: np.ndarray) -> np.ndarray:
    return (states.astype(np.int64) << np.arange(states.shape[1])).sum(axis=1)
