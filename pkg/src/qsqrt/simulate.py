"""
Circuit execution.

Macro circuits are classical reversible circuits and are simulated exactly
on basis states (bit i of a state is qubit i). Clifford+T circuits are run
on a dense statevector with the same little-endian convention: qubit i is
bit i of the amplitude index.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circuit import Circuit, Gate, GateKind, Level
from .errors import CapacityError, LevelError, WidthMismatchError

MAX_STATEVECTOR_QUBITS = 20
MAX_UNITARY_QUBITS = 6


@dataclass(frozen=True)
class BasisState:
    width: int
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) != self.width:
            raise WidthMismatchError(f"{len(bits)} bits for width {self.width}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def from_int(cls, value: int, width: int) -> BasisState:
        if not 0 <= value < (1 << width):
            raise ValueError(f"{value} does not fit in {width} qubits")
        return cls(width, tuple((value >> i) & 1 for i in range(width)))

    def to_int(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    def bitstring(self, qubits: Sequence[int]) -> str:
        """Bits of ``qubits`` rendered most-significant first (qubits given LSB first)."""
        return "".join(str(self.bits[q]) for q in reversed(qubits))


def _classical_step(x: int, g: Gate) -> int:
    q = g.qubits
    k = g.kind
    if k is GateKind.X:
        return x ^ (1 << q[0])
    if k is GateKind.CNOT:
        return x ^ (((x >> q[0]) & 1) << q[1])
    if k is GateKind.NCX:
        return x ^ ((((x >> q[0]) & 1) ^ 1) << q[1])
    if k is GateKind.CCX:
        return x ^ (((x >> q[0]) & (x >> q[1]) & 1) << q[2])
    if k is GateKind.SWAP:
        diff = ((x >> q[0]) ^ (x >> q[1])) & 1
        return x ^ ((diff << q[0]) | (diff << q[1]))
    raise LevelError(f"gate '{k.mnemonic}' has no classical semantics")


def apply_gates_int(gates: Sequence[Gate], x: int) -> int:
    """Apply classical gates to a basis state packed into an int."""
    for g in gates:
        x = _classical_step(x, g)
    return x


def apply_classical(c: Circuit, s: BasisState) -> BasisState:
    if c.level is not Level.MACRO:
        raise LevelError("classical simulation needs a macro-level circuit")
    if s.width != c.width:
        raise WidthMismatchError(f"state width {s.width} != circuit width {c.width}")
    return BasisState.from_int(apply_gates_int(c.gates, s.to_int()), c.width)


def apply_classical_batch(c: Circuit, states: np.ndarray) -> np.ndarray:
    """Vectorized classical simulation.

    ``states`` is a boolean array of shape ``(n_states, width)``; a new
    array of the same shape is returned.
    """
    if c.level is not Level.MACRO:
        raise LevelError("classical simulation needs a macro-level circuit")
    states = np.asarray(states, dtype=bool)
    if states.ndim != 2 or states.shape[1] != c.width:
        raise WidthMismatchError(f"expected shape (N, {c.width}), got {states.shape}")
    s = states.T.copy()  # one row per qubit keeps gate updates contiguous
    for g in c.gates:
        q = g.qubits
        k = g.kind
        if k is GateKind.X:
            np.logical_not(s[q[0]], out=s[q[0]])
        elif k is GateKind.CNOT:
            s[q[1]] ^= s[q[0]]
        elif k is GateKind.NCX:
            s[q[1]] ^= ~s[q[0]]
        elif k is GateKind.CCX:
            s[q[2]] ^= s[q[0]] & s[q[1]]
        else:  # SWAP
            s[[q[0], q[1]]] = s[[q[1], q[0]]]
    return s.T.copy()


# --- dense simulation ------------------------------------------------------

_SQRT1_2 = 1 / np.sqrt(2)
_OMEGA = np.exp(1j * np.pi / 4)
_SINGLE_QUBIT = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT1_2,
    GateKind.T: np.array([[1, 0], [0, _OMEGA]], dtype=complex),
    GateKind.TDG: np.array([[1, 0], [0, np.conj(_OMEGA)]], dtype=complex),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
}


@dataclass(frozen=True)
class StateVector:
    width: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.width > MAX_STATEVECTOR_QUBITS:
            raise CapacityError(f"statevector limited to {MAX_STATEVECTOR_QUBITS} qubits")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 1 << self.width:
            raise WidthMismatchError(f"{amps.size} amplitudes for width {self.width}")
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("zero vector is not a state")
        object.__setattr__(self, "amplitudes", amps / norm)

    @classmethod
    def basis(cls, index: int, width: int) -> StateVector:
        amps = np.zeros(1 << width, dtype=complex)
        amps[index] = 1
        return cls(width, amps)


def _apply_dense(g: Gate, psi: np.ndarray, width: int, idx: np.ndarray) -> np.ndarray:
    """Apply one gate to ``psi`` of shape ``(2**width, k)``."""
    k = g.kind
    if k in _SINGLE_QUBIT:
        m = _SINGLE_QUBIT[k]
        q = g.qubits[0]
        bit = (idx >> q) & 1
        partner = idx ^ (1 << q)
        out = np.empty_like(psi)
        # row i of the result mixes amplitudes i (own bit) and i^2^q (flipped bit)
        out[:] = m[bit, bit][:, None] * psi + m[bit, 1 - bit][:, None] * psi[partner]
        return out
    # Permutation gates: new[f(i)] = old[i].
    image = np.array(idx)
    q = g.qubits
    if k is GateKind.X:
        image ^= 1 << q[0]
    elif k is GateKind.CNOT:
        image ^= ((idx >> q[0]) & 1) << q[1]
    elif k is GateKind.NCX:
        image ^= (((idx >> q[0]) & 1) ^ 1) << q[1]
    elif k is GateKind.CCX:
        image ^= ((idx >> q[0]) & (idx >> q[1]) & 1) << q[2]
    elif k is GateKind.SWAP:
        diff = ((idx >> q[0]) ^ (idx >> q[1])) & 1
        image ^= (diff << q[0]) | (diff << q[1])
    else:
        raise LevelError(f"no dense rule for '{k.mnemonic}'")
    out = np.empty_like(psi)
    out[image] = psi
    return out


def _run_dense(c: Circuit, psi: np.ndarray) -> np.ndarray:
    idx = np.arange(1 << c.width)
    for g in c.gates:
        psi = _apply_dense(g, psi, c.width, idx)
    return psi


def run_statevector(c: Circuit, s: StateVector) -> StateVector:
    if c.width > MAX_STATEVECTOR_QUBITS:
        raise CapacityError(f"statevector limited to {MAX_STATEVECTOR_QUBITS} qubits")
    if s.width != c.width:
        raise WidthMismatchError(f"state width {s.width} != circuit width {c.width}")
    psi = _run_dense(c, s.amplitudes[:, None].copy())
    return StateVector(c.width, psi[:, 0])


def unitary_of(c: Circuit) -> np.ndarray:
    """Dense unitary; column j is the image of basis state j."""
    if c.width > MAX_UNITARY_QUBITS:
        raise CapacityError(f"unitary_of limited to {MAX_UNITARY_QUBITS} qubits")
    return _run_dense(c, np.eye(1 << c.width, dtype=complex))


def equal_up_to_phase(u: np.ndarray, v: np.ndarray) -> float:
    """Max-norm distance between ``u`` and ``v`` after removing a global phase."""
    flat = np.argmax(np.abs(v))
    ref = v.flat[flat]
    if abs(ref) == 0:
        return float(np.max(np.abs(u - v)))
    phase = u.flat[flat] / ref
    phase /= abs(phase) if abs(phase) else 1
    return float(np.max(np.abs(u - phase * v)))
