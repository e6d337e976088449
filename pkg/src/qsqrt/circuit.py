"""
Circuit IR: gates over indexed qubits, register layouts, inversion and
text serialization (netlist and OpenQASM 2.0).

Circuits are immutable. Builders collect gates in a list and construct the
circuit once; ``append_gate`` returns a new circuit.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (CircuitError, InvalidWidthError, LevelError, NetlistParseError,
                     OperandError, QubitIndexError)

NETLIST_HEADER = "# qsqrt netlist v1"
_LEVEL_PRAGMA = "# level"


class Level(Enum):
    MACRO = "macro"
    CLIFFORD_T = "cliffordt"


class GateKind(Enum):
    X = "x"
    CNOT = "cx"
    NCX = "ncx"  # CNOT that fires when its control is 0
    SWAP = "swap"
    CCX = "ccx"
    H = "h"
    T = "t"
    TDG = "tdg"
    S = "s"
    SDG = "sdg"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def mnemonic(self) -> str:
        return self.value


_ARITY = {
    GateKind.X: 1, GateKind.H: 1, GateKind.T: 1, GateKind.TDG: 1,
    GateKind.S: 1, GateKind.SDG: 1,
    GateKind.CNOT: 2, GateKind.NCX: 2, GateKind.SWAP: 2,
    GateKind.CCX: 3,
}

_INVERSE = {
    GateKind.T: GateKind.TDG, GateKind.TDG: GateKind.T,
    GateKind.S: GateKind.SDG, GateKind.SDG: GateKind.S,
}

# Kinds allowed at each abstraction level.
MACRO_KINDS = frozenset({GateKind.X, GateKind.CNOT, GateKind.NCX, GateKind.SWAP, GateKind.CCX})
CLIFFORD_T_KINDS = frozenset({GateKind.X, GateKind.CNOT, GateKind.H, GateKind.T,
                              GateKind.TDG, GateKind.S, GateKind.SDG})
_LEVEL_KINDS = {Level.MACRO: MACRO_KINDS, Level.CLIFFORD_T: CLIFFORD_T_KINDS}

_BY_MNEMONIC = {k.mnemonic: k for k in GateKind}


@dataclass(frozen=True)
class Gate:
    """A gate application. For controlled kinds, controls precede the target."""

    kind: GateKind
    qubits: tuple[int, ...]

    def __post_init__(self):
        qubits = tuple(self.qubits)
        object.__setattr__(self, "qubits", qubits)
        if len(qubits) != self.kind.arity:
            raise OperandError(
                f"{self.kind.mnemonic} takes {self.kind.arity} operand(s), got {len(qubits)}")
        for q in qubits:
            if not isinstance(q, int) or isinstance(q, bool) or q < 0:
                raise QubitIndexError(f"invalid qubit index {q!r}")
        if len(set(qubits)) != len(qubits):
            raise OperandError(f"duplicate operands in {self.kind.mnemonic} {qubits}")

    def inverse(self) -> Gate:
        return Gate(_INVERSE.get(self.kind, self.kind), self.qubits)

    def __str__(self) -> str:
        return " ".join([self.kind.mnemonic, *map(str, self.qubits)])


# Short constructors used by the builders.
def X(q: int) -> Gate: return Gate(GateKind.X, (q,))
def H(q: int) -> Gate: return Gate(GateKind.H, (q,))
def T(q: int) -> Gate: return Gate(GateKind.T, (q,))
def TDG(q: int) -> Gate: return Gate(GateKind.TDG, (q,))
def S(q: int) -> Gate: return Gate(GateKind.S, (q,))
def SDG(q: int) -> Gate: return Gate(GateKind.SDG, (q,))
def CX(c: int, t: int) -> Gate: return Gate(GateKind.CNOT, (c, t))
def NCX(c: int, t: int) -> Gate: return Gate(GateKind.NCX, (c, t))
def SWAP(a: int, b: int) -> Gate: return Gate(GateKind.SWAP, (a, b))
def CCX(c1: int, c2: int, t: int) -> Gate: return Gate(GateKind.CCX, (c1, c2, t))


@dataclass(frozen=True)
class Register:
    name: str
    lo: int
    hi: int  # inclusive

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def qubits(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class RegisterLayout:
    """Named, contiguous, disjoint registers covering ``0..width-1``."""

    registers: tuple[Register, ...]

    def __post_init__(self):
        object.__setattr__(self, "registers", tuple(self.registers))
        names = [r.name for r in self.registers]
        if len(set(names)) != len(names):
            raise CircuitError(f"duplicate register names: {names}")
        spans = sorted((r.lo, r.hi) for r in self.registers)
        expected = 0
        for lo, hi in spans:
            if lo > hi:
                raise CircuitError(f"empty register range {lo}..{hi}")
            if lo != expected:
                raise CircuitError("register ranges must be disjoint and contiguous from 0")
            expected = hi + 1

    @property
    def width(self) -> int:
        return max((r.hi + 1 for r in self.registers), default=0)

    def __getitem__(self, name: str) -> Register:
        for r in self.registers:
            if r.name == name:
                return r
        raise KeyError(name)


@dataclass(frozen=True)
class Circuit:
    width: int
    gates: tuple[Gate, ...] = ()
    level: Level = Level.MACRO
    layout: RegisterLayout | None = None

    def __post_init__(self):
        if not isinstance(self.width, int) or self.width < 1:
            raise InvalidWidthError(f"circuit width must be >= 1, got {self.width!r}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            _check_gate(g, self.width, self.level)
        if self.layout is not None and self.layout.width != self.width:
            raise CircuitError(
                f"layout covers {self.layout.width} qubits, circuit has {self.width}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def extend(self, gates: Iterable[Gate]) -> Circuit:
        return Circuit(self.width, self.gates + tuple(gates), self.level, self.layout)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)


def _check_gate(gate: Gate, width: int, level: Level) -> None:
    for q in gate.qubits:
        if q >= width:
            raise QubitIndexError(f"qubit {q} out of range for width {width} in '{gate}'")
    if gate.kind not in _LEVEL_KINDS[level]:
        raise LevelError(f"gate '{gate.kind.mnemonic}' not allowed at level {level.value}")


def new_circuit(width: int, level: Level = Level.MACRO,
                layout: RegisterLayout | None = None) -> Circuit:
    return Circuit(width, (), level, layout)


def append_gate(circuit: Circuit, gate: Gate) -> Circuit:
    _check_gate(gate, circuit.width, circuit.level)
    return Circuit(circuit.width, circuit.gates + (gate,), circuit.level, circuit.layout)


def invert(circuit: Circuit) -> Circuit:
    """Reverse gate order and replace each gate by its inverse."""
    gates = tuple(g.inverse() for g in reversed(circuit.gates))
    return Circuit(circuit.width, gates, circuit.level, circuit.layout)


def invert_gates(gates: Sequence[Gate]) -> list[Gate]:
    return [g.inverse() for g in reversed(gates)]


# --- netlist ---------------------------------------------------------------

def emit_netlist(circuit: Circuit) -> str:
    lines = [NETLIST_HEADER]
    if circuit.level is Level.CLIFFORD_T:
        lines.append(f"{_LEVEL_PRAGMA} {circuit.level.value}")
    lines.append(f"width {circuit.width}")
    if circuit.layout is not None:
        lines += [f"reg {r.name} {r.lo} {r.hi}" for r in circuit.layout.registers]
    lines += [str(g) for g in circuit.gates]
    return "\n".join(lines) + "\n"


def parse_netlist(text: str, level: Level | None = None) -> Circuit:
    """Parse netlist text.

    The level comes from the argument, else from a ``# level <name>``
    comment, else from the gate kinds (any h/t/tdg/s/sdg means Clifford+T).
    """
    width = None
    pragma_level = None
    regs: list[Register] = []
    parsed: list[tuple[int, Gate]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith(_LEVEL_PRAGMA + " "):
            try:
                pragma_level = Level(raw[len(_LEVEL_PRAGMA):].strip())
            except ValueError:
                raise NetlistParseError(lineno, f"unknown level in '{raw.strip()}'") from None
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        if head == "width":
            if width is not None:
                raise NetlistParseError(lineno, "duplicate width line")
            if len(args) != 1:
                raise NetlistParseError(lineno, "expected 'width <k>'")
            width = _parse_int(args[0], lineno)
            if width < 1:
                raise NetlistParseError(lineno, f"width must be >= 1, got {width}")
            continue
        if width is None:
            raise NetlistParseError(lineno, "'width' must precede registers and gates")
        if head == "reg":
            if len(args) != 3:
                raise NetlistParseError(lineno, "expected 'reg <name> <lo> <hi>'")
            regs.append(Register(args[0], _parse_int(args[1], lineno), _parse_int(args[2], lineno)))
            continue
        kind = _BY_MNEMONIC.get(head)
        if kind is None:
            raise NetlistParseError(lineno, f"unknown gate mnemonic '{head}'")
        qubits = tuple(_parse_int(a, lineno) for a in args)
        if len(qubits) != kind.arity:
            raise NetlistParseError(lineno, f"'{head}' takes {kind.arity} operand(s)")
        gate = Gate(kind, qubits)  # raises OperandError on duplicates
        for q in qubits:
            if q >= width:
                raise QubitIndexError(f"line {lineno}: qubit {q} out of range for width {width}")
        parsed.append((lineno, gate))
    if width is None:
        raise NetlistParseError(max(1, len(text.splitlines())), "missing 'width' line")

    if level is None:
        level = pragma_level
    if level is None:
        level = (Level.CLIFFORD_T
                 if any(g.kind not in MACRO_KINDS for _, g in parsed) else Level.MACRO)
    for lineno, g in parsed:
        if g.kind not in _LEVEL_KINDS[level]:
            raise LevelError(f"line {lineno}: '{g.kind.mnemonic}' not allowed at level {level.value}")
    layout = RegisterLayout(tuple(regs)) if regs else None
    return Circuit(width, tuple(g for _, g in parsed), level, layout)


def _parse_int(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise NetlistParseError(lineno, f"expected a non-negative integer, got '{tok}'")
    return int(tok)


# --- OpenQASM 2.0 ----------------------------------------------------------

_QASM_NAMES = {
    GateKind.X: "x", GateKind.H: "h", GateKind.T: "t", GateKind.TDG: "tdg",
    GateKind.S: "s", GateKind.SDG: "sdg", GateKind.CNOT: "cx",
    GateKind.SWAP: "swap", GateKind.CCX: "ccx",
}


def emit_qasm(circuit: Circuit) -> str:
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{circuit.width}];"]
    for g in circuit.gates:
        if g.kind is GateKind.NCX:
            c, t = g.qubits
            lines += [f"x q[{c}];", f"cx q[{c}],q[{t}];", f"x q[{c}];"]
        else:
            args = ",".join(f"q[{q}]" for q in g.qubits)
            lines.append(f"{_QASM_NAMES[g.kind]} {args};")
    return "\n".join(lines) + "\n"
