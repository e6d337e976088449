"""
Non-restoring integer square root: classical reference with a step trace,
and synthesis of the garbage-free ``2n + 1`` qubit reversible circuit.

Qubit layout for width ``n``: ``R_0..R_{n-1}`` at ``0..n-1`` (radicand in,
remainder out), ``F_0..F_{n-1}`` at ``n..2n-1`` (starts at integer 1; the
root ends up in ``F_2..F_{n/2+1}``) and the single ancilla ``z`` at ``2n``.

The circuit has three parts. Part 1 does the initial subtraction and the
first loop iteration, Part 2 the remaining ``n/2 - 2`` iterations, and
Part 3 the final conditional restoration of a negative remainder. Inside
each part the wider windows of R line up with the low bits of F, so the
shift-and-append of the classical loop costs no gates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import NamedTuple

import numpy as np

from .arith import build_addsub, build_ctrl_add
from .circuit import CX, NCX, SWAP, X, Circuit, Gate, Level, Register, RegisterLayout
from .errors import DomainError, WidthMismatchError
from .simulate import BasisState, apply_classical_batch


def check_width(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 4 or n % 2:
        raise DomainError(f"n must be even and ≥ 4, got {n!r}")


@dataclass(frozen=True)
class SqrtLayout:
    n: int

    def __post_init__(self):
        check_width(self.n)

    @property
    def width(self) -> int:
        return 2 * self.n + 1

    def R(self, k: int) -> int:
        return k

    def F(self, k: int) -> int:
        return self.n + k

    @property
    def z(self) -> int:
        return 2 * self.n

    @property
    def r_qubits(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    @property
    def f_qubits(self) -> tuple[int, ...]:
        return tuple(range(self.n, 2 * self.n))

    @property
    def y_window(self) -> tuple[int, ...]:
        """F_2 .. F_{n/2+1}, least-significant first."""
        return tuple(self.F(k) for k in range(2, self.n // 2 + 2))

    @property
    def register_layout(self) -> RegisterLayout:
        n = self.n
        return RegisterLayout((Register("R", 0, n - 1), Register("F", n, 2 * n - 1),
                               Register("z", 2 * n, 2 * n)))

    def encode(self, a: int) -> BasisState:
        """R = a, F = 1, z = 0."""
        check_radicand(a, self.n)
        return BasisState.from_int(a | (1 << self.F(0)), self.width)


def check_radicand(a: int, n: int) -> None:
    check_width(n)
    if not isinstance(a, int) or not 0 <= a < 1 << (n - 1):
        raise DomainError(f"a must satisfy 0 ≤ a < 2^{n - 1} for n = {n}, got {a!r}")


# --- classical reference ---------------------------------------------------

@dataclass(frozen=True)
class TraceRow:
    r: int  # signed partial remainder
    f: int
    note: str


@dataclass
class OracleTrace:
    n: int
    rows: list[TraceRow] = field(default_factory=list)

    def record(self, r: int, f: int, note: str) -> None:
        self.rows.append(TraceRow(r, f, note))

    def bits(self, value: int) -> str:
        return format(value % (1 << self.n), f"0{self.n}b")

    def pairs(self) -> list[tuple[str, str]]:
        """(R, F) rows as n-bit two's-complement strings."""
        return [(self.bits(row.r), self.bits(row.f)) for row in self.rows]

    def format(self) -> str:
        w = max(self.n, 1)
        lines = [f"{'R':<{w}}  {'F':<{w}}  Operations"]
        for (r, f), row in zip(self.pairs(), self.rows):
            lines.append(f"{r}  {f}  {row.note}")
        return "\n".join(lines)


class SqrtResult(NamedTuple):
    root: int
    remainder: int
    trace: OracleTrace


def nonrestoring_sqrt_oracle(a: int, n: int) -> SqrtResult:
    """Digit-recurrence square root producing one root bit per iteration.

    The partial remainder is kept as an exact signed integer; the trace
    shows it in n-bit two's complement.
    """
    check_radicand(a, n)
    half = n // 2
    trace = OracleTrace(n)

    r = (a >> (n - 2)) & 0b11
    f = 0b01
    trace.record(r, f, f"Assign R = 0^{n - 2} a_{n - 1} a_{n - 2} and F = 0^{n - 2} 01")
    r -= f
    trace.record(r, f, "R = R - F")

    y = 0
    for i in range(half - 1, 0, -1):
        pair = (a >> (2 * i - 2)) & 0b11
        bit = 0 if r < 0 else 1
        y = (y << 1) | bit
        r = 4 * r + pair
        f = (y << 2) | (0b11 if bit == 0 else 0b01)
        trace.record(r, f, f"i = {i}, Y_{i} = {bit}: shift in a_{2 * i - 1} a_{2 * i - 2}, "
                           f"F = Y..Y_{i} {'11' if bit == 0 else '01'}")
        if bit == 0:
            r += f
            trace.record(r, f, "R = R + F")
        else:
            r -= f
            trace.record(r, f, "R = R - F")

    if r < 0:
        y <<= 1
        f = (y << 2) | 0b01
        trace.record(r, f, "R < 0 so Y_0 = 0: F = Y 01")
        # The correction adds 2Y + 1: the root bits sit one place higher in F.
        r += 2 * y + 1
        trace.record(r, f, "R = R + (2Y + 1)")
    else:
        y = (y << 1) | 1
        f = (y << 2) | 0b01
        trace.record(r, f, "R ≥ 0 so Y_0 = 1: F = Y 01")
    trace.record(r, f, "Return R, F")
    return SqrtResult(y, r, trace)


# --- circuit synthesis -----------------------------------------------------

def build_part1(n: int) -> list[Gate]:
    """Initial subtraction and the first loop iteration."""
    L = SqrtLayout(n)
    R, F, z = L.R, L.F, L.z
    gates = [
        X(R(n - 2)),
        CX(R(n - 2), R(n - 1)),
        CX(R(n - 1), F(1)),
        NCX(R(n - 1), z),
        NCX(R(n - 1), F(2)),
    ]
    gates += build_addsub(z, [R(k) for k in range(n - 4, n)], [F(k) for k in range(4)])
    return gates


def build_part2(n: int, i: int) -> list[Gate]:
    """One middle iteration; ``2 ≤ i ≤ n/2 - 1``, window width ``2i + 2``."""
    L = SqrtLayout(n)
    if not 2 <= i <= n // 2 - 1:
        raise DomainError(f"iteration index must satisfy 2 ≤ i ≤ {n // 2 - 1}, got {i}")
    R, F, z = L.R, L.F, L.z
    gates = [
        NCX(z, F(1)),
        CX(F(2), z),
        CX(R(n - 1), F(1)),
        NCX(R(n - 1), z),
        NCX(R(n - 1), F(i + 1)),
    ]
    gates += [SWAP(F(j), F(j - 1)) for j in range(i + 1, 2, -1)]
    lo = n - 2 * i - 2
    gates += build_addsub(z, [R(k) for k in range(lo, n)], [F(k) for k in range(2 * i + 2)])
    return gates


def build_part3(n: int) -> list[Gate]:
    """Remainder restoration and final placement of the root bits."""
    L = SqrtLayout(n)
    R, F, z = L.R, L.F, L.z
    gates = [
        NCX(z, F(1)),
        CX(F(2), z),
        NCX(R(n - 1), z),
        NCX(R(n - 1), F(n // 2 + 1)),
        X(z),
    ]
    gates += build_ctrl_add(z, list(L.r_qubits), list(L.f_qubits))
    gates.append(X(z))
    gates += [SWAP(F(j), F(j - 1)) for j in range(n // 2 + 1, 2, -1)]
    gates.append(CX(F(2), z))
    return gates


def build_sqrt_circuit(n: int) -> tuple[Circuit, SqrtLayout]:
    layout = SqrtLayout(n)
    gates = build_part1(n)
    for i in range(2, n // 2):
        gates += build_part2(n, i)
    gates += build_part3(n)
    return Circuit(layout.width, tuple(gates), Level.MACRO, layout.register_layout), layout


class DecodedOutput(NamedTuple):
    root: int
    remainder: int
    restored: bool


def decode_output(s: BasisState, layout: SqrtLayout) -> DecodedOutput:
    if s.width != layout.width:
        raise WidthMismatchError(f"state width {s.width} != layout width {layout.width}")
    bits = s.bits
    root = sum(bits[q] << k for k, q in enumerate(layout.y_window))
    remainder = sum(bits[q] << k for k, q in enumerate(layout.r_qubits))
    n = layout.n
    high = [layout.F(k) for k in range(n // 2 + 2, n)]
    restored = (bits[layout.z] == 0 and bits[layout.F(1)] == 0 and bits[layout.F(0)] == 1
                and not any(bits[q] for q in high))
    return DecodedOutput(root, remainder, restored)


def reference_sqrt(a: int) -> tuple[int, int]:
    y = isqrt(a)
    return y, a - y * y


@dataclass(frozen=True)
class Mismatch:
    a: int
    got: DecodedOutput
    expected_root: int
    expected_remainder: int


@dataclass(frozen=True)
class VerifyResult:
    n: int
    inputs: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_circuit(circuit: Circuit, layout: SqrtLayout) -> VerifyResult:
    """Run every valid radicand through ``circuit`` and compare with integer sqrt."""
    n = layout.n
    if circuit.width != layout.width:
        raise WidthMismatchError(f"circuit width {circuit.width} != layout width {layout.width}")
    a = np.arange(1 << (n - 1))
    states = np.zeros((a.size, layout.width), dtype=bool)
    for k in range(n):
        states[:, layout.R(k)] = (a >> k) & 1
    states[:, layout.F(0)] = True
    out = apply_classical_batch(circuit, states).astype(np.int64)

    def read(qubits) -> np.ndarray:
        return sum(out[:, q] << k for k, q in enumerate(qubits))

    roots = read(layout.y_window)
    rems = read(layout.r_qubits)
    high = [layout.F(k) for k in range(n // 2 + 2, n)]
    restored = ((out[:, layout.z] == 0) & (out[:, layout.F(1)] == 0)
                & (out[:, layout.F(0)] == 1) & ~out[:, high].any(axis=1))
    exp_root = np.array([isqrt(int(v)) for v in a])
    exp_rem = a - exp_root ** 2
    bad = np.nonzero((roots != exp_root) | (rems != exp_rem) | ~restored)[0]
    mismatches = tuple(
        Mismatch(int(i), DecodedOutput(int(roots[i]), int(rems[i]), bool(restored[i])),
                 int(exp_root[i]), int(exp_rem[i]))
        for i in bad)
    return VerifyResult(n, int(a.size), mismatches)
