"""
Ancilla-free reversible arithmetic blocks used by the square-root circuit.

Both blocks are built on the modular ripple-carry adder of Takahashi, Tani
and Kunihiro, which stores carries in the operand register and needs no
work qubit. ``target := target + operand (mod 2**w)``, with the operand
restored.

* ADD/SUB: adds when the control is 0 and subtracts when it is 1, via
  ``t - f = ~(~t + f)``. Uses ``2w - 2`` Toffolis.
* CTRL-ADD: adds only when the control is 1. Only the gates that write the
  sum into the target are made conditional, so the carry computation and
  uncomputation cancel when the control is 0. Uses ``3w - 2`` Toffolis.
"""
from __future__ import annotations

from typing import Sequence

from .circuit import CCX, CX, Gate
from .errors import DomainError, OperandError

Slice = Sequence[int]  # qubit indices, least-significant first


def _check_operands(ctrl: int | None, target: Slice, operand: Slice) -> int:
    w = len(target)
    if len(operand) != w:
        raise OperandError(f"target width {w} != operand width {len(operand)}")
    if w < 2:
        raise OperandError(f"block width must be >= 2, got {w}")
    used = list(target) + list(operand) + ([] if ctrl is None else [ctrl])
    if len(set(used)) != len(used):
        raise OperandError("control, target and operand qubits must be pairwise distinct")
    return w


def _adder(target: Slice, operand: Slice, ctrl: int | None = None) -> list[Gate]:
    """Modular adder target += operand; gated by ``ctrl`` when given."""
    b, a = list(target), list(operand)
    w = len(a)

    def write_sum(ai: int, bi: int) -> Gate:
        return CX(ai, bi) if ctrl is None else CCX(ctrl, ai, bi)

    gates: list[Gate] = []
    gates += [CX(a[i], b[i]) for i in range(1, w)]
    gates += [CX(a[i], a[i + 1]) for i in range(w - 2, 0, -1)]
    gates += [CCX(a[i], b[i], a[i + 1]) for i in range(w - 1)]
    for i in range(w - 1, 0, -1):
        gates.append(write_sum(a[i], b[i]))
        gates.append(CCX(a[i - 1], b[i - 1], a[i]))
    gates += [CX(a[i], a[i + 1]) for i in range(1, w - 1)]
    gates.append(write_sum(a[0], b[0]))
    gates += [CX(a[i], b[i]) for i in range(1, w)]
    return gates


def build_adder(target: Slice, operand: Slice) -> list[Gate]:
    _check_operands(None, target, operand)
    return _adder(target, operand)


def build_addsub(ctrl: int, target: Slice, operand: Slice) -> list[Gate]:
    """ctrl=0: target += operand; ctrl=1: target -= operand (both mod 2**w)."""
    _check_operands(ctrl, target, operand)
    complement = [CX(ctrl, t) for t in target]
    return complement + _adder(target, operand) + complement


def build_ctrl_add(ctrl: int, target: Slice, operand: Slice) -> list[Gate]:
    """ctrl=1: target += operand (mod 2**w); ctrl=0: identity."""
    _check_operands(ctrl, target, operand)
    return _adder(target, operand, ctrl)


def _check_range(t: int, f: int, w: int) -> None:
    if w < 1 or not (0 <= t < 1 << w and 0 <= f < 1 << w):
        raise DomainError(f"operands {t}, {f} out of range for width {w}")


def addsub_oracle(ctrl: int, t: int, f: int, w: int) -> int:
    _check_range(t, f, w)
    return (t - f if ctrl else t + f) % (1 << w)


def ctrl_add_oracle(ctrl: int, t: int, f: int, w: int) -> int:
    _check_range(t, f, w)
    return (t + f) % (1 << w) if ctrl else t
