"""Synthesis, simulation and costing of a garbage-free quantum square-root circuit."""

__version__ = "0.1.0"

from .circuit import (Circuit, Gate, GateKind, Level, Register, RegisterLayout, append_gate,
                      emit_netlist, emit_qasm, invert, new_circuit, parse_netlist)
from .cliffordt import expand_ccx, expand_circuit, expand_ncx, expand_swap
from .simulate import (BasisState, StateVector, apply_classical, run_statevector,
                       unitary_of)
from .arith import addsub_oracle, build_addsub, build_ctrl_add, ctrl_add_oracle
from .sqrt import (SqrtLayout, build_part1, build_part2, build_part3, build_sqrt_circuit,
                   decode_output, nonrestoring_sqrt_oracle, verify_circuit)
from .resources import (analytic_qubits, analytic_tcount, analytic_tdepth, comparison_table,
                        design_catalog, improvement_ratio, measure_resources)
