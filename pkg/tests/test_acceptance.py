"""Acceptance criteria A1-A9; each test prints one ``[A#] PASS/FAIL`` line."""
import time
from contextlib import contextmanager
from decimal import Decimal
from fractions import Fraction

import numpy as np

from qsqrt.arith import build_addsub, build_ctrl_add
from qsqrt.circuit import Circuit, GateKind, Level, emit_netlist, invert, parse_netlist
from qsqrt.cliffordt import expand_ccx, expand_circuit, expand_ncx, expand_swap
from qsqrt.resources import (CANDIDATE_SETS, analytic_qubits, analytic_tcount, analytic_tdepth,
                             average_savings, design_catalog, improvement_fraction,
                             measure_resources, t_depth, tcount_summation)
from qsqrt.simulate import apply_classical_batch, apply_gates_int, equal_up_to_phase, unitary_of
from qsqrt.sqrt import build_sqrt_circuit, nonrestoring_sqrt_oracle, verify_circuit

DESIGNS = {d.name: d for d in design_catalog()}


@contextmanager
def criterion(capsys, tag, title):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\n[{tag}] FAIL  {title}")
        raise
    with capsys.disabled():
        print(f"\n[{tag}] PASS  {title}")


def test_a1_exhaustive_functional(capsys):
    with criterion(capsys, "A1", "exhaustive sqrt, n in {4,6,8,10}"):
        start = time.perf_counter()
        for n in (4, 6, 8, 10):
            c, layout = build_sqrt_circuit(n)
            res = verify_circuit(c, layout)
            assert res.inputs == 1 << (n - 1)
            assert res.ok, res.mismatches[:3]
        assert time.perf_counter() - start < 30


def test_a2_appendix_trace(capsys):
    with criterion(capsys, "A2", "a=26, n=6 trace matches the worked example"):
        res = nonrestoring_sqrt_oracle(26, 6)
        assert res.trace.pairs() == [
            ("000001", "000001"), ("000000", "000001"), ("000010", "000101"),
            ("111101", "000101"), ("110110", "001011"), ("000001", "001011"),
            ("000001", "010101"), ("000001", "010101"),
        ]
        assert (res.root, res.remainder) == (5, 1)


def test_a3_tcount_forms_agree(capsys):
    with criterion(capsys, "A3", "T-count summation == closed form, even n in 4..512"):
        for n in range(4, 513, 2):
            closed = Fraction(7, 2) * n * n + 21 * n - 28
            assert tcount_summation(n) == closed == analytic_tcount(n).total
        assert [analytic_tcount(n).total for n in (4, 6, 512)] == [112, 224, 928228]


def test_a4_tdepth_accounting(capsys):
    with criterion(capsys, "A4", "analytic T-depth 5n+3, z-register 2n smaller"):
        for n in range(4, 513, 2):
            td = analytic_tdepth(n)
            assert td.total == td.on_r == 5 * n + 3
            assert td.on_z == 2 * n < td.total
            if n >= 6:
                assert (td.part1, td.part2, td.part3_on_r) == (10, 5 * n - 20, 13)


def test_a5_qubits(capsys):
    with criterion(capsys, "A5", "2n+1 qubits"):
        for n in (4, 6, 8, 10):
            assert build_sqrt_circuit(n)[0].width == 2 * n + 1 == analytic_qubits(n)
        assert analytic_qubits(512) == 1025


def _perm(width, fn):
    m = np.zeros((1 << width, 1 << width))
    for i in range(1 << width):
        m[fn(i), i] = 1
    return m


def test_a6_toffoli_decomposition(capsys):
    with criterion(capsys, "A6", "Toffoli: T-count 7, T-depth 3, unitary within 1e-10"):
        gates = expand_ccx(0, 1, 2)
        assert sum(g.kind in (GateKind.T, GateKind.TDG) for g in gates) == 7
        assert t_depth(gates, 3)[0] == 3
        toffoli = _perm(3, lambda i: i ^ (((i >> 0) & (i >> 1) & 1) << 2))
        u = unitary_of(Circuit(3, tuple(gates), Level.CLIFFORD_T))
        assert equal_up_to_phase(u, toffoli) < 1e-10
        for other in (expand_swap(0, 1), expand_ncx(0, 1)):
            assert measure_resources(Circuit(2, tuple(other), Level.CLIFFORD_T)).t_count == 0


ENDPOINTS = [
    ("design-1", "t_count", 4, "33.33"), ("design-1", "t_count", 512, "49.61"),
    ("design-2", "t_count", 4, "98.41"), ("design-2", "t_count", 512, "99.16"),
    ("design-3", "t_count", 4, "55.56"), ("design-3", "t_count", 512, "33.84"),
    ("design-4", "t_count", 512, "32.64"),
    ("design-1", "qubits", 4, "65.38"), ("design-1", "qubits", 512, "98.51"),
    ("design-2", "qubits", 4, "94.94"), ("design-2", "qubits", 512, "95.24"),
    ("design-3", "qubits", 4, "76.32"), ("design-3", "qubits", 512, "99.24"),
    ("design-4", "qubits", 4, "62.50"), ("design-4", "qubits", 512, "99.23"),
]


def test_a7_comparison_endpoints(capsys):
    with criterion(capsys, "A7", "comparison endpoints within 0.01 points"):
        for design, metric, n, expected in ENDPOINTS:
            got = improvement_fraction(DESIGNS[design], metric, n)
            assert abs(got - Fraction(Decimal(expected))) <= Fraction(1, 100), \
                (design, metric, n, float(got), expected)


def test_a8_non_reproducible_items(capsys):
    with criterion(capsys, "A8", "averages reported, measured/analytic ratio stable, blocks exact"):
        for ns in CANDIDATE_SETS.values():
            avg = average_savings(ns)
            assert set(avg) == {"design-1", "design-2", "design-3", "design-4"}

        ratios = [Fraction(measure_resources(build_sqrt_circuit(n)[0]).t_count,
                           analytic_tcount(n).total) for n in (16, 24, 32)]
        assert max(ratios) <= min(ratios) * Fraction(11, 10)

        start = time.perf_counter()
        for w in range(2, 7):
            mask = (1 << w) - 1
            ctrl, target, operand = 0, list(range(1, w + 1)), list(range(w + 1, 2 * w + 1))
            addsub = build_addsub(ctrl, target, operand)
            cadd = build_ctrl_add(ctrl, target, operand)
            for c in (0, 1):
                for t in range(1 << w):
                    for f in range(1 << w):
                        x = c | (t << 1) | (f << (w + 1))
                        want_as = ((t - f) if c else (t + f)) & mask
                        want_ca = ((t + f) & mask) if c else t
                        assert apply_gates_int(addsub, x) == c | (want_as << 1) | (f << (w + 1))
                        assert apply_gates_int(cadd, x) == c | (want_ca << 1) | (f << (w + 1))
        assert time.perf_counter() - start < 10


def test_a9_reversibility_and_serialization(capsys):
    with criterion(capsys, "A9", "circuit then inverse is identity; netlist round trip is a fixpoint"):
        for n in (4, 6):
            c, layout = build_sqrt_circuit(n)
            a = np.arange(1 << (n - 1))
            states = np.zeros((a.size, c.width), dtype=bool)
            for k in range(n):
                states[:, k] = (a >> k) & 1
            states[:, layout.F(0)] = True
            both = c.extend(invert(c).gates)
            assert (apply_classical_batch(both, states) == states).all()

        for n in range(4, 17, 2):
            c, _ = build_sqrt_circuit(n)
            for circ in (c, expand_circuit(c)):
                text = emit_netlist(circ)
                assert emit_netlist(parse_netlist(text)) == text
