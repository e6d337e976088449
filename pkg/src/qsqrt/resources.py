"""
Resource accounting.

Measured costs come from gate lists: T-count, T-depth, qubits. Analytic
costs come from closed-form cost models of the square-root design and of
the four earlier designs it is compared against. All formula evaluation
is exact (``Fraction``); percentages are rounded half-up to two decimals.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

from .circuit import Circuit, Gate, GateKind, Level
from .cliffordt import expand_circuit
from .errors import DomainError
from .sqrt import check_width

_T_KINDS = frozenset({GateKind.T, GateKind.TDG})
MAX_COMPARE_N = 512


@dataclass(frozen=True)
class ResourceReport:
    t_count: int
    t_depth_global: int
    t_depth_per_qubit_max: int
    qubit_count: int
    gate_histogram: dict[str, int]
    toffoli_count: int | None  # None for Clifford+T input: no macro gates to count


def t_depth(gates: Iterable[Gate], width: int) -> tuple[int, int]:
    """Return ``(global, per_qubit_max)`` T-depth of a Clifford+T gate list.

    Gates are scheduled ASAP into T layers: a gate sits at the highest T
    layer reached by any of its operands, and a T/T-dagger opens the next
    one. Clifford gates add dependencies but no layers. The global depth is
    the number of T layers; the per-qubit figure is the largest number of T
    layers in which a single qubit is acted on by a T gate.
    """
    level = [0] * width
    own = [0] * width
    for g in gates:
        top = max(level[q] for q in g.qubits)
        if g.kind in _T_KINDS:
            top += 1
            own[g.qubits[0]] += 1
        for q in g.qubits:
            level[q] = top
    return max(level, default=0), max(own, default=0)


def measure_resources(c: Circuit) -> ResourceReport:
    """Measured cost. Macro circuits are costed through their Clifford+T expansion."""
    lowered = expand_circuit(c) if c.level is Level.MACRO else c
    t_count = sum(1 for g in lowered.gates if g.kind in _T_KINDS)
    depth, per_qubit = t_depth(lowered.gates, c.width)
    hist = Counter(g.kind.mnemonic for g in c.gates)
    toffolis = c.count(GateKind.CCX) if c.level is Level.MACRO else None
    return ResourceReport(t_count, depth, per_qubit, c.width, dict(sorted(hist.items())),
                          toffolis)


# --- analytic model of the proposed design ---------------------------------

@dataclass(frozen=True)
class TCountBreakdown:
    part1: int
    part2: tuple[tuple[int, int], ...]  # (iteration i, T-count)
    part3: int
    total: int


def _addsub_tcount(w: int) -> int:
    return 14 * w - 14


def _ctrl_add_tcount(w: int) -> int:
    return 21 * w - 14


def tcount_summation(n: int) -> int:
    """T-count as a sum over loop iterations, i = 1 .. n/2 - 1, plus the restore."""
    return sum(28 * i + 14 for i in range(1, n // 2)) + 21 * n - 14


def tcount_closed_form(n: int) -> int:
    return (7 * n * n + 42 * n - 56) // 2


def analytic_tcount(n: int) -> TCountBreakdown:
    check_width(n)
    part1 = _addsub_tcount(4)
    part2 = tuple((i, _addsub_tcount(2 * i + 2)) for i in range(2, n // 2))
    part3 = _ctrl_add_tcount(n)
    total = tcount_closed_form(n)
    assert part1 + sum(t for _, t in part2) + part3 == total == tcount_summation(n)
    return TCountBreakdown(part1, part2, part3, total)


@dataclass(frozen=True)
class TDepthBreakdown:
    part1: int
    part2: int
    part3_on_r: int
    on_r: int   # layers seen by R_{n-2} and R_{n-3}
    on_z: int   # layers seen by z
    total: int


# Per-block T-depth figures of the cost model.
ADDSUB_TDEPTH = 10
CTRL_ADD_TDEPTH_ON_R = 13


def analytic_tdepth(n: int) -> TDepthBreakdown:
    check_width(n)
    part1 = ADDSUB_TDEPTH
    part2 = ADDSUB_TDEPTH * (n // 2 - 2)
    assert part2 == 5 * n - 20
    on_r = part1 + part2 + CTRL_ADD_TDEPTH_ON_R
    on_z = 2 * n
    assert on_r == 5 * n + 3 and on_r > on_z
    return TDepthBreakdown(part1, part2, CTRL_ADD_TDEPTH_ON_R, on_r, on_z, max(on_r, on_z))


def analytic_qubits(n: int) -> int:
    check_width(n)
    return 2 * n + 1


# --- design comparison -----------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Polynomial in n with exact rational coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coeffs: int | str | Fraction) -> Poly:
        return cls(tuple(Fraction(c) for c in coeffs))

    def __call__(self, n: int) -> Fraction:
        return sum((c * n ** k for k, c in enumerate(self.coeffs)), Fraction(0))

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            var = ("", "n", "n^2")[k]
            body = var if abs(c) == 1 and var else f"{abs(c)}*{var}" if var else str(abs(c))
            if terms:
                terms.append(f"{'-' if c < 0 else '+'} {body}")
            else:
                terms.append(f"-{body}" if c < 0 else body)
        return " ".join(terms) or "0"


@dataclass(frozen=True)
class DesignCostFormula:
    name: str
    t_count: Poly
    t_depth: Poly | None
    qubits: Poly
    notes: str = ""


PROPOSED = DesignCostFormula(
    "proposed", Poly.of(-28, 21, "7/2"), Poly.of(3, 5), Poly.of(1, 2),
    "non-restoring, 2n+1 qubits, no garbage")


def design_catalog() -> list[DesignCostFormula]:
    return [
        DesignCostFormula("design-1", Poly.of(0, 14, 7), Poly.of(8, 3), Poly.of(-2, 6, "1/4"),
                          "non-restoring; garbage removed by Bennett's scheme"),
        DesignCostFormula("design-2", Poly.of(-364, 168, 420), None, Poly.of(10, 42),
                          "Newton iteration at b = 4 bits of accuracy (10 multiplications, "
                          "6 additions); qubits approximate"),
        DesignCostFormula("design-3", Poly.of(-42, "105/2", "21/4"), None, Poly.of(2, 7, "1/2"),
                          "non-restoring, controlled subtractors; qubits approximate"),
        DesignCostFormula("design-4", Poly.of(-14, "7/2", "21/4"), None, Poly.of(4, 3, "1/2"),
                          "non-restoring, gate-count optimized; qubits approximate"),
        PROPOSED,
    ]


def check_compare_n(n: int) -> None:
    check_width(n)
    if n > MAX_COMPARE_N:
        raise DomainError(f"comparison range is 4..{MAX_COMPARE_N}, got {n}")


def round_pct(x: Fraction) -> Decimal:
    # 40 significant digits leave two-place rounding unaffected.
    with localcontext() as ctx:
        ctx.prec = 40
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return d.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


def improvement_fraction(baseline: DesignCostFormula, metric: str, n: int,
                         proposed: DesignCostFormula = PROPOSED) -> Fraction:
    """Unrounded ``100 * (1 - proposed / baseline)``; negative when the baseline is cheaper."""
    check_compare_n(n)
    if metric not in ("t_count", "qubits"):
        raise DomainError(f"metric must be 't_count' or 'qubits', got {metric!r}")
    base = getattr(baseline, metric)(n)
    return 100 * (1 - getattr(proposed, metric)(n) / base)


def improvement_ratio(baseline: DesignCostFormula, metric: str, n: int,
                      proposed: DesignCostFormula = PROPOSED) -> Decimal:
    return round_pct(improvement_fraction(baseline, metric, n, proposed))


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    design: str
    t_count: Fraction
    t_depth: Fraction | None
    qubits: Fraction
    tcount_saving_pct: Decimal
    qubit_saving_pct: Decimal


def comparison_table(n_values: Sequence[int],
                     designs: Sequence[DesignCostFormula] | None = None) -> list[ComparisonRow]:
    designs = list(designs) if designs is not None else design_catalog()
    for n in n_values:
        check_compare_n(n)
    rows = []
    for n in n_values:
        for d in designs:
            rows.append(ComparisonRow(
                n, d.name, d.t_count(n), None if d.t_depth is None else d.t_depth(n),
                d.qubits(n), improvement_ratio(d, "t_count", n),
                improvement_ratio(d, "qubits", n)))
    return rows


CSV_HEADER = ("n", "design", "t_count", "t_depth", "qubits",
              "tcount_saving_pct", "qubit_saving_pct")


def _num(x: Fraction | None) -> str:
    if x is None:
        return "NA"
    return str(x.numerator) if x.denominator == 1 else str(x)


def table_to_csv(rows: Iterable[ComparisonRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, r.design, _num(r.t_count), _num(r.t_depth), _num(r.qubits),
                    r.tcount_saving_pct, r.qubit_saving_pct])
    return buf.getvalue()


def table_to_text(rows: Sequence[ComparisonRow]) -> str:
    cells = [CSV_HEADER] + [
        (str(r.n), r.design, _num(r.t_count), _num(r.t_depth), _num(r.qubits),
         f"{r.tcount_saving_pct}%", f"{r.qubit_saving_pct}%") for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(CSV_HEADER))]
    lines = ["  ".join(c.rjust(wd) for c, wd in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * wd for wd in widths))
    if any(r.tcount_saving_pct < 0 or r.qubit_saving_pct < 0 for r in rows):
        lines.append("* negative savings: the baseline is cheaper than the proposed design at that n")
    return "\n".join(lines)


# --- averaged savings ------------------------------------------------------

CANDIDATE_SETS = {
    "even n in 4..512": tuple(range(4, MAX_COMPARE_N + 1, 2)),
    "powers of two in 4..512": tuple(2 ** k for k in range(2, 10)),
}


def average_savings(n_values: Sequence[int], clamp_negative: bool = False
                    ) -> dict[str, tuple[Decimal, Decimal]]:
    """Mean (t_count, qubits) saving per baseline design over ``n_values``."""
    out = {}
    for d in design_catalog():
        if d.name == PROPOSED.name:
            continue
        means = []
        for metric in ("t_count", "qubits"):
            vals = [improvement_fraction(d, metric, n) for n in n_values]
            if clamp_negative:
                vals = [max(v, Fraction(0)) for v in vals]
            means.append(round_pct(sum(vals, Fraction(0)) / len(vals)))
        out[d.name] = (means[0], means[1])
    return out
