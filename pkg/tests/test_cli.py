import re

import pytest

from qsqrt.circuit import Circuit, emit_netlist, parse_netlist
from qsqrt.cli import main
from qsqrt.sqrt import build_sqrt_circuit


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_synth_netlist(capsys):
    code, out, _ = run(capsys, "synth", "--n", "6", "--format", "netlist")
    assert code == 0
    assert out.splitlines()[1] == "width 13"
    assert parse_netlist(out) == build_sqrt_circuit(6)[0]


def test_synth_bad_n(capsys):
    code, _, err = run(capsys, "synth", "--n", "5")
    assert code == 2 and "n must be even and ≥ 4" in err


def test_synth_cliffordt(capsys):
    code, out, _ = run(capsys, "synth", "--n", "4", "--level", "cliffordt")
    assert code == 0
    mnemonics = {line.split()[0] for line in out.splitlines()
                 if line and not line.startswith(("#", "width", "reg"))}
    assert mnemonics <= {"x", "h", "t", "tdg", "s", "sdg", "cx"}
    assert {"t", "tdg", "h"} <= mnemonics


def test_synth_qasm_to_file(tmp_path, capsys):
    path = tmp_path / "c.qasm"
    code, out, _ = run(capsys, "synth", "--n", "4", "--format", "qasm", "--out", str(path))
    assert code == 0 and out == ""
    text = path.read_text()
    assert "qreg q[9];" in text and "ncx" not in text


def test_synth_io_error(tmp_path, capsys):
    code, _, _ = run(capsys, "synth", "--n", "4", "--out", str(tmp_path / "missing" / "x"))
    assert code == 3


def test_simulate(capsys):
    assert run(capsys, "simulate", "--n", "6", "--a", "26")[1].strip() == \
        "Y=5 remainder=1 restored=true"
    assert run(capsys, "simulate", "--n", "4", "--a", "0")[1].strip() == \
        "Y=0 remainder=0 restored=true"


def test_simulate_trace(capsys):
    code, out, _ = run(capsys, "simulate", "--n", "6", "--a", "26", "--trace")
    assert code == 0
    rows = re.findall(r"^([01]{6})  ([01]{6})", out, re.M)
    assert ("111101", "000101") in rows and ("110110", "001011") in rows
    assert len(rows) == 8


def test_simulate_out_of_range(capsys):
    assert run(capsys, "simulate", "--n", "4", "--a", "8")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4,6,8,10")
    assert code == 0
    assert "n=10: 512 inputs, all pass" in out


def test_verify_bad_n(capsys):
    assert run(capsys, "verify", "--n", "3")[0] == 2
    assert run(capsys, "verify", "--n", "14")[0] == 2


def test_verify_mutant(tmp_path, capsys):
    c, _ = build_sqrt_circuit(4)
    mutant = Circuit(c.width, c.gates[1:], c.level, c.layout)
    path = tmp_path / "mutant.txt"
    path.write_text(emit_netlist(mutant))
    code, out, _ = run(capsys, "verify", "--n", "4", "--netlist", str(path))
    assert code == 1 and "first counterexample" in out


def test_verify_netlist_missing(tmp_path, capsys):
    assert run(capsys, "verify", "--n", "4", "--netlist", str(tmp_path / "nope"))[0] == 3


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--n", "4")
    assert code == 0
    assert re.search(r"T-count\s+112\b", out)
    assert re.search(r"T-depth\s+23\b", out)
    assert re.search(r"qubits\s+9\b", out)


def test_report_measured_qubits(capsys):
    out = run(capsys, "report", "--n", "6")[1]
    assert re.findall(r"qubits\s+(\d+)", out) == ["13", "13"]


def test_report_large(capsys):
    out = run(capsys, "report", "--n", "512")[1]
    assert "928228" in out and "1025" in out and "measured" not in out


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--n", "4,512")
    assert code == 0
    for pct in ("33.33%", "49.61%", "94.94%", "95.24%"):
        assert pct in out


def test_compare_csv(capsys):
    code, out, _ = run(capsys, "compare", "--n", "4", "--csv")
    assert code == 0
    assert out.splitlines()[0] == "n,design,t_count,t_depth,qubits,tcount_saving_pct,qubit_saving_pct"


def test_compare_averages(capsys):
    out = run(capsys, "compare", "--n", "4", "--averages")[1]
    assert "powers of two in 4..512" in out and "43.44" in out


def test_compare_out_of_range(capsys):
    assert run(capsys, "compare", "--n", "600")[0] == 2


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["synth"])
    assert exc.value.code == 2


def test_deterministic(capsys):
    first = run(capsys, "synth", "--n", "8")[1]
    assert run(capsys, "synth", "--n", "8")[1] == first
