"""OpenQASM 2.0 export and a strict parser for the exported subset.

The subset is the fixed header, one ``qreg`` declaration, and statements
``h``/``z``/``x`` on one qubit or ``cx`` on two.  Inverted controls have no
QASM 2.0 spelling, so they are lowered to ``x`` + ``cx`` before export.
Lines starting with ``//`` are comments and are skipped by the parser.
"""

from __future__ import annotations

import re
from typing import Optional

from .circuit import CNOT, ON_ONE, Circuit, Gate, cnot, h, lower_inverted_controls, x, z
from .errors import QasmSyntaxError, RegisterMismatch, UnsupportedGate

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'

_QREG = re.compile(r"qreg\s+(\w+)\s*\[\s*(\d+)\s*\]\s*;")
_STMT = re.compile(r"([a-z_][a-z0-9_]*)\s+(.*?)\s*;")
_ARG = re.compile(r"(\w+)\s*\[\s*(\d+)\s*\]")
_ONE_QUBIT = {"h": h, "z": z, "x": x}
_KNOWN_UNSUPPORTED = {
    "ccx", "cz", "cy", "ch", "swap", "y", "s", "sdg", "t", "tdg", "rx", "ry", "rz",
    "u", "u1", "u2", "u3", "id", "measure", "reset", "barrier", "creg", "gate", "if",
}


def _gate_stmt(g: Gate) -> str:
    if g.kind == CNOT:
        return f"cx q[{g.control}],q[{g.target}];"
    return f"{g.kind.lower()} q[{g.target}];"


def export_qasm(circuit: Circuit, provenance: Optional[str] = None) -> str:
    """Serialise ``circuit`` (after lowering) to QASM text.

    ``provenance``, when given, is written as a ``// ...`` comment line after
    the header, e.g. ``pattern=10 sign=- seed=7``.
    """
    lines = [HEADER]
    if provenance is not None:
        lines.append(f"// {provenance}\n")
    lines.append(f"qreg q[{circuit.n_qubits}];\n")
    for g in lower_inverted_controls(circuit).gates:
        lines.append(_gate_stmt(g) + "\n")
    return "".join(lines)


def parse_qasm(text: str) -> Circuit:
    """Parse text in the exported subset back into a :class:`Circuit`.

    Anything outside the subset raises; nothing is silently skipped except
    comments and blank lines.
    """
    lines = text.split("\n")
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        body.append((lineno, line))

    if len(body) < 2 or body[0][1] != "OPENQASM 2.0;":
        raise QasmSyntaxError("expected 'OPENQASM 2.0;' header", body[0][0] if body else 1)
    if body[1][1] != 'include "qelib1.inc";':
        raise QasmSyntaxError('expected \'include "qelib1.inc";\'', body[1][0])

    if len(body) < 3:
        raise QasmSyntaxError("missing qreg declaration", len(lines))
    lineno, line = body[2]
    m = _QREG.fullmatch(line)
    if m is None:
        raise QasmSyntaxError(f"expected qreg declaration, got {line!r}", lineno)
    reg, width = m.group(1), int(m.group(2))
    if width < 1:
        raise RegisterMismatch("register must hold at least one qubit", lineno)

    gates: list[Gate] = []
    for lineno, line in body[3:]:
        m = _STMT.fullmatch(line)
        if m is None:
            raise QasmSyntaxError(f"cannot parse statement {line!r}", lineno)
        name, argtext = m.group(1), m.group(2)
        if name == "qreg":
            raise RegisterMismatch("only one quantum register is supported", lineno)
        if name not in _ONE_QUBIT and name != "cx":
            if name in _KNOWN_UNSUPPORTED or _ARG.search(argtext):
                raise UnsupportedGate(f"gate {name!r} is outside the supported subset", lineno)
            raise QasmSyntaxError(f"unknown statement {name!r}", lineno)

        args = [a.strip() for a in argtext.split(",")]
        qubits = []
        for a in args:
            am = _ARG.fullmatch(a)
            if am is None:
                raise QasmSyntaxError(f"bad qubit argument {a!r}", lineno)
            if am.group(1) != reg:
                raise RegisterMismatch(f"unknown register {am.group(1)!r}", lineno)
            q = int(am.group(2))
            if q >= width:
                raise RegisterMismatch(f"index {q} outside {reg}[{width}]", lineno)
            qubits.append(q)

        expected = 2 if name == "cx" else 1
        if len(qubits) != expected:
            raise QasmSyntaxError(f"{name} takes {expected} qubit(s), got {len(qubits)}", lineno)
        if name == "cx":
            if qubits[0] == qubits[1]:
                raise QasmSyntaxError("cx control and target coincide", lineno)
            gates.append(cnot(qubits[0], qubits[1], ON_ONE))
        else:
            gates.append(_ONE_QUBIT[name](qubits[0]))
    return Circuit(width, tuple(gates))
