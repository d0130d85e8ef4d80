"""Gate/circuit model and the basis-generation circuit builder."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .basis_index import BasisIndex, counts_ML
from .errors import QubitOutOfRange

H, Z, X, CNOT = "H", "Z", "X", "CNOT"
KINDS = (H, Z, X, CNOT)
SINGLE_QUBIT_KINDS = (H, Z, X)

ON_ONE = "on_one"
ON_ZERO = "on_zero"


@dataclass(frozen=True)
class Gate:
    kind: str
    target: int
    control: Optional[int] = None
    polarity: str = ON_ONE

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.polarity not in (ON_ONE, ON_ZERO):
            raise ValueError(f"unknown polarity {self.polarity!r}")
        if (self.control is not None) != (self.kind == CNOT):
            raise ValueError("a control qubit is required for CNOT and only for CNOT")
        if self.target < 0 or (self.control is not None and self.control < 0):
            raise QubitOutOfRange(f"negative qubit index in {self}")
        if self.control is not None and self.control == self.target:
            raise ValueError(f"control and target coincide on qubit {self.target}")

    @property
    def qubits(self) -> tuple[int, ...]:
        if self.control is None:
            return (self.target,)
        return (self.control, self.target)

    def render(self) -> str:
        if self.kind == CNOT:
            name = "CX" if self.polarity == ON_ONE else "CX0"
            return f"{name} {self.control} {self.target}"
        return f"{self.kind} {self.target}"


def h(q: int) -> Gate:
    return Gate(H, q)


def z(q: int) -> Gate:
    return Gate(Z, q)


def x(q: int) -> Gate:
    return Gate(X, q)


def cnot(control: int, target: int, polarity: str = ON_ONE) -> Gate:
    return Gate(CNOT, target, control, polarity)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over a fixed register width.

    Gates are applied in list order.  The width is explicit, so idle
    qubits and empty circuits are representable.
    """

    n_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError(f"circuit width must be positive, got {self.n_qubits}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.qubits) >= self.n_qubits:
                raise QubitOutOfRange(f"gate {g.render()!r} exceeds width {self.n_qubits}")

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def extended(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.n_qubits, self.gates + tuple(gates))

    def render(self) -> str:
        """Debug text form, one gate per line (``H 0``, ``CX 0 2``, ``CX0 0 2``)."""
        return "".join(g.render() + "\n" for g in self.gates)


@dataclass(frozen=True)
class GateCounts:
    cnot_type: int
    single_qubit: int


def build_basis_circuit(index: BasisIndex) -> Circuit:
    """Circuit preparing the basis vector named by ``index`` from |0...0>.

    H on qubit 0, then Z on qubit 0 when the sign is -1, then one CNOT from
    qubit 0 to each qubit j >= 1 whose polarity is given by pattern bit j-1.
    """
    gates = [h(0)]
    if index.sign == -1:
        gates.append(z(0))
    for j, bit in enumerate(index.pattern, start=1):
        gates.append(cnot(0, j, ON_ONE if bit else ON_ZERO))
    return Circuit(index.n_qubits, tuple(gates))


def lower_inverted_controls(circuit: Circuit) -> Circuit:
    # CNOT^(0)(c->t) == CNOT(c->t) . X(t); X on the target commutes with the CNOT.
    out: list[Gate] = []
    for g in circuit.gates:
        if g.kind == CNOT and g.polarity == ON_ZERO:
            out.append(x(g.target))
            out.append(cnot(g.control, g.target, ON_ONE))
        else:
            out.append(g)
    return Circuit(circuit.n_qubits, tuple(out))


def tally(circuit: Circuit) -> GateCounts:
    """Literal gate count of a circuit, split into CNOT-type and single-qubit gates."""
    n_cx = sum(1 for g in circuit.gates if g.kind == CNOT)
    return GateCounts(n_cx, len(circuit.gates) - n_cx)


def gate_counts(index: BasisIndex) -> GateCounts:
    """Closed-form resource count for the lowered basis circuit.

    N-1 CNOT-type gates, and N-M single-qubit gates (N-M+1 with the Z), where
    M is the number of standard controls in the pattern.
    """
    n = index.n_qubits
    m, _ = counts_ML(index.pattern)
    single = n - m if index.sign == 1 else n - m + 1
    return GateCounts(n - 1, single)
