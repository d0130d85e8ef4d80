"""Dense statevector engine.

Qubit 0 is the most significant bit of the amplitude index, so a ket printed
as ``|q0 q1 ... q(n-1)>`` has index ``int("q0q1...", 2)``.  Gates act in
place through strided numpy views: for target ``t`` the amplitude array is
viewed as ``(2**t, 2, 2**(n-1-t))`` and the middle axis selects the target
bit, so every update is a pairwise swap/mix of disjoint amplitude pairs.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from .circuit import CNOT, H, ON_ONE, X, Z, Circuit, Gate
from .errors import LabelLengthMismatch, QubitOutOfRange, TooManyQubits, WidthMismatch

MAX_QUBITS = 30
INV_SQRT2 = 1 / math.sqrt(2)


def check_width(n: int, force: bool = False) -> None:
    if n > MAX_QUBITS and not force:
        raise TooManyQubits(
            f"n={n} needs {16 * 2**n / 2**30:.0f} GiB of amplitudes; "
            f"the limit is {MAX_QUBITS} qubits unless forced"
        )


class Statevector:
    """A pure state of ``n_qubits`` qubits as ``2**n`` complex128 amplitudes."""

    __slots__ = ("n_qubits", "amplitudes")

    def __init__(self, n_qubits: int, amplitudes: np.ndarray):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (2**n_qubits,):
            raise WidthMismatch(
                f"expected {2**n_qubits} amplitudes for {n_qubits} qubits, got {amplitudes.shape}"
            )
        self.n_qubits = n_qubits
        self.amplitudes = amplitudes

    def copy(self) -> "Statevector":
        return Statevector(self.n_qubits, self.amplitudes.copy())

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def __repr__(self):
        return f"Statevector(n_qubits={self.n_qubits}, nnz={np.count_nonzero(self.amplitudes)})"


def label_to_index(label: Sequence[int]) -> int:
    k = 0
    for b in label:
        k = (k << 1) | int(b)
    return k


def zero_state(n: int, force: bool = False) -> Statevector:
    return init_basis_state(n, [0] * n, force=force)


def init_basis_state(n: int, label: Sequence[int], force: bool = False) -> Statevector:
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    if len(label) != n:
        raise LabelLengthMismatch(f"label has {len(label)} bits, expected {n}")
    check_width(n, force)
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[label_to_index(label)] = 1.0
    return Statevector(n, amps)


def _check_qubit(state: Statevector, q: int) -> None:
    if not 0 <= q < state.n_qubits:
        raise QubitOutOfRange(f"qubit {q} outside a {state.n_qubits}-qubit register")


def _swap(a: np.ndarray, b: np.ndarray) -> None:
    tmp = a.copy()
    a[...] = b
    b[...] = tmp


def apply_gate(state: Statevector, gate: Gate) -> None:
    """Apply ``gate`` to ``state`` in place."""
    n = state.n_qubits
    for q in gate.qubits:
        _check_qubit(state, q)
    t = gate.target

    if gate.kind == CNOT:
        c = gate.control
        cval = 1 if gate.polarity == ON_ONE else 0
        lo, hi = min(c, t), max(c, t)
        v = state.amplitudes.reshape(2**lo, 2, 2 ** (hi - lo - 1), 2, 2 ** (n - 1 - hi))
        if c < t:
            sub = v[:, cval]
            _swap(sub[:, :, 0], sub[:, :, 1])
        else:
            sub = v[:, :, :, cval]
            _swap(sub[:, 0], sub[:, 1])
        return

    v = state.amplitudes.reshape(2**t, 2, 2 ** (n - 1 - t))
    if gate.kind == H:
        a = v[:, 0, :].copy()
        b = v[:, 1, :]
        v[:, 0, :] = (a + b) * INV_SQRT2
        v[:, 1, :] = (a - b) * INV_SQRT2
    elif gate.kind == Z:
        v[:, 1, :] *= -1
    elif gate.kind == X:
        _swap(v[:, 0, :], v[:, 1, :])
    else:  # pragma: no cover - Gate validates kinds
        raise ValueError(gate.kind)


def run(
    circuit: Circuit, initial: Optional[Statevector] = None, force: bool = False
) -> Statevector:
    """Simulate ``circuit`` on a copy of ``initial`` (default ``|0...0>``)."""
    if initial is None:
        state = zero_state(circuit.n_qubits, force=force)
    else:
        if initial.n_qubits != circuit.n_qubits:
            raise WidthMismatch(
                f"circuit has {circuit.n_qubits} qubits, initial state has {initial.n_qubits}"
            )
        state = initial.copy()
    for g in circuit.gates:
        apply_gate(state, g)
    return state


def inner_product(a: Statevector, b: Statevector) -> complex:
    """<a|b>, conjugating the first argument."""
    if a.n_qubits != b.n_qubits:
        raise WidthMismatch(f"{a.n_qubits} vs {b.n_qubits} qubits")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def marginal_p0(state: Statevector, qubit: int) -> float:
    _check_qubit(state, qubit)
    v = state.amplitudes.reshape(2**qubit, 2, -1)[:, 0, :]
    return float(np.sum(v.real**2 + v.imag**2))


def reduced_density_matrix(state: Statevector, qubit: int) -> np.ndarray:
    """2x2 reduced density matrix of one qubit, tracing out all others."""
    _check_qubit(state, qubit)
    v = state.amplitudes.reshape(2**qubit, 2, -1)
    rho = np.empty((2, 2), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            rho[i, j] = np.vdot(v[:, j, :], v[:, i, :])
    return rho


def single_qubit_purity(state: Statevector, qubit: int) -> float:
    """Tr(rho^2) of one qubit's reduced state: 0.5 maximally mixed, 1.0 pure."""
    rho = reduced_density_matrix(state, qubit)
    return float(np.sum(np.abs(rho) ** 2))


def dump_amplitudes(state: Statevector) -> str:
    """One ``<bitstring> <re> <im>`` line per nonzero amplitude, 17 significant digits."""
    n = state.n_qubits
    lines = []
    for k in np.flatnonzero(state.amplitudes):
        a = state.amplitudes[k]
        lines.append(f"{int(k):0{n}b} {a.real:.17g} {a.imag:.17g}\n")
    return "".join(lines)


def parse_amplitudes(text: str, n: int) -> Statevector:
    """Inverse of :func:`dump_amplitudes`."""
    amps = np.zeros(2**n, dtype=np.complex128)
    for line in text.splitlines():
        if not line.strip():
            continue
        bits, re, im = line.split()
        if len(bits) != n:
            raise LabelLengthMismatch(f"bitstring {bits!r} is not {n} bits long")
        amps[int(bits, 2)] = complex(float(re), float(im))
    return Statevector(n, amps)
