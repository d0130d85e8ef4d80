"""Closed-form basis states and the verification suite.

Every basis vector is a two-term state ``(|0,~p> + s|1,p>)/sqrt(2)`` where
``p`` is the control pattern, ``~p`` its complement and ``s`` the sign.
The checks here compare that closed form against simulated circuits and
prove orthonormality of the full basis, numerically (dense Gram matrix) or
exactly with integer arithmetic on the two-term form (sparse).
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .basis_index import BasisIndex, complement, from_ordinal, pattern_str, sign_str
from .circuit import Circuit, build_basis_circuit, gate_counts, lower_inverted_controls, tally
from .errors import TooFewQubits, TooManyQubits, WidthMismatch
from .statevector import (
    INV_SQRT2,
    Statevector,
    check_width,
    label_to_index,
    marginal_p0,
    run,
    single_qubit_purity,
)

STATE_TOL = 1e-12
GRAM_TOL = 1e-10
DENSE_MAX_QUBITS = 14
SPARSE_MAX_QUBITS = 64


@dataclass(frozen=True)
class SparseBasisState:
    n_qubits: int
    label_a: tuple[int, ...]
    label_b: tuple[int, ...]
    sign: int

    def __post_init__(self):
        if len(self.label_a) != self.n_qubits or len(self.label_b) != self.n_qubits:
            raise ValueError("label length does not match n_qubits")
        if self.label_a[0] != 0 or self.label_b[0] != 1:
            raise ValueError("first term must start with 0 and second term with 1")
        if self.label_a[1:] != complement(self.label_b[1:]):
            raise ValueError("trailing bits of the two terms must be complementary")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @property
    def index_a(self) -> int:
        return label_to_index(self.label_a)

    @property
    def index_b(self) -> int:
        return label_to_index(self.label_b)

    def terms(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """``((index, coeff), (index, coeff))`` with coefficients in units of 1/sqrt(2)."""
        return (self.index_a, 1), (self.index_b, self.sign)

    def __str__(self):
        a = "".join(map(str, self.label_a))
        b = "".join(map(str, self.label_b))
        return f"(|{a}> {sign_str(self.sign)} |{b}>)/sqrt(2)"


def closed_form_state(index: BasisIndex) -> SparseBasisState:
    label_b = (1,) + index.pattern
    label_a = (0,) + complement(index.pattern)
    return SparseBasisState(index.n_qubits, label_a, label_b, index.sign)


def to_dense(sparse: SparseBasisState, force: bool = False) -> Statevector:
    check_width(sparse.n_qubits, force)
    amps = np.zeros(2**sparse.n_qubits, dtype=np.complex128)
    amps[sparse.index_a] = INV_SQRT2
    amps[sparse.index_b] = sparse.sign * INV_SQRT2
    return Statevector(sparse.n_qubits, amps)


def sparse_overlap(a: SparseBasisState, b: SparseBasisState) -> Fraction:
    """Exact <a|b> from label matches and signs, without floating point."""
    if a.n_qubits != b.n_qubits:
        raise WidthMismatch(f"{a.n_qubits} vs {b.n_qubits} qubits")
    num = sum(ca * cb for ia, ca in a.terms() for ib, cb in b.terms() if ia == ib)
    # each coefficient carries a factor 1/sqrt(2), so products carry 1/2
    return Fraction(num, 2)


@dataclass
class Check:
    name: str
    passed: bool
    deviation: float
    tolerance: float


@dataclass
class VerificationReport:
    n: int
    mode: str
    checks: list[Check] = field(default_factory=list)
    seed: Optional[int] = None
    pattern: Optional[str] = None
    sign: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, deviation: float, tolerance: float) -> Check:
        check = Check(name, bool(deviation <= tolerance), float(deviation), float(tolerance))
        self.checks.append(check)
        return check

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "checks": [
                {"name": c.name, "pass": c.passed, "deviation": c.deviation, "tolerance": c.tolerance}
                for c in self.checks
            ],
            "seed": self.seed,
            "pattern": self.pattern,
            "sign": self.sign,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        seed = "none" if self.seed is None else str(self.seed)
        head = f"n={self.n} mode={self.mode}"
        if self.pattern is not None:
            head += f" pattern={self.pattern} sign={self.sign}"
        lines = [head + f" seed={seed}"]
        for c in self.checks:
            lines.append(
                f"check={c.name} pass={'true' if c.passed else 'false'} "
                f"deviation={c.deviation!r} tolerance={c.tolerance!r}"
            )
        lines.append(f"overall={'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"


def verify_index(
    index: BasisIndex,
    circuit: Optional[Circuit] = None,
    seed: Optional[int] = None,
    force: bool = False,
) -> VerificationReport:
    """Check one basis vector end to end.

    ``circuit`` overrides the built circuit, which is how a corrupted circuit
    can be checked against the closed form of ``index``.
    """
    n = index.n_qubits
    check_width(n, force)
    if circuit is None:
        circuit = build_basis_circuit(index)
    report = VerificationReport(
        n, "index", seed=seed, pattern=pattern_str(index.pattern), sign=sign_str(index.sign)
    )

    state = run(circuit, force=force)
    expected = to_dense(closed_form_state(index), force=force)
    report.add("equivalence", np.max(np.abs(state.amplitudes - expected.amplitudes)), STATE_TOL)
    for q in range(n):
        report.add(f"marginal_p0[{q}]", abs(marginal_p0(state, q) - 0.5), STATE_TOL)
    for q in range(n):
        report.add(f"purity[{q}]", abs(single_qubit_purity(state, q) - 0.5), STATE_TOL)

    literal = tally(lower_inverted_controls(circuit))
    formula = gate_counts(index)
    report.add("gate_counts.cnot", abs(literal.cnot_type - formula.cnot_type), 0)
    report.add("gate_counts.single", abs(literal.single_qubit - formula.single_qubit), 0)
    return report


def _simulate_basis(n: int, jobs: int) -> np.ndarray:
    """Row k holds the simulated amplitudes of basis vector with ordinal k."""
    def one(k: int) -> np.ndarray:
        return run(build_basis_circuit(from_ordinal(k, n))).amplitudes

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            rows = list(pool.map(one, range(2**n)))
    else:
        rows = [one(k) for k in range(2**n)]
    return np.stack(rows)


def _verify_dense(n: int, jobs: int, report: VerificationReport) -> None:
    states = _simulate_basis(n, jobs)
    dim = 2**n
    max_off = 0.0
    max_diag = 0.0
    block = 512
    for r0 in range(0, dim, block):
        r1 = min(r0 + block, dim)
        gram = states[r0:r1].conj() @ states.T
        rows = np.arange(r1 - r0)
        diag = gram[rows, rows + r0].copy()
        max_diag = max(max_diag, float(np.max(np.abs(diag - 1))))
        gram[rows, rows + r0] = 0
        max_off = max(max_off, float(np.max(np.abs(gram))))
    report.add("gram_diagonal", max_diag, GRAM_TOL)
    report.add("gram_offdiagonal", max_off, GRAM_TOL)


def basis_labels(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised closed form for every ordinal: ``(index_a, index_b, sign)``.

    Pattern bit j (ordinal bit j) lands on qubit j+1, i.e. amplitude-index
    bit n-2-j; qubit 0 is bit n-1.
    """
    k = np.arange(2**n, dtype=np.uint64)
    one = np.uint64(1)
    idx_b = np.full(2**n, one << np.uint64(n - 1), dtype=np.uint64)
    for j in range(n - 1):
        idx_b |= ((k >> np.uint64(j)) & one) << np.uint64(n - 2 - j)
    mask = np.uint64(2**n - 1)
    idx_a = idx_b ^ mask
    sign = np.where((k >> np.uint64(n - 1)) & one, -1, 1).astype(np.int64)
    return idx_a, idx_b, sign


def _verify_sparse(n: int, report: VerificationReport) -> None:
    dim = 2**n
    idx_a, idx_b, sign = basis_labels(n)
    states = np.arange(dim, dtype=np.int64)

    # one row per (state, label, coefficient) term; coefficients in units of 1/sqrt(2)
    term_state = np.concatenate([states, states])
    term_label = np.concatenate([idx_a, idx_b])
    term_coeff = np.concatenate([np.ones(dim, dtype=np.int64), sign])

    order = np.argsort(term_label, kind="stable")
    term_state, term_label, term_coeff = term_state[order], term_label[order], term_coeff[order]
    starts = np.flatnonzero(np.r_[True, term_label[1:] != term_label[:-1]])
    sizes = np.diff(np.r_[starts, term_label.size])

    # every pair of terms sharing a label contributes c_i * c_j to <i|j>
    pair_i, pair_j, pair_c = [], [], []
    for size in np.unique(sizes):
        group_starts = starts[sizes == size]
        for u in range(size):
            for v in range(size):
                pu, pv = group_starts + u, group_starts + v
                pair_i.append(term_state[pu])
                pair_j.append(term_state[pv])
                pair_c.append(term_coeff[pu] * term_coeff[pv])
    pi = np.concatenate(pair_i)
    pj = np.concatenate(pair_j)
    pc = np.concatenate(pair_c)
    keys, inverse = np.unique(pi * dim + pj, return_inverse=True)
    num = np.zeros(keys.size, dtype=np.int64)
    np.add.at(num, inverse, pc)
    key_i, key_j = keys // dim, keys % dim
    diag = key_i == key_j

    # pairs absent from the table share no label and overlap exactly 0
    diag_num = np.zeros(dim, dtype=np.int64)
    diag_num[key_i[diag]] = num[diag]
    diag_dev = Fraction(int(np.max(np.abs(diag_num - 2))), 2)
    off = num[~diag]
    off_dev = Fraction(int(np.max(np.abs(off))) if off.size else 0, 2)
    report.add("overlap_diagonal", float(diag_dev), 0)
    report.add("overlap_offdiagonal", float(off_dev), 0)

    positive = sign == 1
    coverage = np.bincount(
        np.concatenate([idx_a[positive], idx_b[positive]]).astype(np.int64), minlength=dim
    )
    report.add("pair_coverage", int(np.max(np.abs(coverage - 1))), 0)


def verify_complete_basis(
    n: int, mode: str = "dense", jobs: int = 1, force: bool = False
) -> VerificationReport:
    """Verify that all 2^n basis vectors form an orthonormal basis.

    ``dense`` simulates every circuit and checks the Gram matrix entrywise to
    1e-10.  ``sparse`` works on the closed-form two-term states with integer
    arithmetic, so its overlaps are exact, and additionally checks that the
    positive-sign states partition the 2^n computational labels into pairs.
    """
    if n < 2:
        raise TooFewQubits(f"need at least 2 qubits, got n={n}")
    if mode == "dense":
        if n > DENSE_MAX_QUBITS and not force:
            raise TooManyQubits(f"dense mode is limited to n <= {DENSE_MAX_QUBITS}, got {n}")
        report = VerificationReport(n, mode)
        _verify_dense(n, jobs, report)
    elif mode == "sparse":
        if n > SPARSE_MAX_QUBITS:
            raise TooManyQubits(f"sparse mode is limited to n <= {SPARSE_MAX_QUBITS}, got {n}")
        report = VerificationReport(n, mode)
        _verify_sparse(n, report)
    else:
        raise ValueError(f"mode must be 'dense' or 'sparse', got {mode!r}")
    return report
