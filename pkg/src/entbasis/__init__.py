"""Circuits, simulation and verification for the complete GHZ-type
maximally entangled basis of N qubits.

Basis vector ``(sign, pattern)`` is prepared by H (and Z for sign -1) on
qubit 0 followed by a CNOT from qubit 0 to every other qubit, with control
polarity chosen by the pattern bit.
"""

__version__ = "0.1.0"

from .analysis import (
    SparseBasisState,
    VerificationReport,
    closed_form_state,
    sparse_overlap,
    to_dense,
    verify_complete_basis,
    verify_index,
)
from .basis_index import (
    BasisIndex,
    complement,
    counts_ML,
    from_ordinal,
    make_index,
    random_index,
    to_ordinal,
)
from .circuit import (
    Circuit,
    Gate,
    GateCounts,
    build_basis_circuit,
    gate_counts,
    lower_inverted_controls,
    tally,
)
from .errors import *  # noqa: F401,F403
from .qasm_io import export_qasm, parse_qasm
from .statevector import (
    Statevector,
    apply_gate,
    init_basis_state,
    inner_product,
    marginal_p0,
    run,
    single_qubit_purity,
)
