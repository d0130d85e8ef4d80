"""
The eight three-qubit basis vectors
===================================

Build every (sign, pattern) circuit at N=3, simulate it, and print the
resulting two-term state next to its circuit.
"""

import numpy as np

from entbasis import build_basis_circuit, closed_form_state, from_ordinal, run

# ordinals 0..7: pattern in the low two bits, sign in the top bit
for k in range(8):
    index = from_ordinal(k, 3)
    circuit = build_basis_circuit(index)
    state = run(circuit)

    # the two nonzero amplitudes, labelled with qubit 0 on the left
    nz = np.flatnonzero(np.abs(state.amplitudes) > 1e-12)
    amps = ", ".join(f"|{i:03b}>: {state.amplitudes[i].real:+.4f}" for i in nz)

    print(f"ordinal {k}  index {index}  ->  {closed_form_state(index)}")
    print("   gates:", " ; ".join(circuit.render().splitlines()))
    print("   amplitudes:", amps)
