"""
A random basis vector for many qubits
=====================================

Draw a basis index from a seed, build its circuit, lower the inverted
controls, and compare the literal gate tally with the closed-form count.
Nothing here is simulated, so N can be large.
"""

from entbasis import (
    build_basis_circuit,
    closed_form_state,
    counts_ML,
    export_qasm,
    gate_counts,
    lower_inverted_controls,
    random_index,
    tally,
)

n, seed = 12, 2024
index = random_index(n, seed)
m, l = counts_ML(index.pattern)
print(f"seed {seed} -> sign {index.sign:+d}, pattern {''.join(map(str, index.pattern))}")
print(f"standard controls M={m}, inverted controls L={l}")
print("state:", closed_form_state(index))

circuit = build_basis_circuit(index)
lowered = lower_inverted_controls(circuit)
print("\nbefore lowering:", len(circuit), "gates")
print("after lowering: ", tally(lowered))
print("closed form:    ", gate_counts(index))

# the same seed always gives the same circuit, so only the seed needs storing
assert random_index(n, seed) == index

print("\n" + export_qasm(circuit, provenance=f"seed={seed}"))

# a 64-qubit index costs nothing to build
big = random_index(64, seed)
print("N=64:", gate_counts(big), "->", tally(lower_inverted_controls(build_basis_circuit(big))))
