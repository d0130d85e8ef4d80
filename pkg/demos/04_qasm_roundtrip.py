"""
Exporting to OpenQASM 2.0 and reading it back
=============================================
"""

import numpy as np

from entbasis import build_basis_circuit, export_qasm, make_index, parse_qasm, run

circuit = build_basis_circuit(make_index(-1, [0, 1, 1, 0]))
print(circuit.render())

# the inverted controls become x + cx in the exported text
text = export_qasm(circuit)
print(text)

parsed = parse_qasm(text)
assert export_qasm(parsed) == text
diff = np.max(np.abs(run(parsed).amplitudes - run(circuit).amplitudes))
print("re-simulated max difference:", diff)

# anything outside the subset is rejected with its line number
try:
    parse_qasm(text + "ccx q[0],q[1],q[2];\n")
except Exception as exc:
    print(type(exc).__name__ + ":", exc)
