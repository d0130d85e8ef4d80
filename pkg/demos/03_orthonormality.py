"""
Checking the basis is orthonormal and maximally entangled
=========================================================

Dense mode simulates all 2^N circuits and forms their Gram matrix; sparse
mode checks the closed-form two-term states with exact integer overlaps.
"""

import time

from entbasis import from_ordinal, make_index, verify_complete_basis, verify_index

# one state end to end: circuit vs closed form, marginals, purity, gate counts
print(verify_index(make_index(1, [1, 0, 1])).to_text())

for n in (2, 4, 8, 10):
    t0 = time.perf_counter()
    report = verify_complete_basis(n, "dense")
    off = report.get("gram_offdiagonal").deviation
    print(f"dense  n={n:2d}  pass={report.passed}  max|G_ij| (i!=j)={off:.2e}  {time.perf_counter() - t0:.2f}s")

for n in (12, 16, 20):
    t0 = time.perf_counter()
    report = verify_complete_basis(n, "sparse")
    print(f"sparse n={n:2d}  pass={report.passed}  {time.perf_counter() - t0:.2f}s")

# a failing check: drop the Z from a minus-sign circuit
from entbasis import build_basis_circuit

bad = verify_index(from_ordinal(7, 3), circuit=build_basis_circuit(from_ordinal(3, 3)))
print("\ncorrupted circuit passes?", bad.passed, " equivalence deviation:", bad.get("equivalence").deviation)
