import numpy as np
import pytest

from entbasis.basis_index import from_ordinal, make_index
from entbasis.circuit import ON_ONE, ON_ZERO, Circuit, build_basis_circuit, cnot, h, x, z
from entbasis.errors import (
    LabelLengthMismatch,
    QubitOutOfRange,
    TooManyQubits,
    WidthMismatch,
)
from entbasis.statevector import (
    Statevector,
    apply_gate,
    check_width,
    dump_amplitudes,
    init_basis_state,
    inner_product,
    marginal_p0,
    parse_amplitudes,
    reduced_density_matrix,
    run,
    single_qubit_purity,
)

import oracle

S2 = 1 / np.sqrt(2)


@pytest.mark.parametrize(
    "n, label, index", [(3, [0, 0, 0], 0), (3, [1, 1, 0], 6), (2, [0, 1], 1)]
)
def test_init_basis_state(n, label, index):
    s = init_basis_state(n, label)
    expected = np.zeros(2**n)
    expected[index] = 1
    assert np.array_equal(s.amplitudes, expected)


def test_init_errors():
    with pytest.raises(LabelLengthMismatch):
        init_basis_state(3, [0, 1])
    with pytest.raises(TooManyQubits):
        check_width(31)
    check_width(31, force=True)


def test_hadamard_on_zero():
    s = init_basis_state(1, [0])
    apply_gate(s, h(0))
    assert np.allclose(s.amplitudes, [S2, S2], atol=1e-15)
    s = init_basis_state(1, [1])
    apply_gate(s, h(0))
    assert np.allclose(s.amplitudes, [S2, -S2], atol=1e-15)


def test_cnot_polarity_on_10():
    s = init_basis_state(2, [1, 0])
    apply_gate(s, cnot(0, 1, ON_ONE))
    assert s.amplitudes[0b11] == 1
    s = init_basis_state(2, [1, 0])
    apply_gate(s, cnot(0, 1, ON_ZERO))
    assert s.amplitudes[0b10] == 1
    s = init_basis_state(2, [0, 0])
    apply_gate(s, cnot(0, 1, ON_ZERO))
    assert s.amplitudes[0b01] == 1


def test_qubit_out_of_range():
    s = init_basis_state(2, [0, 0])
    with pytest.raises(QubitOutOfRange):
        apply_gate(s, h(2))
    with pytest.raises(QubitOutOfRange):
        marginal_p0(s, 2)
    with pytest.raises(QubitOutOfRange):
        single_qubit_purity(s, -1)


def _all_gates(n):
    gates = []
    for q in range(n):
        gates += [h(q), z(q), x(q)]
    for c in range(n):
        for t in range(n):
            if c != t:
                gates += [cnot(c, t, ON_ONE), cnot(c, t, ON_ZERO)]
    return gates


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_gate_matches_kron_oracle(n, rng):
    for g in _all_gates(n):
        s = oracle.random_state(rng, n)
        expected = oracle.gate_unitary(g.kind, n, g.target, g.control, g.polarity) @ s.amplitudes
        apply_gate(s, g)
        assert np.max(np.abs(s.amplitudes - expected)) <= 1e-14, g


@pytest.mark.parametrize("n", [2, 5, 8])
def test_self_inverse_gates(n, rng):
    for g in _all_gates(n):
        s = oracle.random_state(rng, n)
        before = s.amplitudes.copy()
        apply_gate(s, g)
        apply_gate(s, g)
        assert np.max(np.abs(s.amplitudes - before)) <= 1e-12


@pytest.mark.parametrize("n", [2, 4, 7])
def test_polarity_identity(n, rng):
    for c in range(n):
        for t in range(n):
            if c == t:
                continue
            a = oracle.random_state(rng, n)
            b = a.copy()
            apply_gate(a, x(t))
            apply_gate(a, cnot(c, t, ON_ONE))
            apply_gate(b, cnot(c, t, ON_ZERO))
            assert np.max(np.abs(a.amplitudes - b.amplitudes)) <= 1e-12


def test_norm_preserved_random_sequence(rng):
    n = 6
    gates = _all_gates(n)
    s = oracle.random_state(rng, n)
    for i in rng.integers(0, len(gates), size=100):
        apply_gate(s, gates[i])
    assert abs(s.norm_squared() - 1) <= 1e-10


def test_run_fig1a_and_fig3b():
    s = run(build_basis_circuit(make_index(1, [1, 1])))
    assert np.max(np.abs(s.amplitudes - oracle.two_term("000", "111", 1))) <= 1e-12
    s = run(build_basis_circuit(make_index(-1, [0, 1])))
    assert np.max(np.abs(s.amplitudes - oracle.two_term("010", "101", -1))) <= 1e-12


def test_run_empty_circuit_is_identity():
    init = init_basis_state(2, [0, 1])
    out = run(Circuit(2), init)
    assert np.array_equal(out.amplitudes, init.amplitudes)
    assert out is not init


def test_run_does_not_mutate_initial():
    init = init_basis_state(2, [0, 0])
    run(Circuit(2, (h(0),)), init)
    assert init.amplitudes[0] == 1


def test_run_width_mismatch():
    with pytest.raises(WidthMismatch):
        run(Circuit(3), init_basis_state(2, [0, 0]))


@pytest.mark.parametrize("n", range(2, 6))
def test_basis_circuits_match_kron_oracle(n):
    for k in range(2**n):
        c = build_basis_circuit(from_ordinal(k, n))
        assert np.max(np.abs(run(c).amplitudes - oracle.simulate(c))) <= 1e-12


def test_inner_product():
    plus = run(build_basis_circuit(make_index(1, [1, 1])))
    minus = run(build_basis_circuit(make_index(-1, [1, 1])))
    assert abs(inner_product(plus, plus) - 1) <= 1e-12
    assert abs(inner_product(plus, minus)) <= 1e-12
    assert inner_product(init_basis_state(2, [0, 0]), init_basis_state(2, [0, 1])) == 0
    with pytest.raises(WidthMismatch):
        inner_product(plus, init_basis_state(2, [0, 0]))


def test_inner_product_conjugates_first(rng):
    a = oracle.random_state(rng, 3)
    b = oracle.random_state(rng, 3)
    assert np.isclose(inner_product(a, b), np.sum(a.amplitudes.conj() * b.amplitudes))


def test_marginals():
    ghz = run(build_basis_circuit(make_index(1, [1, 1])))
    for q in range(3):
        assert abs(marginal_p0(ghz, q) - 0.5) <= 1e-12
    assert marginal_p0(init_basis_state(2, [1, 0]), 0) == 0.0
    assert marginal_p0(init_basis_state(2, [1, 0]), 1) == 1.0


def test_marginals_all_n4():
    for k in range(16):
        s = run(build_basis_circuit(from_ordinal(k, 4)))
        for q in range(4):
            assert abs(marginal_p0(s, q) - 0.5) <= 1e-12


def test_purity_examples():
    ghz = run(build_basis_circuit(make_index(1, [1, 1])))
    for q in range(3):
        assert abs(single_qubit_purity(ghz, q) - 0.5) <= 1e-12
        assert np.allclose(reduced_density_matrix(ghz, q), np.eye(2) / 2, atol=1e-15)
    for q in range(3):
        assert abs(single_qubit_purity(init_basis_state(3, [0, 0, 0]), q) - 1) <= 1e-12
    bell = Statevector(2, oracle.two_term("00", "11", 1))
    assert abs(single_qubit_purity(bell, 0) - 0.5) <= 1e-12


@pytest.mark.parametrize("n", [2, 3, 5])
def test_purity_matches_einsum_oracle(n, rng):
    for _ in range(5):
        s = oracle.random_state(rng, n)
        for q in range(n):
            ref = oracle.partial_trace_purity(s.amplitudes, n, q)
            assert abs(single_qubit_purity(s, q) - ref) <= 1e-12
            assert 0.5 - 1e-12 <= single_qubit_purity(s, q) <= 1 + 1e-12


def test_dump_amplitudes_format():
    s = run(build_basis_circuit(make_index(-1, [1, 1])))
    text = dump_amplitudes(s)
    assert text == "000 0.70710678118654746 0\n111 -0.70710678118654746 0\n"
    back = parse_amplitudes(text, 3)
    assert np.array_equal(back.amplitudes, s.amplitudes)
