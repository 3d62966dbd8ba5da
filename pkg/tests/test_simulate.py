"""Simulator, form conversion, and verification-path tests."""

import random

import pytest

from gf2kq.catalog import catalog_lookup
from gf2kq.circuit import Circuit, Gate, RegisterLayout
from gf2kq.errors import FormError, InputError, SimulationError
from gf2kq.gf2 import BinaryPolynomial
from gf2kq.phasepoly import extract_phase
from gf2kq.simulate import (
    is_classical,
    run_batch,
    simulate,
    to_toffoli_form,
    verify_multiplier,
)
from gf2kq.synth import SynthesisOptions, synth

P4 = BinaryPolynomial.parse("4,1,0")


def _plain(n, ancillas=0):
    return RegisterLayout(n=n, ancillas=ancillas, phase_wires=frozenset())


def test_simulate_gate_semantics():
    c = Circuit(_plain(1), [Gate.toffoli(0, 1, 2)])
    assert simulate(c, (1, 1, 0)) == (1, 1, 1)
    assert simulate(c, (1, 0, 0)) == (1, 0, 0)
    cx = Circuit(_plain(1), [Gate.x(2), Gate.cnot(2, 0)])
    assert simulate(cx, (0, 0, 0)) == (1, 0, 1)


def test_simulate_all_zero_fixed_point():
    rng = random.Random(0)
    lay = _plain(2)
    c = Circuit(lay)
    for _ in range(30):
        kind = rng.choice(["cnot", "tof"])
        if kind == "cnot":
            c.append(Gate.cnot(*rng.sample(range(6), 2)))
        else:
            c.append(Gate.toffoli(*rng.sample(range(6), 3)))
    assert simulate(c, (0,) * 6) == (0,) * 6


def test_simulate_rejects_non_classical():
    with pytest.raises(InputError):
        simulate(Circuit(_plain(1), [Gate.h(0)]), (0, 0, 0))
    with pytest.raises(InputError):
        simulate(Circuit(_plain(1), [Gate.ccz(0, 1, 2)]), (0, 0, 0))
    with pytest.raises(InputError):
        simulate(Circuit(_plain(1), []), (0, 0))


def test_to_toffoli_form_single_ccz():
    lay = RegisterLayout(n=1, ancillas=0)  # phase wire = {2}
    c = Circuit(lay, [Gate.h(2), Gate.ccz(0, 1, 2), Gate.h(2)])
    t = to_toffoli_form(c)
    assert t.gates == [Gate.toffoli(0, 1, 2)]


def test_to_toffoli_form_reverses_phase_internal_cnot():
    lay = RegisterLayout(n=1, ancillas=1, phase_wires=frozenset({2, 3}))
    c = Circuit(lay, [Gate.h(2), Gate.h(3), Gate.cnot(2, 3), Gate.h(2), Gate.h(3)])
    t = to_toffoli_form(c)
    assert t.gates == [Gate.cnot(3, 2)]


def test_to_toffoli_form_empty_core():
    lay = RegisterLayout(n=1, ancillas=0)
    c = Circuit(lay, [Gate.h(2), Gate.h(2)])
    assert to_toffoli_form(c).gates == []


def test_to_toffoli_form_errors():
    lay = RegisterLayout(n=1, ancillas=1, phase_wires=frozenset({2}))
    with pytest.raises(FormError):  # not a sandwich at all
        to_toffoli_form(Circuit(lay, [Gate.cnot(0, 1)]))
    with pytest.raises(FormError):  # CCZ with no phase wire
        to_toffoli_form(Circuit(lay, [Gate.h(2), Gate.ccz(0, 1, 3), Gate.h(2)]))
    lay2 = RegisterLayout(n=1, ancillas=1, phase_wires=frozenset({2, 3}))
    with pytest.raises(FormError):  # CCZ with two phase wires
        to_toffoli_form(
            Circuit(lay2, [Gate.h(2), Gate.h(3), Gate.ccz(1, 2, 3), Gate.h(2), Gate.h(3)])
        )
    with pytest.raises(FormError):  # CNOT mixing phase and plain wires
        to_toffoli_form(Circuit(lay, [Gate.h(2), Gate.cnot(2, 0), Gate.h(2)]))
    with pytest.raises(FormError):  # H strictly inside the core
        to_toffoli_form(
            Circuit(
                lay2,
                [Gate.h(2), Gate.h(3), Gate.cnot(2, 3), Gate.h(3), Gate.cnot(2, 3), Gate.h(2), Gate.h(3)],
            )
        )


def test_hadamard_conjugated_cnot_direction_by_phase_semantics():
    # The converted CNOT(3,2) must realize the same function the sandwich
    # computes: wire 2 picks up wire 3's kickback.
    lay = RegisterLayout(n=1, ancillas=1, phase_wires=frozenset({2, 3}))
    sandwich = Circuit(
        lay,
        [Gate.h(2), Gate.h(3), Gate.cnot(2, 3), Gate.ccz(0, 1, 3), Gate.cnot(2, 3), Gate.h(2), Gate.h(3)],
    )
    classical = to_toffoli_form(sandwich)
    for bits in range(16):
        state = tuple((bits >> i) & 1 for i in range(4))
        got = simulate(classical, state)
        want = run_batch(sandwich, list(state), 1)
        assert list(got) == want


def test_phase_polynomial_predicts_converted_function():
    # ccz-form core phase with c_i-monomials gives exactly the classical
    # flip function computed by the Toffoli form.
    for n in (2, 3, 4, 5):
        p = catalog_lookup(n).polynomial
        ccz = synth(SynthesisOptions(variant="compact", modulus=p))
        core = Circuit(ccz.layout, [g for g in ccz.gates if g.kind != "H"])
        poly, _ = extract_phase(core)
        toffoli = to_toffoli_form(ccz)
        lay = ccz.layout
        rng = random.Random(n)
        for _ in range(60):
            a = rng.getrandbits(n)
            b = rng.getrandbits(n)
            state = [0] * ccz.wire_count
            for i in range(n):
                state[lay.a(i)] = (a >> i) & 1
                state[lay.b(i)] = (b >> i) & 1
            out = simulate(toffoli, state)
            assignment = sum(bit << w for w, bit in enumerate(state))
            for i in range(n):
                coeff = 0
                for mono in poly.monomials:
                    if lay.c(i) in mono:
                        rest = [v for v in mono if v != lay.c(i)]
                        coeff ^= (
                            (assignment >> rest[0]) & (assignment >> rest[1]) & 1
                        )
                assert out[lay.c(i)] == coeff


def test_baseline_reproduces_reference_product():
    p = BinaryPolynomial.parse("7,5,3,1,0")
    circ = synth(SynthesisOptions(variant="baseline", modulus=p, output_form="toffoli_form"))
    lay = circ.layout
    a = (1, 0, 0, 1, 0, 1, 0)
    b = (0, 1, 1, 0, 0, 0, 0)
    state = [0] * circ.wire_count
    for i in range(7):
        state[lay.a(i)] = a[i]
        state[lay.b(i)] = b[i]
    out = simulate(circ, state)
    assert tuple(out[lay.c(i)] for i in range(7)) == (1, 0, 1, 1, 1, 0, 1)


def test_run_batch_matches_single_simulation():
    p = catalog_lookup(3).polynomial
    circ = synth(SynthesisOptions(variant="compact", modulus=p, output_form="toffoli_form"))
    rng = random.Random(8)
    states = [[rng.randint(0, 1) for _ in range(circ.wire_count)] for _ in range(64)]
    cols = [0] * circ.wire_count
    for t, st in enumerate(states):
        for w, bit in enumerate(st):
            cols[w] |= bit << t
    out_cols = run_batch(circ, cols, len(states))
    for t, st in enumerate(states):
        single = simulate(circ, st)
        got = tuple((out_cols[w] >> t) & 1 for w in range(circ.wire_count))
        assert got == single


def test_sandwich_batch_rejects_double_symbolic_ccz():
    lay = RegisterLayout(n=1, ancillas=1, phase_wires=frozenset({2, 3}))
    c = Circuit(lay, [Gate.h(2), Gate.h(3), Gate.ccz(0, 2, 3), Gate.h(2), Gate.h(3)])
    with pytest.raises(SimulationError):
        run_batch(c, [0, 0, 0, 0], 1)


def test_verify_multiplier_pass_and_fail():
    circ = synth(SynthesisOptions(variant="compact", modulus=P4))
    rep = verify_multiplier(circ, P4, exhaustive=True)
    assert rep.passed and rep.ancillas_clean and rep.operands_preserved

    # dropping the last CCZ breaks it, with a replayable counterexample
    broken_gates = list(circ.gates)
    idx = max(i for i, g in enumerate(broken_gates) if g.kind == "CCZ")
    del broken_gates[idx]
    broken = Circuit(circ.layout, broken_gates)
    rep = verify_multiplier(broken, P4, exhaustive=True)
    assert not rep.passed
    ce = rep.counterexample
    assert ce is not None
    # the counterexample replays: re-simulating reproduces the wrong output
    got = simulate_product(broken, ce["a_bits"], ce["b_bits"], ce["c0_bits"])
    assert got == ce["got_bits"]


def simulate_product(circ, a, b, c0=0):
    lay = circ.layout
    cols = [0] * circ.wire_count
    for i in range(lay.n):
        cols[lay.a(i)] = (a >> i) & 1
        cols[lay.b(i)] = (b >> i) & 1
        cols[lay.c(i)] = (c0 >> i) & 1
    out = run_batch(circ, cols, 1)
    return sum(out[lay.c(i)] << i for i in range(lay.n))


def test_verify_multiplier_wrong_modulus_fails():
    circ = synth(SynthesisOptions(variant="compact", modulus=P4))
    other = BinaryPolynomial.parse("4,3,0")
    assert not verify_multiplier(circ, other, exhaustive=True).passed


def test_verify_multiplier_zero_operand_annihilates():
    p = catalog_lookup(3).polynomial
    circ = synth(SynthesisOptions(variant="compact", modulus=p))
    lay = circ.layout
    rng = random.Random(5)
    for _ in range(20):
        c0 = rng.getrandbits(3)
        cols = [0] * circ.wire_count
        for i in range(3):
            cols[lay.b(i)] = rng.randint(0, 1)
            cols[lay.c(i)] = (c0 >> i) & 1
        out = run_batch(circ, cols, 1)
        assert sum(out[lay.c(i)] << i for i in range(3)) == c0


def test_verify_multiplier_guards():
    circ = synth(SynthesisOptions(variant="compact", modulus=P4))
    with pytest.raises(InputError):
        verify_multiplier(circ, BinaryPolynomial.parse("5,2,0"))
    big = catalog_lookup(9).polynomial
    big_circ = synth(SynthesisOptions(variant="compact", modulus=big))
    with pytest.raises(InputError):
        verify_multiplier(big_circ, big, exhaustive=True)


def test_verify_seed_is_reproducible():
    p = catalog_lookup(6).polynomial
    circ = synth(SynthesisOptions(variant="compact", modulus=p))
    r1 = verify_multiplier(circ, p, trials=50, seed=42)
    r2 = verify_multiplier(circ, p, trials=50, seed=42)
    assert r1 == r2


def test_is_classical():
    assert is_classical(Circuit(_plain(1), [Gate.cnot(0, 1)]))
    assert not is_classical(Circuit(_plain(1), [Gate.h(0)]))
