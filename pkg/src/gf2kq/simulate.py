"""Simulation, form conversion, and end-to-end multiplier verification.

Two simulation paths:

* classical circuits (CNOT/Toffoli/X) are run directly on basis states;
* H-sandwich circuits are run with exact phase-kickback bookkeeping: the
  sandwiched wires become symbols, every other wire carries an affine
  form over those symbols, and each CCZ contributes its product into a
  per-symbol flip accumulator. The output on a sandwiched wire is its
  input XOR its accumulated flip. This is exact for circuits where every
  CCZ has at most one symbol-carrying operand, which covers everything
  the synthesizer emits.

Both paths are bit-sliced: a wire's value across T test inputs is one
T-bit integer, so verification over thousands of inputs costs one gate
walk.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .circuit import CCZ, CNOT, Circuit, Gate, H, RegisterLayout, TOFFOLI, X
from .errors import FormError, InputError, SimulationError
from .gf2 import BinaryPolynomial, _mod, _mul
from .phasepoly import _bits

DEFAULT_SEED = 0x6F2C0DE
SEED_ENV_VAR = "GF2KQ_SEED"


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    return int(raw, 0) if raw else DEFAULT_SEED


# ---------------------------------------------------------------------------
# CCZ form <-> Toffoli form


def _split_sandwich(circuit: Circuit):
    gates = circuit.gates
    lo = 0
    while lo < len(gates) and gates[lo].kind == H:
        lo += 1
    if lo == len(gates):
        # no core at all: the two layers make up the whole gate list
        if lo % 2:
            raise FormError("odd all-H gate list is not an H sandwich")
        lo = hi = lo // 2
    else:
        hi = len(gates)
        while hi > lo and gates[hi - 1].kind == H:
            hi -= 1
    front = {g.operands[0] for g in gates[:lo]}
    back = {g.operands[0] for g in gates[hi:]}
    if not front or front != back:
        raise FormError("circuit is not an H sandwich (layers missing or unequal)")
    if len(front) != lo or len(back) != len(gates) - hi:
        raise FormError("duplicate H on one wire in a sandwich layer")
    return frozenset(front), gates[lo:hi]


def to_toffoli_form(circuit: Circuit) -> Circuit:
    """Strip the H sandwich, turning each CCZ into a Toffoli on its phase wire.

    Requires every CCZ to touch exactly one sandwiched wire and every CNOT
    to touch either none or both; CNOTs between sandwiched wires reverse
    direction. The result is purely classical-reversible.
    """
    phase, core = _split_sandwich(circuit)
    layout = RegisterLayout(
        circuit.layout.n, circuit.layout.ancillas, phase_wires=frozenset()
    )
    out = Circuit(layout)
    for g in core:
        if g.kind == CNOT:
            u, v = g.operands
            inside = (u in phase) + (v in phase)
            if inside == 0:
                out.append(g)
            elif inside == 2:
                out.append(Gate.cnot(v, u))
            else:
                raise FormError(f"CNOT {g.operands} mixes phase and plain wires")
        elif g.kind == CCZ:
            marked = [w for w in g.operands if w in phase]
            if len(marked) != 1:
                raise FormError(f"CCZ {g.operands} touches {len(marked)} phase wires")
            others = [w for w in g.operands if w not in phase]
            out.append(Gate.toffoli(others[0], others[1], marked[0]))
        elif g.kind == H:
            raise FormError("H gate inside the sandwich core")
        elif g.kind == X:
            if g.operands[0] in phase:
                raise FormError("X on a phase wire has no classical rewrite")
            out.append(g)
        else:
            raise FormError(f"unsupported core gate {g.kind}")
    return out


# ---------------------------------------------------------------------------
# simulators


def is_classical(circuit: Circuit) -> bool:
    return all(g.kind in (CNOT, TOFFOLI, X) for g in circuit.gates)


def simulate(circuit: Circuit, state: Sequence[int]) -> tuple[int, ...]:
    """Apply a classical reversible circuit to one basis state."""
    if len(state) != circuit.wire_count:
        raise InputError("state length must equal wire count")
    if not is_classical(circuit):
        raise InputError("simulate handles CNOT/TOF/X circuits only")
    cols = [bit & 1 for bit in state]
    _run_classical(circuit.gates, cols, 1)
    return tuple(cols)


def _run_classical(gates, cols: list[int], full: int) -> None:
    for g in gates:
        if g.kind == CNOT:
            c, t = g.operands
            cols[t] ^= cols[c]
        elif g.kind == TOFFOLI:
            c1, c2, t = g.operands
            cols[t] ^= cols[c1] & cols[c2]
        elif g.kind == X:
            cols[g.operands[0]] ^= full
        else:
            raise SimulationError(f"non-classical gate {g.kind}")


def _run_sandwich(circuit: Circuit, cols: list[int], tmask: int) -> list[int]:
    """Bit-sliced phase-kickback run; returns output columns."""
    phase, core = _split_sandwich(circuit)
    zmask = [0] * circuit.wire_count
    vals = list(cols)
    flips: dict[int, int] = {w: 0 for w in phase}
    for w in phase:
        zmask[w] = 1 << w
        vals[w] = 0
    for g in core:
        if g.kind == CNOT:
            c, t = g.operands
            zmask[t] ^= zmask[c]
            vals[t] ^= vals[c]
        elif g.kind == X:
            w = g.operands[0]
            if zmask[w]:
                raise SimulationError("X on a symbol-carrying wire")
            vals[w] ^= tmask
        elif g.kind in (CCZ, TOFFOLI):
            ops = g.operands
            sym = [w for w in ops if zmask[w]]
            if g.kind == TOFFOLI:
                c1, c2, t = ops
                if zmask[c1] or zmask[c2]:
                    raise SimulationError("Toffoli control carries symbols")
                vals[t] ^= vals[c1] & vals[c2]
                continue
            if len(sym) > 1:
                raise SimulationError(
                    "CCZ with two symbol-carrying operands is not basis-preserving"
                )
            if not sym:
                continue  # per-input global phase only
            plain = [w for w in ops if w != sym[0]]
            prod = vals[plain[0]] & vals[plain[1]]
            if prod:
                for zbit in _bits(zmask[sym[0]]):
                    flips[zbit] ^= prod
        else:
            raise SimulationError(f"unsupported core gate {g.kind}")
    out = [0] * circuit.wire_count
    for w in range(circuit.wire_count):
        if w in phase:
            if zmask[w] != 1 << w:
                raise SimulationError("sandwich core is not the identity on phase wires")
            if vals[w]:
                raise SimulationError("classical offset left on a phase wire")
            out[w] = cols[w] ^ flips[w]
        else:
            if zmask[w]:
                raise SimulationError(f"wire {w} stays entangled with phase wires")
            out[w] = vals[w]
    return out


def run_batch(circuit: Circuit, cols: Sequence[int], trials: int) -> list[int]:
    """Run `trials` basis inputs at once; cols[w] holds wire w across trials."""
    tmask = (1 << trials) - 1
    if is_classical(circuit):
        out = list(cols)
        _run_classical(circuit.gates, out, tmask)
        return out
    return _run_sandwich(circuit, list(cols), tmask)


# ---------------------------------------------------------------------------
# multiplier verification


@dataclass(frozen=True)
class VerificationReport:
    modulus: BinaryPolynomial
    variant: str
    mode: str
    trials: int
    seed: Optional[int]
    passed: bool
    ancillas_clean: bool
    operands_preserved: bool
    counterexample: Optional[dict]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        parts = [
            f"{status} modulus={self.modulus.exponent_list()}",
            f"mode={self.mode}",
            f"trials={self.trials}",
        ]
        if self.variant:
            parts.insert(1, f"variant={self.variant}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        if self.counterexample is not None:
            ce = self.counterexample
            parts.append(
                "counterexample a=%s b=%s c0=%s got=%s want=%s"
                % (ce["a"], ce["b"], ce["c0"], ce["got"], ce["want"])
            )
        return " ".join(parts)


def _pretty(bits: int) -> str:
    return str(BinaryPolynomial(bits))


EXHAUSTIVE_CAP = 8


def verify_multiplier(
    circuit: Circuit,
    p: BinaryPolynomial,
    exhaustive: bool = False,
    trials: int = 1000,
    seed: Optional[int] = None,
    variant: str = "",
) -> VerificationReport:
    """Check circuit output = c0 xor (a*b mod p) on many basis inputs.

    Exhaustive mode runs all 2^(2n) operand pairs twice, once with c0 = 0
    and once with seeded random c0; randomized mode uses seeded triples.
    Operand preservation and ancilla cleanliness are always checked.
    """
    n = p.degree
    lay = circuit.layout
    if lay.n != n:
        raise InputError(f"circuit registers are size {lay.n}, modulus degree is {n}")
    if exhaustive and n > EXHAUSTIVE_CAP:
        raise InputError(f"exhaustive mode is capped at n = {EXHAUSTIVE_CAP}")
    if seed is None:
        seed = default_seed()
    rng = random.Random(seed)

    if exhaustive:
        pairs = [(a, b) for a in range(1 << n) for b in range(1 << n)]
        c0s_list = [[0] * len(pairs), [rng.getrandbits(n) for _ in pairs]]
        mode = "exhaustive"
    else:
        pairs = [(rng.getrandbits(n), rng.getrandbits(n)) for _ in range(trials)]
        c0s_list = [[rng.getrandbits(n) for _ in pairs]]
        mode = f"randomized({trials})"

    for c0s in c0s_list:
        report = _verify_batch(circuit, p, pairs, c0s, mode, seed, variant)
        if not report.passed:
            return report
    return report


def _verify_batch(circuit, p, pairs, c0s, mode, seed, variant) -> VerificationReport:
    n = p.degree
    lay = circuit.layout
    t = len(pairs)
    cols = [0] * circuit.wire_count
    for idx, (a, b) in enumerate(pairs):
        for i in range(n):
            cols[lay.a(i)] |= ((a >> i) & 1) << idx
            cols[lay.b(i)] |= ((b >> i) & 1) << idx
            cols[lay.c(i)] |= ((c0s[idx] >> i) & 1) << idx
    out = run_batch(circuit, cols, t)

    bad = 0  # trial mask of failures
    for idx, (a, b) in enumerate(pairs):
        want = c0s[idx] ^ _mod(_mul(a, b), p.bits)
        got = 0
        for i in range(n):
            got |= ((out[lay.c(i)] >> idx) & 1) << i
        if got != want:
            bad |= 1 << idx
    operands_ok = all(out[lay.a(i)] == cols[lay.a(i)] for i in range(n)) and all(
        out[lay.b(i)] == cols[lay.b(i)] for i in range(n)
    )
    anc_ok = all(out[w] == 0 for w in lay.anc_range)

    passed = bad == 0 and operands_ok and anc_ok
    counterexample = None
    if bad:
        idx = (bad & -bad).bit_length() - 1
        a, b = pairs[idx]
        got = 0
        for i in range(n):
            got |= ((out[lay.c(i)] >> idx) & 1) << i
        counterexample = {
            "a": _pretty(a),
            "b": _pretty(b),
            "c0": _pretty(c0s[idx]),
            "got": _pretty(got),
            "want": _pretty(c0s[idx] ^ _mod(_mul(a, b), p.bits)),
            "a_bits": a,
            "b_bits": b,
            "c0_bits": c0s[idx],
            "got_bits": got,
        }
    elif not (operands_ok and anc_ok):
        counterexample = {
            "a": "-", "b": "-", "c0": "-",
            "got": "operand or ancilla register disturbed",
            "want": "registers preserved, ancillas zero",
        }
    return VerificationReport(
        modulus=p,
        variant=variant,
        mode=mode,
        trials=t,
        seed=seed,
        passed=passed,
        ancillas_clean=anc_ok,
        operands_preserved=operands_ok,
        counterexample=counterexample,
    )
