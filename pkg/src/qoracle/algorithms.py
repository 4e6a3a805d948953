"""Circuit builders and runners for Deutsch, Deutsch-Jozsa and Grover, in the
classic form (sharp mode k) and the altered form (mode register k in
superposition alongside the query register).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import statevector as sv
from .oracle import (
    FunctionFamily,
    balanced_constant_family,
    delta_family,
    deutsch_family,
    mode_oracle_table,
)

DEUTSCH = "deutsch"
DEUTSCH_JOZSA = "deutsch_jozsa"
GROVER = "grover"
ALGORITHMS = (DEUTSCH, DEUTSCH_JOZSA, GROVER)

SUPERPOSED = "superposed"


def parse_variant(variant: str) -> tuple[str, str | None]:
    """Split 'superposed' / 'sharp:<label>' into (kind, label)."""
    if variant == SUPERPOSED:
        return SUPERPOSED, None
    if variant.startswith("sharp:"):
        label = variant[len("sharp:") :]
        if not label or any(c not in "01" for c in label):
            raise ValueError(f"sharp label {label!r} is not a binary string")
        return "sharp", label
    raise ValueError(f"unknown variant {variant!r}")


def family_for(algorithm: str, n: int) -> FunctionFamily:
    if algorithm == DEUTSCH:
        return deutsch_family()
    if algorithm == DEUTSCH_JOZSA:
        return balanced_constant_family(n)
    if algorithm == GROVER:
        return delta_family(n)
    raise ValueError(f"unknown algorithm {algorithm!r}")


@dataclass
class AlgorithmRun:
    algorithm: str
    variant: str
    n: int
    family: FunctionFamily
    layout: sv.RegisterLayout
    pre_measurement_state: sv.StateVector


@dataclass(frozen=True)
class SuperposedCircuit:
    """The altered circuit split at the ancilla preparation.

    The split lets the protocol module measure the mode register either
    right after its preparation (backdated) or only at the very end.
    """

    algorithm: str
    n: int
    family: FunctionFamily
    layout: sv.RegisterLayout
    iterations: int = 0

    def initial_state(self) -> sv.StateVector:
        return sv.new_state(self.layout)

    def prepare_ancilla(self, state: sv.StateVector) -> sv.StateVector:
        return sv.set_superposition(state, "k", self.family.label_values)

    def apply_body(self, state: sv.StateVector) -> sv.StateVector:
        """Everything after the ancilla preparation, oracle queries included."""
        layout = state.layout
        nq = layout.total_qubits
        x_first = nq - layout.shift("x") - layout.width("x")
        y_qubit = nq - layout.shift("y") - 1
        for q in range(x_first, x_first + self.n):
            state = sv.apply_hadamard(state, q)
        state = sv.apply_x(state, y_qubit)
        state = sv.apply_hadamard(state, y_qubit)
        table = mode_oracle_table(self.family)
        if self.algorithm == GROVER:
            for _ in range(self.iterations):
                state = sv.apply_xor_oracle(state, ["k", "x"], "y", table)
                state = sv.apply_grover_diffusion(state, "x")
        else:
            state = sv.apply_xor_oracle(state, ["k", "x"], "y", table)
            for q in range(x_first, x_first + self.n):
                state = sv.apply_hadamard(state, q)
        return state

    def run(self) -> sv.StateVector:
        return self.apply_body(self.prepare_ancilla(self.initial_state()))


def build_superposed(
    algorithm: str,
    n: int,
    iterations: int | None = None,
    qubit_cap: int = sv.DEFAULT_QUBIT_CAP,
) -> SuperposedCircuit:
    family = family_for(algorithm, n)
    if algorithm == GROVER:
        iterations = optimal_grover_iterations(n) if iterations is None else iterations
        if iterations < 0:
            raise ValueError("iterations must be >= 0")
    else:
        iterations = 0
    layout = sv.RegisterLayout(
        (("k", family.ancilla_width), ("x", n), ("y", 1)), max_qubits=qubit_cap
    )
    return SuperposedCircuit(algorithm, n, family, layout, iterations)


def _run_sharp(
    algorithm: str, n: int, label: str, iterations: int, qubit_cap: int
) -> tuple[FunctionFamily, sv.RegisterLayout, sv.StateVector]:
    family = family_for(algorithm, n)
    table = family.table(label)
    layout = sv.RegisterLayout((("x", n), ("y", 1)), max_qubits=qubit_cap)
    state = sv.new_state(layout)
    for q in range(n):
        state = sv.apply_hadamard(state, q)
    state = sv.apply_x(state, n)
    state = sv.apply_hadamard(state, n)
    if algorithm == GROVER:
        for _ in range(iterations):
            state = sv.apply_xor_oracle(state, ["x"], "y", table)
            state = sv.apply_grover_diffusion(state, "x")
    else:
        state = sv.apply_xor_oracle(state, ["x"], "y", table)
        for q in range(n):
            state = sv.apply_hadamard(state, q)
    return family, layout, state


def _run(
    algorithm: str,
    n: int,
    variant: str,
    iterations: int | None,
    qubit_cap: int,
) -> AlgorithmRun:
    kind, label = parse_variant(variant)
    if kind == SUPERPOSED:
        circuit = build_superposed(algorithm, n, iterations, qubit_cap)
        state = circuit.run()
        return AlgorithmRun(algorithm, variant, n, circuit.family, circuit.layout, state)
    if algorithm == GROVER:
        iterations = optimal_grover_iterations(n) if iterations is None else iterations
    else:
        iterations = 0
    family = family_for(algorithm, n)
    family.table(label)  # raises on unknown label
    family, layout, state = _run_sharp(algorithm, n, label, iterations, qubit_cap)
    return AlgorithmRun(algorithm, variant, n, family, layout, state)


def run_deutsch(variant: str, qubit_cap: int = sv.DEFAULT_QUBIT_CAP) -> AlgorithmRun:
    return _run(DEUTSCH, 1, variant, None, qubit_cap)


def run_deutsch_jozsa(
    n: int, variant: str, qubit_cap: int = sv.DEFAULT_QUBIT_CAP
) -> AlgorithmRun:
    return _run(DEUTSCH_JOZSA, n, variant, None, qubit_cap)


def run_grover(
    n: int,
    variant: str,
    iterations: int | None = None,
    qubit_cap: int = sv.DEFAULT_QUBIT_CAP,
) -> AlgorithmRun:
    return _run(GROVER, n, variant, iterations, qubit_cap)


def optimal_grover_iterations(n: int) -> int:
    """Standard single-target iteration count, never below one."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    theta = math.asin(2 ** (-n / 2))
    return max(1, round(math.pi / (4 * theta) - 0.5))


def grover_success_probability(n: int, iterations: int) -> float:
    """Analytic single-target success probability sin^2((2T+1) asin(2^-n/2))."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    theta = math.asin(2 ** (-n / 2))
    return math.sin((2 * iterations + 1) * theta) ** 2


def answer_from_x(algorithm: str, x_outcome: str) -> str:
    """The examinee's committed answer, computed from the x outcome alone."""
    if algorithm == GROVER:
        return x_outcome
    return "constant" if set(x_outcome) == {"0"} else "balanced"
