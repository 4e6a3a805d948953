"""Dense state-vector engine over a named multi-register qubit layout.

Basis-index convention: the index of a classical assignment is the
big-endian concatenation of the register bit-strings in declaration order,
so the first declared register occupies the most significant bits and
state dumps read top-to-bottom like circuit diagrams.

All operations take a state and return a new state; amplitude arrays are
never mutated through a value the caller still holds.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import kernels

DEFAULT_QUBIT_CAP = 24
NORM_TOL = 1e-12


class CapacityError(ValueError):
    """Layout exceeds the configured qubit cap."""


@dataclass(frozen=True)
class RegisterLayout:
    """Ordered named registers; fixes the basis-index encoding."""

    registers: tuple[tuple[str, int], ...]
    max_qubits: int = DEFAULT_QUBIT_CAP

    def __post_init__(self):
        regs = tuple((str(name), int(width)) for name, width in self.registers)
        object.__setattr__(self, "registers", regs)
        names = [name for name, _ in regs]
        if not regs:
            raise ValueError("layout needs at least one register")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate register names in {names}")
        if any(not name for name in names):
            raise ValueError("register names must be non-empty")
        if any(width < 1 for _, width in regs):
            raise ValueError("register widths must be >= 1")
        if self.total_qubits > self.max_qubits:
            raise CapacityError(
                f"layout needs {self.total_qubits} qubits, cap is {self.max_qubits}"
            )

    @property
    def total_qubits(self) -> int:
        return sum(width for _, width in self.registers)

    @property
    def dim(self) -> int:
        return 1 << self.total_qubits

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.registers)

    def width(self, register: str) -> int:
        for name, width in self.registers:
            if name == register:
                return width
        raise KeyError(f"unknown register {register!r}")

    def shift(self, register: str) -> int:
        """Bit offset of the register counted from the least significant end."""
        offset = self.total_qubits
        for name, width in self.registers:
            offset -= width
            if name == register:
                return offset
        raise KeyError(f"unknown register {register!r}")

    def value_of(self, index: int, register: str) -> int:
        return (index >> self.shift(register)) & ((1 << self.width(register)) - 1)

    def ket_label(self, index: int) -> str:
        """Per-register big-endian bit-strings joined by '|', e.g. '01|1|0'."""
        parts = []
        for name, width in self.registers:
            parts.append(format(self.value_of(index, name), f"0{width}b"))
        return "|".join(parts)

    def same_registers(self, other: RegisterLayout) -> bool:
        return self.registers == other.registers


@dataclass
class StateVector:
    layout: RegisterLayout
    amplitudes: np.ndarray

    def copy(self) -> StateVector:
        return StateVector(self.layout, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


class SeededRng:
    """Deterministic measurement randomness with provenance.

    ``path`` identifies where the stream came from (e.g. "7" for a direct
    seed, "7/12" for round 12 derived from master seed 7) and is recorded
    in every MeasurementRecord drawn from the stream.
    """

    def __init__(self, seed: int, path: str | None = None):
        self.seed = int(seed)
        self.path = str(seed) if path is None else path
        self._random = random.Random(self.seed)

    def uniform(self) -> float:
        return self._random.random()


@dataclass
class MeasurementRecord:
    register: str
    outcome: str
    probability: float
    seed_path: str

    def to_dict(self) -> dict:
        return {
            "register": self.register,
            "outcome": self.outcome,
            "probability": self.probability,
            "seed_path": self.seed_path,
        }


def new_state(layout: RegisterLayout) -> StateVector:
    """The all-zeros ket |0...0> over the layout."""
    amps = np.zeros(layout.dim, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(layout, amps)


def _require_normalized(state: StateVector):
    if abs(state.norm() - 1.0) > 1e-9:
        raise ValueError(f"state is not normalized (norm {state.norm()!r})")


def set_superposition(state: StateVector, register: str, indices) -> StateVector:
    """Load an equal real superposition of basis values onto one register.

    The register must currently be in |0...0>. This writes amplitudes
    directly rather than synthesizing a preparation circuit, so the index
    set does not need to have power-of-two size.
    """
    indices = sorted(set(int(v) for v in indices))
    if not indices:
        raise ValueError("empty index set")
    width = state.layout.width(register)
    shift = state.layout.shift(register)
    if indices[-1] >= (1 << width):
        raise ValueError(
            f"index {indices[-1]} out of range for {width}-qubit register {register!r}"
        )
    amps = state.amplitudes.copy()
    view = amps.reshape(-1, 1 << width, 1 << shift)
    if np.abs(view[:, 1:, :]).max(initial=0.0) > NORM_TOL:
        raise ValueError(f"register {register!r} is not in |0...0>")
    base = view[:, 0, :] / math.sqrt(len(indices))
    view[:, 0, :] = 0.0
    for v in indices:
        view[:, v, :] = base
    return StateVector(state.layout, amps)


def _check_qubit(state: StateVector, qubit: int):
    if not 0 <= qubit < state.layout.total_qubits:
        raise ValueError(f"qubit index {qubit} out of range")


def apply_hadamard(state: StateVector, qubit: int) -> StateVector:
    _check_qubit(state, qubit)
    amps = state.amplitudes.copy()
    kernels.hadamard(amps, state.layout.total_qubits, qubit)
    return StateVector(state.layout, amps)


def apply_x(state: StateVector, qubit: int) -> StateVector:
    _check_qubit(state, qubit)
    amps = state.amplitudes.copy()
    kernels.pauli_x(amps, state.layout.total_qubits, qubit)
    return StateVector(state.layout, amps)


def apply_xor_oracle(state: StateVector, inputs, target: str, table) -> StateVector:
    """y <- y XOR table[input bits]; a basis permutation, hence unitary.

    ``inputs`` is an ordered list of register names whose bits concatenate
    (big-endian, list order) into the table index; ``target`` must be a
    one-qubit register distinct from every input.
    """
    layout = state.layout
    if layout.width(target) != 1:
        raise ValueError(f"target register {target!r} must have width 1")
    if target in inputs:
        raise ValueError("target register overlaps the inputs")
    if len(set(inputs)) != len(inputs):
        raise ValueError("duplicate input registers")
    in_width = sum(layout.width(r) for r in inputs)
    table = np.asarray(list(table), dtype=np.uint8)
    if table.size != (1 << in_width):
        raise ValueError(
            f"table has {table.size} entries, expected {1 << in_width}"
        )
    if table.max(initial=0) > 1:
        raise ValueError("table entries must be 0 or 1")
    shifts = np.array([layout.shift(r) for r in inputs], dtype=np.int64)
    widths = np.array([layout.width(r) for r in inputs], dtype=np.int64)
    amps = state.amplitudes.copy()
    kernels.xor_oracle(
        amps, layout.total_qubits, shifts, widths, layout.shift(target), table
    )
    return StateVector(layout, amps)


def apply_grover_diffusion(state: StateVector, register: str) -> StateVector:
    """Inversion about the mean on one register's subspace.

    Implemented as H^w (2|0><0| - I) H^w for each joint setting of the
    other registers.
    """
    layout = state.layout
    width = layout.width(register)
    shift = layout.shift(register)
    first_qubit = layout.total_qubits - shift - width
    amps = state.amplitudes.copy()
    nq = layout.total_qubits
    for q in range(first_qubit, first_qubit + width):
        kernels.hadamard(amps, nq, q)
    kernels.phase_flip_nonzero(amps, nq, shift, width)  # 2|0><0| - I
    for q in range(first_qubit, first_qubit + width):
        kernels.hadamard(amps, nq, q)
    return StateVector(layout, amps)


def marginal_distribution(state: StateVector, register: str) -> np.ndarray:
    """Born-rule marginal p(v) over one register; sums to 1."""
    _require_normalized(state)
    width = state.layout.width(register)
    shift = state.layout.shift(register)
    probs = np.abs(state.amplitudes) ** 2
    return probs.reshape(-1, 1 << width, 1 << shift).sum(axis=(0, 2))


def project(
    state: StateVector, register: str, outcome: str, normalize: bool = True
) -> StateVector:
    """Zero every amplitude inconsistent with the outcome; collapse step."""
    width = state.layout.width(register)
    if len(outcome) != width or any(c not in "01" for c in outcome):
        raise ValueError(f"outcome {outcome!r} is not a {width}-bit string")
    value = int(outcome, 2)
    shift = state.layout.shift(register)
    amps = state.amplitudes.copy()
    view = amps.reshape(-1, 1 << width, 1 << shift)
    keep = view[:, value, :].copy()
    view[:, :, :] = 0.0
    view[:, value, :] = keep
    if normalize:
        norm = np.linalg.norm(amps)
        if norm <= NORM_TOL:
            raise ValueError(
                f"outcome {outcome!r} on register {register!r} has zero probability"
            )
        # skip the division when already unit-norm so projection is idempotent
        # bit for bit
        if abs(norm - 1.0) > 1e-13:
            amps /= norm
    return StateVector(state.layout, amps)


def measure(
    state: StateVector, register: str, rng: SeededRng
) -> tuple[MeasurementRecord, StateVector]:
    """Sample an outcome from the register marginal and collapse onto it."""
    probs = marginal_distribution(state, register)
    width = state.layout.width(register)
    r = rng.uniform()
    acc = 0.0
    value = len(probs) - 1
    for v, p in enumerate(probs):
        acc += p
        if r < acc:
            value = v
            break
    outcome = format(value, f"0{width}b")
    record = MeasurementRecord(
        register=register,
        outcome=outcome,
        probability=float(probs[value]),
        seed_path=rng.path,
    )
    return record, project(state, register, outcome, normalize=True)


def equal_up_to_global_phase(a: StateVector, b: StateVector, tol: float = 1e-10) -> bool:
    """True iff a == c*b for some unit complex c, within tol in 2-norm.

    The phase is read off the largest-magnitude overlap component.
    """
    if not a.layout.same_registers(b.layout):
        raise ValueError("layouts differ")
    overlap = a.amplitudes * np.conj(b.amplitudes)
    j = int(np.argmax(np.abs(overlap)))
    c = overlap[j]
    phase = c / abs(c) if abs(c) > 0 else 1.0
    return float(np.linalg.norm(a.amplitudes - phase * b.amplitudes)) <= tol


def state_to_dict(state: StateVector, eps: float = 1e-12) -> dict:
    """JSON-ready dump listing entries with |amplitude| > eps."""
    entries = []
    for i, amp in enumerate(state.amplitudes):
        if abs(amp) > eps:
            entries.append(
                {
                    "ket": state.layout.ket_label(i),
                    "re": float(amp.real),
                    "im": float(amp.imag),
                }
            )
    return {
        "layout": [[name, width] for name, width in state.layout.registers],
        "amplitudes": entries,
    }


def format_state_text(state: StateVector, eps: float = 1e-12) -> str:
    """Render kets one per line, e.g. '-0.353553 |10|1|1>'."""
    lines = []
    for i, amp in enumerate(state.amplitudes):
        if abs(amp) <= eps:
            continue
        if abs(amp.imag) > eps:
            coeff = f"({amp.real:+.6f}{amp.imag:+.6f}j)"
        else:
            coeff = f"{amp.real:+.6f}"
        lines.append(f"{coeff} |{state.layout.ket_label(i)}>")
    return "\n".join(lines)
