"""Shared construction helpers: hand-built reference states and embeddings."""

import math

import numpy as np

from qoracle import statevector as sv

SQRT1_2 = 1.0 / math.sqrt(2.0)


def deutsch_layout() -> sv.RegisterLayout:
    return sv.RegisterLayout((("k", 2), ("x", 1), ("y", 1)))


def eq1_state() -> sv.StateVector:
    """The altered-Deutsch pre-measurement state, built term by term.

    (|00> - |11>)|0>_x (|0> - |1>)_y + (|01> - |10>)|1>_x (|0> - |1>)_y,
    normalized to eight amplitudes of magnitude 1/(2 sqrt(2)).
    """
    layout = deutsch_layout()
    amps = np.zeros(16, dtype=np.complex128)
    terms = [("00", 0, +1), ("11", 0, -1), ("01", 1, +1), ("10", 1, -1)]
    for k, x, sign in terms:
        for y, y_sign in ((0, +1), (1, -1)):
            index = (int(k, 2) << 2) | (x << 1) | y
            amps[index] = sign * y_sign / (2 * math.sqrt(2))
    return sv.StateVector(layout, amps)


def grover_diagonal_state(n: int = 2) -> sv.StateVector:
    """(1/2^(n/2)) sum_k |k>_k |k>_x tensored with (|0> - |1>)_y / sqrt(2)."""
    layout = sv.RegisterLayout((("k", n), ("x", n), ("y", 1)))
    amps = np.zeros(layout.dim, dtype=np.complex128)
    scale = 1.0 / math.sqrt(1 << n)
    for k in range(1 << n):
        base = (k << (n + 1)) | (k << 1)
        amps[base] = scale * SQRT1_2
        amps[base | 1] = -scale * SQRT1_2
    return sv.StateVector(layout, amps)


def embed_sharp(
    sharp: sv.StateVector, label: str, full_layout: sv.RegisterLayout
) -> sv.StateVector:
    """Tensor |label>_k onto a (x, y) state, producing the full-layout state."""
    amps = np.zeros(full_layout.dim, dtype=np.complex128)
    offset = int(label, 2) << (full_layout.total_qubits - full_layout.width("k"))
    amps[offset : offset + sharp.layout.dim] = sharp.amplitudes
    return sv.StateVector(full_layout, amps)


def random_state(layout: sv.RegisterLayout, rng: np.random.Generator) -> sv.StateVector:
    amps = rng.normal(size=layout.dim) + 1j * rng.normal(size=layout.dim)
    amps /= np.linalg.norm(amps)
    return sv.StateVector(layout, amps.astype(np.complex128))
