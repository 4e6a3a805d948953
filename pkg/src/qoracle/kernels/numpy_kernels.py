"""Vectorized numpy fallback for the amplitude kernels.

All kernels mutate the amplitude array in place. Qubit index 0 is the most
significant bit of the basis index; register positions are given as
(shift, width) pairs where ``shift`` counts bits from the least significant
end.
"""

import math

import numpy as np

NAME = "numpy"

_SQRT1_2 = 1.0 / math.sqrt(2.0)


def hadamard(amps, n_qubits, qubit):
    view = amps.reshape(1 << qubit, 2, -1)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :].copy()
    view[:, 0, :] = (a0 + a1) * _SQRT1_2
    view[:, 1, :] = (a0 - a1) * _SQRT1_2


def pauli_x(amps, n_qubits, qubit):
    view = amps.reshape(1 << qubit, 2, -1)
    tmp = view[:, 0, :].copy()
    view[:, 0, :] = view[:, 1, :]
    view[:, 1, :] = tmp


def phase_flip_nonzero(amps, n_qubits, shift, width):
    """Negate every amplitude whose register bits are not all zero.

    Together with a Hadamard sandwich this yields the inversion-about-mean
    reflection on the register subspace.
    """
    view = amps.reshape(-1, 1 << width, 1 << shift)
    view[:, 1:, :] *= -1.0


def xor_oracle(amps, n_qubits, input_shifts, input_widths, target_shift, table):
    """XOR a truth-table bit into the target qubit, basis state by basis state.

    The table is indexed by the big-endian concatenation of the input
    registers' bits. The update is a self-inverse basis permutation.
    """
    idx = np.arange(amps.size, dtype=np.int64)
    v = np.zeros_like(idx)
    for shift, width in zip(input_shifts, input_widths):
        v = (v << int(width)) | ((idx >> int(shift)) & ((1 << int(width)) - 1))
    src = idx.copy()
    flips = table[v].astype(bool)
    src[flips] ^= np.int64(1 << target_shift)
    amps[:] = amps[src]
