# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled amplitude kernels. Same contracts as numpy_kernels."""

NAME = "c"

cdef double SQRT1_2 = 0.7071067811865476


def hadamard(double complex[::1] amps, int n_qubits, int qubit):
    cdef Py_ssize_t stride = 1 << (n_qubits - 1 - qubit)
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t base, i
    cdef double complex a, b
    for base in range(0, dim, 2 * stride):
        for i in range(base, base + stride):
            a = amps[i]
            b = amps[i + stride]
            amps[i] = (a + b) * SQRT1_2
            amps[i + stride] = (a - b) * SQRT1_2


def pauli_x(double complex[::1] amps, int n_qubits, int qubit):
    cdef Py_ssize_t stride = 1 << (n_qubits - 1 - qubit)
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t base, i
    cdef double complex tmp
    for base in range(0, dim, 2 * stride):
        for i in range(base, base + stride):
            tmp = amps[i]
            amps[i] = amps[i + stride]
            amps[i + stride] = tmp


def phase_flip_nonzero(double complex[::1] amps, int n_qubits, int shift, int width):
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t i
    cdef long long mask = (1LL << width) - 1
    for i in range(dim):
        if (i >> shift) & mask:
            amps[i] = -amps[i]


def xor_oracle(double complex[::1] amps, int n_qubits,
               long long[::1] input_shifts, long long[::1] input_widths,
               int target_shift, unsigned char[::1] table):
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t nreg = input_shifts.shape[0]
    cdef Py_ssize_t i, j, r
    cdef long long v, tbit = 1LL << target_shift
    cdef double complex tmp
    for i in range(dim):
        if i & tbit:
            continue
        v = 0
        for r in range(nreg):
            v = (v << input_widths[r]) | ((i >> input_shifts[r]) & ((1LL << input_widths[r]) - 1))
        if table[v]:
            j = i | tbit
            tmp = amps[i]
            amps[i] = amps[j]
            amps[j] = tmp
