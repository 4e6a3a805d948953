#!/usr/bin/env python3
"""Compare the compiled kernels against the numpy fallback on the hot
amplitude operations and on a full Grover run.

Usage: python3 benchmarks/bench_kernels.py [--qubits N] [--repeats R]
"""

import argparse
import time

import numpy as np

from qoracle.kernels import numpy_kernels

try:
    from qoracle.kernels import _ckernels
except ImportError:
    _ckernels = None


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_backend(backend, n_qubits, repeats):
    dim = 1 << n_qubits
    rng = np.random.default_rng(0)
    amps = (rng.normal(size=dim) + 1j * rng.normal(size=dim)).astype(np.complex128)
    amps /= np.linalg.norm(amps)

    results = {}

    def hadamard_sweep():
        for q in range(n_qubits):
            backend.hadamard(amps, n_qubits, q)

    results["hadamard sweep"] = time_call(hadamard_sweep, repeats)

    in_width = n_qubits - 1
    table = rng.integers(0, 2, size=1 << in_width).astype(np.uint8)
    shifts = np.array([1], dtype=np.int64)
    widths = np.array([in_width], dtype=np.int64)
    results["xor oracle"] = time_call(
        lambda: backend.xor_oracle(amps, n_qubits, shifts, widths, 0, table), repeats
    )
    results["phase flip"] = time_call(
        lambda: backend.phase_flip_nonzero(amps, n_qubits, 1, in_width), repeats
    )
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qubits", type=int, default=20)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = [("numpy", numpy_kernels)]
    if _ckernels is not None:
        backends.append(("c", _ckernels))
    else:
        print("compiled kernels not built; benchmarking numpy only")

    print(f"{args.qubits} qubits ({1 << args.qubits} amplitudes), "
          f"best of {args.repeats}\n")
    print(f"{'operation':<16}" + "".join(f"{name:>12}" for name, _ in backends))
    rows = {}
    for name, backend in backends:
        for op, seconds in bench_backend(backend, args.qubits, args.repeats).items():
            rows.setdefault(op, {})[name] = seconds
    for op, timings in rows.items():
        cells = "".join(f"{timings[name] * 1e3:>10.2f}ms" for name, _ in backends)
        print(f"{op:<16}{cells}")
    if len(backends) == 2:
        print("\nspeedup (numpy / c):")
        for op, timings in rows.items():
            print(f"  {op:<16}{timings['numpy'] / timings['c']:.2f}x")


if __name__ == "__main__":
    main()
