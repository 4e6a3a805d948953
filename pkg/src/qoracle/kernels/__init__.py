"""Amplitude-update kernels with backend selection at import time.

The compiled extension is preferred when present; set QORACLE_KERNELS=numpy
to force the pure-python backend (used by the benchmark and the
cross-backend tests).
"""

import os

if os.environ.get("QORACLE_KERNELS", "").lower() in ("numpy", "python", "py"):
    from . import numpy_kernels as backend
else:
    try:
        from . import _ckernels as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import numpy_kernels as backend

BACKEND = backend.NAME

hadamard = backend.hadamard
pauli_x = backend.pauli_x
phase_flip_nonzero = backend.phase_flip_nonzero
xor_oracle = backend.xor_oracle
