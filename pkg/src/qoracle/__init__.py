"""qoracle: oracle algorithms with the oracle's mode register in superposition.

A dense state-vector simulator for Deutsch, Deutsch-Jozsa and Grover in
their classic (sharp mode) and altered (mode register in superposition)
forms, with projective measurement collapse, an examiner/examinee game
protocol, and an exact backdated-collapse equivalence audit.
"""

from .algorithms import (
    AlgorithmRun,
    grover_success_probability,
    optimal_grover_iterations,
    run_deutsch,
    run_deutsch_jozsa,
    run_grover,
)
from .kernels import BACKEND
from .oracle import (
    FamilyFormatError,
    FunctionFamily,
    balanced_constant_family,
    classify_mode,
    delta_family,
    deutsch_family,
    mode_oracle_table,
    parse_family_file,
    serialize_family,
)
from .protocol import (
    ProtocolTranscript,
    TrialStats,
    backdating_equivalence,
    judge,
    play_round,
    run_trials,
)
from .statevector import (
    CapacityError,
    MeasurementRecord,
    RegisterLayout,
    SeededRng,
    StateVector,
    apply_grover_diffusion,
    apply_hadamard,
    apply_x,
    apply_xor_oracle,
    equal_up_to_global_phase,
    marginal_distribution,
    measure,
    new_state,
    project,
    set_superposition,
    state_to_dict,
)

__all__ = [
    "AlgorithmRun",
    "BACKEND",
    "CapacityError",
    "FamilyFormatError",
    "FunctionFamily",
    "MeasurementRecord",
    "ProtocolTranscript",
    "RegisterLayout",
    "SeededRng",
    "StateVector",
    "TrialStats",
    "apply_grover_diffusion",
    "apply_hadamard",
    "apply_x",
    "apply_xor_oracle",
    "backdating_equivalence",
    "balanced_constant_family",
    "classify_mode",
    "delta_family",
    "deutsch_family",
    "equal_up_to_global_phase",
    "grover_success_probability",
    "judge",
    "marginal_distribution",
    "measure",
    "mode_oracle_table",
    "new_state",
    "optimal_grover_iterations",
    "parse_family_file",
    "play_round",
    "project",
    "run_deutsch",
    "run_deutsch_jozsa",
    "run_grover",
    "run_trials",
    "serialize_family",
    "set_superposition",
    "state_to_dict",
]

__version__ = "0.1.0"
