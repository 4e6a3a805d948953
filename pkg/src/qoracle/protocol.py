"""The examiner/examinee game over the altered circuits.

One round: the examinee (Oedipus) receives the circuit with the mode
register k in superposition, measures only x, and commits an answer; the
examiner (Sphinx) then measures k and judges the answer. With --backdated
the k collapse is relocated to immediately after the ancilla preparation,
which must not change the joint (x, k) statistics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import statevector as sv
from .algorithms import SUPERPOSED, answer_from_x, build_superposed
from .oracle import FunctionFamily, classify_mode

_MASK64 = (1 << 64) - 1


def splitmix64(z: int) -> int:
    """One SplitMix64 step; fixes cross-run sub-seed derivation."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def round_seed(master_seed: int, round_index: int) -> int:
    return splitmix64((master_seed ^ round_index) & _MASK64)


@dataclass
class ProtocolTranscript:
    algorithm: str
    variant: str
    n: int
    seed: int
    x_outcome: str
    oedipus_answer: str
    sphinx_k: str
    correct: bool
    backdated: bool

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "variant": self.variant,
            "n": self.n,
            "seed": self.seed,
            "x_outcome": self.x_outcome,
            "oedipus_answer": self.oedipus_answer,
            "sphinx_k": self.sphinx_k,
            "correct": self.correct,
            "backdated": self.backdated,
        }


@dataclass
class TrialStats:
    trials: int
    correct_count: int
    joint_histogram: dict[tuple[str, str], int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "correct_count": self.correct_count,
            "joint_histogram": {
                f"{x},{k}": count
                for (x, k), count in sorted(self.joint_histogram.items())
            },
        }


def judge(answer: str, sphinx_k: str, family: FunctionFamily) -> bool:
    """Check the committed answer against the measured mode."""
    if answer in ("balanced", "constant"):
        return classify_mode(family, sphinx_k) == answer
    family.table(sphinx_k)  # raises on unknown label
    return answer == sphinx_k


def play_round(
    algorithm: str,
    n: int,
    seed: int,
    backdated: bool = False,
    iterations: int | None = None,
    seed_path: str | None = None,
    trace=None,
) -> ProtocolTranscript:
    """One seeded game round; deterministic given (arguments, seed)."""
    emit = trace if trace is not None else (lambda event: None)
    circuit = build_superposed(algorithm, n, iterations)
    rng = sv.SeededRng(seed, seed_path)
    state = circuit.prepare_ancilla(circuit.initial_state())
    emit("prepare_ancilla")
    if backdated:
        _, state = sv.measure(state, "k", rng)
        emit("backdated_k_collapse")
    state = circuit.apply_body(state)
    emit("run_circuit")
    x_record, state = sv.measure(state, "x", rng)
    emit("measure_x")
    answer = answer_from_x(algorithm, x_record.outcome)
    emit("commit_answer")
    k_record, state = sv.measure(state, "k", rng)
    emit("measure_k")
    correct = judge(answer, k_record.outcome, circuit.family)
    return ProtocolTranscript(
        algorithm=algorithm,
        variant=SUPERPOSED,
        n=n,
        seed=seed,
        x_outcome=x_record.outcome,
        oedipus_answer=answer,
        sphinx_k=k_record.outcome,
        correct=correct,
        backdated=backdated,
    )


def run_trials(
    algorithm: str,
    n: int,
    trials: int,
    seed: int,
    backdated: bool = False,
    iterations: int | None = None,
) -> TrialStats:
    """Aggregate independent rounds with sub-seeds derived via splitmix64."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    stats = TrialStats(trials=trials, correct_count=0)
    for i in range(trials):
        transcript = play_round(
            algorithm,
            n,
            seed=round_seed(seed, i),
            backdated=backdated,
            iterations=iterations,
            seed_path=f"{seed}/{i}",
        )
        if transcript.correct:
            stats.correct_count += 1
        key = (transcript.x_outcome, transcript.sphinx_k)
        stats.joint_histogram[key] = stats.joint_histogram.get(key, 0) + 1
    return stats


def backdating_equivalence(
    algorithm: str, n: int, iterations: int | None = None
) -> float:
    """Total variation distance between the exact joint (x, k) distributions
    of the two measurement orderings; no sampling involved.
    """
    circuit = build_superposed(algorithm, n, iterations)
    prepared = circuit.prepare_ancilla(circuit.initial_state())
    x_width = circuit.layout.width("x")

    # k first: collapse the ancilla onto each mode, then run the circuit.
    early: dict[tuple[str, str], float] = {}
    k_probs = sv.marginal_distribution(prepared, "k")
    for label in circuit.family.labels:
        p_k = float(k_probs[int(label, 2)])
        if p_k == 0.0:
            continue
        branch = circuit.apply_body(sv.project(prepared, "k", label))
        for xv, p_x in enumerate(sv.marginal_distribution(branch, "x")):
            if p_x > 0.0:
                early[(format(xv, f"0{x_width}b"), label)] = p_k * float(p_x)

    # x first: run the full circuit, measure x, then k.
    late: dict[tuple[str, str], float] = {}
    final = circuit.apply_body(prepared)
    k_width = circuit.layout.width("k")
    for xv, p_x in enumerate(sv.marginal_distribution(final, "x")):
        if p_x <= 0.0:
            continue
        x_label = format(xv, f"0{x_width}b")
        branch = sv.project(final, "x", x_label)
        for kv, p_k in enumerate(sv.marginal_distribution(branch, "k")):
            if p_k > 0.0:
                late[(x_label, format(kv, f"0{k_width}b"))] = float(p_x) * float(p_k)

    keys = set(early) | set(late)
    return 0.5 * sum(abs(early.get(key, 0.0) - late.get(key, 0.0)) for key in keys)
