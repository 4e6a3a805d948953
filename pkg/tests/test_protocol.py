import json

import pytest

from qoracle import protocol
from qoracle.oracle import delta_family, deutsch_family


def test_splitmix64_reference_values():
    # first outputs of the published SplitMix64 sequence from seed 0
    assert protocol.splitmix64(0) == 0xE220A8397B1DCDAF
    assert protocol.splitmix64(1) == 0x910A2DEC89025CC1
    assert protocol.round_seed(7, 3) == protocol.splitmix64(7 ^ 3)


def test_judge():
    family = deutsch_family()
    assert protocol.judge("balanced", "01", family)
    assert protocol.judge("balanced", "10", family)
    assert not protocol.judge("balanced", "00", family)
    assert protocol.judge("constant", "11", family)
    assert protocol.judge("11", "11", delta_family(2))
    assert not protocol.judge("10", "11", delta_family(2))
    with pytest.raises(KeyError):
        protocol.judge("balanced", "0", family)


def test_deutsch_round_is_always_correct():
    for seed in range(30):
        transcript = protocol.play_round("deutsch", 1, seed=seed)
        assert transcript.correct
        if transcript.x_outcome == "1":
            assert transcript.sphinx_k in ("01", "10")
            assert transcript.oedipus_answer == "balanced"
        else:
            assert transcript.sphinx_k in ("00", "11")
            assert transcript.oedipus_answer == "constant"


def test_grover_round_sphinx_matches_oedipus():
    for seed in range(30):
        transcript = protocol.play_round("grover", 2, seed=seed)
        assert transcript.correct
        assert transcript.sphinx_k == transcript.x_outcome
        assert transcript.oedipus_answer == transcript.x_outcome


def test_backdated_rounds_stay_correct():
    for algorithm, n in (("deutsch", 1), ("deutsch_jozsa", 2), ("grover", 2)):
        for seed in range(20):
            transcript = protocol.play_round(algorithm, n, seed=seed, backdated=True)
            assert transcript.correct
            assert transcript.backdated


def test_round_determinism():
    first = protocol.play_round("deutsch_jozsa", 2, seed=99)
    second = protocol.play_round("deutsch_jozsa", 2, seed=99)
    assert first == second


def test_round_event_ordering():
    """The examiner's k measurement happens strictly after the answer commit,
    and the examinee phase never touches k."""
    events = []
    protocol.play_round("deutsch", 1, seed=5, trace=events.append)
    assert events.index("measure_x") < events.index("commit_answer")
    assert events.index("commit_answer") < events.index("measure_k")
    assert "backdated_k_collapse" not in events
    events = []
    protocol.play_round("deutsch", 1, seed=5, backdated=True, trace=events.append)
    assert events.index("backdated_k_collapse") < events.index("run_circuit")
    assert events.index("commit_answer") < events.index("measure_k")


def test_run_trials_aggregation():
    stats = protocol.run_trials("deutsch", 1, trials=200, seed=7)
    assert stats.trials == 200
    assert stats.correct_count == 200
    assert sum(stats.joint_histogram.values()) == 200
    for (x, k), _ in stats.joint_histogram.items():
        assert (x == "1") == (k in ("01", "10"))
    with pytest.raises(ValueError):
        protocol.run_trials("deutsch", 1, trials=0, seed=7)


def test_run_trials_deterministic_and_seed_sensitive():
    a = protocol.run_trials("deutsch", 1, trials=50, seed=3)
    b = protocol.run_trials("deutsch", 1, trials=50, seed=3)
    c = protocol.run_trials("deutsch", 1, trials=50, seed=4)
    assert a == b
    assert a.joint_histogram != c.joint_histogram


def test_grover_trials_sit_on_diagonal():
    stats = protocol.run_trials("grover", 2, trials=100, seed=1)
    assert stats.correct_count == 100
    assert all(x == k for (x, k) in stats.joint_histogram)


@pytest.mark.parametrize(
    "algorithm,n", [("deutsch", 1), ("deutsch_jozsa", 2), ("grover", 2)]
)
def test_backdating_equivalence_is_exact(algorithm, n):
    assert protocol.backdating_equivalence(algorithm, n) < 1e-12


def test_transcript_serialization():
    transcript = protocol.play_round("deutsch", 1, seed=11)
    payload = json.loads(json.dumps(transcript.to_dict()))
    assert payload["algorithm"] == "deutsch"
    assert payload["x_outcome"] in ("0", "1")
    assert payload["correct"] is True
    stats = protocol.run_trials("grover", 2, trials=10, seed=2)
    payload = json.loads(json.dumps(stats.to_dict()))
    assert payload["trials"] == 10
    assert sum(payload["joint_histogram"].values()) == 10
    for key in payload["joint_histogram"]:
        x, k = key.split(",")
        assert x == k
