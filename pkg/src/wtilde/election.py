"""Anonymous leader election over a faultless synchronous broadcast network.

Every processor starts with the same classical state and one qubit of
``alpha W_n + beta Wbar_n``. It measures, broadcasts its bit, counts zeros and
ones over its own bit plus the ``n - 1`` received messages, and becomes leader
exactly when its own bit is the minority. Whole-register sampling stands in for
the ``n`` simultaneous local measurements; for a computational-basis readout of
a shared pure state the two are identically distributed.

Processor ``p`` holds position ``p`` of the measured basis string.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .statekit import index_to_bits, measure_computational, sample_index, wtilde_state


def decide_leader(c: int, count_zeros: int, count_ones: int) -> bool:
    if count_ones > count_zeros and c == 0:
        return True
    if count_zeros > count_ones and c == 1:
        return True
    return False


@dataclass
class ProcessorState:
    c: int | None = None
    count_zeros: int = 0
    count_ones: int = 0
    leader: bool | None = None

    def measure(self, bit: int) -> None:
        self.c = int(bit)
        if self.c == 0:
            self.count_zeros, self.count_ones = 1, 0
        else:
            self.count_ones, self.count_zeros = 1, 0

    def receive(self, messages) -> None:
        for j in messages:
            if j == 1:
                self.count_ones += 1
            if j == 0:
                self.count_zeros += 1

    def decide(self) -> bool:
        self.leader = decide_leader(self.c, self.count_zeros, self.count_ones)
        return self.leader


@dataclass
class ElectionTrace:
    n: int
    measured_bits: list[int]
    broadcast_round: list[int]
    leader_flags: list[bool]
    processors: list[ProcessorState] = field(repr=False)
    rounds_used: int = 1
    messages_sent: int = 0

    @property
    def leaders(self) -> list[int]:
        return [p for p, flag in enumerate(self.leader_flags) if flag]

    @property
    def valid(self) -> bool:
        return len(self.leaders) == 1


def run_protocol(measured_bits) -> ElectionTrace:
    """Steps 2-7 of the protocol for a given register readout."""
    bits = [int(b) for b in measured_bits]
    n = len(bits)
    procs = [ProcessorState() for _ in range(n)]
    for proc, bit in zip(procs, bits):
        proc.measure(bit)

    # one synchronous round: every processor broadcasts c to all others
    outbox = [proc.c for proc in procs]
    for p, proc in enumerate(procs):
        proc.receive(outbox[:p] + outbox[p + 1 :])
    flags = [proc.decide() for proc in procs]
    return ElectionTrace(
        n=n,
        measured_bits=bits,
        broadcast_round=sorted(outbox),
        leader_flags=flags,
        processors=procs,
        rounds_used=1,
        messages_sent=n * (n - 1),
    )


def _resource_amplitudes(alpha2: float) -> tuple[float, float]:
    if not 0.0 <= alpha2 <= 1.0:
        raise ValueError(f"alpha2 must lie in [0, 1], got {alpha2!r}")
    return math.sqrt(alpha2), math.sqrt(1.0 - alpha2)


def run_election(n: int, alpha: complex, beta: complex, rng: np.random.Generator) -> ElectionTrace:
    if n < 3:
        raise ValueError(f"leader election needs n >= 3, got {n}")
    state = wtilde_state(n, alpha, beta)
    return run_protocol(measure_computational(state, rng))


@dataclass
class TrialStats:
    n: int
    alpha2: float
    trials: int
    leader_counts: list[int]
    leader_bit_one_count: int
    failures: int
    seed: int

    @property
    def leader_bit_one_frac(self) -> float:
        return self.leader_bit_one_count / self.trials

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha2": self.alpha2,
            "trials": self.trials,
            "failures": self.failures,
            "leader_counts": list(self.leader_counts),
            "leader_bit_one_frac": self.leader_bit_one_frac,
            "seed": self.seed,
        }


def trial_uniforms(seed: int, trials: int) -> np.ndarray:
    """First uniform draw of the generator keyed on ``(seed, t)`` for each trial ``t``."""
    return np.array([np.random.default_rng([seed, t]).random() for t in range(trials)])


def run_trials(n: int, alpha: complex, beta: complex, trials: int, seed: int = 0) -> TrialStats:
    """Aggregate ``trials`` independent elections.

    Trial ``t`` uses the generator ``default_rng([seed, t])``, the same stream
    ``run_election`` would consume, so each trial is reproducible on its own.
    Readouts are decoded and tallied in one batched kernel call.
    """
    if n < 3:
        raise ValueError(f"leader election needs n >= 3, got {n}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    state = wtilde_state(n, alpha, beta)
    idx = np.atleast_1d(sample_index(state, trial_uniforms(seed, trials)))
    bits = ((idx[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1).astype(np.int64)
    flags = kernels.election_tally(bits)

    n_leaders = flags.sum(axis=1)
    ok = n_leaders == 1
    leader_pos = np.argmax(flags, axis=1)
    counts = np.bincount(leader_pos[ok], minlength=n)
    bit_one = int(np.sum(bits[ok, leader_pos[ok]] == 1))
    return TrialStats(
        n=n,
        alpha2=abs(complex(alpha)) ** 2,
        trials=trials,
        leader_counts=[int(c) for c in counts],
        leader_bit_one_count=bit_one,
        failures=int(np.sum(~ok)),
        seed=seed,
    )


def run_trials_alpha2(n: int, alpha2: float, trials: int, seed: int = 0) -> TrialStats:
    """``run_trials`` with real, non-negative ``alpha = sqrt(alpha2)``."""
    alpha, beta = _resource_amplitudes(alpha2)
    stats = run_trials(n, alpha, beta, trials, seed)
    stats.alpha2 = alpha2
    return stats


def chi_square_uniform(counts) -> tuple[float, float]:
    """Pearson statistic and p-value against equal cell probabilities."""
    from scipy.stats import chisquare

    res = chisquare(np.asarray(counts, dtype=np.float64))
    return float(res.statistic), float(res.pvalue)


def outcome_histogram(n: int, alpha: complex, beta: complex, trials: int, seed: int = 0) -> Counter:
    """Counts of each sampled readout string, keyed by the bit tuple."""
    state = wtilde_state(n, alpha, beta)
    idx = np.atleast_1d(sample_index(state, trial_uniforms(seed, trials)))
    return Counter(tuple(index_to_bits(int(i), n)) for i in idx)
