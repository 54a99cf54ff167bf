"""Exit criteria for the package; one PASS/FAIL line per criterion is printed
in the pytest terminal summary."""
import json
import math
import time

import numpy as np
import pytest

from wtilde import kernels
from wtilde.cli import main
from wtilde.election import chi_square_uniform, run_trials_alpha2
from wtilde.majorana import (
    _point_matrix,
    degeneracy_config,
    elementary_symmetric,
    lemma_normalization,
    majorana_extract,
    majorana_state,
    overlap_closed_form,
    phi_set,
    roots_Rn,
)
from wtilde.slocc import apply_symmetric_ilo, builtin_m3, builtin_m4, degeneracy_verdict
from wtilde.statekit import fidelity, from_dicke, ghz_state, hamming_weights, w_state, wtilde_state

ILO_ARGS = {n: ["ilo-search", "--n", str(n), "--restarts", "200", "--seed", "0"] for n in (3, 4, 5, 6)}
ELECT_ARGS = {
    (n, a2): ["elect", "--n", str(n), "--alpha2", str(a2), "--trials", "10000", "--seed", "0"]
    for n in range(3, 11)
    for a2 in (0.5, 1.0)
}


@pytest.fixture
def record(acceptance_log):
    def _record(label, ok, detail):
        acceptance_log.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        return ok

    return _record


def cli_bytes(argv, path):
    code = main(argv + ["--out", str(path)])
    return code, path.read_bytes()


@pytest.fixture(scope="session")
def ilo_runs(tmp_path_factory):
    d = tmp_path_factory.mktemp("ilo")
    t0 = time.perf_counter()
    runs = {n: cli_bytes(argv, d / f"ilo{n}.json") for n, argv in ILO_ARGS.items()}
    return runs, time.perf_counter() - t0


@pytest.fixture(scope="session")
def elect_runs(tmp_path_factory):
    d = tmp_path_factory.mktemp("elect")
    return {key: cli_bytes(argv, d / f"elect{key[0]}_{key[1]}.json") for key, argv in ELECT_ARGS.items()}


def test_c1_lemma1_brute_force(record):
    t0 = time.perf_counter()
    worst_err, worst_fid = 0.0, 1.0
    for n in range(3, 9):
        full = kernels.permutation_sum(_point_matrix(phi_set(n)))
        closed = np.array([overlap_closed_form(n, h) for h in range(n + 1)])[hamming_weights(n)]
        worst_err = max(worst_err, float(np.max(np.abs(full - closed))))
        fid = abs(np.vdot(wtilde_state(n).amps, lemma_normalization(n) * full)) ** 2
        worst_fid = min(worst_fid, fid)
    elapsed = time.perf_counter() - t0
    ok = worst_err <= 1e-9 and worst_fid >= 1 - 1e-10 and elapsed < 60
    record(
        "C1 Lemma 1 n=3..8",
        ok,
        f"max overlap err {worst_err:.2e} (<=1e-9), min fidelity 1-{1 - worst_fid:.1e}, {elapsed:.1f}s (<60s)",
    )
    assert ok


def test_c2_root_identities(record):
    worst = 0.0
    for n in range(4, 13):
        roots = roots_Rn(n)
        for k in range(1, n - 2):
            worst = max(worst, abs(elementary_symmetric(roots, k)))
        worst = max(worst, abs(elementary_symmetric(roots, n - 2) - 1))
    ok = worst <= 1e-10
    record("C2 elementary symmetric sums n=4..12", ok, f"max deviation {worst:.2e} (<=1e-10)")
    assert ok


def test_c3_theorem1(record):
    bad = []
    for n in range(3, 11):
        cw = degeneracy_config(majorana_extract(w_state(n)))
        ct = degeneracy_config(majorana_extract(wtilde_state(n)))
        v = degeneracy_verdict(w_state(n), wtilde_state(n))
        if cw != (n - 1, 1) or ct != (1,) * n or not v.inequivalent_proven:
            bad.append(n)
    ok = not bad
    record("C3 W vs W~ degeneracy n=3..10", ok, "all configs match" if ok else f"mismatch at n={bad}")
    assert ok


def test_c4_builtin_ilos(record):
    f3 = fidelity(apply_symmetric_ilo(builtin_m3(), ghz_state(3)), wtilde_state(3))
    f4 = fidelity(apply_symmetric_ilo(builtin_m4(), ghz_state(4)), wtilde_state(4))
    m4 = builtin_m4().entries
    unit_err = float(np.max(np.abs(m4 @ m4.conj().T - np.eye(2))))
    ok = f3 >= 1 - 1e-9 and f4 >= 1 - 1e-9 and unit_err <= 1e-12
    record("C4 M3/M4", ok, f"fid3 1-{1 - f3:.1e}, fid4 1-{1 - f4:.1e}, |M4 M4^+ - I| {unit_err:.1e}")
    assert ok


def test_c5_ilo_search(record, ilo_runs):
    runs, elapsed = ilo_runs
    docs = {n: json.loads(b) for n, (_, b) in runs.items()}
    pos = all(docs[n]["found"] and docs[n]["best_infidelity"] < 1e-8 for n in (3, 4))
    neg = all((not docs[n]["found"]) and docs[n]["best_infidelity"] > 1e-4 for n in (5, 6))
    ok = pos and neg and elapsed < 300 and all(code == 0 for code, _ in runs.values())
    summary = ", ".join(f"n={n}: {docs[n]['best_infidelity']:.2e}" for n in sorted(docs))
    record("C5 ILO search seed 0, 200 restarts", ok, f"{summary}; {elapsed:.0f}s (<300s)")
    assert ok


def test_c6_total_correctness(record):
    failures = 0
    for n in range(3, 11):
        for a2 in (0.0, 0.25, 0.5, 0.75, 1.0):
            s = run_trials_alpha2(n, a2, 10000, seed=0)
            failures += s.failures
    ok = failures == 0
    record("C6 election n=3..10 x 5 resources x 10^4", ok, f"{failures} failures in 400000 trials")
    assert ok


def test_c7_election_statistics(record, elect_runs):
    min_p, worst_dev, full_ok = 1.0, 0.0, True
    for (n, a2), (code, raw) in elect_runs.items():
        doc = json.loads(raw)
        if a2 == 0.5:
            _, p = chi_square_uniform(doc["leader_counts"])
            min_p = min(min_p, p)
            worst_dev = max(worst_dev, abs(doc["leader_bit_one_frac"] - 0.5))
        else:
            full_ok &= doc["leader_bit_one_frac"] == 1.0
        full_ok &= code == 0
    bound = 4 * math.sqrt(0.25 / 1e4)
    ok = min_p > 0.001 and worst_dev <= bound and full_ok
    record(
        "C7 election statistics n=3..10",
        ok,
        f"min chi-square p {min_p:.3f} (>0.001), max |frac-0.5| {worst_dev:.4f} (<={bound}), alpha2=1 frac==1: {full_ok}",
    )
    assert ok


def test_c8_extraction_round_trip(record):
    r = np.random.default_rng(8)
    worst = 1.0
    for i in range(60):
        n = 3 + i % 10
        state = from_dicke(r.standard_normal(n + 1) + 1j * r.standard_normal(n + 1))
        worst = min(worst, fidelity(majorana_state(majorana_extract(state)), state))
    ok = worst >= 1 - 1e-8
    record("C8 extraction round trip, 60 states n=3..12", ok, f"min fidelity 1-{1 - worst:.1e}")
    assert ok


def test_c9_determinism(record, ilo_runs, elect_runs, tmp_path):
    mismatched = []
    runs, _ = ilo_runs
    for n, argv in ILO_ARGS.items():
        if cli_bytes(argv, tmp_path / f"ilo{n}.json")[1] != runs[n][1]:
            mismatched.append(" ".join(argv))
    for key, argv in ELECT_ARGS.items():
        if cli_bytes(argv, tmp_path / f"e{key[0]}_{key[1]}.json")[1] != elect_runs[key][1]:
            mismatched.append(" ".join(argv))
    ok = not mismatched
    record("C9 byte-identical reruns of C5-C7", ok, "identical" if ok else f"differs: {mismatched}")
    assert ok
