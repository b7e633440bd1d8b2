"""Theorem-evidence checks: expected statuses, reproducibility, bounds."""

import json

import numpy as np
import pytest

from lattice_lab import (
    CheckStatus,
    abs_commutation_index,
    basis,
    build_dyadic,
    build_pairing,
    build_truncation,
    defect_profile,
    harmonic_tail_example,
    null_sequence,
    run_all,
    run_check,
    vector,
    zero,
)
from lattice_lab.harness import (
    CHECK_IDS,
    check_abs_alignment,
    check_abs_closure,
    check_band_projection_lattice,
    check_class_nesting,
    check_closed_under_limits,
    check_closed_under_limits_harmonic,
    check_eventual_not_closed,
    check_limit_defect,
    check_tail_modification,
    random_asymptotic_martingale,
    random_eventual_martingale,
    trial_rng,
)


def test_nesting_confirmed_on_mixed_instances():
    result = check_class_nesting(seed=1, trials=60)
    assert result.status is CheckStatus.CONFIRMED
    assert result.witness["checked"] == 60


def test_closed_under_limits_confirmed():
    for filt in (build_truncation(32), build_dyadic(5)):
        result = check_closed_under_limits(filt, seed=3)
        assert result.status is CheckStatus.CONFIRMED
        dist = result.witness["distances"]
        assert all(b <= a + 1e-12 for a, b in zip(dist, dist[1:]))


def test_closed_under_limits_harmonic_family():
    result = check_closed_under_limits_harmonic(64)
    assert result.status is CheckStatus.CONFIRMED
    assert result.witness["limit_verdict"] == "X_MARTINGALE"
    assert result.witness["distances"][0] == pytest.approx(1.0, abs=1e-12)


def test_limit_defect_terminal_and_null():
    filt = build_truncation(64)
    x = vector(filt.space, 1.0 / np.arange(1, 65))
    from lattice_lab import terminal_sequence

    r1 = check_limit_defect(terminal_sequence(filt, x), x, filt)
    assert r1.status is CheckStatus.CONFIRMED
    assert max(r1.witness["tail_sup_profile"]) == 0.0  # E_m x equals x_m exactly

    seq = null_sequence(basis(filt.space, 1), 64)
    r2 = check_limit_defect(seq, zero(filt.space), filt)
    assert r2.status is CheckStatus.CONFIRMED
    # e_n = max_{m >= n} ||x_m|| = 1/n for the null sequence
    prof = r2.witness["tail_sup_profile"]
    assert prof[0] == pytest.approx(1.0, abs=1e-12)
    assert prof[47] == pytest.approx(1.0 / 48, abs=1e-12)


def test_limit_defect_inapplicable_without_convergence():
    filt = build_truncation(16)
    seq_vecs = (basis(filt.space, 16),) * 16
    from lattice_lab import VectorSequence

    result = check_limit_defect(
        VectorSequence(filt.space, seq_vecs), zero(filt.space), filt
    )
    assert result.status is CheckStatus.INCONCLUSIVE
    assert result.witness["premises"]["asymptotic"] is False


def test_tail_modification_on_harmonic():
    filt, base, _ = harmonic_tail_example(64)
    result = check_tail_modification(base, zero(filt.space), filt)
    assert result.status is CheckStatus.CONFIRMED
    dist = result.witness["distances"]
    assert dist[0] == pytest.approx(1.0 / 2, abs=1e-12)  # max tail norm beyond m=1
    assert result.witness["non_increasing"] is True


def test_eventual_not_closed():
    result = check_eventual_not_closed(64)
    assert result.status is CheckStatus.CONFIRMED
    assert result.witness["limit_verdict"] == "X_MARTINGALE"


def test_abs_closure_counterexamples_and_fractions():
    result = check_abs_closure(build_truncation(16), seed=2, trials=40)
    assert result.status is CheckStatus.CONFIRMED
    assert result.witness["pairing_first_abs_defect"] == pytest.approx(1.0, abs=1e-12)
    assert result.witness["haar_first_abs_defect"] == pytest.approx(0.5, abs=1e-12)
    runs = {r["filtration"]: r for r in result.witness["closure_runs"]}
    assert runs["given"]["closed_fraction"] == 1.0  # band projections close
    assert runs["pairing-3"]["closed_fraction"] < 1.0
    assert runs["haar-3"]["closed_fraction"] < 1.0


def test_band_projection_lattice_statuses():
    confirmed = check_band_projection_lattice(build_truncation(12), seed=4, trials=30)
    assert confirmed.status is CheckStatus.CONFIRMED
    unmet = check_band_projection_lattice(build_dyadic(3), seed=4, trials=5)
    assert unmet.status is CheckStatus.INCONCLUSIVE


def test_abs_alignment_statuses_and_indices():
    confirmed = check_abs_alignment(build_truncation(12), seed=5)
    assert confirmed.status is CheckStatus.CONFIRMED
    assert all(i == 1 for i in confirmed.witness["basis_indices"])

    pairing = check_abs_alignment(build_pairing(3), seed=5)
    assert pairing.status is CheckStatus.INCONCLUSIVE  # closure premise fails
    assert pairing.witness["premises"]["abs_closure_on_samples"] is False
    # positive vectors always align immediately
    assert all(i == 1 for i in pairing.witness["basis_indices"])


def test_abs_commutation_indices_on_pairing():
    filt = build_pairing(3)
    kept_pair = vector(filt.space, [-1, 1, 0, 0, 0, 0])
    straddling = vector(filt.space, [0, 0, -1, 1, 0, 0])
    positive = vector(filt.space, [1, 2, 3, 4, 5, 6])
    # oracle: scan | E_n x | vs E_n |x| with raw matrices
    def brute(x):
        last_bad = 0
        for n in range(1, filt.horizon + 1):
            m = filt.op(n).matrix
            if np.max(np.abs(np.abs(m @ x.coords) - m @ np.abs(x.coords))) > 1e-9:
                last_bad = n
        return last_bad + 1 if last_bad < filt.horizon else None

    for x in (kept_pair, straddling, positive):
        assert abs_commutation_index(filt, x) == brute(x)
    assert abs_commutation_index(filt, kept_pair) == 1
    assert abs_commutation_index(filt, straddling) == 2
    assert abs_commutation_index(filt, positive) == 1


def test_abs_commutation_index_dyadic_positive_vector():
    filt = build_dyadic(3)
    x = vector(filt.space, np.linspace(0.5, 2.0, 8))
    assert abs_commutation_index(filt, x) == 1


def test_asymptotic_generator_respects_analytic_bound():
    for fbuild in (lambda: build_truncation(20), lambda: build_dyadic(4)):
        filt = fbuild()
        for trial in range(10):
            seq, z = random_asymptotic_martingale(filt, trial_rng(9, trial))
            profile = defect_profile(seq, filt)
            n_terms = filt.horizon
            for n in range(1, n_terms + 1):
                assert profile[n - 1] <= 2.0 / n + 1.0 / n_terms + 1e-9


def test_eventual_generator_has_witness_at_cut():
    filt = build_truncation(14)
    from lattice_lab import eventual_witness

    for trial in range(10):
        seq, cut = random_eventual_martingale(filt, trial_rng(8, trial))
        w = eventual_witness(seq, filt)
        assert w is not None and w <= cut


def test_run_check_unknown_id():
    with pytest.raises(ValueError):
        run_check("no-such-check")


def test_run_all_statuses_and_reproducibility():
    first = run_all(seed=11, trials=25)
    second = run_all(seed=11, trials=25)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]
    assert {r.check_id for r in first} == set(CHECK_IDS)
    assert not any(r.status is CheckStatus.VIOLATED for r in first)
    # every result serializes to the wire shape
    for r in first:
        doc = json.loads(json.dumps(r.to_dict()))
        assert set(doc) == {"id", "descriptor", "status", "witness", "seed"}
