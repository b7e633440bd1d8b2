"""Executable evidence for the structural claims about martingale-like classes.

Each check exercises one claim on concrete and randomized instances and
returns a :class:`TheoremResult` with status

  * CONFIRMED    -- every instance satisfying the claim's premises showed
                    the claimed conclusion;
  * VIOLATED     -- a premise-satisfying instance contradicted the
                    conclusion.  The claims are proved facts, so a
                    violation means an implementation bug, and the result
                    carries a witness reproducible from (check id,
                    descriptor, seed);
  * INCONCLUSIVE -- the premises could not be established on the instance,
                    so the claim says nothing there (data may still be
                    recorded in the witness).

Checks confirm conclusions on instances; they are evidence, not proofs.
Only stated implications are asserted -- converses never are (an
asymptotic martingale is never required to be an eventual one).

Randomized trials draw one RNG stream per (seed, trial index), so trials
are order-independent and could run concurrently; all inputs are
immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

import numpy as np

from .filtration import (
    Filtration,
    all_band_projections,
    build_dyadic,
    build_pairing,
    build_random_nested,
    build_truncation,
    is_dense,
)
from .martingales import (
    VectorSequence,
    Verdict,
    abs_seq,
    classify,
    defect_profile,
    eventual_witness,
    harmonic_tail_example,
    haar_example,
    null_sequence,
    one_step_defects,
    pairing_example,
    scale_head,
    seq_distance,
    seq_norm,
    tail_modify,
    tail_verdict,
    tail_window_start,
    terminal_sequence,
)
from .operators import apply
from .spaces import (
    DEFAULT_TOL,
    LatticeSpace,
    LatticeVector,
    NormKind,
    absolute,
    basis,
    norm,
    vector,
    zero,
)

#: Slack added to analytically exact inequalities to absorb rounding.
FLOAT_SLACK = 1e-9


class CheckStatus(str, Enum):
    CONFIRMED = "CONFIRMED"
    VIOLATED = "VIOLATED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class TheoremResult:
    """Outcome of one claim check on one instance."""

    check_id: str
    descriptor: dict
    status: CheckStatus
    witness: dict = field(default_factory=dict)
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.check_id,
            "descriptor": self.descriptor,
            "status": self.status.value,
            "witness": self.witness,
            "seed": self.seed,
        }


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, trial); merging order never matters."""
    return np.random.default_rng((int(seed), int(trial)))


def _space_descriptor(space: LatticeSpace) -> dict:
    return {"dim": space.dim, "norm": space.norm_kind.value}


def _filt_descriptor(filt: Filtration, builder: str | None = None, **params) -> dict:
    d = {"horizon": filt.horizon, **_space_descriptor(filt.space)}
    if builder is not None:
        d["builder"] = builder
        d.update(params)
    return d


# ---------------------------------------------------------------------------
# Randomized instance generators
# ---------------------------------------------------------------------------

def _random_vector(space: LatticeSpace, rng: np.random.Generator) -> LatticeVector:
    return vector(space, rng.uniform(-1.0, 1.0, size=space.dim))


def _unit_vector(space: LatticeSpace, rng: np.random.Generator) -> LatticeVector:
    v = _random_vector(space, rng)
    n = norm(v)
    return v * (1.0 / n) if n > 0 else basis(space, 1)


def random_filtration(rng: np.random.Generator) -> tuple[Filtration, dict]:
    """Draw one of the four builders with random small parameters."""
    kind = rng.choice(["truncation", "pairing", "dyadic", "random-nested"])
    if kind == "truncation":
        n = int(rng.integers(4, 25))
        return build_truncation(n), {"builder": "truncation", "size": n}
    if kind == "pairing":
        pairs = int(rng.integers(2, 11))
        return build_pairing(pairs), {"builder": "pairing", "size": pairs}
    if kind == "dyadic":
        levels = int(rng.integers(2, 6))
        return build_dyadic(levels), {"builder": "dyadic", "size": levels}
    dim = int(rng.integers(4, 25))
    depth = int(rng.integers(2, dim + 1))
    sub_seed = int(rng.integers(2**63))
    norm_kind = NormKind.WEIGHTED_L1 if rng.random() < 0.5 else NormKind.SUP
    filt = build_random_nested(dim, depth, sub_seed, norm_kind)
    return filt, {
        "builder": "random-nested",
        "dim": dim,
        "depth": depth,
        "sub_seed": sub_seed,
        "norm": norm_kind.value,
    }


def random_eventual_martingale(
    filt: Filtration, rng: np.random.Generator
) -> tuple[VectorSequence, int]:
    """Random junk head, terminal tail: one-step law holds from the cut on.

    Returns the sequence and the cut index (an upper bound for the minimal
    witness; with a random head it is almost surely exact).
    """
    n_terms = filt.horizon
    cut = int(rng.integers(1, n_terms)) if n_terms > 1 else 1
    x = _random_vector(filt.space, rng)
    tail = terminal_sequence(filt, x)
    vecs = [
        _random_vector(filt.space, rng) if n < cut else tail.term(n)
        for n in range(1, n_terms + 1)
    ]
    return VectorSequence(filt.space, tuple(vecs)), cut


def random_asymptotic_martingale(
    filt: Filtration, rng: np.random.Generator
) -> tuple[VectorSequence, LatticeVector]:
    """Martingale plus the null perturbation z/n with ||z|| = 1.

    The defect profile satisfies d_n <= 2/n + 1/N analytically; consumers
    assert that bound on the computed profile.
    """
    x = _random_vector(filt.space, rng)
    z = _unit_vector(filt.space, rng)
    base = terminal_sequence(filt, x)
    vecs = tuple(
        base.term(n) + z * (1.0 / n) for n in range(1, filt.horizon + 1)
    )
    return VectorSequence(filt.space, vecs), z


def _asymptotic_bound_violation(profile: np.ndarray) -> int | None:
    """Index (1-based) where d_n exceeds 2/n + 1/N + slack, or None."""
    n_terms = profile.size
    for n in range(1, n_terms + 1):
        if profile[n - 1] > 2.0 / n + 1.0 / n_terms + FLOAT_SLACK:
            return n
    return None


# ---------------------------------------------------------------------------
# Claim checks
# ---------------------------------------------------------------------------

def check_class_nesting(
    seed: int = 0, trials: int = 100, tol: float = DEFAULT_TOL
) -> TheoremResult:
    """Martingale => eventual witness 1 => asymptotic; never the converses.

    Each trial draws a filtration and a sequence from the full generator
    mix and asserts the implication chain on its classification report; an
    eventual martingale is additionally required not to classify NOT_X.
    """
    check_id = "nesting"
    generators = (
        "terminal",
        "scaled-head",
        "null",
        "eventual",
        "asymptotic",
        "constant",
        "abs-of-terminal",
    )
    checked = 0
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        filt, f_desc = random_filtration(rng)
        gen = str(rng.choice(generators))
        if gen == "terminal":
            seq = terminal_sequence(filt, _random_vector(filt.space, rng))
        elif gen == "scaled-head":
            seq = scale_head(
                terminal_sequence(filt, _random_vector(filt.space, rng)),
                float(rng.uniform(1.5, 3.0)),
            )
        elif gen == "null":
            seq = null_sequence(_random_vector(filt.space, rng), filt.horizon)
        elif gen == "eventual":
            seq, _ = random_eventual_martingale(filt, rng)
        elif gen == "asymptotic":
            seq, _ = random_asymptotic_martingale(filt, rng)
        elif gen == "constant":
            v = _random_vector(filt.space, rng)
            seq = VectorSequence(filt.space, (v,) * filt.horizon)
        else:
            seq = abs_seq(terminal_sequence(filt, _random_vector(filt.space, rng)))

        report = classify(seq, filt, tol)
        ok = (
            (not report.is_martingale or report.e_witness == 1)
            and (report.e_witness != 1 or report.x_verdict is Verdict.X_MARTINGALE)
            and (report.e_witness is None or report.x_verdict is not Verdict.NOT_X)
        )
        if not ok:
            return TheoremResult(
                check_id,
                {"trials": trials},
                CheckStatus.VIOLATED,
                {
                    "trial": trial,
                    "filtration": f_desc,
                    "generator": gen,
                    "report": report.to_dict(),
                },
                seed,
            )
        checked += 1
    return TheoremResult(
        check_id, {"trials": trials}, CheckStatus.CONFIRMED, {"checked": checked}, seed
    )


def _limit_family_check(
    check_id: str,
    filt: Filtration,
    members: Iterable[VectorSequence],
    limit: VectorSequence,
    descriptor: dict,
    seed: int | None,
) -> TheoremResult:
    """Shared core: members must not be NOT_X, nor the limit; replay the
    triangle bound d(limit)_n <= d(member)_n + 2 ||member - limit||."""
    members = list(members)
    limit_profile = defect_profile(limit, filt)
    distances = []
    for k, member in enumerate(members, start=1):
        verdict = tail_verdict(member, filt)
        if verdict is Verdict.NOT_X:
            return TheoremResult(
                check_id,
                descriptor,
                CheckStatus.VIOLATED,
                {"member": k, "problem": "family member classified NOT_X"},
                seed,
            )
        dist = seq_distance(member, limit)
        distances.append(dist)
        member_profile = defect_profile(member, filt)
        slack = limit_profile - member_profile - 2.0 * dist
        if float(slack.max()) > FLOAT_SLACK:
            n_bad = int(slack.argmax()) + 1
            return TheoremResult(
                check_id,
                descriptor,
                CheckStatus.VIOLATED,
                {
                    "member": k,
                    "problem": "triangle bound failed",
                    "at_index": n_bad,
                    "limit_defect": float(limit_profile[n_bad - 1]),
                    "member_defect": float(member_profile[n_bad - 1]),
                    "distance": dist,
                },
                seed,
            )
    limit_verdict = tail_verdict(limit, filt)
    if limit_verdict is Verdict.NOT_X:
        return TheoremResult(
            check_id,
            descriptor,
            CheckStatus.VIOLATED,
            {"problem": "limit of asymptotic martingales classified NOT_X"},
            seed,
        )
    return TheoremResult(
        check_id,
        descriptor,
        CheckStatus.CONFIRMED,
        {
            "members": len(members),
            "distances": [float(d) for d in distances],
            "limit_verdict": limit_verdict.value,
        },
        seed,
    )


def check_closed_under_limits(
    filt: Filtration | None = None, seed: int = 0, members: int = 8
) -> TheoremResult:
    """A sequence-space limit of asymptotic martingales stays asymptotic.

    Builds A^k = A + z/(k n) around a random martingale A, so
    ||A^k - A|| = 1/k -> 0, and checks the limit plus the proof's triangle
    bound numerically.
    """
    if filt is None:
        filt = build_truncation(32)
    rng = trial_rng(seed, 0)
    x = _random_vector(filt.space, rng)
    z = _unit_vector(filt.space, rng)
    limit = terminal_sequence(filt, x)
    family = []
    for k in range(1, members + 1):
        vecs = tuple(
            limit.term(n) + z * (1.0 / (k * n)) for n in range(1, filt.horizon + 1)
        )
        family.append(VectorSequence(filt.space, vecs))
    descriptor = {
        "family": "martingale-plus-shrinking-null",
        "members": members,
        **_filt_descriptor(filt),
    }
    return _limit_family_check("closed-limits", filt, family, limit, descriptor, seed)


def check_closed_under_limits_harmonic(n_terms: int = 64) -> TheoremResult:
    """Same claim on the harmonic-tail family, whose limit lies outside the
    eventual class yet must (and does) stay asymptotic."""
    filt, base, family = harmonic_tail_example(n_terms)
    descriptor = {"family": "harmonic-tail", "size": n_terms, **_filt_descriptor(filt)}
    return _limit_family_check("closed-limits", filt, family, base, descriptor, None)


def check_limit_defect(
    seq: VectorSequence,
    limit_vec: LatticeVector,
    filt: Filtration,
    eps: float | None = None,
    descriptor: dict | None = None,
) -> TheoremResult:
    """For a convergent asymptotic martingale, e_n = max_{m>=n} ||E_m x - x_m||
    must decay over the tail window (x the limit vector)."""
    check_id = "limit-defect"
    if descriptor is None:
        descriptor = _filt_descriptor(filt)
    if eps is None:
        eps = 0.05 * max(1.0, seq_norm(seq), norm(limit_vec))
    n_terms = seq.horizon
    start = _window_start(n_terms)

    conv = np.array([norm(seq.term(n) - limit_vec) for n in range(1, n_terms + 1)])
    verdict = tail_verdict(seq, filt)
    premises = {
        "asymptotic": verdict is Verdict.X_MARTINGALE,
        "convergent": bool(conv[start - 1 :].max() <= eps),
    }
    if not all(premises.values()):
        return TheoremResult(
            check_id,
            descriptor,
            CheckStatus.INCONCLUSIVE,
            {"premises": premises, "note": "claim inapplicable on this instance"},
            None,
        )

    step = np.array(
        [norm(apply(filt.op(m), limit_vec) - seq.term(m)) for m in range(1, n_terms + 1)]
    )
    tail_sup = np.array([step[n - 1 :].max() for n in range(1, n_terms + 1)])
    ok = bool(tail_sup[start - 1 :].max() <= eps)
    return TheoremResult(
        check_id,
        descriptor,
        CheckStatus.CONFIRMED if ok else CheckStatus.VIOLATED,
        {
            "premises": premises,
            "eps": float(eps),
            "window_start": start,
            "tail_sup_profile": [float(v) for v in tail_sup],
        },
        None,
    )


def check_tail_modification(
    seq: VectorSequence,
    limit_vec: LatticeVector,
    filt: Filtration,
    eps: float | None = None,
    descriptor: dict | None = None,
) -> TheoremResult:
    """Replacing the tail by E_n x yields eventual martingales converging
    back to the original sequence (witness <= m+1, distances non-increasing
    down to eps)."""
    check_id = "tail-approx"
    if descriptor is None:
        descriptor = _filt_descriptor(filt)
    if eps is None:
        eps = 0.05 * max(1.0, seq_norm(seq), norm(limit_vec))
    n_terms = seq.horizon
    start = _window_start(n_terms)
    conv = np.array([norm(seq.term(n) - limit_vec) for n in range(1, n_terms + 1)])
    verdict = tail_verdict(seq, filt)
    premises = {
        "asymptotic": verdict is Verdict.X_MARTINGALE,
        "convergent": bool(conv[start - 1 :].max() <= eps),
    }
    if not all(premises.values()):
        return TheoremResult(
            check_id,
            descriptor,
            CheckStatus.INCONCLUSIVE,
            {"premises": premises, "note": "claim inapplicable on this instance"},
            None,
        )

    distances = []
    for m in range(1, n_terms):
        modified = tail_modify(seq, filt, limit_vec, m)
        # At m = N-1 the one-step law would only start at N, where a witness
        # is vacuous by convention; the witness claim is checked below that.
        if m <= n_terms - 2:
            witness = eventual_witness(modified, filt)
            if witness is None or witness > m + 1:
                return TheoremResult(
                    check_id,
                    descriptor,
                    CheckStatus.VIOLATED,
                    {
                        "m": m,
                        "witness": witness,
                        "problem": "tail modification not eventual",
                    },
                    None,
                )
        distances.append(seq_distance(modified, seq))
    monotone = all(
        b <= a + FLOAT_SLACK for a, b in zip(distances, distances[1:])
    )
    ok = monotone and distances[-1] <= eps
    return TheoremResult(
        check_id,
        descriptor,
        CheckStatus.CONFIRMED if ok else CheckStatus.VIOLATED,
        {
            "premises": premises,
            "eps": float(eps),
            "distances": [float(d) for d in distances],
            "non_increasing": monotone,
        },
        None,
    )


def check_eventual_not_closed(n_terms: int = 64) -> TheoremResult:
    """The harmonic-tail family: eventual martingales A^m with
    ||A^m - A|| = 1/m whose limit A has no eventual witness, while its
    defect profile d_n = 1/n certifies it asymptotic."""
    check_id = "eventual-not-closed"
    filt, base, family = harmonic_tail_example(n_terms)
    descriptor = {"size": n_terms, **_filt_descriptor(filt, "truncation")}
    problems = []

    for m, member in enumerate(family, start=1):
        if m <= n_terms - 2:  # witness at N would be vacuous, see tail check
            witness = eventual_witness(member, filt)
            if witness is None or witness > m + 1:
                problems.append(
                    {"m": m, "witness": witness, "problem": "missing witness"}
                )
        dist = seq_distance(member, base)
        if abs(dist - 1.0 / m) > FLOAT_SLACK:
            problems.append({"m": m, "distance": dist, "problem": "distance != 1/m"})

    if eventual_witness(base, filt) is not None:
        problems.append({"problem": "limit unexpectedly has an eventual witness"})
    profile = defect_profile(base, filt)
    for n in range(1, n_terms):
        if abs(profile[n - 1] - 1.0 / n) > FLOAT_SLACK:
            problems.append(
                {"n": n, "defect": float(profile[n - 1]), "problem": "defect != 1/n"}
            )
            break
    verdict = tail_verdict(base, filt, profile=profile)
    if verdict is not Verdict.X_MARTINGALE:
        problems.append({"verdict": verdict.value, "problem": "limit not asymptotic"})

    status = CheckStatus.CONFIRMED if not problems else CheckStatus.VIOLATED
    witness_data: dict = {"members": len(family), "limit_verdict": verdict.value}
    if problems:
        witness_data["problems"] = problems
    return TheoremResult(check_id, descriptor, status, witness_data, None)


def _closure_fraction(
    filt: Filtration, seed: int, trials: int, tol: float
) -> tuple[float, int]:
    """Fraction of random eventual martingales whose absolute sequence is
    still an eventual martingale."""
    closed = 0
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        seq, _ = random_eventual_martingale(filt, rng)
        if eventual_witness(abs_seq(seq), filt, tol) is not None:
            closed += 1
    return closed / trials if trials else float("nan"), closed


def check_abs_closure(
    filt: Filtration | None = None,
    seed: int = 0,
    trials: int = 100,
    tol: float = DEFAULT_TOL,
) -> TheoremResult:
    """Closure of the eventual class under absolute value, two modes.

    Counterexample mode reproduces the two instances where |A| must fail
    (the alternating-pair martingale and the dyadic mean-zero indicator
    martingale); their failure shows the class need not be a lattice.
    Closure mode samples random eventual martingales on a given filtration
    and reports the closed fraction; a non-band-projection filtration with
    fraction one would be data for the open characterization question and
    is flagged, never asserted.
    """
    check_id = "abs-closure"
    problems = []

    p_filt, p_seq = pairing_example(3)
    p_report = classify(p_seq, p_filt, tol)
    p_abs_steps = one_step_defects(abs_seq(p_seq), p_filt)
    if not p_report.is_martingale:
        problems.append({"instance": "pairing", "problem": "base not a martingale"})
    if classify(abs_seq(p_seq), p_filt, tol).e_witness is not None:
        problems.append({"instance": "pairing", "problem": "|A| unexpectedly eventual"})
    if abs(p_abs_steps[0] - 1.0) > FLOAT_SLACK:
        problems.append(
            {
                "instance": "pairing",
                "problem": "first one-step defect of |A| != 1",
                "value": float(p_abs_steps[0]),
            }
        )

    h_filt, h_seq = haar_example(3)
    h_report = classify(h_seq, h_filt, tol)
    h_abs_steps = one_step_defects(abs_seq(h_seq), h_filt)
    if not h_report.is_martingale:
        problems.append({"instance": "haar", "problem": "base not a martingale"})
    if float(h_abs_steps.min()) <= tol:
        problems.append(
            {"instance": "haar", "problem": "|A| satisfied a one-step equality"}
        )
    if abs(h_abs_steps[0] - 0.5) > FLOAT_SLACK:
        problems.append(
            {
                "instance": "haar",
                "problem": "first one-step defect of |A| != 1/2",
                "value": float(h_abs_steps[0]),
            }
        )

    closure_runs = []
    sample_filts: list[tuple[str, Filtration]] = [
        ("pairing-3", p_filt),
        ("haar-3", h_filt),
    ]
    if filt is None:
        filt = build_truncation(16)
    sample_filts.insert(0, ("given", filt))
    for label, f in sample_filts:
        fraction, closed = _closure_fraction(f, seed, trials, tol)
        band = all_band_projections(f)
        run = {
            "filtration": label,
            **_filt_descriptor(f),
            "band_projections": band,
            "closed_fraction": fraction,
            "closed": closed,
            "trials": trials,
        }
        if band and fraction < 1.0:
            problems.append(
                {
                    "instance": label,
                    "problem": "band-projection filtration failed closure",
                    "fraction": fraction,
                }
            )
        if not band and fraction == 1.0:
            run["open_question_candidate"] = True
        closure_runs.append(run)

    status = CheckStatus.CONFIRMED if not problems else CheckStatus.VIOLATED
    witness: dict = {
        "pairing_first_abs_defect": float(p_abs_steps[0]),
        "haar_first_abs_defect": float(h_abs_steps[0]),
        "closure_runs": closure_runs,
    }
    if problems:
        witness["problems"] = problems
    return TheoremResult(check_id, {"trials": trials}, status, witness, seed)


def check_band_projection_lattice(
    filt: Filtration, seed: int = 0, trials: int = 100, tol: float = DEFAULT_TOL
) -> TheoremResult:
    """Under a band-projection filtration the classes are lattices:
    |A| keeps an eventual witness no later than A's, and the absolute
    defects are dominated pairwise: ||E_n |x_m| - |x_n||| <= ||E_n x_m - x_n||."""
    check_id = "band-lattice"
    descriptor = _filt_descriptor(filt)
    if not all_band_projections(filt, tol):
        return TheoremResult(
            check_id,
            descriptor,
            CheckStatus.INCONCLUSIVE,
            {"note": "premise unmet: filtration is not a chain of band projections"},
            seed,
        )

    n_terms = filt.horizon
    for trial in range(trials):
        rng = trial_rng(seed, trial)

        seq, _ = random_eventual_martingale(filt, rng)
        w_base = eventual_witness(seq, filt, tol)
        w_abs = eventual_witness(abs_seq(seq), filt, tol)
        if w_base is not None and (w_abs is None or w_abs > w_base):
            return TheoremResult(
                check_id,
                descriptor,
                CheckStatus.VIOLATED,
                {"trial": trial, "witness_base": w_base, "witness_abs": w_abs},
                seed,
            )

        xseq, _ = random_asymptotic_martingale(filt, rng)
        bad = _asymptotic_bound_violation(defect_profile(xseq, filt))
        if bad is not None:
            return TheoremResult(
                check_id,
                descriptor,
                CheckStatus.VIOLATED,
                {"trial": trial, "problem": "analytic defect bound failed", "n": bad},
                seed,
            )
        aseq = abs_seq(xseq)
        for n in range(1, n_terms + 1):
            en = filt.op(n)
            for m in range(n, n_terms + 1):
                lhs = norm(apply(en, aseq.term(m)) - aseq.term(n))
                rhs = norm(apply(en, xseq.term(m)) - xseq.term(n))
                if lhs > rhs + tol:
                    return TheoremResult(
                        check_id,
                        descriptor,
                        CheckStatus.VIOLATED,
                        {
                            "trial": trial,
                            "pair": [n, m],
                            "abs_defect": lhs,
                            "defect": rhs,
                        },
                        seed,
                    )
    return TheoremResult(
        check_id, descriptor, CheckStatus.CONFIRMED, {"trials": trials}, seed
    )


def abs_commutation_index(
    filt: Filtration, x: LatticeVector, tol: float = DEFAULT_TOL
) -> int | None:
    """Minimal l such that | E_n x | = E_n |x| for every n >= l, or None."""
    if x.space != filt.space:
        raise ValueError("vector and filtration live in different spaces")
    last_bad = 0
    ax = absolute(x)
    for n in range(1, filt.horizon + 1):
        en = filt.op(n)
        if norm(absolute(apply(en, x)) - apply(en, ax)) > tol:
            last_bad = n
    return last_bad + 1 if last_bad < filt.horizon else None


def check_abs_alignment(
    filt: Filtration,
    seed: int = 0,
    trials: int = 20,
    tol: float = DEFAULT_TOL,
) -> TheoremResult:
    """On a dense filtration whose eventual class is closed under absolute
    values, every vector has an index from which |E_n x| = E_n |x|.

    Premises are sampled (density surrogate plus closure of |terminal
    sequence| for random vectors); when they fail the result is
    INCONCLUSIVE but the per-vector indices are still reported as data.
    """
    check_id = "abs-alignment"
    descriptor = _filt_descriptor(filt)
    dense = is_dense(filt, tol)
    closure_ok = True
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        term_seq = terminal_sequence(filt, _random_vector(filt.space, rng))
        if eventual_witness(abs_seq(term_seq), filt, tol) is None:
            closure_ok = False
            break
    premises = {"dense": dense, "abs_closure_on_samples": closure_ok}

    basis_indices = []
    for i in range(1, filt.space.dim + 1):
        basis_indices.append(abs_commutation_index(filt, basis(filt.space, i), tol))
    random_indices = []
    for trial in range(trials):
        rng = trial_rng(seed, 10_000 + trial)
        random_indices.append(
            abs_commutation_index(filt, _random_vector(filt.space, rng), tol)
        )

    witness = {
        "premises": premises,
        "basis_indices": basis_indices,
        "random_indices": random_indices,
    }
    if not all(premises.values()):
        witness["note"] = "premises unmet; indices reported as data only"
        return TheoremResult(check_id, descriptor, CheckStatus.INCONCLUSIVE, witness, seed)
    ok = all(i is not None for i in basis_indices + random_indices)
    return TheoremResult(
        check_id,
        descriptor,
        CheckStatus.CONFIRMED if ok else CheckStatus.VIOLATED,
        witness,
        seed,
    )


def _window_start(n_terms: int) -> int:
    return tail_window_start(n_terms)


# ---------------------------------------------------------------------------
# Default instances per check id
# ---------------------------------------------------------------------------

def _run_nesting(seed: int, trials: int) -> list[TheoremResult]:
    return [check_class_nesting(seed, trials)]


def _run_closed_limits(seed: int, trials: int) -> list[TheoremResult]:
    return [
        check_closed_under_limits(build_truncation(32), seed),
        check_closed_under_limits(build_dyadic(5), seed),
        check_closed_under_limits_harmonic(64),
    ]


def _harmonic_head_instance(n_terms: int) -> tuple[Filtration, VectorSequence, LatticeVector]:
    """Terminal sequence of the summable-coordinate vector sum e_i / i on the
    truncation filtration: converges to its terminal vector at speed 1/(n+1)."""
    filt = build_truncation(n_terms)
    x = vector(filt.space, 1.0 / np.arange(1, n_terms + 1))
    return filt, terminal_sequence(filt, x), x


def _perturbed_nested_instance(
    dim: int, seed: int
) -> tuple[Filtration, VectorSequence, LatticeVector]:
    """Martingale of an early-resolved vector plus a z/n null perturbation on a
    dense random-nested filtration: an asymptotic martingale converging to the
    resolved vector."""
    filt = build_random_nested(dim, dim, seed)
    rng = trial_rng(seed, 2)
    x = apply(filt.op(max(1, dim // 2)), _random_vector(filt.space, rng))
    z = _unit_vector(filt.space, rng)
    base = terminal_sequence(filt, x)
    vecs = tuple(base.term(n) + z * (1.0 / n) for n in range(1, dim + 1))
    return filt, VectorSequence(filt.space, vecs), x


def _run_limit_defect(seed: int, trials: int) -> list[TheoremResult]:
    results = []
    filt, seq, x = _harmonic_head_instance(64)
    results.append(
        check_limit_defect(
            seq,
            x,
            filt,
            descriptor=_filt_descriptor(filt, "truncation", instance="harmonic-head"),
        )
    )
    nested, pseq, px = _perturbed_nested_instance(32, seed)
    results.append(
        check_limit_defect(
            pseq,
            px,
            nested,
            descriptor=_filt_descriptor(
                nested, "random-nested", instance="perturbed-martingale"
            ),
        )
    )
    trunc = build_truncation(64)
    results.append(
        check_limit_defect(
            null_sequence(basis(trunc.space, 1), 64),
            zero(trunc.space),
            trunc,
            descriptor=_filt_descriptor(trunc, "truncation", instance="null"),
        )
    )
    # Non-convergent instance: premises fail, so the claim must stay silent.
    const = VectorSequence(
        trunc.space, (basis(trunc.space, 64),) * trunc.horizon
    )
    results.append(
        check_limit_defect(
            const,
            zero(trunc.space),
            trunc,
            descriptor=_filt_descriptor(trunc, "truncation", instance="constant-last-basis"),
        )
    )
    return results


def _run_tail_approx(seed: int, trials: int) -> list[TheoremResult]:
    filt, base, _ = harmonic_tail_example(64)
    results = [
        check_tail_modification(
            base,
            zero(filt.space),
            filt,
            descriptor=_filt_descriptor(filt, "truncation", instance="harmonic-tail"),
        )
    ]
    nested, pseq, px = _perturbed_nested_instance(32, seed)
    results.append(
        check_tail_modification(
            pseq,
            px,
            nested,
            descriptor=_filt_descriptor(
                nested, "random-nested", instance="perturbed-martingale"
            ),
        )
    )
    return results


def _run_eventual_not_closed(seed: int, trials: int) -> list[TheoremResult]:
    return [check_eventual_not_closed(64)]


def _run_abs_closure(seed: int, trials: int) -> list[TheoremResult]:
    return [check_abs_closure(None, seed, trials)]


def _run_band_lattice(seed: int, trials: int) -> list[TheoremResult]:
    return [
        check_band_projection_lattice(build_truncation(16), seed, trials),
        # Premise unmet on purpose: averaging operators are not band projections.
        check_band_projection_lattice(build_dyadic(3), seed, trials),
    ]


def _run_abs_alignment(seed: int, trials: int) -> list[TheoremResult]:
    return [
        check_abs_alignment(build_truncation(16), seed),
        check_abs_alignment(build_pairing(3), seed),
        check_abs_alignment(build_dyadic(3), seed),
    ]


CHECK_RUNNERS: dict[str, Callable[[int, int], list[TheoremResult]]] = {
    "nesting": _run_nesting,
    "closed-limits": _run_closed_limits,
    "limit-defect": _run_limit_defect,
    "tail-approx": _run_tail_approx,
    "eventual-not-closed": _run_eventual_not_closed,
    "abs-closure": _run_abs_closure,
    "band-lattice": _run_band_lattice,
    "abs-alignment": _run_abs_alignment,
}

CHECK_IDS = tuple(CHECK_RUNNERS)


def run_check(check_id: str, seed: int = 0, trials: int = 100) -> list[TheoremResult]:
    """Run one check id on its default instances."""
    try:
        runner = CHECK_RUNNERS[check_id]
    except KeyError:
        raise ValueError(f"unknown check id {check_id!r}; known: {', '.join(CHECK_IDS)}")
    return runner(seed, trials)


def run_all(seed: int = 0, trials: int = 100) -> list[TheoremResult]:
    results = []
    for check_id in CHECK_IDS:
        results.extend(run_check(check_id, seed, trials))
    return results
