"""Martingale-like sequences and their classification.

A finite sequence x_1..x_N against a filtration E_1..E_N falls into three
nested classes, checked by three different rules:

  * martingale            -- E_n x_m = x_n for all m >= n (exact law,
                             tolerance ``tol``);
  * eventual martingale   -- the one-step law E_m x_{m+1} = x_m holds from
                             some index l onward (``eventual_witness``
                             returns the minimal such l);
  * asymptotic martingale -- the defect d_n = max_{m >= n} ||E_n x_m - x_n||
                             decays over the tail (``tail_verdict``).

The first two are algebraic and use the exact-law tolerance; the third is
a limit statement, so at a finite horizon it gets a windowed verdict with
an explicit INCONCLUSIVE outcome rather than a forced boolean.  Witnesses
are required strictly below the horizon: a witness at N would be vacuous
(there is nothing after it to check).

Generators for the classic example sequences (dyadic mean-zero indicator
martingale, alternating-pair martingale, harmonic tail, null sequences)
live here too; each returns exact floating-point data, so the documented
classification outcomes hold to rounding error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence as TySequence

import numpy as np

from .filtration import (
    Filtration,
    build_dyadic,
    build_pairing,
    build_truncation,
    is_contractive_filtration,
)
from .operators import apply
from .spaces import (
    DEFAULT_TOL,
    LatticeSpace,
    LatticeVector,
    absolute,
    norm,
    vector,
)

DEFAULT_EPS_FRACTION = 0.05
DEFAULT_WINDOW_FRACTION = 0.25

REPORT_NOTES = (
    "defect entry n is the max over terms m = n..N; the final entry uses only the final term",
    "verdicts are finite-horizon evidence consistent with the limit statements, not proofs",
)


class NonContractiveError(ValueError):
    """Asymptotic classification requires a contractive filtration."""


class Verdict(str, Enum):
    X_MARTINGALE = "X_MARTINGALE"
    NOT_X = "NOT_X"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True, eq=False)
class VectorSequence:
    """A nonempty finite sequence of vectors in one space."""

    space: LatticeSpace
    vectors: tuple[LatticeVector, ...]

    def __post_init__(self) -> None:
        vecs = tuple(self.vectors)
        if not vecs:
            raise ValueError("a sequence needs at least one term")
        for v in vecs:
            if v.space != self.space:
                raise ValueError("all terms must live in the sequence's space")
        object.__setattr__(self, "vectors", vecs)

    @property
    def horizon(self) -> int:
        return len(self.vectors)

    def term(self, n: int) -> LatticeVector:
        if not 1 <= n <= self.horizon:
            raise IndexError(f"term index {n} out of range 1..{self.horizon}")
        return self.vectors[n - 1]

    def __repr__(self) -> str:
        return f"VectorSequence(dim={self.space.dim}, horizon={self.horizon})"


def sequence(space: LatticeSpace, rows: TySequence[TySequence[float]]) -> VectorSequence:
    return VectorSequence(space, tuple(vector(space, r) for r in rows))


def seq_norm(seq: VectorSequence) -> float:
    """Sup over n of ||x_n||: the sequence-space norm."""
    return max(norm(v) for v in seq.vectors)


def seq_distance(a: VectorSequence, b: VectorSequence) -> float:
    """Sup over n of ||a_n - b_n|| (both sequences must share space and horizon)."""
    if a.horizon != b.horizon:
        raise ValueError("sequences have different horizons")
    return max(norm(x - y) for x, y in zip(a.vectors, b.vectors))


def _require_matching(seq: VectorSequence, filt: Filtration) -> None:
    if seq.space != filt.space:
        raise ValueError("sequence and filtration live in different spaces")
    if seq.horizon != filt.horizon:
        raise ValueError(
            f"horizon mismatch: sequence has {seq.horizon} terms, "
            f"filtration has {filt.horizon} operators"
        )


def is_martingale(seq: VectorSequence, filt: Filtration, tol: float = DEFAULT_TOL) -> bool:
    """Two-index law: ||E_n x_m - x_n|| <= tol for every pair m >= n."""
    _require_matching(seq, filt)
    for n in range(1, seq.horizon + 1):
        en = filt.op(n)
        xn = seq.term(n)
        for m in range(n, seq.horizon + 1):
            if norm(apply(en, seq.term(m)) - xn) > tol:
                return False
    return True


def eventual_witness(
    seq: VectorSequence, filt: Filtration, tol: float = DEFAULT_TOL
) -> int | None:
    """Minimal l < N such that the one-step law holds at every m in [l, N-1].

    Returns None when no such l exists; a witness equal to N is vacuous
    (no step after it) and is never reported.
    """
    _require_matching(seq, filt)
    n_terms = seq.horizon
    last_bad = 0
    for m in range(1, n_terms):
        if norm(apply(filt.op(m), seq.term(m + 1)) - seq.term(m)) > tol:
            last_bad = m
    witness = last_bad + 1
    return witness if witness <= n_terms - 1 else None


def eventual_witness_pairwise(
    seq: VectorSequence, filt: Filtration, tol: float = DEFAULT_TOL
) -> int | None:
    """Brute-force two-index variant: minimal l < N with E_n x_m = x_n for m >= n >= l.

    Evaluates the full table of pair defects ||E_n x_m - x_n|| rather than
    one-step differences, so it is independent data from
    :func:`eventual_witness`; agreement of the two minimal witnesses is a
    tested property.
    """
    _require_matching(seq, filt)
    n_terms = seq.horizon
    last_bad = 0
    for n in range(1, n_terms + 1):
        en = filt.op(n)
        xn = seq.term(n)
        worst = max(norm(apply(en, seq.term(m)) - xn) for m in range(n, n_terms + 1))
        if worst > tol:
            last_bad = n
    witness = last_bad + 1
    return witness if witness <= n_terms - 1 else None


def one_step_defects(seq: VectorSequence, filt: Filtration) -> np.ndarray:
    """||E_m x_{m+1} - x_m|| for m = 1..N-1; the data behind :func:`eventual_witness`."""
    _require_matching(seq, filt)
    return np.array(
        [
            norm(apply(filt.op(m), seq.term(m + 1)) - seq.term(m))
            for m in range(1, seq.horizon)
        ]
    )


def defect_profile(seq: VectorSequence, filt: Filtration) -> np.ndarray:
    """d_n = max over m in [n, N] of ||E_n x_m - x_n||.

    The final entry reduces to ||E_N x_N - x_N||, which is zero whenever
    the last operator fixes the last term (in particular when E_N = I).
    """
    _require_matching(seq, filt)
    n_terms = seq.horizon
    out = np.zeros(n_terms)
    for n in range(1, n_terms + 1):
        en = filt.op(n)
        xn = seq.term(n)
        out[n - 1] = max(
            norm(apply(en, seq.term(m)) - xn) for m in range(n, n_terms + 1)
        )
    return out


def default_eps(seq: VectorSequence) -> float:
    return DEFAULT_EPS_FRACTION * max(1.0, seq_norm(seq))


def tail_window_start(horizon: int, window_fraction: float = DEFAULT_WINDOW_FRACTION) -> int:
    """First index (1-based) of the tail window used by :func:`tail_verdict`."""
    return min(horizon, max(1, math.ceil((1.0 - window_fraction) * horizon)))


def tail_verdict(
    seq: VectorSequence,
    filt: Filtration,
    eps: float | None = None,
    window_fraction: float = DEFAULT_WINDOW_FRACTION,
    profile: np.ndarray | None = None,
) -> Verdict:
    """Windowed finite-horizon verdict on the decay of the defect profile.

    Over the tail window starting at n* = ceil((1 - window_fraction) * N):

      * X_MARTINGALE  -- every windowed defect is <= eps and the profile is
        non-increasing across the window up to eps slack;
      * NOT_X         -- every windowed defect before the final entry
        exceeds 10 * eps (the final entry is excluded because it reflects
        only the single term m = N, a convention rather than evidence);
      * INCONCLUSIVE  -- anything in between; a finite window cannot
        confirm a limit, and the verdict says so rather than guessing.

    The defect notion presupposes a contractive filtration; a
    non-contractive one is rejected.
    """
    _require_matching(seq, filt)
    if not is_contractive_filtration(filt):
        raise NonContractiveError(
            "asymptotic classification requires a contractive filtration"
        )
    d = defect_profile(seq, filt) if profile is None else np.asarray(profile, dtype=float)
    if eps is None:
        eps = default_eps(seq)
    n_terms = seq.horizon
    start = tail_window_start(n_terms, window_fraction)
    window = d[start - 1 :]
    monotone = bool(np.all(window[1:] <= window[:-1] + eps))
    if float(window.max()) <= eps and monotone:
        return Verdict.X_MARTINGALE
    strict = d[start - 1 : n_terms - 1]
    if strict.size and float(strict.min()) > 10.0 * eps:
        return Verdict.NOT_X
    return Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class ClassificationReport:
    """Verdicts and defect data for one sequence against one filtration."""

    is_martingale: bool
    e_witness: int | None
    x_defects: tuple[float, ...]
    x_verdict: Verdict
    seq_norm: float
    tol: float
    eps_x: float
    window_fraction: float
    notes: tuple[str, ...] = REPORT_NOTES

    def to_dict(self) -> dict:
        return {
            "is_martingale": self.is_martingale,
            "e_witness": self.e_witness,
            "x_defects": [float(d) for d in self.x_defects],
            "x_verdict": self.x_verdict.value,
            "seq_norm": float(self.seq_norm),
            "tolerances": {
                "tol": float(self.tol),
                "eps_x": float(self.eps_x),
                "window_fraction": float(self.window_fraction),
            },
            "notes": list(self.notes),
        }


def classify(
    seq: VectorSequence,
    filt: Filtration,
    tol: float = DEFAULT_TOL,
    eps: float | None = None,
    window_fraction: float = DEFAULT_WINDOW_FRACTION,
) -> ClassificationReport:
    """Run all three classifications and bundle the evidence.

    Horizons of at least two are required: with a single term every
    witness would be vacuous and the class nesting degenerates.
    """
    _require_matching(seq, filt)
    if seq.horizon < 2:
        raise ValueError("classification needs a horizon of at least 2 terms")
    if eps is None:
        eps = default_eps(seq)
    d = defect_profile(seq, filt)
    return ClassificationReport(
        is_martingale=is_martingale(seq, filt, tol),
        e_witness=eventual_witness(seq, filt, tol),
        x_defects=tuple(float(v) for v in d),
        x_verdict=tail_verdict(seq, filt, eps, window_fraction, profile=d),
        seq_norm=seq_norm(seq),
        tol=tol,
        eps_x=eps,
        window_fraction=window_fraction,
    )


# ---------------------------------------------------------------------------
# Sequence constructions
# ---------------------------------------------------------------------------

def abs_seq(seq: VectorSequence) -> VectorSequence:
    """(|x_n|), the coordinate-wise absolute value term by term."""
    return VectorSequence(seq.space, tuple(absolute(v) for v in seq.vectors))


def terminal_sequence(filt: Filtration, x: LatticeVector) -> VectorSequence:
    """x_n = E_n x; a martingale by the commuting-order law."""
    if x.space != filt.space:
        raise ValueError("vector and filtration live in different spaces")
    return VectorSequence(filt.space, tuple(apply(e, x) for e in filt.ops))


def scale_head(seq: VectorSequence, factor: float) -> VectorSequence:
    """Scale the first term only; the classic eventual-but-not-martingale tweak."""
    head = seq.term(1) * factor
    return VectorSequence(seq.space, (head,) + seq.vectors[1:])


def null_sequence(x: LatticeVector, n_terms: int) -> VectorSequence:
    """x_k = x / k: converges to zero, hence asymptotic for any contractive filtration."""
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    return VectorSequence(x.space, tuple(x * (1.0 / k) for k in range(1, n_terms + 1)))


def tail_modify(
    seq: VectorSequence, filt: Filtration, x: LatticeVector, m: int
) -> VectorSequence:
    """Keep terms 1..m, replace the tail by E_n x.

    The result satisfies the one-step law from m+1 onward, so it is an
    eventual martingale with witness at most m+1.  With m >= N the
    sequence is returned unchanged.
    """
    _require_matching(seq, filt)
    if x.space != seq.space:
        raise ValueError("replacement vector lives in a different space")
    if m >= seq.horizon:
        return seq
    vecs = list(seq.vectors[:m])
    for n in range(m + 1, seq.horizon + 1):
        vecs.append(apply(filt.op(n), x))
    return VectorSequence(seq.space, tuple(vecs))


@dataclass(frozen=True)
class ClosureReport:
    """Whether |A| stays in each class that A itself belongs to."""

    base: ClassificationReport
    abs: ClassificationReport

    @property
    def abs_stays_martingale(self) -> bool | None:
        return self.abs.is_martingale if self.base.is_martingale else None

    @property
    def abs_stays_eventual(self) -> bool | None:
        if self.base.e_witness is None:
            return None
        return self.abs.e_witness is not None

    @property
    def abs_stays_asymptotic(self) -> bool | None:
        if self.base.x_verdict is not Verdict.X_MARTINGALE:
            return None
        return self.abs.x_verdict is Verdict.X_MARTINGALE

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "abs": self.abs.to_dict(),
            "abs_stays_martingale": self.abs_stays_martingale,
            "abs_stays_eventual": self.abs_stays_eventual,
            "abs_stays_asymptotic": self.abs_stays_asymptotic,
        }


def check_lattice_closure(
    seq: VectorSequence,
    filt: Filtration,
    tol: float = DEFAULT_TOL,
    eps: float | None = None,
    window_fraction: float = DEFAULT_WINDOW_FRACTION,
) -> ClosureReport:
    """Classify A and |A| and report whether taking absolute values leaves each class."""
    return ClosureReport(
        base=classify(seq, filt, tol, eps, window_fraction),
        abs=classify(abs_seq(seq), filt, tol, eps, window_fraction),
    )


# ---------------------------------------------------------------------------
# Named example instances
# ---------------------------------------------------------------------------

def haar_example(levels: int) -> tuple[Filtration, VectorSequence]:
    """Mean-zero scaled-indicator martingale on the dyadic model.

    x_n takes the value 2**n - 1 on the first 2**(levels-n) cells and -1
    elsewhere, for n = 1..levels.  It is a martingale, but |x_n| fails the
    one-step law at every step, so the absolute sequence is not an
    eventual martingale.
    """
    filt = build_dyadic(levels)
    dim = filt.space.dim
    rows = []
    for n in range(1, levels + 1):
        vals = np.full(dim, -1.0)
        vals[: 2 ** (levels - n)] = 2.0**n - 1.0
        rows.append(vals)
    return filt, sequence(filt.space, rows)


def pairing_example(pairs: int) -> tuple[Filtration, VectorSequence]:
    """Alternating-pair martingale on the pair-averaging filtration.

    x_n alternates -1, 1 on its first 2n coordinates and is zero after,
    for n = 1..pairs (the all-zero initial term of the raw construction is
    dropped, matching the omitted all-averaging stage of the filtration).
    A is a martingale; |A| is constant one on a growing block and fails
    the one-step law with sup-norm defect exactly one at every step.
    """
    filt = build_pairing(pairs)
    dim = filt.space.dim
    rows = []
    for n in range(1, pairs + 1):
        vals = np.zeros(dim)
        vals[0 : 2 * n : 2] = -1.0
        vals[1 : 2 * n : 2] = 1.0
        rows.append(vals)
    return filt, sequence(filt.space, rows)


def harmonic_tail_example(
    n_terms: int,
) -> tuple[Filtration, VectorSequence, list[VectorSequence]]:
    """Harmonic-tail sequence and its eventual-martingale approximants.

    On the truncation filtration of dimension N, x_n = sum_{i=n..N} e_i / i
    is never an eventual martingale, yet the approximants A^m (terms 1..m
    kept, tail replaced by (sum_{i<=n} e_i / i) / m) all are, and
    ||A^m - A|| = 1/m.  The family witnesses that the eventual class is
    not closed under the sequence-space norm while the asymptotic class is.
    """
    if n_terms < 2:
        raise ValueError("n_terms must be >= 2")
    filt = build_truncation(n_terms)
    space = filt.space
    inv = 1.0 / np.arange(1, n_terms + 1)

    def x_tail(n: int) -> np.ndarray:
        vals = np.zeros(n_terms)
        vals[n - 1 :] = inv[n - 1 :]
        return vals

    def y_head(n: int) -> np.ndarray:
        vals = np.zeros(n_terms)
        vals[:n] = inv[:n]
        return vals

    base = sequence(space, [x_tail(n) for n in range(1, n_terms + 1)])
    family = []
    for m in range(1, n_terms):
        rows = [x_tail(n) if n <= m else y_head(n) / m for n in range(1, n_terms + 1)]
        family.append(sequence(space, rows))
    return filt, base, family
