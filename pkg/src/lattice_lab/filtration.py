"""Finite filtrations: nested families of positive projections.

A filtration here is a finite list E_1..E_N of operators on one space
satisfying, within tolerance, the laws

  * positivity          (entrywise nonnegative),
  * idempotence         (E_n^2 = E_n),
  * commuting-order law (E_n E_m = E_{min(n, m)}),
  * optionally contractivity (induced norm <= 1).

Construction of a :class:`Filtration` only checks structural
compatibility; the laws are *reported* by :func:`validate`, never thrown,
so defective candidates can be inspected.  The builders in this module
all produce filtrations that pass ``validate(require_contractive=True)``
exactly up to rounding.

Everything "for all n" in the underlying theory is rendered at a finite
horizon N; reports are therefore evidence consistent with the infinite
statements, not proofs of them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import PosOperator, apply, is_band_projection, operator_norm
from .spaces import DEFAULT_TOL, LatticeSpace, NormKind, basis, norm


@dataclass(frozen=True, eq=False)
class Filtration:
    """Operators E_1..E_N on a common space; ``op(n)`` is 1-based access."""

    space: LatticeSpace
    ops: tuple[PosOperator, ...]

    def __post_init__(self) -> None:
        ops = tuple(self.ops)
        if not ops:
            raise ValueError("a filtration needs at least one operator")
        for e in ops:
            if e.space != self.space:
                raise ValueError("all operators must act on the filtration's space")
        object.__setattr__(self, "ops", ops)

    @property
    def horizon(self) -> int:
        return len(self.ops)

    def op(self, n: int) -> PosOperator:
        if not 1 <= n <= self.horizon:
            raise IndexError(f"operator index {n} out of range 1..{self.horizon}")
        return self.ops[n - 1]

    def __repr__(self) -> str:
        return f"Filtration(dim={self.space.dim}, horizon={self.horizon})"


@dataclass(frozen=True)
class LawCheck:
    """Outcome of one filtration law: worst magnitude and where it occurred."""

    law: str
    passed: bool
    worst: float
    witness: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "passed": self.passed,
            "worst": float(self.worst),
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[LawCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def validate(
    filt: Filtration,
    require_contractive: bool = False,
    tol: float = DEFAULT_TOL,
) -> ValidationReport:
    """Check every filtration law; failures are reported, not raised.

    Each law's entry records the worst violation magnitude seen and the
    (1-based) operator index or index pair where it occurred.
    """
    checks = []

    worst, witness = 0.0, None
    for n, e in enumerate(filt.ops, start=1):
        v = max(0.0, float(-np.min(e.matrix)))
        if v > worst:
            worst, witness = v, (n,)
    checks.append(LawCheck("positivity", worst <= tol, worst, witness))

    worst, witness = 0.0, None
    for n, e in enumerate(filt.ops, start=1):
        v = float(np.max(np.abs(e.matrix @ e.matrix - e.matrix)))
        if v > worst:
            worst, witness = v, (n,)
    checks.append(LawCheck("idempotence", worst <= tol, worst, witness))

    worst, witness = 0.0, None
    for n, en in enumerate(filt.ops, start=1):
        for m, em in enumerate(filt.ops, start=1):
            target = filt.op(min(n, m)).matrix
            v = float(np.max(np.abs(en.matrix @ em.matrix - target)))
            if v > worst:
                worst, witness = v, (n, m)
    checks.append(LawCheck("commuting-order", worst <= tol, worst, witness))

    if require_contractive:
        worst, witness = 0.0, None
        for n, e in enumerate(filt.ops, start=1):
            v = max(0.0, operator_norm(e) - 1.0)
            if v > worst:
                worst, witness = v, (n,)
        checks.append(LawCheck("contractivity", worst <= tol, worst, witness))

    return ValidationReport(tuple(checks))


def is_contractive_filtration(filt: Filtration, tol: float = DEFAULT_TOL) -> bool:
    return all(operator_norm(e) <= 1.0 + tol for e in filt.ops)


def is_dense(filt: Filtration, tol: float = DEFAULT_TOL) -> bool:
    """Finite-horizon density surrogate: the last operator acts as the identity.

    The ranges of E_1..E_N are nested, so E_N fixing every basis vector is
    what "E_n x converges to x" looks like inside the model.
    """
    e_last = filt.ops[-1]
    for i in range(1, filt.space.dim + 1):
        e = basis(filt.space, i)
        if norm(apply(e_last, e) - e) > tol:
            return False
    return True


def all_band_projections(filt: Filtration, tol: float = DEFAULT_TOL) -> bool:
    return all(is_band_projection(e, tol) for e in filt.ops)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def build_truncation(n: int) -> Filtration:
    """Coordinate truncations on a sup-norm space of dimension n.

    E_k keeps the first k coordinates and zeroes the rest; every operator
    is a band projection and E_n is the identity.
    """
    if n < 1:
        raise ValueError("horizon must be >= 1")
    space = LatticeSpace(n, NormKind.SUP)
    ops = []
    for k in range(1, n + 1):
        diag = np.zeros(n)
        diag[:k] = 1.0
        ops.append(PosOperator(space, np.diag(diag)))
    return Filtration(space, tuple(ops))


def build_pairing(pairs: int) -> Filtration:
    """Pair-averaging filtration on a sup-norm space of dimension 2*pairs.

    Stage n keeps the first 2n coordinates and averages each later
    coordinate pair (2k-1, 2k) via a 2x2 block of one-halves.  Stages are
    stored 1-based, so the fully-averaging stage with no kept coordinates
    is omitted and the final operator is the identity.
    """
    if pairs < 1:
        raise ValueError("pairs must be >= 1")
    dim = 2 * pairs
    space = LatticeSpace(dim, NormKind.SUP)
    ops = []
    for n in range(1, pairs + 1):
        m = np.zeros((dim, dim))
        kept = 2 * n
        for i in range(kept):
            m[i, i] = 1.0
        for k in range(kept, dim, 2):
            m[k : k + 2, k : k + 2] = 0.5
        ops.append(PosOperator(space, m))
    return Filtration(space, tuple(ops))


def build_dyadic(levels: int) -> Filtration:
    """Block-averaging filtration modelling conditional expectations on [0, 1].

    The space has 2**levels equal cells under the weighted L1 norm
    (weights 2**-levels, summing to one).  E_n averages coordinates within
    each of the 2**n level-n blocks; E_levels is the identity.
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    dim = 2**levels
    space = LatticeSpace(dim, NormKind.WEIGHTED_L1, np.full(dim, 2.0**-levels))
    ops = []
    for n in range(1, levels + 1):
        block = 2 ** (levels - n)
        m = np.kron(np.eye(2**n), np.full((block, block), 1.0 / block))
        ops.append(PosOperator(space, m))
    return Filtration(space, tuple(ops))


def _conditional_expectation(space: LatticeSpace, labels: np.ndarray) -> PosOperator:
    """Weighted block-averaging projection onto a partition given by labels.

    On a weighted-L1 space, block b maps x to sum_{j in b} w_j x_j / W_b on
    each of its coordinates; sup spaces average uniformly.  Either way the
    operator is a positive projection of norm one.
    """
    dim = space.dim
    w = space.weights if space.weights is not None else np.ones(dim)
    m = np.zeros((dim, dim))
    for lab in np.unique(labels):
        idx = np.flatnonzero(labels == lab)
        m[np.ix_(idx, idx)] = w[idx] / w[idx].sum()
    return PosOperator(space, m)


def build_random_nested(
    dim: int,
    depth: int,
    seed: int,
    norm_kind: NormKind | str = NormKind.WEIGHTED_L1,
) -> Filtration:
    """Random chain of nested partitions of {1..dim}, one split per level.

    Level n has exactly n blocks (level 1 averages everything; when
    depth == dim every final block is a singleton, so the last operator is
    the identity).  E_n is the conditional expectation onto level n's
    partition, weighted by the space's cell weights.  Deterministic per
    seed; weighted-L1 spaces get random weights normalized to sum to one.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if not 1 <= depth <= dim:
        raise ValueError(f"depth must lie in 1..dim, got depth={depth}, dim={dim}")
    rng = np.random.default_rng(seed)
    kind = NormKind(norm_kind)
    if kind is NormKind.WEIGHTED_L1:
        w = rng.uniform(0.25, 1.75, size=dim)
        space = LatticeSpace(dim, kind, w / w.sum())
    else:
        space = LatticeSpace(dim, kind)

    labels = np.zeros(dim, dtype=int)
    partitions = [labels.copy()]
    for level in range(2, depth + 1):
        sizes = np.bincount(labels)
        splittable = np.flatnonzero(sizes >= 2)
        block = int(rng.choice(splittable))
        members = np.flatnonzero(labels == block)
        members = rng.permutation(members)
        cut = int(rng.integers(1, members.size))
        labels = labels.copy()
        labels[members[:cut]] = level - 1
        partitions.append(labels.copy())

    ops = tuple(_conditional_expectation(space, p) for p in partitions)
    return Filtration(space, ops)


__all__ = [
    "Filtration",
    "LawCheck",
    "ValidationReport",
    "validate",
    "is_contractive_filtration",
    "is_dense",
    "all_band_projections",
    "build_truncation",
    "build_pairing",
    "build_dyadic",
    "build_random_nested",
]
