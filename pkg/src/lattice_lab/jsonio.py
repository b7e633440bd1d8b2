"""JSON wire formats for spaces, operators, filtrations, sequences, instances.

Schemas:

  space      {"dim": n, "norm": "sup" | "l1", "weights": [..]}
             (weights present exactly for "l1")
  operator   {"matrix": [[..], ..]}            paired with a space
  filtration {"space": {..}, "operators": [{"matrix": ..}, ..]}
  sequence   {"vectors": [[..], ..]}
  instance   {"space": {..}, "filtration"?: {"operators": [..]},
              "sequence"?: {"vectors": [..]}}

An instance file parses iff all dimensions are mutually consistent;
anything else raises :class:`InstanceFormatError` with a description.
Floats round-trip exactly (``json`` emits shortest-repr doubles).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .filtration import Filtration
from .martingales import VectorSequence, sequence as make_sequence
from .operators import PosOperator
from .spaces import LatticeSpace, NormKind


class InstanceFormatError(ValueError):
    """Raised when a JSON document does not parse into a consistent instance."""


def space_to_dict(space: LatticeSpace) -> dict:
    d: dict = {"dim": space.dim, "norm": space.norm_kind.value}
    if space.norm_kind is NormKind.WEIGHTED_L1:
        d["weights"] = [float(w) for w in space.weights]
    return d


def space_from_dict(d: dict) -> LatticeSpace:
    if not isinstance(d, dict):
        raise InstanceFormatError("space descriptor must be an object")
    try:
        dim = int(d["dim"])
        kind = NormKind(d.get("norm", "sup"))
    except (KeyError, ValueError) as exc:
        raise InstanceFormatError(f"bad space descriptor: {exc}") from exc
    weights = d.get("weights")
    try:
        if kind is NormKind.WEIGHTED_L1:
            return LatticeSpace(dim, kind, weights)
        return LatticeSpace(dim, kind)
    except ValueError as exc:
        raise InstanceFormatError(f"bad space descriptor: {exc}") from exc


def operator_to_dict(op: PosOperator) -> dict:
    return {"matrix": [[float(v) for v in row] for row in op.matrix]}


def operator_from_dict(space: LatticeSpace, d: dict) -> PosOperator:
    if not isinstance(d, dict) or "matrix" not in d:
        raise InstanceFormatError("operator must be an object with a 'matrix' field")
    try:
        return PosOperator(space, np.asarray(d["matrix"], dtype=float))
    except ValueError as exc:
        raise InstanceFormatError(f"bad operator: {exc}") from exc


def filtration_to_dict(filt: Filtration) -> dict:
    return {
        "space": space_to_dict(filt.space),
        "operators": [operator_to_dict(e) for e in filt.ops],
    }


def filtration_from_dict(d: dict, space: LatticeSpace | None = None) -> Filtration:
    if not isinstance(d, dict):
        raise InstanceFormatError("filtration must be an object")
    if "space" in d:
        own = space_from_dict(d["space"])
        if space is not None and own != space:
            raise InstanceFormatError("filtration space disagrees with instance space")
        space = own
    if space is None:
        raise InstanceFormatError("filtration needs a space descriptor")
    ops = d.get("operators")
    if not isinstance(ops, list) or not ops:
        raise InstanceFormatError("filtration needs a nonempty 'operators' list")
    return Filtration(space, tuple(operator_from_dict(space, o) for o in ops))


def sequence_to_dict(seq: VectorSequence) -> dict:
    return {"vectors": [[float(v) for v in x.coords] for x in seq.vectors]}


def sequence_from_dict(space: LatticeSpace, d: dict) -> VectorSequence:
    if not isinstance(d, dict) or not isinstance(d.get("vectors"), list):
        raise InstanceFormatError("sequence must be an object with a 'vectors' list")
    try:
        return make_sequence(space, d["vectors"])
    except (TypeError, ValueError) as exc:
        raise InstanceFormatError(f"bad sequence: {exc}") from exc


@dataclass(frozen=True)
class Instance:
    """One space plus whatever a command needs: maybe operators, maybe terms."""

    space: LatticeSpace
    filtration: Filtration | None = None
    sequence: VectorSequence | None = None

    def to_dict(self) -> dict:
        d: dict = {"space": space_to_dict(self.space)}
        if self.filtration is not None:
            d["filtration"] = {
                "operators": [operator_to_dict(e) for e in self.filtration.ops]
            }
        if self.sequence is not None:
            d["sequence"] = sequence_to_dict(self.sequence)
        return d


def instance_from_dict(d: dict) -> Instance:
    if not isinstance(d, dict) or "space" not in d:
        raise InstanceFormatError("instance must be an object with a 'space' field")
    space = space_from_dict(d["space"])
    filt = None
    if "filtration" in d:
        filt = filtration_from_dict(d["filtration"], space)
    seq = None
    if "sequence" in d:
        seq = sequence_from_dict(space, d["sequence"])
    if filt is not None and seq is not None and filt.horizon != seq.horizon:
        raise InstanceFormatError(
            f"sequence has {seq.horizon} terms but filtration has "
            f"{filt.horizon} operators"
        )
    return Instance(space, filt, seq)


def load_instance(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON in {path}: {exc}") from exc
    return instance_from_dict(data)


def dump_instance(instance: Instance, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(instance.to_dict(), indent=2) + "\n", encoding="utf-8"
    )
