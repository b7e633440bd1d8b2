"""Wire-format round trips and rejection of inconsistent documents."""

import json

import numpy as np
import pytest

from lattice_lab import LatticeSpace, NormKind, build_dyadic, build_pairing, haar_example
from lattice_lab.jsonio import (
    Instance,
    InstanceFormatError,
    dump_instance,
    filtration_from_dict,
    filtration_to_dict,
    instance_from_dict,
    load_instance,
    sequence_from_dict,
    sequence_to_dict,
    space_from_dict,
    space_to_dict,
)


def test_space_round_trip_sup():
    space = LatticeSpace(4)
    again = space_from_dict(json.loads(json.dumps(space_to_dict(space))))
    assert again == space
    assert "weights" not in space_to_dict(space)


def test_space_round_trip_weighted():
    space = LatticeSpace(3, NormKind.WEIGHTED_L1, [0.2, 0.3, 0.5])
    again = space_from_dict(json.loads(json.dumps(space_to_dict(space))))
    assert again == space


def test_space_rejects_bad_documents():
    with pytest.raises(InstanceFormatError):
        space_from_dict([1, 2])
    with pytest.raises(InstanceFormatError):
        space_from_dict({"norm": "sup"})
    with pytest.raises(InstanceFormatError):
        space_from_dict({"dim": 2, "norm": "l1"})  # missing weights
    with pytest.raises(InstanceFormatError):
        space_from_dict({"dim": 2, "norm": "euclidean"})


def test_filtration_round_trip_exact():
    filt = build_dyadic(3)
    doc = json.loads(json.dumps(filtration_to_dict(filt)))
    again = filtration_from_dict(doc)
    assert again.space == filt.space
    for a, b in zip(again.ops, filt.ops):
        assert np.array_equal(a.matrix, b.matrix)  # bit-for-bit through JSON


def test_filtration_space_disagreement_rejected():
    filt = build_pairing(2)
    doc = filtration_to_dict(filt)
    with pytest.raises(InstanceFormatError):
        filtration_from_dict(doc, LatticeSpace(3))


def test_filtration_needs_operator_list():
    with pytest.raises(InstanceFormatError):
        filtration_from_dict({"space": {"dim": 2, "norm": "sup"}, "operators": []})


def test_sequence_round_trip_and_errors():
    filt, seq = haar_example(2)
    doc = json.loads(json.dumps(sequence_to_dict(seq)))
    again = sequence_from_dict(filt.space, doc)
    for a, b in zip(again.vectors, seq.vectors):
        assert np.array_equal(a.coords, b.coords)
    with pytest.raises(InstanceFormatError):
        sequence_from_dict(filt.space, {"vectors": [[1.0, 2.0]]})  # wrong width


def test_instance_round_trip(tmp_path):
    filt, seq = haar_example(3)
    path = tmp_path / "instance.json"
    dump_instance(Instance(filt.space, filt, seq), path)
    inst = load_instance(path)
    assert inst.space == filt.space
    assert inst.filtration is not None and inst.sequence is not None
    for a, b in zip(inst.sequence.vectors, seq.vectors):
        assert np.array_equal(a.coords, b.coords)


def test_instance_horizon_mismatch_rejected():
    filt, seq = haar_example(3)
    doc = Instance(filt.space, filt, seq).to_dict()
    doc["sequence"]["vectors"] = doc["sequence"]["vectors"][:2]
    with pytest.raises(InstanceFormatError):
        instance_from_dict(doc)


def test_instance_requires_space():
    with pytest.raises(InstanceFormatError):
        instance_from_dict({"sequence": {"vectors": [[1.0]]}})


def test_load_instance_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{nope", encoding="utf-8")
    with pytest.raises(InstanceFormatError):
        load_instance(path)


def test_load_instance_missing_file(tmp_path):
    with pytest.raises(InstanceFormatError):
        load_instance(tmp_path / "absent.json")
