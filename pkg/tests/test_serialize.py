import json

import numpy as np
import pytest

from skewalg import (
    BiBandAlgebra,
    FiniteGroupoid,
    MalformedSystemError,
    RestrictionSystem,
    SkewLatticeTable,
    chain_lattice,
    enumerate_skew_lattices,
    load_structure,
    save_structure,
    semidirect_algebra,
    semidirect_groupoid,
)
from skewalg.models import GROUP_CATALOG, GroupAction
from skewalg.serialize import structure_from_dict, structure_to_dict


def swap_action():
    rect = enumerate_skew_lattices(2)[2]
    return GroupAction(GROUP_CATALOG["C2"], rect, [[0, 1], [1, 0]])


def sample_structures():
    a = swap_action()
    sysm = semidirect_groupoid(a)
    return [chain_lattice(3), sysm.groupoid, sysm, semidirect_algebra(a), a]


@pytest.mark.parametrize("index", range(5))
def test_dict_roundtrip_preserves_every_structure(index):
    obj = sample_structures()[index]
    again = structure_from_dict(structure_to_dict(obj))
    if isinstance(obj, GroupAction):
        assert np.array_equal(again.act, obj.act)
        assert again.group.table == obj.group.table
        assert again.lattice == obj.lattice
    elif isinstance(obj, RestrictionSystem):
        assert again.groupoid == obj.groupoid
        assert again.objects == obj.objects
        for name in ("restL", "restR", "extL", "extR"):
            assert np.array_equal(getattr(again, name), getattr(obj, name))
    elif isinstance(obj, BiBandAlgebra):
        assert again == obj
    else:
        assert again == obj


@pytest.mark.parametrize("index", range(5))
def test_file_roundtrip(tmp_path, index):
    obj = sample_structures()[index]
    path = tmp_path / "structure.json"
    save_structure(path, obj)
    again = load_structure(path)
    assert type(structure_to_dict(again)) is dict
    assert structure_to_dict(again) == structure_to_dict(obj)


def test_dispatch_is_by_key_set():
    lattice = structure_from_dict({"order": 2, "ops": {"meet": [[0, 0], [0, 1]], "join": [[0, 1], [1, 1]]}})
    assert isinstance(lattice, SkewLatticeTable)
    groupoid = structure_from_dict(
        {"objects": 1, "morphisms": [{"dom": 0, "cod": 0}], "comp": [[0]], "inv": [0]}
    )
    assert isinstance(groupoid, FiniteGroupoid)
    algebra = structure_from_dict(
        {"order": 1, "join": [[0]], "meet": [[0]], "star": [0]}
    )
    assert isinstance(algebra, BiBandAlgebra)


def test_extra_metadata_is_tolerated(tmp_path):
    path = tmp_path / "named.json"
    save_structure(path, chain_lattice(2), extra={"name": "two-chain"})
    raw = json.loads(path.read_text())
    assert raw["name"] == "two-chain"
    assert isinstance(load_structure(path), SkewLatticeTable)


def test_missing_keys_are_malformed():
    with pytest.raises(MalformedSystemError):
        structure_from_dict({"order": 2})
    with pytest.raises(MalformedSystemError):
        structure_from_dict({"objects": 1, "morphisms": [], "comp": [[0]]})


def test_bad_entries_are_malformed():
    with pytest.raises(MalformedSystemError):
        structure_from_dict(
            {"order": 2, "ops": {"meet": [[0, 0]], "join": [[0, 1], [1, 1]]}}
        )
    with pytest.raises(MalformedSystemError):
        structure_from_dict(
            {"order": 1, "join": [[0]], "meet": [[0]], "star": [4]}
        )


def test_unreadable_file_is_malformed(tmp_path):
    with pytest.raises(MalformedSystemError):
        load_structure(tmp_path / "absent.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(MalformedSystemError):
        load_structure(bad)


def test_json_output_is_plain_ints(tmp_path):
    # numpy scalars must not leak into the files
    path = tmp_path / "algebra.json"
    save_structure(path, semidirect_algebra(swap_action()))
    raw = json.loads(path.read_text())
    assert all(isinstance(v, int) for v in raw["star"])
    assert all(isinstance(v, int) for row in raw["meet"] for v in row)
