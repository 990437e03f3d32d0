"""JSON encoding for every table structure the command line consumes.

One format per structure, distinguished by their key sets:

  skew lattice   {"order": n, "ops": {"meet": [[...]], "join": [[...]]}}
  groupoid       {"objects": n, "morphisms": [{"dom": d, "cod": c}, ...],
                  "comp": [[...]], "inv": [...]}         (-1 = undefined)
  system         {"groupoid": {...}, "objects": {...}, "restL": [[...]],
                  "restR": [[...]], "extL": [[...]], "extR": [[...]]}
  algebra        {"order": n, "join": [[...]], "meet": [[...]], "star": [...]}
  group action   {"group": [[...]], "lattice": {...}, "act": [[...]]}

Loading dispatches on those keys; files that fit no shape raise
MalformedSystemError, as do tables the constructors reject.
"""

from __future__ import annotations

import json

import numpy as np

from .algebra import BiBandAlgebra
from .errors import MalformedSystemError, SkewalgError
from .groupoid import FiniteGroupoid
from .models import GroupAction
from .system import RestrictionSystem
from .tables import GroupTable, SkewLatticeTable

__all__ = ["structure_to_dict", "structure_from_dict", "save_structure", "load_structure"]


def _ints(a) -> list:
    return np.asarray(a).tolist()


def structure_to_dict(obj) -> dict:
    if isinstance(obj, SkewLatticeTable):
        return {
            "order": obj.order,
            "ops": {"meet": _ints(obj.meet.array), "join": _ints(obj.join.array)},
        }
    if isinstance(obj, FiniteGroupoid):
        return {
            "objects": obj.object_count,
            "morphisms": [
                {"dom": int(d), "cod": int(c)} for d, c in zip(obj.dom, obj.cod)
            ],
            "comp": _ints(obj.comp),
            "inv": _ints(obj.inv),
        }
    if isinstance(obj, RestrictionSystem):
        return {
            "groupoid": structure_to_dict(obj.groupoid),
            "objects": structure_to_dict(obj.objects),
            "restL": _ints(obj.restL),
            "restR": _ints(obj.restR),
            "extL": _ints(obj.extL),
            "extR": _ints(obj.extR),
        }
    if isinstance(obj, BiBandAlgebra):
        return {
            "order": obj.order,
            "join": _ints(obj.join.array),
            "meet": _ints(obj.meet.array),
            "star": _ints(obj.star),
        }
    if isinstance(obj, GroupAction):
        return {
            "group": _ints(obj.group.table.array),
            "lattice": structure_to_dict(obj.lattice),
            "act": _ints(obj.act),
        }
    raise MalformedSystemError(f"cannot serialize {type(obj).__name__}")


def structure_from_dict(data: dict):
    """Rebuild a structure from its JSON dict; the key set picks the type."""
    if not isinstance(data, dict):
        raise MalformedSystemError("top-level JSON value must be an object")
    try:
        if "act" in data:
            return GroupAction(
                GroupTable(data["group"]),
                structure_from_dict(data["lattice"]),
                data["act"],
            )
        if "restL" in data:
            return RestrictionSystem(
                structure_from_dict(data["groupoid"]),
                structure_from_dict(data["objects"]),
                data["restL"],
                data["restR"],
                data["extL"],
                data["extR"],
            )
        if "morphisms" in data:
            morphisms = data["morphisms"]
            return FiniteGroupoid(
                data["objects"],
                [m["dom"] for m in morphisms],
                [m["cod"] for m in morphisms],
                data["comp"],
                data["inv"],
            )
        if "star" in data:
            return BiBandAlgebra(data["join"], data["meet"], data["star"])
        if "ops" in data:
            return SkewLatticeTable(data["ops"]["meet"], data["ops"]["join"])
    except SkewalgError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MalformedSystemError(f"bad structure file: {exc}") from exc
    raise MalformedSystemError(
        "unrecognized structure: expected one of the documented key sets"
    )


def save_structure(path: str, obj, extra: dict | None = None) -> None:
    data = structure_to_dict(obj)
    if extra:
        data = {**extra, **data}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def load_structure(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedSystemError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedSystemError(f"{path} is not valid JSON: {exc}") from exc
    return structure_from_dict(data)
