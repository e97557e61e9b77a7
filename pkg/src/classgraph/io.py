"""Group and subgroup JSON files."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .errors import InputError, MalformedGroup
from .group import FiniteGroup, Subgroup
from .perm import Permutation


def group_to_json(G: FiniteGroup) -> dict[str, Any]:
    if G.is_permutation_group:
        return {
            "label": G.label,
            "degree": G.degree,
            "generators": [list(map(int, G.perm(g).images)) for g in G.generators],
        }
    return {
        "label": G.label,
        "order": G.order,
        "table": G.table.tolist(),
        "identity": int(G.identity),
    }


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise MalformedGroup(f"{what} must be a list of integers")
    return value


def group_from_json(data: Any) -> FiniteGroup:
    if not isinstance(data, dict):
        raise MalformedGroup("group file must hold a JSON object")
    label = data.get("label", "G")
    if not isinstance(label, str):
        raise MalformedGroup("label must be a string")
    if "generators" in data:
        degree = data.get("degree")
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            raise MalformedGroup("degree must be a positive integer")
        gens = data["generators"]
        if not isinstance(gens, list):
            raise MalformedGroup("generators must be a list of image arrays")
        perms = []
        for k, images in enumerate(gens):
            images = _int_list(images, f"generator {k}")
            if len(images) != degree:
                raise MalformedGroup(f"generator {k} has {len(images)} images, degree is {degree}")
            perms.append(Permutation(images))
        if not perms:
            perms = [Permutation.identity(degree)]
        return FiniteGroup.from_permutations(perms, label=label, degree=degree)
    if "table" in data:
        order = data.get("order")
        table = data["table"]
        identity = data.get("identity", 0)
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise MalformedGroup("order must be a positive integer")
        if not isinstance(table, list) or len(table) != order:
            raise MalformedGroup(f"table must have {order} rows")
        rows = [_int_list(r, f"table row {i}") for i, r in enumerate(table)]
        if any(len(r) != order for r in rows):
            raise MalformedGroup(f"table rows must have {order} entries")
        arr = np.array(rows, dtype=np.int64).reshape(order, order)
        if arr.min() < 0 or arr.max() >= order:
            raise MalformedGroup("table entries out of range")
        if not isinstance(identity, int) or not 0 <= identity < order:
            raise MalformedGroup("identity out of range")
        G = FiniteGroup.from_table(arr, label=label, identity=identity)
        G.verify()
        return G
    raise MalformedGroup("group file needs either 'generators' and 'degree' or 'table' and 'order'")


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def write_json(path: str | Path, data: Any) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def load_group(path: str | Path) -> FiniteGroup:
    return group_from_json(read_json(path))


def save_group(G: FiniteGroup, path: str | Path) -> None:
    write_json(path, group_to_json(G))


def subgroups_to_json(G: FiniteGroup, subgroups: dict[str, Subgroup]) -> dict[str, Any]:
    return {
        "group": G.label,
        "subgroups": {name: H.sorted.tolist() for name, H in sorted(subgroups.items())},
    }


def subgroup_from_json(G: FiniteGroup, data: Any, name: str | None = None) -> Subgroup:
    """Accepts ``{"elements": [...]}``, a bare element list, or a sidecar
    ``{"subgroups": {...}}`` together with ``name``."""
    if isinstance(data, dict) and "subgroups" in data:
        subs = data["subgroups"]
        if name is None:
            raise InputError(f"choose one of {sorted(subs)} with FILE#NAME")
        if name not in subs:
            raise InputError(f"no subgroup {name!r}; have {sorted(subs)}")
        data = subs[name]
    elif isinstance(data, dict) and "elements" in data:
        data = data["elements"]
    elems = _int_list(data, "subgroup elements")
    for x in elems:
        G.check_element(x)
    return G.subgroup(elems, check=True)
