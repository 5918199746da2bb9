"""Problem-file schema: strict JSON with rationals as strings.

Floats are rejected outright; unknown keys are rejected; the version key
"knx_version": 1 is required.
"""

from __future__ import annotations

import json
from typing import Any

from .engine import ExactnessProblem
from .errors import InvalidParameter, KnxError, SchemaError
from .groups import (
    GroupData,
    LieCharacter,
    TorusCharacter,
    gl,
    group_data,
    product,
    sl,
    torus,
)
from .scalars import rat, rat_str
from .strata import ORIENTATIONS, WeightSystem
from .convex import DEFAULT_VERTEX_CAP

SCHEMA_VERSION = 1

_TOP_KEYS = {
    "knx_version",
    "group",
    "weights",
    "mode",
    "chi",
    "c",
    "orientation",
    "drop_strata",
    "strictness",
}


def parse_problem(data: dict, cap: int = DEFAULT_VERTEX_CAP) -> ExactnessProblem:
    if not isinstance(data, dict):
        raise SchemaError("problem file must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise SchemaError(f"unknown keys: {sorted(unknown)}")
    if data.get("knx_version") != SCHEMA_VERSION:
        raise SchemaError('missing or unsupported "knx_version" (must be 1)')
    for key in ("group", "weights", "chi"):
        if key not in data:
            raise SchemaError(f'missing required key "{key}"')
    try:
        group = _parse_group(data["group"])
        weights = _parse_weights(data["weights"], data.get("mode", "cotangent"))
        chi = TorusCharacter(_parse_vector(data["chi"], "chi"))
        c = _parse_character(data.get("c"))
        orientation = data.get("orientation", "negative")
        if orientation not in ORIENTATIONS:
            raise SchemaError(f"unknown orientation {orientation!r}")
        strictness = data.get("strictness", "slice")
        if strictness not in ("slice", "full_V"):
            raise SchemaError(f"unknown strictness {strictness!r}")
        dropped = tuple(
            _parse_vector(v, "drop_strata entry") for v in _require_list(
                data.get("drop_strata", []), "drop_strata"
            )
        )
        return ExactnessProblem(
            group=group,
            weights=weights,
            chi=chi,
            c=c,
            orientation=orientation,
            dropped_strata=dropped,
            strictness=strictness,
            cap=cap,
        )
    except SchemaError:
        raise
    except KnxError as exc:
        raise SchemaError(str(exc)) from exc


def _require_list(value, what: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{what} must be a list")
    return value


def _parse_vector(value, what: str) -> tuple:
    entries = _require_list(value, what)
    out = []
    for e in entries:
        if not isinstance(e, str):
            raise SchemaError(f"{what}: numbers must be rational strings, got {e!r}")
        try:
            out.append(rat(e))
        except InvalidParameter as exc:
            raise SchemaError(f"{what}: {exc}") from exc
    return tuple(out)


def _parse_weights(value, mode) -> WeightSystem:
    rows = _require_list(value, "weights")
    if not rows:
        raise SchemaError("weights must be nonempty")
    vecs = tuple(_parse_vector(r, "weight") for r in rows)
    if mode not in ("cotangent", "raw"):
        raise SchemaError(f"unknown mode {mode!r}")
    return WeightSystem(vecs, mode)


def _parse_group(value) -> GroupData:
    if not isinstance(value, dict):
        raise SchemaError("group must be an object")
    kind = value.get("type")
    if kind == "torus":
        _allow_keys(value, {"type", "rank"})
        return torus(_require_int(value.get("rank"), "rank"))
    if kind == "gl":
        _allow_keys(value, {"type", "n"})
        return gl(_require_int(value.get("n"), "n"))
    if kind == "sl":
        _allow_keys(value, {"type", "n"})
        return sl(_require_int(value.get("n"), "n"))
    if kind == "product":
        _allow_keys(value, {"type", "factors"})
        factors = _require_list(value.get("factors"), "factors")
        if not factors:
            raise SchemaError("product needs factors")
        return product([_parse_group(f) for f in factors])
    if kind == "custom":
        _allow_keys(value, {"type", "rank", "roots", "simple_roots", "form", "label"})
        rank = _require_int(value.get("rank"), "rank")
        roots = [_parse_vector(r, "root") for r in _require_list(value.get("roots", []), "roots")]
        simple = [
            _parse_vector(r, "simple root")
            for r in _require_list(value.get("simple_roots", []), "simple_roots")
        ]
        form = value.get("form")
        form_rows = None
        if form is not None:
            form_rows = [_parse_vector(r, "form row") for r in _require_list(form, "form")]
        return group_data(rank, roots, simple, form_rows, str(value.get("label", "custom")))
    raise SchemaError(f"unknown group type {kind!r}")


def _parse_character(value) -> LieCharacter | None:
    if value is None:
        return None
    if not isinstance(value, dict):
        raise SchemaError("c must be an object with base/direction")
    _allow_keys(value, {"base", "direction"})
    if "base" not in value:
        raise SchemaError('c needs a "base"')
    base = _parse_vector(value["base"], "c.base")
    direction = None
    if value.get("direction") is not None:
        direction = _parse_vector(value["direction"], "c.direction")
    return LieCharacter(base, direction)


def _allow_keys(obj: dict, allowed: set) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"unknown keys: {sorted(unknown)}")


def _require_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"{what} must be an integer")
    return value


def render_problem(problem: ExactnessProblem) -> dict:
    """Round-trippable JSON form of a problem."""
    out: dict[str, Any] = {
        "knx_version": SCHEMA_VERSION,
        "group": _render_group(problem.group),
        "weights": [[rat_str(x) for x in w] for w in problem.weights.w_weights],
        "mode": problem.weights.mode,
        "chi": [rat_str(x) for x in problem.chi.vec],
        "orientation": problem.orientation,
        "strictness": problem.strictness,
    }
    if problem.c is not None:
        c: dict[str, Any] = {"base": [rat_str(x) for x in problem.c.base]}
        if problem.c.direction is not None:
            c["direction"] = [rat_str(x) for x in problem.c.direction]
        out["c"] = c
    if problem.dropped_strata:
        out["drop_strata"] = [[rat_str(x) for x in v] for v in problem.dropped_strata]
    return out


def _render_group(group: GroupData) -> dict:
    label = group.label
    if label == f"torus({group.rank})":
        return {"type": "torus", "rank": group.rank}
    if label == f"gl({group.rank})":
        return {"type": "gl", "n": group.rank}
    if label == f"sl({group.rank})":
        return {"type": "sl", "n": group.rank}
    return {
        "type": "custom",
        "rank": group.rank,
        "roots": [[rat_str(x) for x in r] for r in group.roots],
        "simple_roots": [[rat_str(x) for x in r] for r in group.simple_roots],
        "form": [[rat_str(x) for x in row] for row in group.form.rows],
        "label": label,
    }


def load_problem(path: str, cap: int = DEFAULT_VERTEX_CAP) -> ExactnessProblem:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read problem file: {exc}") from exc
    return parse_problem(data, cap)
