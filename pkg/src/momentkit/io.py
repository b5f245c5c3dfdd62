"""JSON files for models and polytopes.

Rationals are written as ``"a/b"`` strings (``"2"`` for integers) and never
as floats, so a round trip is exact.  Output is key-sorted and indented for
byte-stable files.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .geometry import Polytope, convex_hull, vector
from .lie import RootSystem, build_root_system, explicit_root_system
from .model import FixedPointDatum, HamiltonianModel

SCHEMA_VERSION = 1


class FormatError(ValueError):
    """A file that is not a well-formed model or polytope document."""


def rat(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rat(s: Any) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise FormatError(f"rational must be an integer or an 'a/b' string, got {s!r}")
    try:
        return Fraction(s)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {s!r}: {exc}") from None


def _vec(v) -> list[str]:
    return [rat(c) for c in v]


def _parse_vec(v, what: str):
    if not isinstance(v, list):
        raise FormatError(f"{what} must be a list")
    return tuple(parse_rat(c) for c in v)


def root_system_to_json(rs: RootSystem | None):
    if rs is None:
        return None
    if rs.family in ("A", "B"):
        return {"family": rs.family, "rank": rs.rank}
    return {"explicit": [_vec(r) for r in rs.roots]}


def root_system_from_json(obj) -> RootSystem | None:
    if obj is None:
        return None
    if not isinstance(obj, dict):
        raise FormatError("root_system must be an object or null")
    if "explicit" in obj:
        return explicit_root_system(_parse_vec(r, "root") for r in obj["explicit"])
    try:
        return build_root_system(str(obj["family"]), int(obj["rank"]))
    except KeyError as exc:
        raise FormatError(f"root_system is missing {exc}") from None


def model_to_json(m: HamiltonianModel) -> dict:
    pts = []
    for p in m.fixed_points:
        entry = {"id": p.id, "image": _vec(p.image), "weights": [_vec(w) for w in p.weights]}
        if p.targets:
            entry["targets"] = {str(k): v for k, v in sorted(p.targets.items())}
        pts.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "torus_rank": m.torus_rank,
        "ambient_dim": m.ambient_dim,
        "half_dim": m.half_dim,
        "root_system": root_system_to_json(m.root_system),
        "fixed_points": pts,
    }


def model_from_json(obj) -> HamiltonianModel:
    if not isinstance(obj, dict):
        raise FormatError("model document must be a JSON object")
    if obj.get("kind", "model") != "model":
        raise FormatError(f"expected a model document, got kind {obj.get('kind')!r}")
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema_version {obj.get('schema_version')!r}")
    try:
        pts = []
        for e in obj["fixed_points"]:
            targets = e.get("targets")
            if targets is not None:
                targets = {int(k): str(v) for k, v in targets.items()}
            pts.append(FixedPointDatum(str(e["id"]), _parse_vec(e["image"], "image"),
                                       [_parse_vec(w, "weight") for w in e["weights"]], targets))
        return HamiltonianModel(int(obj["torus_rank"]), int(obj["ambient_dim"]),
                                int(obj["half_dim"]), pts,
                                root_system_from_json(obj.get("root_system")))
    except KeyError as exc:
        raise FormatError(f"missing field {exc}") from None
    except (TypeError, AttributeError) as exc:
        raise FormatError(f"malformed model: {exc}") from None


def polytope_to_json(p: Polytope) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": "polytope",
            "vertices": [_vec(v) for v in p.vertices]}


def polytope_from_json(obj) -> Polytope:
    """A polytope document, or a model document (read as the hull of its images)."""
    if not isinstance(obj, dict):
        raise FormatError("polytope document must be a JSON object")
    if obj.get("kind") != "polytope":
        if "fixed_points" in obj:
            return convex_hull(model_from_json(obj).images())
        raise FormatError("expected kind 'polytope'")
    verts = obj.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise FormatError("polytope needs a non-empty vertex list")
    return convex_hull(_parse_vec(v, "vertex") for v in verts)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load(path) -> Any:
    try:
        text = Path(path).read_text()
    except FileNotFoundError:
        raise
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def load_model(path) -> HamiltonianModel:
    return model_from_json(_load(path))


def load_polytope(path) -> Polytope:
    return polytope_from_json(_load(path))


def save(obj: dict, path) -> None:
    Path(path).write_text(dumps(obj))


def parse_point(text: str):
    """``"1,0,-1"`` or ``"1/2,1/2"`` -> exact vector."""
    try:
        return vector(c.strip() for c in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad point {text!r}: {exc}") from None
