"""Surface documents: JSON files describing a :class:`SurfaceModel`.

Two kinds are accepted.  ``log_transform`` documents list torsion points
``{m, u, v}``; their generators are ``F, F1, ..., Fr, X``.  ``explicit``
documents give generators, relations, the canonical class, an intersection
matrix on the generators and Hodge numbers, optionally with an elliptic
fibration and Albanese degrees.  Class vectors are integer coefficient lists
over the generator list.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .errors import StablePairsError
from .surface import Hodge, SurfaceModel, build_explicit, build_log_transform

_INT = {"type": "integer"}
_VEC = {"type": "array", "items": _INT}

LOG_TRANSFORM_SCHEMA = {
    "type": "object",
    "required": ["kind", "zetas"],
    "additionalProperties": False,
    "properties": {
        "kind": {"const": "log_transform"},
        "name": {"type": "string"},
        "zetas": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["m", "u", "v"],
                "additionalProperties": False,
                "properties": {"m": {"type": "integer", "minimum": 1}, "u": _INT, "v": _INT},
            },
        },
    },
}

EXPLICIT_SCHEMA = {
    "type": "object",
    "required": ["kind", "generators", "relations", "canonical", "intersection_form", "hodge"],
    "additionalProperties": False,
    "properties": {
        "kind": {"const": "explicit"},
        "name": {"type": "string"},
        "generators": {"type": "array", "minItems": 1, "uniqueItems": True, "items": {"type": "string"}},
        "relations": {"type": "array", "items": _VEC},
        "canonical": _VEC,
        "intersection_form": {"type": "array", "items": _VEC},
        "hodge": {
            "type": "object",
            "required": ["q", "p_g", "chi_O", "c2"],
            "additionalProperties": False,
            "properties": {
                "q": {"type": "integer", "minimum": 0},
                "p_g": {"type": "integer", "minimum": 0},
                "chi_O": _INT,
                "c2": _INT,
            },
        },
        "fibration": {
            "type": "object",
            "required": ["base_genus", "fiber"],
            "additionalProperties": False,
            "properties": {
                "base_genus": {"type": "integer", "minimum": 0},
                "fiber": _VEC,
                "multiple_fibers": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["m", "class"],
                        "additionalProperties": False,
                        "properties": {"m": {"type": "integer", "minimum": 2}, "class": _VEC},
                    },
                },
            },
        },
        "albanese_degrees": _VEC,
    },
}

BUILTIN = {
    "example33": "example33.json",
    "rational_elliptic": "rational_elliptic.json",
    "dolgachev": "dolgachev.json",
    "hyperelliptic": "hyperelliptic.json",
    "negative_case": "negative_case.json",
}


class SchemaError(StablePairsError, ValueError):
    """A surface document or class vector failed validation."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<document>"


def _validate(doc: Any, schema: dict) -> None:
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        err = errors[0]
        raise SchemaError(_path(err.absolute_path), err.message)


def _check_len(field: str, vec, n: int) -> None:
    if len(vec) != n:
        raise SchemaError(field, f"expected {n} entries (one per generator), got {len(vec)}")


def surface_from_document(doc: Any) -> SurfaceModel:
    if not isinstance(doc, dict):
        raise SchemaError("<document>", "surface document must be a JSON object")
    kind = doc.get("kind")
    if kind == "log_transform":
        _validate(doc, LOG_TRANSFORM_SCHEMA)
        S = build_log_transform(
            [(z["m"], z["u"], z["v"]) for z in doc["zetas"]], name=doc.get("name", "log_transform")
        )
        S.metadata["kind"] = kind
        return S
    if kind != "explicit":
        raise SchemaError("kind", f"must be 'log_transform' or 'explicit', got {kind!r}")
    _validate(doc, EXPLICIT_SCHEMA)
    n = len(doc["generators"])
    for i, rel in enumerate(doc["relations"]):
        _check_len(f"relations[{i}]", rel, n)
    _check_len("canonical", doc["canonical"], n)
    _check_len("intersection_form", doc["intersection_form"], n)
    for i, row in enumerate(doc["intersection_form"]):
        _check_len(f"intersection_form[{i}]", row, n)
    fib = doc.get("fibration")
    if fib is not None:
        _check_len("fibration.fiber", fib["fiber"], n)
        for i, mf in enumerate(fib.get("multiple_fibers", [])):
            _check_len(f"fibration.multiple_fibers[{i}].class", mf["class"], n)
        fib = {
            "base_genus": fib["base_genus"],
            "fiber": fib["fiber"],
            "multiple_fibers": [(mf["m"], mf["class"]) for mf in fib.get("multiple_fibers", [])],
        }
    if "albanese_degrees" in doc:
        _check_len("albanese_degrees", doc["albanese_degrees"], n)
    h = doc["hodge"]
    try:
        hodge = Hodge(h["q"], h["p_g"], h["chi_O"], h["c2"])
    except StablePairsError as exc:
        raise SchemaError("hodge", str(exc)) from exc
    S = build_explicit(
        doc.get("name", "explicit"),
        doc["generators"],
        doc["relations"],
        doc["canonical"],
        doc["intersection_form"],
        hodge,
        fibration=fib,
        albanese_degrees=doc.get("albanese_degrees"),
    )
    S.metadata["kind"] = kind
    return S


def load_document(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(str(path), f"cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(str(path), f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def load_surface(path: str | Path) -> SurfaceModel:
    return surface_from_document(load_document(path))


def builtin_document(key: str) -> dict:
    text = resources.files("stablepairs.data").joinpath(BUILTIN[key]).read_text(encoding="utf-8")
    return json.loads(text)


def builtin_surface(key: str) -> SurfaceModel:
    return surface_from_document(builtin_document(key))


def parse_class_vector(S: SurfaceModel, text: str, field: str = "--beta"):
    """Parse ``"0,1,1,0,0"`` into a class of ``S``.

    Log-transform surfaces also accept a vector that omits the trailing ``X``
    coefficient, i.e. a combination of fibre classes only.
    """
    try:
        vec = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError as exc:
        raise SchemaError(field, f"not a comma-separated integer vector: {text!r}") from exc
    n = S.h2.num_generators
    if S.metadata.get("kind") == "log_transform" and len(vec) == n - 1:
        vec.append(0)
    if len(vec) != n:
        raise SchemaError(
            field, f"expected {n} coefficients over generators {','.join(S.h2.names)}, got {len(vec)}"
        )
    return S.element(vec)
