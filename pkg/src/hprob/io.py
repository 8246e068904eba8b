"""JSON space files.

A space file looks like::

    {
      "atoms": [{"id": "1", "nu1": "1/4", "nu2": "1/4"}, ...],
      "events": {"A": ["1", "2"]},
      "regime": "unit"
    }

Coefficients travel as strings (``int`` or ``int/positive-int``) so values
survive the round trip exactly.  :func:`dumps` is canonical: atoms sorted by
id, events by name, members of each event by id.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .errors import ParseError
from .hyperbolic import HNum, format_rational, parse_rational
from .space import ProbSpace

RATIONAL_PATTERN = r"^-?[0-9]+(/[0-9]+)?$"

SPACE_SCHEMA = {
    "type": "object",
    "required": ["regime", "atoms"],
    "additionalProperties": False,
    "properties": {
        "regime": {"enum": ["unit", "e", "edag"]},
        "atoms": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "nu1", "nu2"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "nu1": {"type": "string", "pattern": RATIONAL_PATTERN},
                    "nu2": {"type": "string", "pattern": RATIONAL_PATTERN},
                },
            },
        },
        "events": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "string"}},
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(SPACE_SCHEMA)


def space_from_dict(data) -> ProbSpace:
    errors = sorted(_VALIDATOR.iter_errors(data), key=lambda e: list(e.path))
    if errors:
        err = errors[0]
        where = "/".join(str(p) for p in err.path) or "<root>"
        raise ParseError(f"schema violation at {where}: {err.message}")
    atoms, weights = [], []
    for i, entry in enumerate(data["atoms"]):
        try:
            w = HNum(parse_rational(entry["nu1"]), parse_rational(entry["nu2"]))
        except ParseError as exc:
            raise ParseError(f"atoms/{i} ({entry['id']!r}): {exc}") from None
        atoms.append(entry["id"])
        weights.append(w)
    return ProbSpace(atoms, weights, data["regime"], data.get("events", {}))


def loads(text: str) -> ProbSpace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return space_from_dict(data)


def load(path) -> ProbSpace:
    """Read and validate a space file.

    Raises :class:`ParseError` for malformed JSON, schema or rationals and a
    :class:`ValidationError` subclass when an axiom fails.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def space_to_dict(space: ProbSpace) -> dict:
    return {
        "regime": space.regime.value,
        "atoms": [
            {"id": atom,
             "nu1": format_rational(space.weights[atom].nu1),
             "nu2": format_rational(space.weights[atom].nu2)}
            for atom in sorted(space.atoms)
        ],
        "events": {name: sorted(space.named_events[name])
                   for name in sorted(space.named_events)},
    }


def dumps(space: ProbSpace) -> str:
    return json.dumps(space_to_dict(space), indent=2, sort_keys=True) + "\n"


def dump(space: ProbSpace, path) -> None:
    Path(path).write_text(dumps(space), encoding="utf-8")
