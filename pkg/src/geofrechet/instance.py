"""Instance files: one JSON object with a polygon, two curves and optional point sets.

Example::

    {"polygon": [[0, 0], [4, 0], [4, 4], [0, 4]],
     "curveA": [[1, 1], [3, 1]],
     "curveB": [[1, 2], [3, 2]],
     "setA": [[1, 1]], "setB": [[3, 3]]}

Only ``curveA`` and ``curveB`` are required.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional

from .errors import PointOutsidePolygon, ValidationError
from .geometry import (
    Point,
    PolygonalCurve,
    SimplePolygon,
    _as_point,
    point_in_polygon,
    validate_curve,
    validate_polygon,
)

KEYS = ("polygon", "curveA", "curveB", "setA", "setB")


class InstanceFormatError(ValidationError):
    """The file is not a well-formed instance document."""


@dataclass
class Instance:
    polygon: Optional[List[Point]]
    curveA: List[Point]
    curveB: List[Point]
    setA: Optional[List[Point]] = None
    setB: Optional[List[Point]] = None

    def to_dict(self) -> dict:
        out = {}
        for key in KEYS:
            value = getattr(self, key)
            if value is not None:
                out[key] = [[x, y] for x, y in value]
        return out


@dataclass
class ValidatedInstance:
    polygon: Optional[SimplePolygon]
    A: PolygonalCurve
    B: PolygonalCurve
    setA: Optional[List[Point]]
    setB: Optional[List[Point]]


def _points(value, key) -> List[Point]:
    if not isinstance(value, list):
        raise InstanceFormatError(f"{key} must be a list of [x, y] pairs")
    out = []
    for p in value:
        if not isinstance(p, list) or len(p) != 2 or isinstance(p[0], bool) or isinstance(p[1], bool):
            raise InstanceFormatError(f"{key}: {p!r} is not an [x, y] pair")
        out.append(_as_point(p))
    return out


def from_dict(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceFormatError("an instance must be a JSON object")
    unknown = set(doc) - set(KEYS)
    if unknown:
        raise InstanceFormatError(f"unknown keys: {sorted(unknown)}")
    for key in ("curveA", "curveB"):
        if key not in doc:
            raise InstanceFormatError(f"missing required key {key}")
    fields = {key: (_points(doc[key], key) if doc.get(key) is not None else None) for key in KEYS}
    return Instance(**fields)


def loads(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    return from_dict(doc)


def load(path) -> Instance:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def dumps(instance: Instance) -> str:
    return json.dumps(instance.to_dict(), indent=1) + "\n"


def dump(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(instance))


def validate(instance: Instance, use_polygon: bool = True) -> ValidatedInstance:
    """Check the geometry; with ``use_polygon=False`` the polygon is ignored."""
    polygon = None
    if use_polygon and instance.polygon is not None:
        polygon = validate_polygon(instance.polygon)
    A = validate_curve(instance.curveA, polygon)
    B = validate_curve(instance.curveB, polygon)
    sets = []
    for key in ("setA", "setB"):
        pts = getattr(instance, key)
        if pts is not None and polygon is not None:
            for q in pts:
                if not point_in_polygon(polygon, q):
                    raise PointOutsidePolygon(f"{key} point {q} is outside the polygon")
        sets.append(pts)
    return ValidatedInstance(polygon, A, B, sets[0], sets[1])
