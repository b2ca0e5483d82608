"""JSON polygon documents and JSON-lines corpora.

A document looks like::

    {"schema": 1, "model": "poincare", "vertices": [[x, y], ...],
     "metadata": {...}}

``model`` may also be ``"hyperboloid"`` with ``[x0, x1, x2]`` vertices.
Fields this module does not know are kept and written back unchanged.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .config import DEFAULT, Tolerances
from .polygon import HPolygon

SCHEMA = 1
MODELS = ("poincare", "hyperboloid")


class DocumentError(ValueError):
    """Malformed polygon document."""


@dataclass
class PolygonDocument:
    model: str
    vertices: list
    metadata: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data) -> "PolygonDocument":
        if not isinstance(data, dict):
            raise DocumentError("document must be a JSON object")
        data = dict(data)
        data.pop("schema", None)
        model = data.pop("model", "poincare")
        if model not in MODELS:
            raise DocumentError(f"unknown model {model!r}; expected one of {MODELS}")
        verts = data.pop("vertices", None)
        width = 2 if model == "poincare" else 3
        if not isinstance(verts, list) or len(verts) < 3:
            raise DocumentError("'vertices' must be a list of at least 3 coordinate arrays")
        clean = []
        for v in verts:
            if not isinstance(v, list) or len(v) != width:
                raise DocumentError(f"{model} vertices need {width} coordinates, got {v!r}")
            try:
                c = [float(x) for x in v]
            except (TypeError, ValueError):
                raise DocumentError(f"non-numeric coordinate in {v!r}") from None
            if not all(math.isfinite(x) for x in c):
                raise DocumentError(f"non-finite coordinate in {v!r}")
            if model == "poincare" and math.hypot(*c) >= 1.0:
                raise DocumentError(f"Poincare vertex {v!r} is not inside the unit disk")
            clean.append(c)
        metadata = data.pop("metadata", {})
        if not isinstance(metadata, dict):
            raise DocumentError("'metadata' must be an object")
        return cls(model, clean, metadata, data)

    @classmethod
    def loads(cls, text: str) -> "PolygonDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str | Path) -> "PolygonDocument":
        return cls.loads(Path(path).read_text())

    @classmethod
    def from_polygon(cls, P: HPolygon, model: str = "poincare", metadata: dict | None = None):
        if model == "poincare":
            verts = [list(u) for u in P.poincare()]
        else:
            verts = [list(v) for v in P.vertices]
        return cls(model, verts, dict(metadata or {}))

    def to_polygon(self, tol: Tolerances = DEFAULT, normalize_orientation: bool = True) -> HPolygon:
        if self.model == "poincare":
            return HPolygon.from_poincare(self.vertices, tol, normalize_orientation)
        return HPolygon.from_hyperboloid(self.vertices, tol, normalize_orientation)

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA, "model": self.model, "vertices": self.vertices}
        if self.metadata:
            out["metadata"] = self.metadata
        out.update(self.extra)
        return out

    def dumps(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=indent is not None)


def read_corpus(path: str | Path) -> Iterator[PolygonDocument]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield PolygonDocument.loads(line)


def write_corpus(path: str | Path, docs: Iterable[PolygonDocument]) -> int:
    count = 0
    with open(path, "w") as fh:
        for doc in docs:
            fh.write(doc.dumps() + "\n")
            count += 1
    return count
