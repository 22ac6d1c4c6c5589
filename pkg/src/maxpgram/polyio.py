"""Polygon file formats.

Text: one "x y" pair per line; rationals may be written "p/q".
JSON: {"vertices": [[x, y], ...]} with the same scalar conventions.
"""
from __future__ import annotations

import json
from pathlib import Path

from .kernels import Kernel, format_scalar
from .polygon import ConvexPolygon, validate_polygon


def parse_polygon_text(text: str):
    pairs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        x, y = line.split()
        pairs.append((x, y))
    return pairs


def load_polygon(path: str | Path, kernel: Kernel) -> ConvexPolygon:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        pairs = [tuple(p) for p in data["vertices"]]
    else:
        pairs = parse_polygon_text(text)
    return validate_polygon(pairs, kernel)


def dump_polygon_text(poly: ConvexPolygon) -> str:
    return "".join(
        f"{format_scalar(x)} {format_scalar(y)}\n" for x, y in poly.vertices
    )


def dump_polygon_json(poly: ConvexPolygon) -> str:
    verts = [[format_scalar(x), format_scalar(y)] for x, y in poly.vertices]
    return json.dumps({"vertices": verts}, indent=None, separators=(",", ":"))
