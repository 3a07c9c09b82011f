"""Reading and writing ribbon graphs.

Text format, one graph per file::

    vertices 2
    0 1 2
    3 4 5
    edges 3
    A 0 3
    B 1 4
    C 2 5

Line 1 declares the vertex count, the next k lines give the rotations (a
blank line is a vertex with no darts), then the edge count and one ``label
dartA dartB`` line per edge.  The JSON equivalent carries ``vertices`` (an
array of arrays) and ``edges`` (an array of pairs), plus optional
``names``.  Writers renumber darts canonically: vertex order first, then
rotation order.
"""

from __future__ import annotations

import json
import os
from typing import Union

from .core import InvalidGraphError, RibbonGraph

PathLike = Union[str, "os.PathLike[str]"]


class ParseError(ValueError):
    """Malformed graph file; the message carries the offending line number."""


def canonical_renumber(g: RibbonGraph) -> RibbonGraph:
    """Renumber darts densely in vertex order, then rotation order."""
    newid = {}
    for rot in g.vertices:
        for d in rot:
            newid[d] = len(newid)
    vertices = tuple(tuple(newid[d] for d in rot) for rot in g.vertices)
    edges = tuple((newid[a], newid[b]) for a, b in g.edges)
    return RibbonGraph(vertices, edges, g.edge_names)


def dumps_text(g: RibbonGraph) -> str:
    g.validate()
    g = canonical_renumber(g)
    lines = [f"vertices {g.num_vertices}"]
    lines.extend(" ".join(str(d) for d in rot) for rot in g.vertices)
    lines.append(f"edges {g.num_edges}")
    names = g.edge_names
    lines.extend(f"{names[e]} {a} {b}" for e, (a, b) in enumerate(g.edges))
    return "\n".join(lines) + "\n"


def _header(lines: list[str], idx: int, keyword: str) -> int:
    if idx >= len(lines):
        raise ParseError(f"line {idx + 1}: expected '{keyword} <count>', got end of file")
    parts = lines[idx].split()
    if len(parts) != 2 or parts[0] != keyword:
        raise ParseError(f"line {idx + 1}: expected '{keyword} <count>', got {lines[idx]!r}")
    try:
        count = int(parts[1])
    except ValueError:
        raise ParseError(f"line {idx + 1}: {parts[1]!r} is not a count") from None
    if count < 0:
        raise ParseError(f"line {idx + 1}: negative count {count}")
    return count


def loads_text(text: str) -> RibbonGraph:
    """Parse the text format, reporting violations with their line numbers."""
    lines = text.splitlines()
    nv = _header(lines, 0, "vertices")
    if len(lines) < nv + 2:
        raise ParseError(f"line {len(lines) + 1}: expected {nv} rotation lines")
    vertices = []
    seen_darts: dict[int, int] = {}
    for i in range(nv):
        lineno = i + 2
        rot = []
        for tok in lines[i + 1].split():
            try:
                d = int(tok)
            except ValueError:
                raise ParseError(f"line {lineno}: {tok!r} is not a dart id") from None
            if d in seen_darts:
                raise ParseError(f"line {lineno}: duplicate dart {d}")
            seen_darts[d] = lineno
            rot.append(d)
        vertices.append(tuple(rot))
    ne = _header(lines, nv + 1, "edges")
    if len(lines) < nv + 2 + ne:
        raise ParseError(f"line {len(lines) + 1}: expected {ne} edge lines")
    edges = []
    names = []
    paired: dict[int, int] = {}
    for i in range(ne):
        lineno = nv + 3 + i
        parts = lines[nv + 2 + i].split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'label dartA dartB', got {lines[nv + 2 + i]!r}")
        label = parts[0]
        if label in names:
            raise ParseError(f"line {lineno}: duplicate edge label {label!r}")
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"line {lineno}: dart ids must be integers") from None
        if a == b:
            raise ParseError(f"line {lineno}: pairing fixed point at {a}")
        for d in (a, b):
            if d not in seen_darts:
                raise ParseError(f"line {lineno}: unknown dart {d}")
            if d in paired:
                raise ParseError(f"line {lineno}: pairing non-involution at {d}")
            paired[d] = lineno
        names.append(label)
        edges.append((a, b))
    for i in range(nv + 2 + ne, len(lines)):
        if lines[i].strip():
            raise ParseError(f"line {i + 1}: trailing content {lines[i]!r}")
    g = RibbonGraph(tuple(vertices), tuple(edges), tuple(names))
    try:
        g.validate()
    except InvalidGraphError as exc:
        raise ParseError(str(exc)) from None
    return g


def to_json_dict(g: RibbonGraph) -> dict:
    g.validate()
    g = canonical_renumber(g)
    return {
        "vertices": [list(rot) for rot in g.vertices],
        "edges": [list(pair) for pair in g.edges],
        "names": list(g.edge_names),
    }


def from_json_dict(data: dict) -> RibbonGraph:
    if not isinstance(data, dict):
        raise ParseError("graph JSON must be an object")
    for key in ("vertices", "edges"):
        if key not in data:
            raise ParseError(f"graph JSON missing field {key!r}")
        if not isinstance(data[key], list):
            raise ParseError(f"graph JSON field {key!r} must be an array")
    for i, rot in enumerate(data["vertices"]):
        if not isinstance(rot, list):
            raise ParseError(f"vertices[{i}] must be an array of dart ids")
    for i, pair in enumerate(data["edges"]):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"edges[{i}] must be a pair of dart ids")
    names = data.get("names")
    if names is not None and (
        not isinstance(names, list) or len(names) != len(data["edges"])
    ):
        raise ParseError("names must be an array with one label per edge")
    g = RibbonGraph(
        tuple(tuple(rot) for rot in data["vertices"]),
        tuple(tuple(pair) for pair in data["edges"]),
        tuple(names) if names is not None else None,
    )
    try:
        g.validate()
    except InvalidGraphError as exc:
        raise ParseError(str(exc)) from None
    return g


def loads(text: str) -> RibbonGraph:
    """Parse a graph from text or JSON, sniffing the format."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return from_json_dict(data)
    return loads_text(text)


def load_path(path: PathLike) -> RibbonGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump_path(g: RibbonGraph, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_text(g))
