"""Reading and writing hypergraph files.

Text format::

    # comment
    n 4
    e 0 1 2
    e 0 3

JSON format: ``{"n": 4, "edges": [[0, 1, 2], [0, 3]]}``. Writers always emit
vertices ascending within an edge and edges in lexicographic order.
"""

from __future__ import annotations

import json
from pathlib import Path

from .hypergraph import Hypergraph, HypergraphError


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def parse_text(text: str) -> Hypergraph:
    n = None
    edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = line.split()
        col = raw.index(tokens[0]) + 1
        head, args = tokens[0], tokens[1:]
        if n is None:
            if head != "n" or len(args) != 1:
                raise ParseError("expected header 'n <count>'", lineno, col)
            try:
                n = int(args[0])
            except ValueError:
                raise ParseError(f"bad vertex count {args[0]!r}", lineno, raw.index(args[0]) + 1) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno, col)
            continue
        if head != "e":
            raise ParseError(f"unknown record {head!r}", lineno, col)
        if not args:
            raise ParseError("empty edge", lineno, col)
        vs = []
        pos = 0
        for tok in args:
            pos = raw.index(tok, pos + 1)
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad vertex {tok!r}", lineno, pos + 1) from None
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno, pos + 1)
            vs.append(v)
        if len(set(vs)) != len(vs):
            raise ParseError("repeated vertex in edge", lineno, col)
        edges.append(tuple(vs))
    if n is None:
        raise ParseError("missing header 'n <count>'")
    try:
        return Hypergraph(n, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None


def format_text(h: Hypergraph) -> str:
    lines = [f"n {h.n}"]
    lines += ["e " + " ".join(map(str, e)) for e in h.to_lists()]
    return "\n".join(lines) + "\n"


def to_json_obj(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": h.to_lists()}


def from_json_obj(obj: dict) -> Hypergraph:
    try:
        n = obj["n"]
        edges = obj["edges"]
    except (KeyError, TypeError):
        raise ParseError("JSON hypergraph needs keys 'n' and 'edges'") from None
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError("'n' must be an integer and 'edges' a list")
    try:
        return Hypergraph(n, edges)
    except (HypergraphError, TypeError) as exc:
        raise ParseError(str(exc)) from None


def parse_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_json_obj(obj)


def format_json(h: Hypergraph) -> str:
    return json.dumps(to_json_obj(h), sort_keys=True) + "\n"


def loads(text: str) -> Hypergraph:
    """Parse either format, deciding by the first non-blank character."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def load(path: str | Path) -> Hypergraph:
    return loads(Path(path).read_text())


def dump(h: Hypergraph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "text"
    path.write_text(format_json(h) if fmt == "json" else format_text(h))
