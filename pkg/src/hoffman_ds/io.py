"""Text formats: edge lists, Hoffman edge lists, DOT export, JSON helpers."""
from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from .graph import Graph

PathLike = Union[str, Path]
LABEL_HEADER = "# labels"
FAT_PREFIX = "fat:"


class FormatError(ValueError):
    pass


def _default_labels(g: Graph) -> bool:
    return all(lab == str(v) for v, lab in enumerate(g.labels))


def format_edge_list(g: Graph, fat: Optional[Sequence[int]] = None) -> str:
    """Serialise ``g``; custom labels get a trailing section, fat vertices a final line."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    if not _default_labels(g):
        lines.append(LABEL_HEADER)
        lines.extend(g.labels)
    if fat is not None:
        lines.append(" ".join([FAT_PREFIX] + [str(v) for v in sorted(fat)]))
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, count: int) -> List[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_edge_list(text: str) -> Tuple[Graph, Optional[List[int]]]:
    """Parse the edge-list format; returns the graph and the fat indices if present."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty input")
    n, m = _ints(lines[0], 1, 2)
    if n < 0 or m < 0:
        raise FormatError("line 1: counts must be non-negative")
    if len(lines) < 1 + m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for i in range(1, 1 + m):
        u, v = _ints(lines[i], i + 1, 2)
        if not (0 <= u < v < n):
            raise FormatError(f"line {i + 1}: need 0 <= u < v < n, got {u} {v}")
        if (u, v) in seen:
            raise FormatError(f"line {i + 1}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    pos = 1 + m
    labels = None
    if pos < len(lines) and lines[pos].strip() == LABEL_HEADER:
        labels = lines[pos + 1 : pos + 1 + n]
        if len(labels) != n:
            raise FormatError(f"label section needs {n} lines, found {len(labels)}")
        pos += 1 + n
    fat = None
    if pos < len(lines) and lines[pos].startswith(FAT_PREFIX):
        try:
            fat = [int(p) for p in lines[pos][len(FAT_PREFIX):].split()]
        except ValueError:
            raise FormatError(f"line {pos + 1}: bad fat vertex list") from None
        if any(not 0 <= v < n for v in fat):
            raise FormatError(f"line {pos + 1}: fat vertex out of range")
        pos += 1
    if pos != len(lines):
        raise FormatError(f"line {pos + 1}: unexpected content {lines[pos]!r}")
    try:
        g = Graph.from_edges(n, edges, labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return g, fat


def read_graph(path: PathLike) -> Graph:
    return parse_edge_list(Path(path).read_text())[0]


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g))


def to_dot(g: Graph, fat: Sequence[int] = ()) -> str:
    fat = set(fat)
    out = ["graph G {"]
    for v in range(g.n):
        attrs = [f"label={json.dumps(g.labels[v])}"]
        if v in fat:
            attrs.append("shape=box, style=filled")
        out.append(f"  {v} [{', '.join(attrs)}];")
    out.extend(f"  {u} -- {v};" for u, v in g.edges())
    out.append("}")
    return "\n".join(out) + "\n"


def partition_to_json(classes: Sequence[Sequence[int]]) -> str:
    return json.dumps([list(c) for c in classes])


def partition_from_json(text: str) -> List[List[int]]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise FormatError("partition must be a JSON array of arrays")
    return [[int(v) for v in c] for c in data]
