"""Text formats for coloured graphs and cycles.

Coloured graph format:

    n m r
    u v c        (one line per edge, m lines)

with 0 <= u < v < n and 0 <= c < r. Writing sorts edge lines by (u, v), so a
read/write round trip is byte-identical.

Cycles serialize as a whitespace-separated vertex sequence.
"""

from __future__ import annotations

import io
import os
from typing import TextIO

from .errors import GraphFormatError
from .graphs import EdgeColouring, Graph

__all__ = [
    "read_coloured_graph",
    "parse_coloured_graph",
    "write_coloured_graph",
    "dumps_coloured_graph",
    "read_cycle",
    "write_cycle",
    "dumps_cycle",
]


def _ints(line: str, want: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != want:
        raise GraphFormatError(f"expected {want} fields, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {parts!r}", lineno) from None


def parse_coloured_graph(text: str) -> tuple[Graph, EdgeColouring]:
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input")
    lineno, header = lines[0]
    n, m, r = _ints(header, 3, lineno)
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    if r < 2:
        raise GraphFormatError(f"need at least 2 colours, header says r={r}", lineno)
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    colours = {}
    for lineno, ln in lines[1:]:
        u, v, c = _ints(ln, 3, lineno)
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < n", lineno)
        if not (0 <= c < r):
            raise GraphFormatError(f"colour {c} outside 0..{r - 1}", lineno)
        if (u, v) in colours:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        edges.append((u, v))
        colours[(u, v)] = c
    g = Graph.from_edges(n, edges)
    return g, EdgeColouring.from_map(g, r, colours)


def read_coloured_graph(path: str | os.PathLike) -> tuple[Graph, EdgeColouring]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_coloured_graph(fh.read())


def dumps_coloured_graph(g: Graph, col: EdgeColouring) -> str:
    out = io.StringIO()
    _write(out, g, col)
    return out.getvalue()


def _write(fh: TextIO, g: Graph, col: EdgeColouring) -> None:
    fh.write(f"{g.n} {g.edge_count} {col.r}\n")
    for u, v in g.edges():  # already sorted
        fh.write(f"{u} {v} {col.colour_of(u, v)}\n")


def write_coloured_graph(path: str | os.PathLike, g: Graph, col: EdgeColouring) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        _write(fh, g, col)


def dumps_cycle(order: tuple[int, ...]) -> str:
    return " ".join(str(v) for v in order) + "\n"


def write_cycle(path: str | os.PathLike, order: tuple[int, ...]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_cycle(order))


def read_cycle(path: str | os.PathLike) -> tuple[int, ...]:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError:
        raise GraphFormatError("cycle file contains a non-integer token") from None
