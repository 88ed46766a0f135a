"""Edge-list parsing/writing and plot-ready CSV emission."""

from __future__ import annotations

import csv
import io
import os
from contextlib import contextmanager
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .errors import IoError, ParseError
from .graph import Graph

MAX_LABEL = 2**32 - 1


@dataclass
class EdgeListDocument:
    """Bookkeeping for one parsed edge list.

    Raw line count = parsed_edges + dropped_self_loops
    + collapsed_duplicates + skipped_lines.
    """

    source_path: str
    parsed_edges: int = 0
    dropped_self_loops: int = 0
    collapsed_duplicates: int = 0
    skipped_lines: int = 0


def _label(token: str, lineno: int) -> int:
    if not token.isdigit() or not token.isascii():
        raise ParseError(f"not a non-negative integer: {token!r}", lineno)
    value = int(token)
    if value > MAX_LABEL:
        raise ParseError(f"label exceeds 2^32-1: {token}", lineno)
    return value


def parse_edge_list(stream: Iterable[str], source_path: str = "<stream>") -> tuple[Graph, EdgeListDocument]:
    """Parse ``u v`` lines into a Graph.

    Blank lines and lines starting with ``#`` are skipped. A self-loop
    line ``v v`` is dropped as an edge but still registers ``v`` as a node,
    which is how isolated nodes are written back out.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    doc = EdgeListDocument(source_path)
    nodes: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(stream, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            doc.skipped_lines += 1
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two labels, got {len(tokens)} fields", lineno)
        u, v = _label(tokens[0], lineno), _label(tokens[1], lineno)
        nodes.add(u)
        nodes.add(v)
        if u == v:
            doc.dropped_self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            doc.collapsed_duplicates += 1
        else:
            edges.add(key)
    doc.parsed_edges = len(edges)
    return Graph(edges, nodes=nodes), doc


def read_edge_list(path) -> tuple[Graph, EdgeListDocument]:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh, os.fspath(path))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc


@contextmanager
def _open_for_write(destination):
    if hasattr(destination, "write"):
        yield destination
        return
    try:
        fh = open(destination, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise IoError(f"cannot write {destination}: {exc.strerror or exc}") from exc
    with fh:
        yield fh


def format_edge_list(graph: Graph) -> str:
    """Canonical text: one ``u v`` line per edge (u < v, sorted), then
    ``v v`` for each isolated node."""
    lines = [f"{u} {v}\n" for u, v in graph.edges()]
    adj = graph.adjacency
    lines.extend(f"{v} {v}\n" for v in sorted(adj) if not adj[v])
    return "".join(lines)


def write_edge_list(graph: Graph, destination) -> None:
    with _open_for_write(destination) as fh:
        fh.write(format_edge_list(graph))


def _cell(value):
    if isinstance(value, float):
        return repr(value)
    return value


def write_curve_csv(header: Sequence[str], rows: Iterable[Sequence], destination) -> None:
    """Write ``header`` then ``rows`` as comma-separated values.

    Floats use ``repr`` so output is byte-stable; every line ends in ``\\n``.
    """
    arity = len(header)
    with _open_for_write(destination) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for i, row in enumerate(rows):
            if len(row) != arity:
                raise ValueError(f"row {i} has {len(row)} fields, header has {arity}")
            writer.writerow([_cell(x) for x in row])
