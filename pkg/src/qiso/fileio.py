"""Text formats for graphs, partitions, weights and mappings, plus reports.

All writers emit canonical bytes (sorted edges, fixed key order, exact
``p/q`` rationals) and write atomically via a temp file and rename, so
identical inputs always produce identical files.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Sequence, Union

from .errors import FormatError
from .graph import Graph
from .partition import Partition

PathLike = Union[str, Path]

_WEIGHT_RE = re.compile(r"^\d+(/\d+)?$")


def _atomic_write(path: PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _content_lines(path: PathLike) -> list[tuple[int, str]]:
    """Non-comment, non-blank lines with their 1-based line numbers."""
    out = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if line and not line.startswith("#"):
                out.append((lineno, line))
    return out


def _ints(line: str, lineno: int, expect: int) -> list[int]:
    fields = line.split()
    if len(fields) != expect:
        raise FormatError(f"line {lineno}: expected {expect} fields, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None


def read_edge_list(path: PathLike) -> Graph:
    """Parse an edge-list file: header ``n m`` then ``m`` lines ``u v``."""
    lines = _content_lines(path)
    if not lines:
        raise FormatError(f"{path}: empty file")
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if len(lines) - 1 != m:
        raise FormatError(f"{path}: header says {m} edges, found {len(lines) - 1}")
    edges = []
    for lineno, line in lines[1:]:
        u, v = _ints(line, lineno, 2)
        if not u < v:
            raise FormatError(f"line {lineno}: edges must satisfy u < v, got {u} {v}")
        edges.append((u, v))
    return Graph(n, edges)


def write_edge_list(g: Graph, path: PathLike) -> None:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    _atomic_write(path, "\n".join(lines) + "\n")


def read_partition(path: PathLike, g: Graph) -> Partition:
    """Parse a partition file: line ``i`` lists block ``i``, ids ascending."""
    blocks = []
    for lineno, line in _content_lines(path):
        try:
            members = [int(f) for f in line.split()]
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        if any(a >= b for a, b in zip(members, members[1:])):
            raise FormatError(f"line {lineno}: ids must be strictly increasing")
        blocks.append(members)
    return Partition(g, blocks)


def write_partition(p: Partition, path: PathLike) -> None:
    lines = [" ".join(str(v) for v in blk) for blk in p.blocks]
    _atomic_write(path, "\n".join(lines) + "\n")


def _parse_weight(token: str, lineno: int) -> Fraction:
    if not _WEIGHT_RE.match(token):
        raise FormatError(f"line {lineno}: weight must be an integer or p/q, got {token!r}")
    return Fraction(token)


def read_weights(path: PathLike, g: Graph) -> list[Fraction]:
    """Parse a weight file of ``vertex weight`` lines covering every vertex."""
    weights: dict[int, Fraction] = {}
    for lineno, line in _content_lines(path):
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'vertex weight'")
        try:
            v = int(fields[0])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        if not (0 <= v < g.vertex_count):
            raise FormatError(f"line {lineno}: vertex {v} out of range")
        if v in weights:
            raise FormatError(f"line {lineno}: duplicate weight for vertex {v}")
        weights[v] = _parse_weight(fields[1], lineno)
    missing = g.vertex_count - len(weights)
    if missing:
        raise FormatError(f"{path}: {missing} vertices have no weight")
    return [weights[v] for v in range(g.vertex_count)]


def weight_str(w: Union[int, Fraction]) -> str:
    frac = Fraction(w)
    return str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"


def write_weights(weights: Sequence[Union[int, Fraction]], path: PathLike) -> None:
    lines = [f"{v} {weight_str(w)}" for v, w in enumerate(weights)]
    _atomic_write(path, "\n".join(lines) + "\n")


def read_mapping(path: PathLike, g: Graph) -> list[int]:
    """Parse a mapping file of ``vertex image`` lines (original vertex ids)."""
    image: dict[int, int] = {}
    for lineno, line in _content_lines(path):
        v, w = _ints(line, lineno, 2)
        if not (0 <= v < g.vertex_count and 0 <= w < g.vertex_count):
            raise FormatError(f"line {lineno}: vertex out of range")
        if v in image:
            raise FormatError(f"line {lineno}: duplicate image for vertex {v}")
        image[v] = w
    missing = g.vertex_count - len(image)
    if missing:
        raise FormatError(f"{path}: {missing} vertices have no image")
    return [image[v] for v in range(g.vertex_count)]


def write_mapping(image: Sequence[int], path: PathLike) -> None:
    lines = [f"{v} {w}" for v, w in enumerate(image)]
    _atomic_write(path, "\n".join(lines) + "\n")


def fraction_str(x: Union[int, Fraction]) -> str:
    """Exact ``p/q`` form used for every rational in reports."""
    frac = Fraction(x)
    return f"{frac.numerator}/{frac.denominator}"


_REPORT_KEYS = (
    "input",
    "method",
    "constants",
    "sharpness",
    "coarseness",
    "compression_ratio",
    "radius",
    "diameter",
    "center",
    "median",
    "weighted_median",
    "center_shift",
    "bounds",
    "checks",
)


def build_report(**fields: object) -> dict:
    """Assemble a report with the canonical key order, None for absences."""
    unknown = set(fields) - set(_REPORT_KEYS)
    if unknown:
        raise ValueError(f"unknown report fields: {sorted(unknown)}")
    report = {key: fields.get(key) for key in _REPORT_KEYS}
    if report["checks"] is None:
        report["checks"] = {}
    return report


def check_entry(result: object, witness: object = None) -> dict:
    """One named verdict for the ``checks`` map of a report."""
    ok = bool(result)
    wit = witness
    if wit is None and hasattr(result, "witness"):
        wit = result.witness
    return {"ok": ok, "witness": list(wit) if isinstance(wit, tuple) else wit}


def write_report(report: dict, path: PathLike) -> None:
    _atomic_write(path, json.dumps(report, indent=2) + "\n")
