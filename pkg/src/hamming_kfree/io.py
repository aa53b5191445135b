"""File formats: hex set files, coloring CSV, certificate/report JSON.

Set files hold one vertex per line as fixed-width lowercase hex (most
significant coordinate first). Lines starting with ``#`` are comments; the
writer emits a single ``# n=<n> r=<r>`` header so later commands can recover
the cube parameters.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from pathlib import Path

import numpy as np

from .cube import from_hex, hex_width, to_hex
from .sets import Coloring

_HEADER = re.compile(r"#\s*n=(\d+)\s+r=(\d+)")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def atomic_write(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def format_set(vertices, n: int, r: int | None = None) -> str:
    lines = [] if r is None else [f"# n={n} r={r}"]
    lines += [to_hex(v, n) for v in sorted(int(v) for v in vertices)]
    return "\n".join(lines) + "\n"


def parse_set(text: str, n: int | None = None) -> tuple[list[int], dict]:
    """Vertices plus header fields found in the file (``n``/``r`` when present)."""
    header = {}
    vertices = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m:
                header = {"n": int(m.group(1)), "r": int(m.group(2))}
            continue
        dim = n if n is not None else header.get("n")
        if not re.fullmatch(r"[0-9a-f]+", line):
            raise ParseError(lineno, f"not lowercase hex: {line!r}")
        if width is None:
            width = len(line)
        if len(line) != width or (dim is not None and len(line) != hex_width(dim)):
            raise ParseError(lineno, f"hex width {len(line)} does not match the set")
        try:
            vertices.append(from_hex(line, dim) if dim is not None else int(line, 16))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    return vertices, header


def write_set(path, vertices, n: int, r: int | None = None) -> None:
    atomic_write(path, format_set(vertices, n, r))


def read_set(path, n: int | None = None) -> tuple[list[int], dict]:
    return parse_set(Path(path).read_text(), n)


def format_coloring(coloring: Coloring) -> str:
    out = ["vertex_hex,color_index"]
    width = hex_width(coloring.n)
    for x, c in enumerate(coloring.colors):
        out.append(f"{x:0{width}x},{int(c)}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str, n: int) -> np.ndarray:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "vertex_hex,color_index":
        raise ParseError(1, "missing header vertex_hex,color_index")
    colors = np.full(1 << n, -1, dtype=np.int64)
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            hx, c = line.split(",")
            colors[from_hex(hx, n)] = int(c)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    if (colors < 0).any():
        raise ParseError(len(lines), "coloring does not cover every vertex")
    return colors


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path, obj) -> None:
    atomic_write(path, dumps(obj))
