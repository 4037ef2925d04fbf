"""Plain-text matrix files.

    hadamat-matrix v1
    order 60
    dim 3
    scale 0
    1 1 1
    1 z60^20 z60^40
    1 z60^40 z60^20

Entries use the syntax of :func:`hadamat.cyclotomic.format_entry`; printing is
canonical so ``parse(dumps(m)) == m`` and ``dumps(parse(text)) == text`` for
canonical text.
"""
from __future__ import annotations

from pathlib import Path

from hadamat.cyclotomic import CyclotomicError, format_entry, parse_entry
from hadamat.matrix import CycloMatrix

HEADER = "hadamat-matrix v1"


class MatrixFileError(ValueError):
    pass


def dumps(m: CycloMatrix) -> str:
    lines = [HEADER, f"order {m.order}", f"dim {m.dim}", f"scale {m.scale_exp}"]
    lines += [" ".join(format_entry(x) for x in row) for row in m.rows]
    return "\n".join(lines) + "\n"


def _field(line: str, key: str, lineno: int) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise MatrixFileError(f"line {lineno}: expected '{key} <int>', got {line!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise MatrixFileError(f"line {lineno}: {key} must be an integer") from None


def loads(text: str) -> CycloMatrix:
    if text.startswith("\ufeff"):
        raise MatrixFileError("byte-order mark not allowed")
    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 4 or lines[0].strip() != HEADER:
        raise MatrixFileError(f"missing header {HEADER!r}")
    M = _field(lines[1], "order", 2)
    n = _field(lines[2], "dim", 3)
    s = _field(lines[3], "scale", 4)
    if M < 1 or n < 1:
        raise MatrixFileError("order and dim must be positive")
    body = lines[4:]
    if len(body) != n:
        raise MatrixFileError(f"expected {n} matrix rows, found {len(body)}")
    rows = []
    for k, line in enumerate(body, start=5):
        toks = line.split()
        if len(toks) != n:
            raise MatrixFileError(f"line {k}: expected {n} entries, found {len(toks)}")
        try:
            rows.append(tuple(parse_entry(t, M) for t in toks))
        except CyclotomicError as exc:
            raise MatrixFileError(f"line {k}: {exc}") from None
    try:
        return CycloMatrix(M, tuple(rows), s)
    except ValueError as exc:
        raise MatrixFileError(str(exc)) from None


def read(path: str | Path) -> CycloMatrix:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise MatrixFileError(f"{path}: {exc.strerror}") from None
    try:
        return loads(data.decode("utf-8"))
    except UnicodeDecodeError:
        raise MatrixFileError(f"{path}: not UTF-8") from None


def write(path: str | Path, m: CycloMatrix) -> None:
    Path(path).write_bytes(dumps(m).encode("utf-8"))
