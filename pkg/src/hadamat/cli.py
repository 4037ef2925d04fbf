"""hadamat command line.

Exit codes: 0 the command completed (whatever the verdict), 1 ``--assert`` was
given and the verdict is false, 2 usage, parse or guard errors.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

from hadamat import constructions as C
from hadamat import fileformat, report
from hadamat.cyclotomic import MAX_ORDER, CyclotomicError, parse_entry
from hadamat.equivalence import equiv
from hadamat.matrix import (
    CycloMatrix,
    MatrixError,
    dephase,
    is_hadamard,
    is_inverse_orthogonal,
    is_unitary,
)
from hadamat.mub import MubError, check_mub_set
from hadamat.search import SearchError, SearchTask, format_rows, row_matrix, search

EXIT_OK, EXIT_ASSERT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _finish(args, ok: bool) -> int:
    return EXIT_ASSERT if args.assert_ and not ok else EXIT_OK


def _load(path: str, order: int | None) -> CycloMatrix:
    m = fileformat.read(path)
    if order and order != m.order:
        if order % m.order:
            raise UsageError(f"{path}: order {m.order} does not divide --order {order}")
        m = m.embed(order)
    return m


def _load_all(paths, order: int | None) -> list[CycloMatrix]:
    """Load several files, lifting them to a common root order."""
    mats = [_load(p, order) for p in paths]
    common = math.lcm(*(m.order for m in mats))
    if common > MAX_ORDER:
        raise UsageError(f"common root order {common} exceeds {MAX_ORDER}; pass --order")
    return [m if m.order == common else m.embed(common) for m in mats]


# -- gen -------------------------------------------------------------------------


def _gen_matrix(args) -> CycloMatrix:
    name = args.name
    M = args.order or C.CATALOG_ORDER
    m = re.fullmatch(r"F_?(\d+)", name)
    if m:
        n = int(m.group(1))
        return C.fourier(n, args.order or n)
    if name == "I":
        if not args.n:
            raise UsageError("gen I needs --n")
        return C.identity(args.n, args.order or 1)
    if name == "circulant":
        if not args.row:
            raise UsageError("gen circulant needs --row")
        toks = [t for t in re.split(r"[,\s]+", args.row.strip()) if t]
        if args.n and len(toks) != args.n:
            raise UsageError(f"--row has {len(toks)} entries, --n is {args.n}")
        return C.circulant([parse_entry(t, M) for t in toks])
    names = [nm.name for nm in C.catalog()]
    if name not in names:
        raise UsageError(f"unknown matrix {name!r}; known: {', '.join(names)}, F<n>, I, circulant")
    mat = C.get(name)
    return mat.embed(args.order) if args.order and args.order != mat.order else mat


def cmd_gen(args) -> int:
    m = _gen_matrix(args)
    text = fileformat.dumps(m)
    if args.output:
        Path(args.output).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- check ---------------------------------------------------------------------------


def _cell(cell):
    if cell is None:
        return None
    i, j, x = cell
    return {"cell": [i, j], "value": report.entry_json(x)}


def cmd_check(args) -> int:
    mats = _load_all(args.files, args.order)
    if args.kind == "mub":
        names = [Path(p).stem for p in args.files]
        r = check_mub_set(list(zip(names, mats)))
        payload = {"kind": "mub", **report.mub_json(r)}
        lines = []
        for row in payload["pairwise"]:
            a, b = row["pair"]
            if row["error"]:
                lines.append(f"{a} {b}: error ({row['error']})")
            elif row["unbiased"]:
                lines.append(f"{a} {b}: unbiased")
            else:
                lines.append(f"{a} {b}: biased at {tuple(row['cell'])}, defect {row['defect']['numeric']}")
        for name, err in payload["member_errors"].items():
            lines.append(f"{name}: {err}")
        lines.append(f"mub: {str(r.verdict).lower()}")
        _emit(args, "\n".join(lines), payload)
        return _finish(args, r.verdict)

    results = []
    for path, m in zip(args.files, mats):
        entry = {"file": path}
        if args.kind == "hadamard":
            v = is_hadamard(m)
            entry.update(verdict=v.is_hadamard, failing_cell=_cell(v.failing_cell))
        elif args.kind == "unitary":
            entry.update(verdict=is_unitary(m))
        else:
            entry.update(verdict=is_inverse_orthogonal(m))
        results.append(entry)
    ok = all(e["verdict"] for e in results)
    lines = []
    for e in results:
        extra = ""
        if e.get("failing_cell"):
            extra = f" (first failing cell {tuple(e['failing_cell']['cell'])})"
        lines.append(f"{e['file']}: {args.kind} {str(e['verdict']).lower()}{extra}")
    _emit(args, "\n".join(lines), {"kind": args.kind, "verdict": ok, "results": results})
    return _finish(args, ok)


# -- canon / equiv -------------------------------------------------------------------


def cmd_canon(args) -> int:
    m = _load(args.file, args.order)
    sys.stdout.write(fileformat.dumps(dephase(m)))
    return EXIT_OK


def cmd_equiv(args) -> int:
    h1, h2 = _load_all([args.file1, args.file2], args.order)
    v = equiv(h1, h2, exhaustive=args.exhaustive)
    payload = report.equiv_json(v)
    payload["witness"] = report.witness_json(v.witness) if v.witness else None
    lines = [f"equivalent: {str(v.equivalent).lower()}", f"pairs examined: {v.pairs_examined}"]
    if v.matching_pairs is not None:
        lines.append(f"matching pairs: {v.matching_pairs}")
    if v.witness:
        w = payload["witness"]
        lines += [f"P1: {w['P1']}", f"P2: {w['P2']}",
                  "D1: " + " ".join(d["exact"] for d in w["D1"]),
                  "D2: " + " ".join(d["exact"] for d in w["D2"])]
    _emit(args, "\n".join(lines), payload)
    return _finish(args, v.equivalent)


# -- search / verify-paper -----------------------------------------------------------


def cmd_search(args) -> int:
    res = search(SearchTask(args.n, args.N, fix_first=not args.no_fix_first), prune=not args.no_prune)
    if args.json:
        _emit(args, "", {"n": args.n, "N": args.N, "fix_first": not args.no_fix_first,
                         "rows": [list(r) for r in res.rows], "solutions": len(res.rows),
                         "classes": res.class_count})
    elif args.format == "matrix":
        M = args.order or args.N
        if M % args.N:
            raise UsageError(f"--order {M} is not a multiple of N = {args.N}")
        for r in res.rows:
            sys.stdout.write(fileformat.dumps(row_matrix(r, args.N, M)))
        sys.stdout.write("\n".join(format_rows(res).splitlines()[len(res.rows):]) + "\n")
    else:
        sys.stdout.write(format_rows(res))
    return _finish(args, bool(res.rows))


def cmd_verify_paper(args) -> int:
    rep = report.build_report()
    text = report.dumps(rep)
    if args.output:
        Path(args.output).write_bytes(text.encode("utf-8"))
    if args.json or not args.output:
        sys.stdout.write(text)
    else:
        s = rep["summary"]
        sys.stdout.write(f"{s['claims']} claims: " + ", ".join(f"{k} {v}" for k, v in s["verdicts"].items()) + "\n")
    return _finish(args, not rep["summary"]["failed"])


# -- parser ----------------------------------------------------------------------------


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--json", action="store_true", help="machine-readable output", **kw)
    parser.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 1 when the verdict is false", **kw)
    parser.add_argument("--order", type=int, metavar="M", help="root order for entries", **kw)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hadamat", description="Exact complex Hadamard matrix toolkit.")
    _globals(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a named or generated matrix")
    g.add_argument("name", help="catalog name, F<n>, I or circulant")
    g.add_argument("--n", type=int)
    g.add_argument("--row", help="comma-separated first row in entry syntax")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="test matrix properties")
    c.add_argument("kind", choices=["hadamard", "unitary", "mub", "inverse-orthogonal"])
    c.add_argument("files", nargs="+")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("canon", help="dephased form")
    k.add_argument("file")
    k.set_defaults(func=cmd_canon)

    e = sub.add_parser("equiv", help="decide Hadamard equivalence (n <= 5)")
    e.add_argument("file1")
    e.add_argument("file2")
    e.add_argument("--exhaustive", action="store_true", help="scan all permutation pairs")
    e.set_defaults(func=cmd_equiv)

    s = sub.add_parser("search", help="circulant BH(n, N) search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--no-fix-first", action="store_true")
    s.add_argument("--no-prune", action="store_true")
    s.add_argument("--format", choices=["rows", "matrix"], default="rows")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-paper", help="full claim report as JSON")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify_paper)

    for sp in (g, c, k, e, s, v):
        _globals(sp, suppress=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, fileformat.MatrixFileError, CyclotomicError, MatrixError,
            MubError, SearchError, C.ConstructionError, OSError, ValueError) as exc:
        print(f"hadamat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
