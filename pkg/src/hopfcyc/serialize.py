"""JSON encoding with exact rationals as ``"p/q"`` strings."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import FDAlgebra, make_algebra
from .bialgebroid import HopfAlgebra
from .linalg import ONE, Matrix, fmt, parse


class SchemaError(ValueError):
    """Input does not parse or does not match the expected shape.  ``where`` is a
    ``(line, col)`` pair for JSON syntax errors, else a path into the document."""

    def __init__(self, msg: str, where=None):
        loc = f" at line {where[0]} column {where[1]}" if isinstance(where, tuple) else (
            f" at {where}" if where else "")
        super().__init__(msg + loc)
        self.where = where


def _need(doc: dict, key: str, path: str):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"missing key {key!r}", path or "$")
    return doc[key]


def _scalar(x, path: str):
    try:
        return parse(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad scalar {x!r} ({exc})", path) from None


def _vector(xs, n: int, path: str) -> dict:
    if not isinstance(xs, list) or len(xs) != n:
        raise SchemaError(f"expected a list of {n} scalars", path)
    out = {}
    for i, x in enumerate(xs):
        c = _scalar(x, f"{path}[{i}]")
        if c:
            out[i] = c
    return out


def vector_to_json(v, n: int) -> list:
    return [fmt(v.get(i, 0)) for i in range(n)]


def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [fmt(x) for x in m.entries]}


def matrix_from_json(doc, path: str = "$") -> Matrix:
    rows, cols = _need(doc, "rows", path), _need(doc, "cols", path)
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 0 or cols < 0:
        raise SchemaError("rows/cols must be non-negative integers", path)
    ent = _need(doc, "entries", path)
    if not isinstance(ent, list) or len(ent) != rows * cols:
        raise SchemaError(f"entries must have {rows * cols} items", f"{path}.entries")
    return Matrix.from_entries(rows, cols, [_scalar(x, f"{path}.entries[{i}]") for i, x in enumerate(ent)])


def algebra_to_json(A: FDAlgebra) -> dict:
    n = A.dim
    return {"dim": n,
            "mult": [[vector_to_json(A.table[i][j], n) for j in range(n)] for i in range(n)],
            "unit": vector_to_json(A.unit, n)}


def algebra_from_json(doc, path: str = "$", name: str = "") -> FDAlgebra:
    n = _need(doc, "dim", path)
    if not isinstance(n, int) or n < 1:
        raise SchemaError("dim must be a positive integer", f"{path}.dim")
    mult = _need(doc, "mult", path)
    if not isinstance(mult, list) or len(mult) != n or any(not isinstance(r, list) or len(r) != n for r in mult):
        raise SchemaError(f"mult must be {n} x {n} x {n}", f"{path}.mult")
    table = [[_vector(mult[i][j], n, f"{path}.mult[{i}][{j}]") for j in range(n)] for i in range(n)]
    unit = _vector(_need(doc, "unit", path), n, f"{path}.unit")
    return make_algebra(table, unit, name)


def hopf_to_json(H: HopfAlgebra) -> dict:
    n = H.dim
    return {"algebra": algebra_to_json(H.algebra),
            "comult": [[[a, b, fmt(x)] for (a, b), x in sorted(H.comult[i].items())] for i in range(n)],
            "counit": [fmt(c) for c in H.counit],
            "antipode": matrix_to_json(H.antipode)}


def hopf_from_json(doc, path: str = "$", name: str = "") -> HopfAlgebra:
    A = algebra_from_json(_need(doc, "algebra", path), f"{path}.algebra", name)
    n = A.dim
    raw = _need(doc, "comult", path)
    if not isinstance(raw, list) or len(raw) != n:
        raise SchemaError(f"comult must list {n} basis images", f"{path}.comult")
    comult = []
    for i, terms in enumerate(raw):
        d = {}
        for j, t in enumerate(terms if isinstance(terms, list) else [None]):
            p = f"{path}.comult[{i}][{j}]"
            if not (isinstance(t, list) and len(t) == 3 and all(isinstance(k, int) and 0 <= k < n for k in t[:2])):
                raise SchemaError("comult terms are [a, b, coefficient]", p)
            c = _scalar(t[2], p)
            d[(t[0], t[1])] = d.get((t[0], t[1]), 0) + c
        comult.append({k: v for k, v in d.items() if v})
    counit = tuple(_vector(_need(doc, "counit", path), n, f"{path}.counit").get(i, 0 * ONE) for i in range(n))
    S = matrix_from_json(_need(doc, "antipode", path), f"{path}.antipode")
    if S.shape != (n, n):
        raise SchemaError(f"antipode must be {n} x {n}", f"{path}.antipode")
    return HopfAlgebra(A, tuple(comult), counit, S, name)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc.msg}", (exc.lineno, exc.colno)) from None


def load(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
