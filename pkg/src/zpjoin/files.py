"""JSON complex files.

A complex file is a JSON object::

    {"boundaries": [...], "name": "V", "p": 3, "ranks": [1, 2, 1]}

``boundaries[n-1]`` is the degree-``n`` boundary as a ``ranks[n-1]`` by
``ranks[n]`` array of group-ring elements, each a list of ``p`` integer
coefficients of g^0, ..., g^(p-1).  Negative coefficients above ``-p`` are
accepted and reduced; the canonical form has sorted keys, no whitespace
and a trailing newline.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .complexes import EquivariantComplex, ValidationError, validate
from .gfp import DTYPE, PrimeField


class ComplexFileError(Exception):
    """Base class for complex-file problems."""


class ParseError(ComplexFileError):
    pass


class ShapeError(ComplexFileError):
    pass


class RangeError(ComplexFileError):
    pass


class ComplexValidationError(ComplexFileError):
    pass


def to_doc(c: EquivariantComplex) -> dict:
    return {
        "p": c.field.p,
        "name": c.name,
        "ranks": list(c.ranks),
        "boundaries": [b.tolist() for b in c.boundaries],
    }


def dumps(c: EquivariantComplex) -> str:
    return json.dumps(to_doc(c), sort_keys=True, separators=(",", ":")) + "\n"


def save_complex(c: EquivariantComplex, path) -> None:
    Path(path).write_text(dumps(c))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def from_doc(doc) -> EquivariantComplex:
    if not isinstance(doc, dict):
        raise ShapeError("top level must be a JSON object")
    missing = [k for k in ("p", "ranks", "boundaries") if k not in doc]
    if missing:
        raise ShapeError(f"missing keys: {', '.join(missing)}")
    p, ranks, bds = doc["p"], doc["ranks"], doc["boundaries"]
    if not _is_int(p):
        raise ShapeError("p must be an integer")
    try:
        field = PrimeField(p)
    except ValueError as exc:
        raise RangeError(str(exc)) from None
    if not isinstance(ranks, list) or not all(_is_int(r) for r in ranks):
        raise ShapeError("ranks must be a list of integers")
    if not ranks or ranks[0] < 1:
        raise ComplexValidationError("ranks[0] >= 1 required")
    if any(r < 1 for r in ranks):
        raise ShapeError("ranks must be positive")
    if not isinstance(bds, list) or len(bds) != len(ranks) - 1:
        raise ShapeError(f"expected {len(ranks) - 1} boundary matrices")
    arrays = []
    for n, b in enumerate(bds, start=1):
        rows, cols = ranks[n - 1], ranks[n]
        if not isinstance(b, list) or len(b) != rows or any(not isinstance(r, list) or len(r) != cols for r in b):
            raise ShapeError(f"boundary of degree {n} must be {rows} x {cols}")
        a = np.zeros((rows, cols, p), dtype=DTYPE)
        for i, row in enumerate(b):
            for j, elem in enumerate(row):
                where = f"boundaries[{n - 1}][{i}][{j}]"
                if not isinstance(elem, list) or len(elem) != p:
                    raise ShapeError(f"{where} must hold exactly {p} coefficients")
                for k, x in enumerate(elem):
                    if not _is_int(x):
                        raise ShapeError(f"{where}[{k}] is not an integer")
                    if not -p < x < p:
                        raise RangeError(f"{where}[{k}] = {x} out of range for p = {p}")
                a[i, j] = elem
        arrays.append(np.mod(a, p))
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ShapeError("name must be a string")
    c = EquivariantComplex(field, tuple(ranks), tuple(arrays), name)
    violations = validate(c)
    if violations:
        raise ComplexValidationError("; ".join(violations))
    return c


def loads(text: str) -> EquivariantComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return from_doc(doc)


def load_complex(path) -> EquivariantComplex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ComplexFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


__all__ = [
    "ComplexFileError", "ParseError", "ShapeError", "RangeError", "ComplexValidationError",
    "ValidationError", "dumps", "loads", "load_complex", "save_complex", "to_doc", "from_doc",
]
