"""JSON document schemas shared by the CLI.

All scalars cross the JSON boundary as strings in the exact grammar of
:mod:`latlab.scalars`; floats only ever appear under keys suffixed
``_approx``.  Documents:

  lattice   {"dim": n, "field": {"m": int} | null, "basis": [[s, ...], ...]}
            basis entries are the column vectors of the lattice
  matrix    {"field": {"quad": m} | null, "matrix": [[s, ...], ...]}   (rows)
  field     {"quad": m}  or  {"minpoly": [c0, ..., 1]}
  group     {"kind": "SL", "n": n, "field": {"quad": m | null}}
            {"kind": "SO", "coeffs": [s, ...], "field": {"quad": m | null}}
  scalar    {"field": {"quad": m} | null, "scalar": s}
"""

from __future__ import annotations

import json

from .errors import DocumentError
from .euclid import EuclideanLattice
from .groups import DiagForm, GroupSpec
from .matrices import ExactMatrix
from .numfield import NumberFieldDesc
from .scalars import parse_scalar, print_scalar


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise DocumentError("no such input document: %s" % path)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "malformed JSON in %s at line %d column %d: %s"
            % (path, exc.lineno, exc.colno, exc.msg)
        )


def _field_m(doc, key_variants=("m", "quad")):
    """Extract the quadratic parameter from a field sub-document."""
    if doc is None:
        return None
    if not isinstance(doc, dict):
        raise DocumentError("field must be an object or null")
    for key in key_variants:
        if key in doc:
            value = doc[key]
            if value is None:
                return None
            if not isinstance(value, int):
                raise DocumentError("field parameter must be an integer")
            return value
    raise DocumentError("field object needs one of the keys %r" % (key_variants,))


def lattice_from_doc(doc) -> EuclideanLattice:
    if not isinstance(doc, dict) or "basis" not in doc:
        raise DocumentError('lattice document needs a "basis" key')
    m = _field_m(doc.get("field"))
    basis = doc["basis"]
    if not isinstance(basis, list) or not basis:
        raise DocumentError("basis must be a nonempty list of vectors")
    vectors = []
    for vec in basis:
        if not isinstance(vec, list):
            raise DocumentError("each basis vector must be a list of scalar strings")
        try:
            vectors.append([parse_scalar(s, m) for s in vec])
        except ValueError as exc:
            raise DocumentError(str(exc))
    if "dim" in doc and doc["dim"] != len(vectors):
        raise DocumentError(
            'declared "dim" %r does not match the %d basis vectors'
            % (doc["dim"], len(vectors))
        )
    try:
        return EuclideanLattice(vectors)
    except (ValueError, TypeError) as exc:
        raise DocumentError(str(exc))


def lattice_to_doc(lattice: EuclideanLattice, m: int | None = None) -> dict:
    return {
        "dim": lattice.rank,
        "field": None if m is None else {"m": m},
        "basis": [[print_scalar(e) for e in vec] for vec in lattice.basis],
    }


def matrix_from_doc(doc):
    """Returns (ExactMatrix, m or None)."""
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise DocumentError('matrix document needs a "matrix" key')
    m = _field_m(doc.get("field"))
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows:
        raise DocumentError("matrix must be a nonempty list of rows")
    parsed = []
    for row in rows:
        if not isinstance(row, list):
            raise DocumentError("each matrix row must be a list of scalar strings")
        try:
            parsed.append([parse_scalar(s, m) for s in row])
        except ValueError as exc:
            raise DocumentError(str(exc))
    try:
        return ExactMatrix.from_rows(parsed), m
    except (ValueError, TypeError) as exc:
        raise DocumentError(str(exc))


def matrix_to_doc(matrix: ExactMatrix, m: int | None = None) -> dict:
    return {
        "field": None if m is None else {"quad": m},
        "matrix": [[print_scalar(e) for e in matrix.row(i)]
                   for i in range(matrix.rows)],
    }


def numberfield_from_doc(doc) -> NumberFieldDesc:
    if not isinstance(doc, dict):
        raise DocumentError("field document must be an object")
    if "quad" in doc:
        if not isinstance(doc["quad"], int):
            raise DocumentError('"quad" must be an integer')
        try:
            return NumberFieldDesc(m=doc["quad"])
        except ValueError as exc:
            raise DocumentError(str(exc))
    if "minpoly" in doc:
        coeffs = doc["minpoly"]
        if not isinstance(coeffs, list) or not all(isinstance(c, int) for c in coeffs):
            raise DocumentError('"minpoly" must be a list of integers')
        try:
            return NumberFieldDesc(minpoly=coeffs)
        except ValueError as exc:
            raise DocumentError(str(exc))
    raise DocumentError('field document needs "quad" or "minpoly"')


def group_from_doc(doc) -> GroupSpec:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DocumentError('group document needs a "kind" key')
    kind = doc["kind"]
    m = _field_m(doc.get("field"), ("quad", "m"))
    field = NumberFieldDesc(m=m) if m is not None else None
    if kind == "SL":
        if "n" not in doc or not isinstance(doc["n"], int):
            raise DocumentError('SL group document needs an integer "n"')
        try:
            return GroupSpec("SL", n=doc["n"], field=field)
        except ValueError as exc:
            raise DocumentError(str(exc))
    if kind == "SO":
        coeffs = doc.get("coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise DocumentError('SO group document needs a "coeffs" list')
        try:
            parsed = [parse_scalar(s, m) for s in coeffs]
            return GroupSpec("SO", form=DiagForm(parsed, field))
        except ValueError as exc:
            raise DocumentError(str(exc))
    raise DocumentError("unknown group kind %r" % (kind,))


def scalar_from_doc(doc):
    """Returns (scalar, m or None)."""
    if not isinstance(doc, dict) or "scalar" not in doc:
        raise DocumentError('scalar document needs a "scalar" key')
    m = _field_m(doc.get("field"), ("quad", "m"))
    try:
        return parse_scalar(doc["scalar"], m), m
    except ValueError as exc:
        raise DocumentError(str(exc))
