"""JSON model files.

Scalars are written as canonical rational strings ("p" or "p/q"), so the
exact backend is reachable from files; decimal strings are also accepted on
input.  Serialization is canonical (fixed key order, brackets sorted, two
space indent), which makes dump(parse(dump(x))) byte-identical.
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import scalars
from .liegroup import LieAlgebra, StructureError
from .scalars import RATIONAL
from .structure import ACBStructure
from .tensor import DegenerateMetricError, Metric, Tensor

FORMAT = "bcontact-model/1"


class ModelFileError(ValueError):
    """Unparseable or structurally invalid model file."""


def _canonical_scalar(tok) -> str:
    try:
        return str(Fraction(tok) if not isinstance(tok, float) else Fraction(tok).limit_denominator(10**12))
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ModelFileError(f"bad scalar {tok!r}: {exc}") from exc


def canonicalize(doc: dict) -> dict:
    """Normalized document: fixed key order, canonical scalar strings,
    brackets sorted by index pair."""
    try:
        dim = int(doc["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFileError("missing or bad 'dim'") from exc

    def vec(v, what):
        if len(v) != dim:
            raise ModelFileError(f"{what} must have {dim} entries")
        return [_canonical_scalar(t) for t in v]

    def mat(m, what):
        if len(m) != dim:
            raise ModelFileError(f"{what} must be {dim}x{dim}")
        return [vec(r, what) for r in m]

    brackets = []
    for item in doc.get("brackets", []):
        try:
            i, j, coeffs = int(item[0]), int(item[1]), item[2]
        except (TypeError, ValueError, IndexError) as exc:
            raise ModelFileError(f"bad bracket entry {item!r}") from exc
        if not (0 <= i < dim and 0 <= j < dim) or i == j:
            raise ModelFileError(f"bracket indices ({i},{j}) out of range")
        if i > j:
            i, j = j, i
            coeffs = [_negate(t) for t in coeffs]
        brackets.append([i, j, vec(coeffs, f"bracket ({i},{j})")])
    brackets.sort(key=lambda b: (b[0], b[1]))

    for key in ("phi", "xi", "eta", "g"):
        if key not in doc:
            raise ModelFileError(f"missing '{key}'")

    out: dict = {"format": FORMAT}
    if doc.get("name"):
        out["name"] = str(doc["name"])
    out.update(
        dim=dim,
        brackets=brackets,
        phi=mat(doc["phi"], "phi"),
        xi=vec(doc["xi"], "xi"),
        eta=vec(doc["eta"], "eta"),
        g=mat(doc["g"], "g"),
    )
    if doc.get("metadata"):
        out["metadata"] = doc["metadata"]
    return out


def _negate(tok) -> str:
    return str(-Fraction(str(tok)))


def dumps(doc: dict) -> str:
    return json.dumps(canonicalize(doc), indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ModelFileError("model file must contain a JSON object")
    return canonicalize(doc)


def load_path(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise ModelFileError(f"cannot read {path}: {exc}") from exc


def save_path(path: str, doc: dict):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def to_structure(doc: dict, mode: str = RATIONAL) -> ACBStructure:
    """Build the structure a document describes, or raise ModelFileError."""
    doc = canonicalize(doc)
    dim = doc["dim"]
    c = scalars.zeros((dim, dim, dim), mode)
    for i, j, coeffs in doc["brackets"]:
        for k, tok in enumerate(coeffs):
            v = scalars.parse_scalar(tok, mode)
            c[k, i, j] = v
            c[k, j, i] = -v
    try:
        algebra = LieAlgebra(Tensor(1, 2, c))
        return ACBStructure(
            algebra,
            Tensor(1, 1, scalars.array(doc["phi"], mode)),
            Tensor(1, 0, scalars.array(doc["xi"], mode)),
            Tensor(0, 1, scalars.array(doc["eta"], mode)),
            Metric.from_matrix(scalars.array(doc["g"], mode)),
        )
    except (StructureError, DegenerateMetricError, ValueError) as exc:
        raise ModelFileError(str(exc)) from exc
