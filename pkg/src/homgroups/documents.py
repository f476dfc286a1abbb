"""JSON documents for Hom-groups, modules, algebras, windows and certificates."""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import HomAlgebra
from .complexes import ComplexWindow
from .homgroup import HomGroup
from .linalg import Field, Matrix, parse_field
from .modules import ActionModule


class DocumentError(ValueError):
    """Malformed or unreadable document."""


def load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise DocumentError(f"{path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _need(doc, key, kind=None):
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if key not in doc:
        raise DocumentError(f"missing key {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise DocumentError(f"key {key!r} has the wrong type")
    return v


def _int(x, what):
    if not isinstance(x, int) or isinstance(x, bool):
        raise DocumentError(f"{what} must be an integer, got {x!r}")
    return x


def _int_list(xs, what):
    if not isinstance(xs, list):
        raise DocumentError(f"{what} must be a list")
    return [_int(x, what) for x in xs]


def doc_kind(doc) -> str:
    """Guess the document type from its keys."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if "constants" in doc:
        return "algebra"
    if "flavor" in doc:
        return "module"
    if "direction" in doc and "differentials" in doc:
        return "window"
    if "endo" in doc:
        return "group_endo"
    if "mul" in doc:
        return "homgroup"
    raise DocumentError("unrecognised document")


# ---------------------------------------------------------------------------
# Hom-groups


def _group_tables(doc):
    order = _int(_need(doc, "order"), "order")
    mul = _need(doc, "mul", list)
    mul = [_int_list(r, "mul row") for r in mul]
    inv = _int_list(_need(doc, "inv"), "inv")
    unit = _int(_need(doc, "unit"), "unit")
    return order, mul, inv, unit


def parse_homgroup(doc, twist_optional=False) -> HomGroup:
    """``{"order", "mul", "alpha", "inv", "unit"}``; alpha may be omitted for plain groups."""
    order, mul, inv, unit = _group_tables(doc)
    if "alpha" in doc or not twist_optional:
        alpha = _int_list(_need(doc, "alpha"), "alpha")
    else:
        alpha = list(range(order))
    try:
        return HomGroup(order, mul, alpha, inv, unit)
    except ValueError as e:
        raise DocumentError(str(e)) from None


def parse_group_endo(doc):
    """Group plus endomorphism table: returns ``(group, endo)``."""
    order, mul, inv, unit = _group_tables(doc)
    endo = _int_list(_need(doc, "endo"), "endo")
    try:
        return HomGroup.from_group(order, mul, inv, unit), endo
    except ValueError as e:
        raise DocumentError(str(e)) from None


def homgroup_to_doc(G: HomGroup) -> dict:
    return {"order": G.order, "mul": [list(r) for r in G.mul], "alpha": list(G.alpha),
            "inv": list(G.inv), "unit": G.unit}


# ---------------------------------------------------------------------------
# scalars and matrices


def _scalar(field: Field, x):
    try:
        return field.parse(x)
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentError(f"bad scalar {x!r}: {e}") from None


def parse_matrix(field: Field, rows, d=None) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise DocumentError("matrix must be a list of rows")
    ncols = len(rows[0]) if rows else (d or 0)
    if any(len(r) != ncols for r in rows) or (d is not None and (len(rows), ncols) != (d, d)):
        raise DocumentError(f"matrix must be {d}x{d}" if d is not None else "ragged matrix")
    return Matrix.from_dense(field, [[_scalar(field, x) for x in r] for r in rows], ncols)


def matrix_to_doc(M: Matrix):
    f = M.field
    return [[f.format(x) for x in r] for r in M.to_dense()]


def _field_of(doc):
    try:
        return parse_field(_need(doc, "field"))
    except (ValueError, TypeError) as e:
        raise DocumentError(str(e)) from None


# ---------------------------------------------------------------------------
# modules and algebras


def parse_module(doc) -> ActionModule:
    d = _int(_need(doc, "dim"), "dim")
    field = _field_of(doc)
    flavor = _need(doc, "flavor", str)
    beta = parse_matrix(field, _need(doc, "beta"), d)
    fams = {}
    for key in ("left_action", "right_action"):
        v = doc.get(key)
        fams[key] = None if v is None else tuple(parse_matrix(field, m, d) for m in v)
    try:
        return ActionModule(d, field, beta, flavor, fams["left_action"], fams["right_action"])
    except ValueError as e:
        raise DocumentError(str(e)) from None


def module_to_doc(M: ActionModule) -> dict:
    doc = {"dim": M.dim, "field": M.field.to_doc(), "flavor": M.flavor,
           "beta": matrix_to_doc(M.beta)}
    if M.left_action is not None:
        doc["left_action"] = [matrix_to_doc(X) for X in M.left_action]
    if M.right_action is not None:
        doc["right_action"] = [matrix_to_doc(X) for X in M.right_action]
    return doc


def parse_algebra(doc) -> HomAlgebra:
    d = _int(_need(doc, "dim"), "dim")
    field = _field_of(doc)
    consts = _need(doc, "constants", list)
    try:
        constants = [[[_scalar(field, x) for x in col] for col in row] for row in consts]
        unit = [_scalar(field, x) for x in _need(doc, "unit", list)]
        return HomAlgebra(d, field, constants, parse_matrix(field, _need(doc, "alpha"), d), unit)
    except TypeError:
        raise DocumentError("structure constants must be nested lists") from None
    except ValueError as e:
        raise DocumentError(str(e)) from None


def algebra_to_doc(A: HomAlgebra) -> dict:
    f = A.field
    return {"dim": A.dim, "field": f.to_doc(),
            "constants": [[[f.format(x) for x in col] for col in row] for row in A.constants],
            "alpha": matrix_to_doc(A.alpha), "unit": [f.format(x) for x in A.unit]}


# ---------------------------------------------------------------------------
# windows


def window_to_doc(W: ComplexWindow) -> dict:
    f = W.field
    return {"direction": W.direction, "field": f.to_doc(), "dims": list(W.dims),
            "differentials": [[[r, c, f.format(x)] for r, c, x in M.triplets()]
                              for M in W.maps]}


def parse_window(doc) -> ComplexWindow:
    direction = _need(doc, "direction", str)
    dims = _int_list(_need(doc, "dims"), "dims")
    field = _field_of(doc) if "field" in doc else parse_field("rational")
    diffs = _need(doc, "differentials", list)
    if len(diffs) != len(dims) - 1:
        raise DocumentError("a window with N+1 dimensions needs N differentials")
    maps = []
    for n, trip in enumerate(diffs):
        shape = (dims[n + 1], dims[n]) if direction == "cochain" else (dims[n], dims[n + 1])
        try:
            entries = [(_int(r, "row"), _int(c, "col"), _scalar(field, x)) for r, c, x in trip]
        except (TypeError, ValueError):
            raise DocumentError(f"differential {n}: triplets must be [row, col, scalar]") from None
        if any(not (0 <= r < shape[0] and 0 <= c < shape[1]) for r, c, _ in entries):
            raise DocumentError(f"differential {n}: index out of range")
        maps.append(Matrix.from_triplets(shape[0], shape[1], field, entries))
    try:
        return ComplexWindow(direction, field, tuple(dims), tuple(maps))
    except ValueError as e:
        raise DocumentError(str(e)) from None
