"""Reading and writing algebra definition files.

Format (JSON)::

    {
      "name": "M2 elementary (0,1)",          # optional
      "field": "Q(z12)",
      "group": "Z/2",
      "basis": [{"label": "E11", "degree": [0]}, ...],
      "structure": [{"i": 0, "j": 0, "k": 0, "coeff": "1"}, ...]
    }

Degrees may be lists of ints, a single int for rank-one groups, or strings
accepted by :meth:`GradeGroup.parse_degree`.  Coefficients are strings in
the scalar syntax (``1/2 + 3 z^2``) or plain integers.  Rendering is
canonical: sorted keys, structure triples sorted by (i, j, k).
"""

from __future__ import annotations

import json
import os

from .algebra import GradedAlgebra, check_grading
from .errors import ParseError
from .groups import GradeGroup
from .scalars import FieldSpec


def to_dict(A):
    structure = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in sorted(A.table[i][j].items()):
                structure.append({"i": i, "j": j, "k": k, "coeff": A.field.format(c)})
    out = {
        "field": str(A.field),
        "group": str(A.group),
        "basis": [{"label": lab, "degree": list(g)} for lab, g in zip(A.labels, A.degrees)],
        "structure": structure,
    }
    if A.name:
        out["name"] = A.name
    return out


def render(A):
    """Canonical JSON text of A (ends with a newline)."""
    return _dump(to_dict(A))


def _dump(obj):
    return json.dumps(obj, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def _degree(group, d):
    if isinstance(d, str):
        return group.parse_degree(d)
    if isinstance(d, int):
        d = [d]
    if not isinstance(d, list) or not all(isinstance(c, int) for c in d):
        raise ParseError(f"bad degree {d!r}")
    try:
        return group.element(d)
    except Exception as exc:
        raise ParseError(str(exc)) from None


def from_dict(data, validate=True):
    try:
        field = FieldSpec.parse(str(data["field"]))
        group = GradeGroup.parse(str(data["group"]))
        basis = data["basis"]
        structure = data.get("structure", [])
    except KeyError as exc:
        raise ParseError(f"missing key {exc.args[0]!r}") from None
    if not isinstance(basis, list) or not basis:
        raise ParseError("basis must be a nonempty list")
    labels, degrees = [], []
    for pos, b in enumerate(basis):
        if not isinstance(b, dict) or "label" not in b or "degree" not in b:
            raise ParseError(f"basis entry {pos} needs 'label' and 'degree'")
        labels.append(str(b["label"]))
        degrees.append(_degree(group, b["degree"]))
    n = len(labels)
    products = []
    for pos, t in enumerate(structure):
        try:
            i, j, k = int(t["i"]), int(t["j"]), int(t["k"])
            coeff = t.get("coeff", 1)
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"structure entry {pos} needs integer i, j, k") from None
        if not all(0 <= x < n for x in (i, j, k)):
            raise ParseError(f"structure entry {pos} has an index out of range")
        if isinstance(coeff, int) and not isinstance(coeff, bool):
            coeff = str(coeff)
        if not isinstance(coeff, str):
            raise ParseError(f"structure entry {pos}: coefficient must be a string or integer")
        products.append((i, j, k, field.parse_element(coeff)))
    try:
        A = GradedAlgebra.from_products(field, group, labels, degrees, products,
                                        name=data.get("name"))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if validate:
        check_grading(A)
    return A


def loads(text, validate=True):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("algebra file must hold a JSON object")
    return from_dict(data, validate)


def load(path, validate=True):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        A = loads(text, validate)
    except ParseError as exc:
        exc.path = path
        raise
    if A.name is None:
        A.name = os.path.splitext(os.path.basename(path))[0]
    return A


def save(A, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(A))


def load_dir(path):
    """All ``*.json`` algebra files in a directory, sorted by file name."""
    files = sorted(f for f in os.listdir(path) if f.endswith(".json"))
    return [load(os.path.join(path, f)) for f in files], [os.path.splitext(f)[0] for f in files]
