"""JSON instance documents.

A document looks like::

    {
      "lattice_rank": 2,
      "vertices": [[1, 0], [0, 1], ...],
      "generators": [{"matrix": [[0, 1], [-1, 1]], "translation": [0, 0]}],
      "character_table": [["1", "1"], ["1", "-1"]],      (optional)
      "labels": ["triv", "sign"],                        (optional)
      "example": {"name": "hexagon", "params": {}}        (optional)
    }

Integers may be JSON numbers or decimal strings; strings are required beyond
``2**53``.  Table entries are strings such as ``"-1"``, ``"1/2"`` or
``"zeta6^2"`` (see :func:`parse_cyclotomic`), or numbers.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .equivariant import EquivariantInstance
from .exact_arith import CyclotomicValue
from .lattice_group import DEFAULT_GROUP_CAP, AffineLatticeAutomorphism, table_from_values

SAFE_INTEGER = 2 ** 53


class DocumentError(ValueError):
    """Malformed instance document; ``path`` names the offending field."""

    def __init__(self, path: str, message: str, line: int | None = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{path}{where}: {message}")
        self.path = path
        self.line = line


def _integer(value: Any, path: str) -> int:
    if isinstance(value, bool):
        raise DocumentError(path, "expected an integer, got a boolean")
    if isinstance(value, int):
        if abs(value) > SAFE_INTEGER:
            raise DocumentError(path, "integers beyond 2^53 must be written as strings")
        return value
    if isinstance(value, str) and re.fullmatch(r"\s*-?\d+\s*", value):
        return int(value)
    raise DocumentError(path, f"expected an integer, got {value!r}")


def _int_list(value: Any, path: str, length: int | None = None) -> list[int]:
    if not isinstance(value, list):
        raise DocumentError(path, "expected a list")
    if length is not None and len(value) != length:
        raise DocumentError(path, f"expected {length} entries, got {len(value)}")
    return [_integer(x, f"{path}[{i}]") for i, x in enumerate(value)]


_ZETA = re.compile(r"^\s*(?:(?P<coef>-?\d+(?:/\d+)?)\s*\*?\s*)?zeta(?P<n>\d+)(?:\^(?P<k>\d+))?\s*$")


def parse_cyclotomic(text: Any, path: str = "value") -> CyclotomicValue:
    """Parse ``"3"``, ``"-1/2"``, ``"zeta6"``, ``"2*zeta6^5"`` or sums of such terms."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        if isinstance(text, float) and not text.is_integer():
            raise DocumentError(path, "use exact strings for non-integers")
        return CyclotomicValue.rational(int(text))
    if not isinstance(text, str):
        raise DocumentError(path, f"cannot parse {text!r}")
    terms = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    total = CyclotomicValue.rational(0)
    for term in terms:
        m = _ZETA.match(term.lstrip("+"))
        if m:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if m.group("coef") is None and term.startswith("-"):
                coef = Fraction(-1)
            value = CyclotomicValue.zeta(int(m.group("n")), int(m.group("k") or 1))
            total = total + value * CyclotomicValue.rational(coef)
        else:
            try:
                total = total + CyclotomicValue.rational(Fraction(term))
            except (ValueError, ZeroDivisionError):
                raise DocumentError(path, f"cannot parse {text!r}") from None
    return total


def parse_document(doc: Any) -> dict:
    """Validate a decoded JSON document; returns normalised fields."""
    if not isinstance(doc, dict):
        raise DocumentError("$", "expected a JSON object")
    for key in ("lattice_rank", "vertices"):
        if key not in doc:
            raise DocumentError(f"$.{key}", "missing field")
    d = _integer(doc["lattice_rank"], "$.lattice_rank")
    if d < 0:
        raise DocumentError("$.lattice_rank", "must be nonnegative")
    if not isinstance(doc["vertices"], list) or not doc["vertices"]:
        raise DocumentError("$.vertices", "expected a nonempty list")
    vertices = [_int_list(v, f"$.vertices[{i}]", d) for i, v in enumerate(doc["vertices"])]
    gens = []
    raw_gens = doc.get("generators", [])
    if not isinstance(raw_gens, list):
        raise DocumentError("$.generators", "expected a list")
    for i, g in enumerate(raw_gens):
        path = f"$.generators[{i}]"
        if not isinstance(g, dict) or "matrix" not in g:
            raise DocumentError(path, "expected an object with a 'matrix' field")
        mat = g["matrix"]
        if not isinstance(mat, list) or len(mat) != d:
            raise DocumentError(f"{path}.matrix", f"expected {d} rows")
        rows = [_int_list(r, f"{path}.matrix[{j}]", d) for j, r in enumerate(mat)]
        trans = _int_list(g.get("translation", [0] * d), f"{path}.translation", d)
        gens.append(AffineLatticeAutomorphism(rows, trans))
    table = None
    if doc.get("character_table") is not None:
        raw = doc["character_table"]
        if not isinstance(raw, list):
            raise DocumentError("$.character_table", "expected a list of rows")
        table = [[parse_cyclotomic(x, f"$.character_table[{i}][{j}]") for j, x in enumerate(row)]
                 for i, row in enumerate(raw)]
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or
                               not all(isinstance(x, str) for x in labels)):
        raise DocumentError("$.labels", "expected a list of strings")
    example = doc.get("example")
    return {"rank": d, "vertices": vertices, "generators": gens, "table": table,
            "labels": labels, "example": example}


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", exc.msg, exc.lineno) from None
    return parse_document(doc)


def instance_from_document(fields: dict, cap: int = DEFAULT_GROUP_CAP) -> EquivariantInstance:
    if not fields["generators"]:
        identity = AffineLatticeAutomorphism.identity(fields["rank"])
        gens = [identity]
    else:
        gens = fields["generators"]
    example = fields.get("example") or {}
    inst = EquivariantInstance(fields["vertices"], gens, rank=fields["rank"], cap=cap,
                               table=fields["table"], labels=fields["labels"],
                               name=example.get("name"))
    if example.get("name") is not None:
        # reattach reference values and tables of named examples
        from .gallery import gallery_instance
        params = dict(example.get("params", {}))
        ref = gallery_instance(example["name"], params)
        if same_instance(ref, inst):
            inst.params = dict(ref.params)
            inst.expected = ref.expected
            if fields["table"] is None and ref._table_input is not None:
                tab = ref.table
                inst.use_table(table_from_values(inst.group, [list(ch.values) for ch in tab],
                                                 tab.labels))
    return inst


def _render_int(x) -> int | str:
    x = int(x)
    return x if abs(x) <= SAFE_INTEGER else str(x)


def instance_to_document(inst: EquivariantInstance) -> dict:
    """Document for the instance as given (before any change of lattice basis)."""
    P = inst.ambient
    if any(x.denominator != 1 for v in P.vertices for x in v):
        raise ValueError("only lattice polytopes can be exported")
    doc: dict = {
        "lattice_rank": P.ambient_dim,
        "vertices": [[_render_int(x) for x in v] for v in P.vertices],
        "generators": [{"matrix": [[_render_int(x) for x in row] for row in g.linear],
                        "translation": [_render_int(x) for x in g.translation]}
                       for g in inst.ambient_generators],
    }
    example = inst.params.get("example")
    if example:
        params = {k: v for k, v in inst.params.items() if k != "example"}
        doc["example"] = {"name": example, "params": params}
    return doc


def dump_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def same_instance(a: EquivariantInstance, b: EquivariantInstance) -> bool:
    """Identical vertex sets and generator lists in the original coordinates."""
    return (a.ambient.vertices == b.ambient.vertices and
            a.ambient.ambient_dim == b.ambient.ambient_dim and
            [(g.linear, g.translation) for g in a.ambient_generators] ==
            [(g.linear, g.translation) for g in b.ambient_generators])
