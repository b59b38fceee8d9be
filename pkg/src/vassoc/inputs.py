"""Reading and writing algebra description files.

A description is a JSON object::

    {
      "dimension": 2,
      "basis": ["e1", "e2"],
      "params": {"alpha": "0", "beta": "1"},
      "products": [
        {"left": "e1", "right": "e1", "value": {"e1": "2*beta"}},
        {"left": "e1", "right": "e2", "value": {"e1": "alpha", "e2": "beta + 1"}}
      ],
      "jet": [[...products of phi_1...], [...products of phi_2...]],
      "vectors": {"v": "id - t12 + c"}
    }

Only ``dimension`` and ``products`` are required.  ``basis`` defaults to
``e1 .. en``; unlisted products are zero.  Coefficients are strings (or
integers) so that no float ever enters: ``"3"``, ``"-2/5"``, a parameter
name, or a sum of terms ``k*name`` / ``k`` such as ``"2*beta - 1/2"``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import MultTable
from .deformation import Jet
from .sigma3 import VectorSyntaxError, parse_vector


class ParseError(ValueError):
    """Malformed input; ``location`` is a line number or a field path."""

    def __init__(self, source: str, location: str, message: str):
        super().__init__(f"{source}: {location}: {message}")
        self.source = source
        self.location = location
        self.message = message


@dataclass
class WorkbenchInput:
    dimension: int
    basis: tuple
    table: MultTable
    jet: Optional[Jet] = None
    vectors: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_COEF_TERM = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*([A-Za-z_][A-Za-z0-9_]*)?\s*")


def parse_coefficient(text, params: dict) -> Fraction:
    """Evaluate a coefficient such as ``"-3/4"``, ``"beta"`` or ``"2*beta - 1"``."""
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValueError(f"coefficient must be a string or an integer, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    s = text.strip()
    if not s:
        raise ValueError("empty coefficient")
    total = Fraction(0)
    pos = 0
    first = True
    while pos < len(s):
        m = _COEF_TERM.match(s, pos)
        sgn, num, star, name = m.groups()
        if m.end() == pos or (num is None and name is None):
            raise ValueError(f"malformed rational {text!r}")
        if sgn is None and not first:
            raise ValueError(f"malformed rational {text!r}: missing operator")
        if star and (num is None or name is None):
            raise ValueError(f"malformed rational {text!r}")
        try:
            k = Fraction(num) if num else Fraction(1)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None
        if name is not None:
            if name not in params:
                raise ValueError(f"unknown parameter {name!r} in {text!r}")
            k *= params[name]
        total += -k if sgn == "-" else k
        pos = m.end()
        first = False
    return total


def _table(entries, basis: tuple, params: dict, source: str, where: str) -> MultTable:
    if not isinstance(entries, list):
        raise ParseError(source, where, "expected a list of products")
    index = {name: i for i, name in enumerate(basis)}
    n = len(basis)
    cells = {}
    for pos, entry in enumerate(entries):
        at = f"{where}[{pos}]"
        if not isinstance(entry, dict):
            raise ParseError(source, at, "expected an object with left, right, value")
        unknown = set(entry) - {"left", "right", "value"}
        if unknown:
            raise ParseError(source, at, f"unexpected field(s) {sorted(unknown)}")
        key = []
        for side in ("left", "right"):
            name = entry.get(side)
            if name not in index:
                raise ParseError(source, f"{at}.{side}", f"unknown basis name {name!r}")
            key.append(index[name])
        key = tuple(key)
        if key in cells:
            raise ParseError(source, at, f"product ({entry['left']}, {entry['right']}) given twice")
        value = entry.get("value", {})
        if not isinstance(value, dict):
            raise ParseError(source, f"{at}.value", "expected a map basis name -> rational")
        out = {}
        for name, coef in value.items():
            if name not in index:
                raise ParseError(source, f"{at}.value.{name}", f"unknown basis name {name!r}")
            try:
                out[index[name]] = parse_coefficient(coef, params)
            except ValueError as exc:
                raise ParseError(source, f"{at}.value.{name}", str(exc)) from None
        cells[key] = out
    return MultTable.from_dict(n, cells)


def load_document(doc, source: str = "<input>", overrides: Optional[dict] = None) -> WorkbenchInput:
    """Validate an already decoded JSON document."""
    if not isinstance(doc, dict):
        raise ParseError(source, "top level", "expected a JSON object")
    unknown = set(doc) - {"dimension", "basis", "params", "products", "jet", "vectors", "comment"}
    if unknown:
        raise ParseError(source, "top level", f"unexpected field(s) {sorted(unknown)}")
    dim = doc.get("dimension")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(source, "dimension", f"expected a positive integer, got {dim!r}")
    basis = doc.get("basis", [f"e{i + 1}" for i in range(dim)])
    if not isinstance(basis, list) or not all(isinstance(b, str) and _NAME.fullmatch(b) for b in basis):
        raise ParseError(source, "basis", "expected a list of identifiers")
    if len(basis) != dim:
        raise ParseError(source, "basis", f"dimension mismatch: {len(basis)} names for dimension {dim}")
    if len(set(basis)) != dim:
        raise ParseError(source, "basis", "basis names must be distinct")

    params = {}
    raw_params = doc.get("params", {})
    if not isinstance(raw_params, dict):
        raise ParseError(source, "params", "expected a map name -> rational")
    for name, value in raw_params.items():
        try:
            params[name] = parse_coefficient(value, {})
        except ValueError as exc:
            raise ParseError(source, f"params.{name}", str(exc)) from None
    params.update(overrides or {})

    if "products" not in doc:
        raise ParseError(source, "products", "missing required field")
    basis = tuple(basis)
    table = _table(doc["products"], basis, params, source, "products")

    jet = None
    if "jet" in doc:
        higher = doc["jet"]
        if not isinstance(higher, list):
            raise ParseError(source, "jet", "expected a list of product lists")
        terms = [table] + [_table(t, basis, params, source, f"jet[{i}]") for i, t in enumerate(higher)]
        jet = Jet(tuple(terms))

    vectors = {}
    raw_vectors = doc.get("vectors", {})
    if not isinstance(raw_vectors, dict):
        raise ParseError(source, "vectors", "expected a map name -> vector expression")
    for name, expr in raw_vectors.items():
        if not isinstance(expr, str):
            raise ParseError(source, f"vectors.{name}", "expected a string")
        try:
            vectors[name] = parse_vector(expr, params)
        except VectorSyntaxError as exc:
            raise ParseError(source, f"vectors.{name}", str(exc)) from None
    return WorkbenchInput(dim, basis, table, jet, vectors, params)


def parse_input(path, overrides: Optional[dict] = None) -> WorkbenchInput:
    """Read and validate a description file; ``overrides`` replace file parameters."""
    path = Path(path)
    source = str(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(source, "file", exc.strerror or str(exc)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(source, f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return load_document(doc, source, overrides)


def table_document(table: MultTable, basis: Optional[tuple] = None) -> dict:
    """The inverse of parsing: a description whose products reproduce ``table``."""
    n = table.dim
    basis = tuple(basis) if basis else tuple(f"e{i + 1}" for i in range(n))
    products = []
    for i in range(n):
        for j in range(n):
            value = {basis[k]: str(a) for k, a in enumerate(table.c[i][j]) if a}
            if value:
                products.append({"left": basis[i], "right": basis[j], "value": value})
    return {"dimension": n, "basis": list(basis), "products": products}


def dump_table(table: MultTable, basis: Optional[tuple] = None) -> str:
    return json.dumps(table_document(table, basis), indent=2) + "\n"


def parse_binding(text: str) -> tuple:
    """``"alpha=1/2"`` -> ``("alpha", Fraction(1, 2))``."""
    name, sep, value = text.partition("=")
    name = name.strip()
    if not sep or not _NAME.fullmatch(name):
        raise ValueError(f"expected name=rational, got {text!r}")
    return name, parse_coefficient(value, {})


__all__ = ["ParseError", "WorkbenchInput", "dump_table", "load_document", "parse_coefficient",
           "parse_binding", "parse_input", "table_document"]
