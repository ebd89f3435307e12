"""JSON file formats for lattices, tables and coefficient maps, and report rendering.

Lattice:  {"kind": "chain", "size": m}
          {"kind": "table", "elements": [...], "meet": [[...]], "join": [[...]]}
Table:    {"lattice": <path or inline lattice>, "arity": n, "values": [...]}
Coefmap:  {"lattice": <path or inline lattice>, "arity": n, "values": [v_0, ..., v_{2^n - 1}]}

Element references are names for table lattices and indices for chains.  A
lattice path is resolved relative to the file that mentions it.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import FormatError, LatPolyError
from .lattice import CHAIN, Lattice, make_chain, make_table_lattice
from .poly import CoefMap
from .table import FunctionTable


def _read_json(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise FormatError("path", f"no such file: {path}") from None
    except json.JSONDecodeError as e:
        raise FormatError("json", f"{path}: {e}") from None


def _need(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise FormatError(where, "expected a JSON object")
    if key not in obj:
        raise FormatError(f"{where}.{key}" if where else key, "missing field")
    return obj[key]


def lattice_from_obj(obj: Any, where: str = "lattice") -> Lattice:
    kind = _need(obj, "kind", where)
    if kind == "chain":
        size = _need(obj, "size", where)
        if not isinstance(size, int) or isinstance(size, bool):
            raise FormatError(f"{where}.size", "must be an integer")
        return make_chain(size)
    if kind == "table":
        names = _need(obj, "elements", where)
        if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
            raise FormatError(f"{where}.elements", "must be a list of names")
        tables = []
        for key in ("meet", "join"):
            rows = _need(obj, key, where)
            try:
                tables.append([[_ref(names, v) for v in row] for row in rows])
            except (TypeError, ValueError) as e:
                raise FormatError(f"{where}.{key}", str(e)) from None
        return make_table_lattice(names, *tables)
    raise FormatError(f"{where}.kind", f"expected 'chain' or 'table', got {kind!r}")


def _ref(names, v):
    if isinstance(v, str):
        return names.index(v)
    return int(v)


def load_lattice(path) -> Lattice:
    return lattice_from_obj(_read_json(Path(path)))


def _resolve_lattice(obj: dict, base: Path) -> Lattice:
    lat = _need(obj, "lattice", "")
    if isinstance(lat, str):
        return load_lattice(base / lat)
    return lattice_from_obj(lat)


def _values(L: Lattice, obj: dict, expected: int) -> tuple[int, ...]:
    vals = _need(obj, "values", "")
    if not isinstance(vals, list):
        raise FormatError("values", "must be a list")
    if len(vals) != expected:
        raise FormatError("values", f"expected {expected} entries, got {len(vals)}")
    out = []
    for i, v in enumerate(vals):
        try:
            out.append(L.element(v))
        except ValueError as e:
            raise FormatError(f"values[{i}]", str(e)) from None
    return tuple(out)


def _arity(obj: dict) -> int:
    n = _need(obj, "arity", "")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("arity", "must be a positive integer")
    return n


def load_table(path) -> FunctionTable:
    path = Path(path)
    obj = _read_json(path)
    L = _resolve_lattice(obj, path.parent)
    n = _arity(obj)
    return FunctionTable(L, n, _values(L, obj, L.size**n))


def load_coefmap(path) -> CoefMap:
    path = Path(path)
    obj = _read_json(path)
    L = _resolve_lattice(obj, path.parent)
    n = _arity(obj)
    return CoefMap(L, n, _values(L, obj, 1 << n))


def parse_tuple(L: Lattice, text: str, n: int) -> tuple[int, ...]:
    """Parse "(x1,...,xn)" (parentheses optional) into element indices."""
    parts = [p for p in text.strip().strip("()").split(",") if p.strip()]
    if len(parts) != n:
        raise FormatError("at", f"expected {n} coordinates, got {len(parts)}")
    try:
        return tuple(L.element(p) for p in parts)
    except ValueError as e:
        raise FormatError("at", str(e)) from None


# -- rendering -----------------------------------------------------------------


def element_out(L: Lattice, a: int):
    return a if L.kind == CHAIN else L.name(a)


def tuple_out(L: Lattice, x) -> list:
    return [element_out(L, a) for a in x]


def lattice_obj(L: Lattice) -> dict:
    if L.kind == CHAIN:
        return {"kind": "chain", "size": L.size}
    return {
        "kind": "table",
        "elements": list(L.names),
        "meet": [[L.name(v) for v in row] for row in L.meet_table],
        "join": [[L.name(v) for v in row] for row in L.join_table],
    }


def table_obj(f: FunctionTable) -> dict:
    return {"lattice": lattice_obj(f.lattice), "arity": f.arity, "values": tuple_out(f.lattice, f.values)}


def coefmap_obj(c: CoefMap) -> list:
    return tuple_out(c.lattice, c.values)


def witness_out(L: Lattice, witness: dict | None):
    """Render element-valued witness fields with lattice names; leave coordinates as given."""
    if witness is None:
        return None
    out = {}
    for k, v in witness.items():
        if k == "k" or isinstance(v, (str, bool)):
            out[k] = v
        elif isinstance(v, int):
            out[k] = element_out(L, v)
        elif isinstance(v, (tuple, list, frozenset, set)):
            items = sorted(v) if isinstance(v, (set, frozenset)) else v
            out[k] = [element_out(L, a) if isinstance(a, int) else a for a in items]
        else:
            out[k] = v
    return out


def report_out(L: Lattice, rep) -> dict:
    return {
        "property": rep.property,
        "holds": rep.holds,
        "domain": rep.checked_domain,
        "witness": witness_out(L, rep.witness),
    }


def dumps(obj) -> str:
    """Stable, human-readable JSON: insertion-ordered keys, two-space indent."""
    return json.dumps(obj, indent=2, ensure_ascii=False)


def error_obj(err: Exception) -> dict:
    out = {"error": type(err).__name__, "message": str(err)}
    if isinstance(err, LatPolyError):
        for attr in ("field", "law", "witness"):
            if getattr(err, attr, None) is not None:
                out[attr] = getattr(err, attr)
    return out
