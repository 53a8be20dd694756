"""Workspace documents: named algebras, maps, forms, two-tensors and coproducts in one file.

The file is YAML (JSON is accepted since it is a subset).  Scalars are
integers or ``"p/q"`` strings; structure constants are sparse lists of
index tuples followed by the coefficient::

    format_version: 1
    algebras:
      A3:
        dim: 3
        basis: ["1", t, t2]
        products:
          dot: [[0, 0, 0, 1], [0, 1, 1, 1], [1, 1, 2, 1]]
    maps:
      P_euler: {rows: 3, cols: 3, entries: [[1, 1, 1], [2, 2, 2]]}
    forms:
      B: {dim: 3, entries: [[0, 2, 1], [1, 1, 1], [2, 0, 1]]}
    two_tensors:
      r: {dim: 3, entries: [[0, 1, 1], [1, 0, -1]]}
    coproducts:
      delta: {dim: 3, entries: [[2, 1, 1, "1/2"]]}

A map entry ``[k, j, c]`` puts ``c`` in row ``k`` and column ``j`` (so it is
the ``e_k`` coefficient of the image of ``e_j``).  A coproduct entry
``[k, i, j, c]`` is the coefficient of ``e_i (x) e_j`` in the image of
``e_k``.  Every object may carry a ``provenance`` mapping.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import yaml

from .algebra import PRODUCT_NAMES, AlgebraPresentation
from .coalgebra import Coproduct
from .errors import AlgebraError
from .forms import BilinearForm
from .tensor import LinearMap, format_scalar, frozen, scalar, zeros
from .yang_baxter import TwoTensor

FORMAT_VERSION = 1
SECTIONS = ("algebras", "maps", "forms", "two_tensors", "coproducts")


class WorkspaceError(AlgebraError):
    """A workspace file that cannot be read; ``location`` names the offending entry."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


@dataclass
class Workspace:
    """Named objects of every kind; ``provenance`` maps ``(section, name)`` to metadata."""

    algebras: dict[str, AlgebraPresentation] = field(default_factory=dict)
    maps: dict[str, LinearMap] = field(default_factory=dict)
    forms: dict[str, BilinearForm] = field(default_factory=dict)
    two_tensors: dict[str, TwoTensor] = field(default_factory=dict)
    coproducts: dict[str, Coproduct] = field(default_factory=dict)
    provenance: dict[tuple[str, str], dict] = field(default_factory=dict)

    def get(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            known = ", ".join(sorted(table)) or "none"
            raise WorkspaceError(f"no object named {name!r} (known: {known})", section)
        return table[name]

    def add(self, section: str, name: str, obj, provenance: dict | None = None) -> None:
        getattr(self, section)[name] = obj
        if provenance is not None:
            self.provenance[(section, name)] = provenance

    def same_as(self, other: Workspace) -> bool:
        """Same names in every section with equal exact contents."""
        for section in SECTIONS:
            mine, theirs = getattr(self, section), getattr(other, section)
            if set(mine) != set(theirs):
                return False
            for name in mine:
                a, b = mine[name], theirs[name]
                if section == "algebras":
                    if not (a.same_as(b) and a.basis_labels == b.basis_labels):
                        return False
                elif not np.array_equal(_array_of(a), _array_of(b)):
                    return False
        return self.provenance == other.provenance


def _array_of(obj) -> np.ndarray:
    if isinstance(obj, Coproduct):
        return obj.tensor
    return obj.matrix


# ---------------------------------------------------------------------------
# reading


def _scalar_at(value, where: str):
    if isinstance(value, float):
        raise WorkspaceError(f"floating-point value {value!r}; write exact rationals as 'p/q' strings", where)
    try:
        return scalar(value)
    except AlgebraError as exc:
        raise WorkspaceError(str(exc), where) from None


def _int_at(value, where: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise WorkspaceError(f"expected an integer >= {minimum}, got {value!r}", where)
    return value


def _mapping_at(value, where: str) -> dict:
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise WorkspaceError(f"expected a mapping, got {type(value).__name__}", where)
    return value


def _sparse(entries, shape: tuple[int, ...], where: str) -> np.ndarray:
    """Dense exact tensor from ``[i, j, ..., coefficient]`` entries; repeated indices add up."""
    out = np.array(zeros(shape))
    if entries is None:
        return frozen(out)
    if not isinstance(entries, list):
        raise WorkspaceError("expected a list of entries", where)
    rank = len(shape)
    for n, entry in enumerate(entries):
        spot = f"{where}[{n}]"
        if not isinstance(entry, list) or len(entry) != rank + 1:
            raise WorkspaceError(f"expected {rank} indices and a coefficient, got {entry!r}", spot)
        idx = tuple(_int_at(i, spot) for i in entry[:rank])
        for i, extent in zip(idx, shape):
            if i >= extent:
                raise WorkspaceError(f"index {i} out of range for extent {extent}", spot)
        out[idx] += _scalar_at(entry[rank], spot)
    return frozen(out)


def _read_algebra(name: str, raw, where: str) -> AlgebraPresentation:
    raw = _mapping_at(raw, where)
    if "dim" not in raw:
        raise WorkspaceError("missing 'dim'", where)
    dim = _int_at(raw["dim"], f"{where}.dim", 1)
    labels = raw.get("basis") or ()
    if labels and (not isinstance(labels, list) or len(labels) != dim):
        raise WorkspaceError(f"'basis' needs {dim} labels", f"{where}.basis")
    products = {}
    for pname, entries in _mapping_at(raw.get("products"), f"{where}.products").items():
        if pname not in PRODUCT_NAMES:
            raise WorkspaceError(f"unknown product {pname!r}; expected one of {PRODUCT_NAMES}", f"{where}.products")
        products[pname] = _sparse(entries, (dim,) * 3, f"{where}.products.{pname}")
    return AlgebraPresentation(dim, products, tuple(str(b) for b in labels))


def _read_map(name: str, raw, where: str) -> LinearMap:
    raw = _mapping_at(raw, where)
    for key in ("rows", "cols"):
        if key not in raw:
            raise WorkspaceError(f"missing {key!r}", where)
    shape = (_int_at(raw["rows"], f"{where}.rows", 1), _int_at(raw["cols"], f"{where}.cols", 1))
    return LinearMap(_sparse(raw.get("entries"), shape, f"{where}.entries"))


def _square(raw, where: str, rank: int) -> np.ndarray:
    raw = _mapping_at(raw, where)
    if "dim" not in raw:
        raise WorkspaceError("missing 'dim'", where)
    dim = _int_at(raw["dim"], f"{where}.dim", 1)
    return _sparse(raw.get("entries"), (dim,) * rank, f"{where}.entries")


_READERS = {
    "algebras": _read_algebra,
    "maps": _read_map,
    "forms": lambda name, raw, where: BilinearForm(_square(raw, where, 2)),
    "two_tensors": lambda name, raw, where: TwoTensor(_square(raw, where, 2)),
    "coproducts": lambda name, raw, where: Coproduct(_square(raw, where, 3)),
}


def from_data(data: Any) -> Workspace:
    """Build a workspace from already parsed YAML/JSON data."""
    data = _mapping_at(data, "document")
    if "format_version" not in data:
        raise WorkspaceError("missing 'format_version'", "document")
    if data["format_version"] != FORMAT_VERSION:
        raise WorkspaceError(f"unsupported format_version {data['format_version']!r}; expected {FORMAT_VERSION}", "format_version")
    unknown = set(data) - set(SECTIONS) - {"format_version"}
    if unknown:
        raise WorkspaceError(f"unknown top-level keys {sorted(unknown)}", "document")
    ws = Workspace()
    for section in SECTIONS:
        for name, raw in _mapping_at(data.get(section), section).items():
            where = f"{section}.{name}"
            try:
                obj = _READERS[section](str(name), raw, where)
            except WorkspaceError:
                raise
            except AlgebraError as exc:
                raise WorkspaceError(str(exc), where) from None
            prov = raw.get("provenance") if isinstance(raw, dict) else None
            ws.add(section, str(name), obj, _mapping_at(prov, f"{where}.provenance") if prov is not None else None)
    return ws


def loads(text: str) -> Workspace:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark is not None else ""
        raise WorkspaceError(f"malformed document: {getattr(exc, 'problem', exc)}", where) from None
    return from_data(data)


def load(path) -> Workspace:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise WorkspaceError(f"cannot read file: {exc.strerror}", str(path)) from None
    return loads(text)


# ---------------------------------------------------------------------------
# writing


def _entries(arr: np.ndarray) -> list[list]:
    out = []
    for idx in itertools.product(*(range(n) for n in arr.shape)):
        value = arr[idx]
        if value != 0:
            c = scalar(value)
            out.append([*idx, int(c.numerator) if c.denominator == 1 else format_scalar(c)])
    return out


def to_data(ws: Workspace) -> dict:
    data: dict[str, Any] = {"format_version": FORMAT_VERSION}
    for section in SECTIONS:
        table = getattr(ws, section)
        if not table:
            continue
        block = {}
        for name, obj in table.items():
            if section == "algebras":
                raw = {
                    "dim": obj.dim,
                    "basis": list(obj.basis_labels),
                    "products": {p: _entries(t) for p, t in obj.products.items()},
                }
            elif section == "maps":
                rows, cols = obj.matrix.shape
                raw = {"rows": rows, "cols": cols, "entries": _entries(obj.matrix)}
            elif section == "coproducts":
                raw = {"dim": obj.dim, "entries": _entries(obj.tensor)}
            else:
                raw = {"dim": obj.matrix.shape[0], "entries": _entries(obj.matrix)}
            if (section, name) in ws.provenance:
                raw["provenance"] = ws.provenance[(section, name)]
            block[name] = raw
        data[section] = block
    return data


def dumps(ws: Workspace) -> str:
    return yaml.safe_dump(to_data(ws), sort_keys=False, default_flow_style=None, width=100)


def dump(ws: Workspace, path) -> None:
    Path(path).write_text(dumps(ws), encoding="utf-8")
