"""
Reading and writing lattices, relations, formal contexts and diagrams.

Lattice JSON::

    {"name": "C3", "elements": ["0", "m", "1"], "covers": [["0", "m"], ["m", "1"]]}

Relation JSON (``close`` is applied after loading)::

    {"lattice": "C3", "pairs": [["0", "m"]], "close": "symmetric-reflexive"}

Contexts use the Burmeister ``.cxt`` layout.
"""

from __future__ import annotations

import json
from pathlib import Path

from .blocks import FactorLattice
from .errors import FormatError
from .fca import ConceptLattice, FormalContext
from .lattice import FiniteLattice, build_lattice
from .relations import Relation, reflexive_closure, symmetric_reflexive_closure

CLOSURES = ("none", "reflexive", "symmetric-reflexive")


def _read_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# -- lattices --------------------------------------------------------------------


def lattice_from_dict(data: dict) -> FiniteLattice:
    try:
        elements = data["elements"]
        covers = data.get("covers", [])
        name = data.get("name", "")
    except (KeyError, TypeError, AttributeError):
        raise FormatError("lattice JSON needs 'elements' and 'covers'") from None
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise FormatError("'elements' must be a list of strings")
    if not all(isinstance(c, list) and len(c) == 2 for c in covers):
        raise FormatError("'covers' must be a list of [lower, upper] pairs")
    return build_lattice(elements, [tuple(c) for c in covers], name)


def lattice_to_dict(L: FiniteLattice) -> dict:
    return {
        "name": L.name,
        "elements": list(L.elem_names),
        "covers": [[L.label(a), L.label(b)] for a, b in L.covers],
    }


def load_lattice(path) -> FiniteLattice:
    return lattice_from_dict(_read_json(path))


def dumps_lattice(L: FiniteLattice) -> str:
    return _dump(lattice_to_dict(L))


def save_lattice(L: FiniteLattice, path):
    Path(path).write_text(dumps_lattice(L), encoding="utf-8")


# -- relations -------------------------------------------------------------------


def relation_from_dict(data: dict, L: FiniteLattice) -> Relation:
    try:
        pairs = data["pairs"]
    except (KeyError, TypeError):
        raise FormatError("relation JSON needs 'pairs'") from None
    name = data.get("lattice")
    if name is not None and L.name and name != L.name:
        raise FormatError(f"relation is for lattice {name!r}, not {L.name!r}")
    close = data.get("close", "none")
    if close not in CLOSURES:
        raise FormatError(f"'close' must be one of {', '.join(CLOSURES)}")
    if not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise FormatError("'pairs' must be a list of [x, y] pairs")
    R = Relation.from_pairs(L, [tuple(p) for p in pairs])
    if close == "reflexive":
        R = reflexive_closure(R)
    elif close == "symmetric-reflexive":
        R = symmetric_reflexive_closure(R)
    return R


def relation_to_dict(R: Relation) -> dict:
    return {
        "lattice": R.host.name,
        "pairs": [list(p) for p in R.labelled_pairs()],
        "close": "none",
    }


def load_relation(path, L: FiniteLattice) -> Relation:
    return relation_from_dict(_read_json(path), L)


def dumps_relation(R: Relation) -> str:
    return _dump(relation_to_dict(R))


def save_relation(R: Relation, path):
    Path(path).write_text(dumps_relation(R), encoding="utf-8")


# -- Burmeister contexts ---------------------------------------------------------


def parse_cxt(text: str) -> FormalContext:
    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != "B":
        raise FormatError("a .cxt file starts with a line 'B'")
    try:
        g = int(lines[2])
        m = int(lines[3])
    except (IndexError, ValueError):
        raise FormatError("expected object and attribute counts on lines 3 and 4") from None
    if lines[4].strip():
        raise FormatError("line 5 of a .cxt file must be blank")
    body = lines[5:]
    if m == 0:
        # rows of a context without attributes are empty lines
        body += [""] * (2 * g - len(body))
    if len(body) != 2 * g + m:
        raise FormatError(f"expected {g} + {m} names and {g} rows, found {len(body)} lines")
    objects = body[:g]
    attributes = body[g : g + m]
    rows = []
    for i, row in enumerate(body[g + m :]):
        row = row.strip()
        if len(row) != m or set(row) - {"X", "x", "."}:
            raise FormatError(f"row {i + 1} must have {m} characters from 'X.'")
        rows.append([ch in "Xx" for ch in row])
    return FormalContext(objects, attributes, rows)


def dumps_cxt(K: FormalContext) -> str:
    out = ["B", "", str(len(K.objects)), str(len(K.attributes)), ""]
    out += list(K.objects)
    out += list(K.attributes)
    for row in K.incidence:
        out.append("".join("X" if v else "." for v in row))
    return "\n".join(out) + "\n"


def load_cxt(path) -> FormalContext:
    return parse_cxt(Path(path).read_text(encoding="utf-8"))


def save_cxt(K: FormalContext, path):
    Path(path).write_text(dumps_cxt(K), encoding="utf-8")


# -- DOT ---------------------------------------------------------------------------


def _as_lattice(obj) -> FiniteLattice:
    if isinstance(obj, (FactorLattice, ConceptLattice)):
        return obj.as_lattice
    if isinstance(obj, FiniteLattice):
        return obj
    raise TypeError(f"cannot draw {type(obj).__name__}")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(obj, name: str | None = None) -> str:
    """Hasse diagram in DOT, drawn bottom to top.

    Works for lattices, factor lattices (nodes labelled ``[bottom,top]``)
    and concept lattices (nodes labelled ``{extent}|{intent}``).  Nodes are
    listed by (height, label).
    """
    L = _as_lattice(obj)
    h = L.heights
    order = sorted(range(L.n), key=lambda x: (h[x], L.label(x)))
    lines = [f"digraph {_quote(name or L.name or 'lattice')} {{", "  rankdir=BT;"]
    for x in order:
        lines.append(f"  n{x} [label={_quote(L.label(x))}];")
    pos = {x: i for i, x in enumerate(order)}
    for a, b in sorted(L.covers, key=lambda e: (pos[e[0]], pos[e[1]])):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(obj, path, name: str | None = None):
    Path(path).write_text(to_dot(obj, name), encoding="utf-8")
