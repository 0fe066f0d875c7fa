"""Text formats, JSON persistence and DOT export.

Presentation text::

    letters: a b
    cell rho: a b a' b'

Complex text (presentation supplied separately)::

    vertex v1 v2
    edge v1 a v2
    edge v2 a v1
    cell rho v1: v1 a v2  v2 a v1

JSON stores positive edges and rho-loops only; see ``AUTOMATON_SCHEMA``.
"""
from __future__ import annotations

import json

import jsonschema

from .core import IDENT, Kind, ParseError, Presentation
from .complex import ComplexError, TwoCell, TwoComplex
from .graph import Automaton, GraphError


class LoadError(ValueError):
    """JSON input that violates the schema or the structural invariants."""


def parse_presentation(text: str) -> Presentation:
    x_letters: tuple[str, ...] | None = None
    letters_line = 0
    raw_cells: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'letters:' or 'cell NAME:', got {line!r}", lineno)
        words = head.split()
        if words == ["letters"]:
            if x_letters is not None:
                raise ParseError("duplicate 'letters:' line", lineno)
            x_letters = tuple(body.split())
            letters_line = lineno
            for x in x_letters:
                if not IDENT.match(x):
                    raise ParseError(f"bad identifier {x!r}", lineno)
        elif len(words) == 2 and words[0] == "cell":
            if x_letters is None:
                raise ParseError("'cell' before 'letters:'", lineno)
            raw_cells.append((words[1], body, lineno))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if x_letters is None:
        raise ParseError("missing 'letters:' line")
    rhos = {name for name, _, _ in raw_cells}
    try:
        free = Presentation(x_letters)
    except ParseError as exc:
        raise ParseError(str(exc), letters_line) from None
    cells = []
    seen = set(x_letters)
    for name, body, lineno in raw_cells:
        if not IDENT.match(name):
            raise ParseError(f"bad identifier {name!r}", lineno)
        if name in seen:
            raise ParseError(f"duplicate identifier {name!r}", lineno)
        seen.add(name)
        tokens = body.split()
        for t in tokens:
            if t.rstrip("'") in rhos:
                raise ParseError(f"2-cell letter {t!r} inside a boundary label", lineno)
        try:
            cells.append((name, free.parse_word(body)))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    try:
        return Presentation(x_letters, tuple(cells))
    except ParseError as exc:
        raise ParseError(str(exc)) from None


def format_presentation(pres: Presentation) -> str:
    return str(pres) + "\n"


def _step_tokens(tokens: list[str], where: str, lineno: int) -> list[tuple[str, str, str]]:
    tokens = [t for tok in tokens for t in tok.replace(",", " ").split()]
    if len(tokens) % 3:
        raise ParseError(f"{where}: boundary walk tokens must come in 'v a w' triples", lineno)
    return [tuple(tokens[i:i + 3]) for i in range(0, len(tokens), 3)]


def parse_complex(text: str, pres: Presentation) -> TwoComplex:
    names: list[str] = []
    index: dict[str, int] = {}
    raw_edges: list[tuple[str, str, str, int]] = []
    raw_cells: list[tuple[str, str, list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "vertex":
            for v in words[1:]:
                if v in index:
                    raise ParseError(f"duplicate vertex {v!r}", lineno)
                index[v] = len(names)
                names.append(v)
        elif words[0] == "edge":
            if len(words) != 4:
                raise ParseError("edge lines look like 'edge v a w'", lineno)
            raw_edges.append((words[1], words[2], words[3], lineno))
        elif words[0] == "cell":
            head, sep, body = line.partition(":")
            parts = head.split()
            if not sep or len(parts) != 3:
                raise ParseError("cell lines look like 'cell rho v: v a w ...'", lineno)
            raw_cells.append((parts[1], parts[2], body.split(), lineno))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)

    def vid(name, lineno):
        if name not in index:
            raise ParseError(f"undeclared vertex {name!r}", lineno)
        return index[name]

    one_cells = []
    for u, x, v, lineno in raw_edges:
        if x not in pres.x_letters:
            raise ParseError(f"edge label {x!r} is not a generator", lineno)
        one_cells.append((vid(u, lineno), x, vid(v, lineno)))
    cells = []
    for rho, root, body, lineno in raw_cells:
        if rho not in pres.p_letters:
            raise ParseError(f"undeclared 2-cell label {rho!r}", lineno)
        walk = []
        for u, l, v in _step_tokens(body, rho, lineno):
            letter = pres.letter(l)
            if letter.is_p:
                raise ParseError(f"2-cell letter {l!r} in a boundary walk", lineno)
            walk.append((vid(u, lineno), letter, vid(v, lineno)))
        cells.append(TwoCell(rho, vid(root, lineno), tuple(walk)))
    return TwoComplex(pres, len(names), tuple(one_cells), tuple(cells), tuple(names))


def format_complex(c: TwoComplex) -> str:
    lines = ["vertex " + " ".join(c.name(v) for v in range(c.n))]
    lines += [f"edge {c.name(u)} {x} {c.name(v)}" for u, x, v in c.one_cells]
    for cell in c.two_cells:
        walk = "  ".join(f"{c.name(u)} {l} {c.name(v)}" for u, l, v in cell.walk)
        lines.append(f"cell {cell.label} {c.name(cell.root)}: {walk}".rstrip())
    return "\n".join(lines) + "\n"


_VERTEX = {"type": ["integer", "string"]}

AUTOMATON_SCHEMA = {
    "type": "object",
    "required": ["letters", "cells", "vertices", "edges", "root_init", "root_term"],
    "properties": {
        "kind": {"const": "automaton"},
        "letters": {"type": "array", "items": {"type": "string"}},
        "cells": {"type": "object", "additionalProperties": {"type": "string"}},
        "vertices": {"type": "array", "items": _VERTEX},
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "label", "to"],
                "properties": {"from": _VERTEX, "label": {"type": "string"}, "to": _VERTEX},
                "additionalProperties": False,
            },
        },
        "root_init": _VERTEX,
        "root_term": _VERTEX,
    },
}

COMPLEX_SCHEMA = {
    "type": "object",
    "required": ["kind", "letters", "cells", "vertices", "edges", "two_cells"],
    "properties": {
        "kind": {"const": "complex"},
        "letters": AUTOMATON_SCHEMA["properties"]["letters"],
        "cells": AUTOMATON_SCHEMA["properties"]["cells"],
        "vertices": AUTOMATON_SCHEMA["properties"]["vertices"],
        "edges": AUTOMATON_SCHEMA["properties"]["edges"],
        "two_cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "root", "walk"],
                "properties": {
                    "label": {"type": "string"},
                    "root": _VERTEX,
                    "walk": {
                        "type": "array",
                        "items": {"type": "array", "prefixItems": [_VERTEX, {"type": "string"}, _VERTEX],
                                  "minItems": 3, "maxItems": 3},
                    },
                },
            },
        },
    },
}


def _pres_json(pres: Presentation) -> dict:
    return {"letters": list(pres.x_letters), "cells": {r: str(w) for r, w in pres.cells}}


def _pres_from_json(data: dict) -> Presentation:
    try:
        return Presentation.build(data["letters"], data["cells"])
    except ParseError as exc:
        raise LoadError(f"bad presentation: {exc}") from None


def to_json(value: Automaton | TwoComplex, indent: int | None = 2) -> str:
    if isinstance(value, Automaton):
        a, _ = value.canonical()
        data = {"kind": "automaton", **_pres_json(a.pres),
                "vertices": list(a.vertices),
                "edges": [{"from": u, "label": str(l), "to": v} for u, l, v in a.edges()],
                "root_init": a.root_init, "root_term": a.root_term}
    elif isinstance(value, TwoComplex):
        c = value
        name = c.name
        data = {"kind": "complex", **_pres_json(c.pres),
                "vertices": [name(v) for v in range(c.n)],
                "edges": [{"from": name(u), "label": x, "to": name(v)} for u, x, v in c.one_cells],
                "two_cells": [{"label": cell.label, "root": name(cell.root),
                               "walk": [[name(u), str(l), name(v)] for u, l, v in cell.walk]}
                              for cell in c.two_cells]}
    else:
        raise TypeError(f"cannot serialise {type(value).__name__}")
    return json.dumps(data, indent=indent)


def from_json(text: str | dict) -> Automaton | TwoComplex:
    try:
        data = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError as exc:
        raise LoadError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise LoadError("top level must be an object")
    kind = data.get("kind", "automaton")
    schema = COMPLEX_SCHEMA if kind == "complex" else AUTOMATON_SCHEMA
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        raise LoadError(f"schema violation: {exc.message}") from None
    pres = _pres_from_json(data)
    ids = {v: i for i, v in enumerate(data["vertices"])}
    if len(ids) != len(data["vertices"]):
        raise LoadError("duplicate vertex ids")

    def vid(v):
        if v not in ids:
            raise LoadError(f"dangling vertex reference {v!r}")
        return ids[v]

    def letter(token, allow_p):
        try:
            l = pres.letter(token)
        except ParseError as exc:
            raise LoadError(f"bad edge label: {exc}") from None
        if l.kind is Kind.X_INV or (l.is_p and not allow_p):
            raise LoadError(f"bad edge label {token!r}")
        return l

    if kind == "complex":
        one_cells = []
        for e in data["edges"]:
            l = letter(e["label"], False)
            one_cells.append((vid(e["from"]), l.name, vid(e["to"])))
        cells = []
        for cell in data["two_cells"]:
            walk = []
            for u, l, v in cell["walk"]:
                try:
                    step = pres.letter(l)
                except ParseError as exc:
                    raise LoadError(f"bad walk label: {exc}") from None
                walk.append((vid(u), step, vid(v)))
            cells.append(TwoCell(cell["label"], vid(cell["root"]), tuple(walk)))
        names = tuple(str(v) for v in data["vertices"])
        try:
            return TwoComplex(pres, len(ids), tuple(one_cells), tuple(cells), names)
        except ComplexError as exc:
            raise LoadError(str(exc)) from None

    edges = []
    for e in data["edges"]:
        l = letter(e["label"], True)
        edges.append((vid(e["from"]), l, vid(e["to"])))
    try:
        return Automaton.from_edges(pres, len(ids), edges,
                                    vid(data["root_init"]), vid(data["root_term"]))
    except GraphError as exc:
        raise LoadError(str(exc)) from None


def export_dot(value: Automaton | TwoComplex) -> str:
    """DOT digraph of positive edges; rho-loops drawn as labeled self-arrows."""
    if isinstance(value, Automaton):
        a, _ = value.canonical()
        roots = {a.root_init, a.root_term}
        lines = ["digraph automaton {", "  node [shape=circle];"]
        for v in a.vertices:
            shape = "doublecircle" if v in roots else "circle"
            extra = ', xlabel="in"' if v == a.root_init else ""
            extra += ', xlabel="out"' if v == a.root_term and v != a.root_init else ""
            lines.append(f'  {v} [shape={shape}{extra}];')
        for u, l, v in a.edges():
            lines.append(f'  {u} -> {v} [label="{l}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    c = value
    lines = ["digraph complex {", "  node [shape=circle];"]
    for v in range(c.n):
        lines.append(f'  "{c.name(v)}";')
    for u, x, v in c.one_cells:
        lines.append(f'  "{c.name(u)}" -> "{c.name(v)}" [label="{x}"];')
    for cell in c.two_cells:
        walk = " ".join(f"{c.name(u)}-{l}->{c.name(v)}" for u, l, v in cell.walk) or "(empty)"
        lines.append(f"  // cell {cell.label} at {c.name(cell.root)}: {walk}")
        lines.append(f'  "{c.name(cell.root)}" -> "{c.name(cell.root)}" '
                     f'[label="{cell.label}", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
