"""File formats: JSON lattice documents, Greechie/hypergraph text, DOT.

Lattice documents are JSON with a schema tag, the element count, the order
relation (as [i, j] pairs or as row bitstrings), the orthocomplement array
and optional element names.  Structural problems raise FormatError before
any axiom is looked at; axiom violations propagate from the validator.
"""

from __future__ import annotations

import json
from pathlib import Path

from .greechie import GreechieDiagram, OrthoHypergraph, parse_greechie, parse_hypergraph
from .lattice import Lattice, build_lattice

SCHEMA = "omlkit-lattice/1"


class FormatError(Exception):
    pass


def document_to_lattice(doc) -> Lattice:
    """Validate document structure and hand the content to the builder."""
    if not isinstance(doc, dict):
        raise FormatError("lattice document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise FormatError(f"unknown schema {doc.get('schema')!r}")
    try:
        n = int(doc["n"])
        leq = doc["leq"]
        ortho = [int(v) for v in doc["ortho"]]
    except (KeyError, TypeError, ValueError) as err:
        raise FormatError(f"bad lattice document: {err}") from err
    if len(ortho) != n:
        raise FormatError("ortho array length must equal n")
    if not all(0 <= v < n for v in ortho):
        raise FormatError("ortho array maps outside the element range")

    pairs: list[tuple[int, int]] = []
    if leq and all(isinstance(row, str) for row in leq):
        if len(leq) != n or any(len(row) != n for row in leq):
            raise FormatError("leq bitstring rows must form an n x n matrix")
        if any(ch not in "01" for row in leq for ch in row):
            raise FormatError("leq bitstrings may contain only 0 and 1")
        pairs = [(i, j) for i, row in enumerate(leq)
                 for j, ch in enumerate(row) if ch == "1"]
    else:
        for entry in leq:
            try:
                i, j = (int(v) for v in entry)
            except (TypeError, ValueError) as err:
                raise FormatError(f"bad leq pair {entry!r}") from err
            if not (0 <= i < n and 0 <= j < n):
                raise FormatError(f"leq pair {entry!r} outside the element range")
            pairs.append((i, j))

    names = doc.get("names")
    if names is not None:
        if len(names) != n or not all(isinstance(s, str) for s in names):
            raise FormatError("names must be n strings")
    return build_lattice(pairs, ortho, names)


def lattice_to_document(lat: Lattice) -> dict:
    """Full-relation document; re-parsing yields an identical lattice."""
    return {
        "schema": SCHEMA,
        "n": lat.n,
        "leq": ["".join("1" if lat.leq[i, j] else "0" for j in range(lat.n))
                for i in range(lat.n)],
        "ortho": [int(v) for v in lat.ortho],
        "names": list(lat.names),
    }


def load_lattice_document(path) -> Lattice:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as err:
        raise FormatError(f"cannot read {path}: {err}") from err
    return document_to_lattice(doc)


def save_lattice_document(lat: Lattice, path) -> None:
    Path(path).write_text(
        json.dumps(lattice_to_document(lat), indent=2, sort_keys=True) + "\n",
        encoding="utf-8")


def load_greechie(path) -> GreechieDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise FormatError(f"cannot read {path}: {err}") from err
    return parse_greechie(text)


def load_hypergraph(path) -> OrthoHypergraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise FormatError(f"cannot read {path}: {err}") from err
    return parse_hypergraph(text)


def load_input(path):
    """Dispatch by extension: ('lattice', Lattice) or ('diagram', GreechieDiagram)."""
    suffix = Path(path).suffix
    if suffix == ".json":
        return "lattice", load_lattice_document(path)
    if suffix == ".gd":
        return "diagram", load_greechie(path)
    raise FormatError(f"unsupported input extension {suffix!r} (want .json or .gd)")


def dot_hasse(lat: Lattice) -> str:
    """DOT digraph of the covering relation, orthocomplement pairs dashed."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(lat.n):
        lines.append(f'  n{i} [label="{lat.names[i]}"];')
    for a, b in sorted(lat.covers()):
        lines.append(f"  n{a} -> n{b};")
    for a in range(lat.n):
        b = lat.comp(a)
        if a < b:
            lines.append(
                f"  n{a} -> n{b} [style=dashed, dir=none, color=gray, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
