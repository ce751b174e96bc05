#!/usr/bin/env python3
"""Regenerate the corpus fixtures under corpus/ from the catalog.

Everything here is deterministic, so re-running must reproduce the checked-in
files byte for byte.  Each accepted fixture is paired in corpus/corrupted/
with hand-made rejects, one per axiom class, used by the acceptance suite.
"""

from __future__ import annotations

import json
from pathlib import Path

from omlkit.catalog import corpus_diagrams, corpus_hypergraphs, corpus_lattices
from omlkit.documents import save_lattice_document

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

DIAGRAM_HEADERS = {
    "stateless_35": [
        "# 35 atoms, 35 blocks: the point/line incidence structure of a cubic",
        "# bipartite graph of girth 10 (35 + 35 vertices).  Girth 10 makes the",
        "# diagram admissible (blocks share <= 1 atom, no loops of order 3/4).",
        "# Every atom lies in exactly 3 blocks and 35 is not divisible by 3,",
        "# so no exactly-one-per-block coloring exists: the pasted lattice",
        "# admits no global valuation.",
    ],
}


def write_diagram(name: str, diagram, path: Path) -> None:
    lines = DIAGRAM_HEADERS.get(name, [])[:]
    lines += [" ".join(block) for block in diagram.blocks]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_hypergraph(name: str, graph, path: Path) -> None:
    lines = [
        "# edges of size 4, every vertex in exactly 2 edges, 9 edges total:",
        "# uncolorable by parity (9 odd constraints, each vertex counted twice).",
    ] if name == "parity_18_9" else []
    lines += [" ".join(edge) for edge in graph.edges]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_corrupted() -> None:
    out = CORPUS / "corrupted"
    out.mkdir(parents=True, exist_ok=True)

    def dump(name: str, doc: dict) -> None:
        (out / name).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n",
                                encoding="utf-8")

    schema = "omlkit-lattice/1"
    # order cycle between two elements
    dump("not_a_poset.json", {
        "schema": schema, "n": 4, "names": ["0", "a", "b", "1"],
        "leq": [[0, 1], [1, 2], [2, 1], [1, 3], [2, 3]],
        "ortho": [3, 2, 1, 0],
    })
    # bowtie: two minimal upper bounds for the atoms
    dump("not_a_lattice.json", {
        "schema": schema, "n": 6, "names": ["0", "a", "b", "c", "d", "1"],
        "leq": [[0, 1], [0, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 5], [4, 5]],
        "ortho": [5, 2, 1, 4, 3, 0],
    })
    # double complement is not the identity
    dump("involution_violation.json", {
        "schema": schema, "n": 6, "names": ["0", "a", "a'", "b", "b'", "1"],
        "leq": [[0, 1], [0, 2], [0, 3], [0, 4], [1, 5], [2, 5], [3, 5], [4, 5]],
        "ortho": [5, 2, 3, 4, 1, 0],
    })
    # 4-chain whose midpoints complement each other
    dump("complement_violation.json", {
        "schema": schema, "n": 4, "names": ["0", "a", "b", "1"],
        "leq": [[0, 1], [1, 2], [2, 3]],
        "ortho": [3, 2, 1, 0],
    })
    # benzene ring O6: an ortholattice that is not orthomodular
    dump("orthomodularity_violation.json", {
        "schema": schema, "n": 6, "names": ["0", "a", "b", "a'", "b'", "1"],
        "leq": [[0, 1], [1, 2], [2, 5], [0, 4], [4, 3], [3, 5]],
        "ortho": [5, 3, 4, 1, 2, 0],
    })


def main() -> None:
    CORPUS.mkdir(exist_ok=True)
    for name, lat in corpus_lattices().items():
        save_lattice_document(lat, CORPUS / f"{name}.json")
        print(f"wrote {name}.json (n={lat.n})")
    for name, diagram in corpus_diagrams().items():
        write_diagram(name, diagram, CORPUS / f"{name}.gd")
        print(f"wrote {name}.gd ({len(diagram.blocks)} blocks)")
    for name, graph in corpus_hypergraphs().items():
        write_hypergraph(name, graph, CORPUS / f"{name}.hg")
        print(f"wrote {name}.hg ({len(graph.edges)} edges)")
    write_corrupted()
    print("wrote corrupted/ fixtures")


if __name__ == "__main__":
    main()
