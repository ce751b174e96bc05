#!/usr/bin/env python3
"""Analyze every corpus instance and print a summary table.

A quick end-to-end exercise of the toolkit: validation, center and context
counts, valuation verdicts and equivalence agreement for each fixture, plus
coloring verdicts for the hypergraph fixtures.
"""

from __future__ import annotations

import time

from omlkit.catalog import corpus_diagrams, corpus_hypergraphs, corpus_lattices
from omlkit.contexts import blocks
from omlkit.greechie import paste
from omlkit.modal import mks_check, modal_layer
from omlkit.valuations import check_coloring, global_valuation


def main() -> None:
    rows = []
    instances = dict(corpus_lattices())
    instances.update({name: paste(d) for name, d in corpus_diagrams().items()})
    for name, lat in instances.items():
        t0 = time.perf_counter()
        layer = modal_layer(lat)
        ks = global_valuation(lat)
        mks = mks_check(layer)
        rows.append((name, lat.n, len(layer.center_set), len(blocks(lat)),
                     ks.verdict, ks.nodes_explored,
                     "agree" if mks.agreement else "DISAGREE",
                     time.perf_counter() - t0))

    print(f"{'instance':<18}{'n':>5}{'|Z|':>5}{'ctx':>5}  "
          f"{'valuation':<11}{'nodes':>7}  {'equivalence':<12}{'secs':>7}")
    for name, n, z, ctx, verdict, nodes, agree, secs in rows:
        print(f"{name:<18}{n:>5}{z:>5}{ctx:>5}  {verdict:<11}{nodes:>7}  "
              f"{agree:<12}{secs:>7.2f}")

    print()
    for name, graph in corpus_hypergraphs().items():
        out = check_coloring(graph)
        print(f"{name:<18} coloring: {out.verdict} "
              f"({out.nodes_explored} nodes)")


if __name__ == "__main__":
    main()
