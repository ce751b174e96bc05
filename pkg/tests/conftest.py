from __future__ import annotations

from pathlib import Path

import pytest

from omlkit.catalog import (corpus_diagrams, corpus_hypergraphs,
                            corpus_lattices, mo_lattice)
from omlkit.greechie import paste

REPO = Path(__file__).resolve().parent.parent
CORPUS_DIR = REPO / "corpus"

# Built once per test session; every corpus object is immutable.
CORPUS_LATTICES = dict(corpus_lattices())
CORPUS_DIAGRAMS = corpus_diagrams()
CORPUS_HYPERGRAPHS = corpus_hypergraphs()
PASTED = {name: paste(d) for name, d in CORPUS_DIAGRAMS.items()}
ALL_LATTICES = {**CORPUS_LATTICES, **PASTED}

COLORABLE = [name for name in ALL_LATTICES if name != "stateless_35"]


def lattice_params():
    return pytest.mark.parametrize(
        "lat", ALL_LATTICES.values(), ids=list(ALL_LATTICES))


@pytest.fixture(scope="session")
def mo2():
    return mo_lattice(2)


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS_DIR
