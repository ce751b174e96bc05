from itertools import combinations, product as iproduct

import pytest
from hypothesis import given, settings, strategies as st

from omlkit.catalog import boolean_lattice, parity_hypergraph
from omlkit.contexts import blocks
from omlkit.greechie import GreechieDiagram, OrthoHypergraph, paste, to_hypergraph
from omlkit.valuations import (BudgetExceeded, check_coloring,
                               dimacs_satisfiable, global_valuation, to_cnf,
                               verify_global_valuation)

from conftest import (ALL_LATTICES, COLORABLE, CORPUS_DIAGRAMS,
                      CORPUS_HYPERGRAPHS, PASTED)


def brute_force_valuations(lat):
    """Independent oracle: enumerate every atom bitmap, keep the ones whose
    induced per-context family verifies."""
    from omlkit.contexts import Valuation

    block_list = blocks(lat)
    atoms = sorted({p for blk in block_list for p in blk.atoms()})
    witnesses = []
    # enumerate 1-before-0 so the first hit prefers a 1 on earlier atoms,
    # matching the search's branch order
    for bits in iproduct((1, 0), repeat=len(atoms)):
        chosen = {p for p, b in zip(atoms, bits) if b}
        family = []
        for blk in block_list:
            picked = [p for p in blk.atoms() if p in chosen]
            if len(picked) != 1:
                family = None
                break
            family.append(Valuation(
                domain=blk,
                assignment=tuple((x, int(lat.le(picked[0], x)))
                                 for x in blk.elements)))
        if family is None:
            continue
        if verify_global_valuation(lat, family) is not None:
            witnesses.append(dict(zip(atoms, bits)))
    return atoms, witnesses


def test_boolean_lattices_found_any_atom_choice():
    for k in (1, 2, 3, 4):
        lat = boolean_lattice(k)
        out = global_valuation(lat)
        assert out.found
        assert verify_global_valuation(lat, out.witness.valuations) is not None


def test_mo2_canonical_witness_is_lexicographically_first(mo2):
    atoms, witnesses = brute_force_valuations(mo2)
    assert witnesses, "oracle says MO2 is colorable"
    expected_first = witnesses[0]
    out = global_valuation(mo2)
    assert out.found
    got = {p: out.witness.total[p] for p in atoms}
    assert got == expected_first
    assert got == {mo2.names.index("a"): 1, mo2.names.index("a'"): 0,
                   mo2.names.index("b"): 1, mo2.names.index("b'"): 0}


def test_chain2_frozen_witness():
    lat = PASTED["chain2"]
    out = global_valuation(lat)
    assert out.found
    named = {lat.names[x]: b for x, b in out.witness.total.items()
             if x in set(lat.atoms())}
    assert named == {"a": 1, "b": 0, "c": 0, "d": 1, "e": 0}


@pytest.mark.parametrize("name", COLORABLE)
def test_colorable_corpus_found_and_reverified(name):
    lat = ALL_LATTICES[name]
    out = global_valuation(lat)
    assert out.found
    total = verify_global_valuation(lat, out.witness.valuations)
    assert total == out.witness.total
    # complements flip through the induced total map
    for x, b in total.items():
        assert total[lat.comp(x)] == 1 - b


def test_parity_hypergraph_oracle_and_verdict():
    graph = parity_hypergraph()
    # parity oracle: 9 odd constraints while every vertex is counted twice
    assert len(graph.edges) % 2 == 1
    degree = {v: 0 for v in graph.vertices}
    for edge in graph.edges:
        assert len(edge) == 4
        for v in edge:
            degree[v] += 1
    assert set(degree.values()) == {2}
    out = check_coloring(graph)
    assert out.verdict == "exhausted"


def test_stateless_diagram_mod3_oracle_and_verdict():
    diagram = CORPUS_DIAGRAMS["stateless_35"]
    # counting oracle: every atom in exactly 3 blocks, block count not
    # divisible by 3, so exactly-one-per-block总 counts cannot balance
    degree = {a: 0 for a in diagram.atoms}
    for block in diagram.blocks:
        for a in block:
            degree[a] += 1
    assert set(degree.values()) == {3}
    assert len(diagram.blocks) % 3 != 0
    out = check_coloring(to_hypergraph(diagram))
    assert out.verdict == "exhausted"
    out2 = global_valuation(PASTED["stateless_35"])
    assert out2.verdict == "exhausted"


def test_budget_exceeded_is_distinct_from_exhausted():
    lat = PASTED["stateless_35"]
    with pytest.raises(BudgetExceeded):
        global_valuation(lat, budget=3)
    with pytest.raises(BudgetExceeded):
        check_coloring(to_hypergraph(CORPUS_DIAGRAMS["stateless_35"]), budget=3)


def test_search_is_deterministic(mo2):
    first = global_valuation(mo2)
    second = global_valuation(mo2)
    assert first.nodes_explored == second.nodes_explored
    assert first.witness.total == second.witness.total


def test_single_triad_cnf_shape():
    lat = paste(GreechieDiagram.from_blocks([("a", "b", "c")]))
    doc = to_cnf(lat)
    assert doc.num_vars == 3
    assert len(doc.clauses) == 4          # one at-least-one, three at-most-one
    assert doc.clauses[0] == (1, 2, 3)


def test_mo2_cnf_shape(mo2):
    doc = to_cnf(mo2)
    assert doc.num_vars == 4
    assert doc.clauses == ((1, 2), (-1, -2), (3, 4), (-3, -4))
    text = doc.to_dimacs()
    assert "p cnf 4 4" in text
    assert "c atom a = 1" in text


@pytest.mark.parametrize("name", list(ALL_LATTICES))
def test_cnf_satisfiability_matches_search_on_lattices(name):
    lat = ALL_LATTICES[name]
    assert dimacs_satisfiable(to_cnf(lat).to_dimacs()) == \
        global_valuation(lat).found


@pytest.mark.parametrize("name", list(CORPUS_HYPERGRAPHS))
def test_cnf_satisfiability_matches_search_on_hypergraphs(name):
    graph = CORPUS_HYPERGRAPHS[name]
    assert dimacs_satisfiable(to_cnf(graph).to_dimacs()) == \
        check_coloring(graph).found


@pytest.mark.parametrize("name", list(CORPUS_DIAGRAMS))
def test_coloring_agrees_with_valuation_on_pastings(name):
    assert check_coloring(to_hypergraph(CORPUS_DIAGRAMS[name])).verdict == \
        global_valuation(PASTED[name]).verdict


def test_found_verdicts_restrict_to_subdiagrams():
    diagram = CORPUS_DIAGRAMS["chain5"]
    assert global_valuation(PASTED["chain5"]).found
    for keep in range(1, len(diagram.blocks)):
        for subset in combinations(diagram.blocks, keep):
            sub = GreechieDiagram.from_blocks(subset)
            assert check_coloring(to_hypergraph(sub)).found


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_engine_matches_brute_force_on_random_hypergraphs(data):
    nv = data.draw(st.integers(2, 10))
    vertices = tuple(f"v{i}" for i in range(nv))
    ne = data.draw(st.integers(1, 7))
    edges = []
    for _ in range(ne):
        size = data.draw(st.integers(2, min(4, nv)))
        edge = data.draw(st.permutations(vertices))[:size]
        edges.append(tuple(edge))
    graph = OrthoHypergraph(vertices, tuple(edges))
    idx = {v: i for i, v in enumerate(vertices)}
    brute = any(
        all(sum(bits[idx[v]] for v in edge) == 1 for edge in edges)
        for bits in iproduct((0, 1), repeat=nv))
    assert check_coloring(graph).found == brute
