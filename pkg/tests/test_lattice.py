import numpy as np
import pytest
from hypothesis import given, strategies as st

from omlkit.catalog import boolean_lattice, mo_lattice
from omlkit.lattice import (ComplementLawViolation, InvolutionViolation,
                            NotALattice, NotAPoset, OrthomodularityViolation,
                            build_lattice, center, center_by_decomposition,
                            center_by_triples, check_triple, is_boolean,
                            join, meet, product)

from conftest import ALL_LATTICES, lattice_params

MO2_PAIRS = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
MO2_ORTHO = [5, 2, 1, 4, 3, 0]
MO2_NAMES = ["0", "a", "a'", "b", "b'", "1"]


def test_smallest_nontrivial_boolean_accepted():
    lat = build_lattice([(0, 1), (0, 2), (1, 3), (2, 3)], [3, 2, 1, 0],
                        names=["0", "a", "~a", "1"])
    assert lat.n == 4 and is_boolean(lat)


def test_mo2_accepted():
    lat = build_lattice(MO2_PAIRS, MO2_ORTHO, names=MO2_NAMES)
    assert lat.n == 6
    assert not is_boolean(lat)


def test_chain_with_swapped_midpoints_violates_complement_law():
    # 0 < a < b < 1 with ~a = b: a ^ ~a == a, not 0
    with pytest.raises(ComplementLawViolation):
        build_lattice([(0, 1), (1, 2), (2, 3)], [3, 2, 1, 0],
                      names=["0", "a", "b", "1"])


def test_order_cycle_is_not_a_poset():
    with pytest.raises(NotAPoset):
        build_lattice([(0, 1), (1, 0), (0, 2)], [2, 1, 0])


def test_bowtie_has_no_joins():
    pairs = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(NotALattice):
        build_lattice(pairs, [5, 2, 1, 4, 3, 0])


def test_benzene_ring_fails_orthomodularity():
    # O6: 0 < a < b < 1 and 0 < b' < a' < 1 with a<->a', b<->b'
    pairs = [(0, 1), (1, 2), (2, 5), (0, 4), (4, 3), (3, 5)]
    with pytest.raises(OrthomodularityViolation):
        build_lattice(pairs, [5, 3, 4, 1, 2, 0],
                      names=["0", "a", "b", "a'", "b'", "1"])


def test_fixed_point_complements_fail_de_morgan():
    # 4-chain with ~a = a, ~b = b: involutive, but ~(a v b) != ~a ^ ~b
    with pytest.raises(InvolutionViolation, match="De Morgan"):
        build_lattice([(0, 1), (1, 2), (2, 3)], [3, 1, 2, 0],
                      names=["0", "a", "b", "1"])


def test_non_involutive_complement_rejected():
    with pytest.raises(InvolutionViolation, match="double complement"):
        build_lattice(MO2_PAIRS, [5, 2, 3, 4, 1, 0], names=MO2_NAMES)


def test_bounds_are_discovered_not_positional():
    # same MO2 with ids shuffled so that element 0 is an atom
    perm = [3, 5, 0, 2, 1, 4]  # old id -> new id
    pairs = [(perm[a], perm[b]) for a, b in MO2_PAIRS]
    ortho = [0] * 6
    for old, new in enumerate(perm):
        ortho[new] = perm[MO2_ORTHO[old]]
    names = [None] * 6
    for old, new in enumerate(perm):
        names[new] = MO2_NAMES[old]
    lat = build_lattice(pairs, ortho, names=names)
    assert lat.names[lat.bottom] == "0" and lat.bottom == perm[0]
    assert lat.names[lat.top] == "1" and lat.top == perm[5]
    assert sorted(lat.names[z] for z in center(lat)) == ["0", "1"]


@lattice_params()
def test_meet_join_with_complement(lat):
    for x in range(lat.n):
        assert meet(lat, x, lat.comp(x)) == lat.bottom
        assert join(lat, x, lat.comp(x)) == lat.top


def test_mo2_cross_block_atoms_meet_at_bottom(mo2):
    a, b = mo2.names.index("a"), mo2.names.index("b")
    assert meet(mo2, a, b) == mo2.bottom
    assert join(mo2, a, b) == mo2.top


@lattice_params()
def test_lattice_laws_exhaustive(lat):
    M, J, O = lat.meet_table, lat.join_table, lat.ortho
    idx = np.arange(lat.n)
    assert np.array_equal(M, M.T) and np.array_equal(J, J.T)
    assert np.array_equal(M[idx, idx], idx) and np.array_equal(J[idx, idx], idx)
    # absorption: x v (x ^ y) == x
    assert np.array_equal(J[idx[:, None], M], np.broadcast_to(idx[:, None],
                                                              M.shape))
    # De Morgan in both directions
    assert np.array_equal(O[J], M[np.ix_(O, O)])
    assert np.array_equal(O[M], J[np.ix_(O, O)])
    # orthomodular law on every pair
    assert np.array_equal(J[idx[:, None], M[O[:, None], J]], J)


def test_triples_in_boolean_lattice_are_t():
    lat = boolean_lattice(3)
    for a in range(lat.n):
        for b in range(lat.n):
            assert check_triple(lat, a, b, (a * b) % lat.n).holds_t


@lattice_params()
def test_repeated_argument_satisfies_d_by_absorption(lat):
    for a in range(lat.n):
        for b in range(lat.n):
            assert check_triple(lat, a, b, a).holds_d


def test_mo3_cross_block_triple_fails_t():
    lat = mo_lattice(3)
    a, b, c = (lat.names.index(s) for s in ("a", "b", "c"))
    report = check_triple(lat, a, b, c)
    assert not report.holds_t


@given(st.data())
def test_triple_t_implies_d_and_dstar_on_permutations(data):
    lat = ALL_LATTICES["prod_2_x_mo2"]
    a = data.draw(st.integers(0, lat.n - 1))
    b = data.draw(st.integers(0, lat.n - 1))
    c = data.draw(st.integers(0, lat.n - 1))
    if check_triple(lat, a, b, c).holds_t:
        for t in ((a, b, c), (b, c, a), (c, a, b)):
            report = check_triple(lat, *t)
            assert report.holds_d and report.holds_dstar


def test_center_of_boolean_is_everything():
    lat = boolean_lattice(3)
    assert center(lat) == tuple(range(lat.n))


def test_center_of_mo2_is_trivial(mo2):
    assert [mo2.names[z] for z in center(mo2)] == ["0", "1"]


def test_center_of_product_is_product_of_centers():
    lat = ALL_LATTICES["prod_2_x_mo2"]
    assert len(center(lat)) == 4


@lattice_params()
def test_center_definitions_agree(lat):
    assert center_by_triples(lat) == center_by_decomposition(lat)


@lattice_params()
def test_center_is_a_boolean_sublattice(lat):
    zs = set(center(lat))
    for z in zs:
        assert lat.comp(z) in zs
        for w in zs:
            assert lat.meet(z, w) in zs and lat.join(z, w) in zs
    for x in zs:
        for y in zs:
            for z in zs:
                assert lat.meet(x, lat.join(y, z)) == \
                    lat.join(lat.meet(x, y), lat.meet(x, z))


@lattice_params()
def test_is_boolean_iff_center_is_everything(lat):
    assert is_boolean(lat) == (len(center(lat)) == lat.n)


def test_product_is_componentwise():
    mo2 = mo_lattice(2)
    lat = product(boolean_lattice(1), mo2)
    assert lat.n == 12
    # (1, a) ^ (1, b) == (1, 0)
    i = lat.names.index("(1,a)")
    j = lat.names.index("(1,b)")
    assert lat.names[lat.meet(i, j)] == "(1,0)"
