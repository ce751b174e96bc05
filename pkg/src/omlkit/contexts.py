"""Boolean sublattices (contexts) of an orthomodular lattice.

A context is a maximal set of pairwise compatible elements; compatibility is
the standard commuting relation a == (a ^ b) v (a ^ ~b).  Maximal contexts
are found by clique enumeration over the compatibility graph, then checked
to be operation-closed distributive sublattices.  Working with the maximal
ones only is sound for valuation questions: any Boolean sublattice consists
of pairwise commuting elements and therefore extends to a maximal context,
so a compatible family of two-valued homomorphisms on the maximal contexts
restricts to one on all Boolean sublattices and vice versa (the test suite
cross-checks this on small lattices by brute force).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import Lattice


@dataclass(frozen=True)
class Block:
    """A Boolean sublattice, closed under ^, v, ~ and containing 0 and 1."""

    parent: Lattice = field(compare=False, repr=False)
    elements: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def atoms(self) -> tuple[int, ...]:
        """Minimal nonzero elements of the block (atoms of the parent too)."""
        lat = self.parent
        out = []
        for x in self.elements:
            if x == lat.bottom:
                continue
            if not any(lat.le(y, x) and y != x and y != lat.bottom
                       for y in self.elements):
                out.append(x)
        return tuple(out)

    def element_names(self) -> tuple[str, ...]:
        return tuple(self.parent.names[x] for x in self.elements)


@dataclass(frozen=True)
class Valuation:
    """A two-valued Boolean homomorphism on a block."""

    domain: Block
    assignment: tuple[tuple[int, int], ...]   # (element, 0 or 1), sorted

    def __call__(self, x: int) -> int:
        return dict(self.assignment)[x]

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignment)

    def verify(self) -> bool:
        """Exhaustively re-check the homomorphism laws on the domain."""
        lat = self.domain.parent
        v = self.as_dict()
        if v[lat.bottom] != 0 or v[lat.top] != 1:
            return False
        for x in self.domain.elements:
            if v[lat.comp(x)] != 1 - v[x]:
                return False
            for y in self.domain.elements:
                if v[lat.meet(x, y)] != (v[x] & v[y]):
                    return False
                if v[lat.join(x, y)] != (v[x] | v[y]):
                    return False
        return True


def commutes(lat: Lattice, a: int, b: int) -> bool:
    """Compatibility: a == (a ^ b) v (a ^ ~b)."""
    return lat.join(lat.meet(a, b), lat.meet(a, lat.comp(b))) == a


def _closed_under_ops(lat: Lattice, members: frozenset[int]) -> bool:
    for x in members:
        if lat.comp(x) not in members:
            return False
        for y in members:
            if lat.meet(x, y) not in members or lat.join(x, y) not in members:
                return False
    return True


def _distributive_on(lat: Lattice, members) -> bool:
    for x in members:
        for y in members:
            for z in members:
                if lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y),
                                                           lat.meet(x, z)):
                    return False
    return True


def _bron_kerbosch(adj: list[set[int]], r: set[int], p: set[int],
                   x: set[int], out: list[frozenset[int]]) -> None:
    if not p and not x:
        out.append(frozenset(r))
        return
    pivot = max(p | x, key=lambda v: len(adj[v] & p))
    for v in sorted(p - adj[pivot]):
        _bron_kerbosch(adj, r | {v}, p & adj[v], x & adj[v], out)
        p.remove(v)
        x.add(v)


def blocks(lat: Lattice) -> list[Block]:
    """All maximal contexts, in a deterministic order.

    Enumerates maximal cliques of the compatibility graph and verifies each
    one is an operation-closed Boolean sublattice (by Foulis-Holland the
    sublattice generated by pairwise commuting elements is distributive, so
    a maximal clique is automatically closed; the check guards the
    implementation rather than the theory).
    """
    n = lat.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if commutes(lat, a, b) and commutes(lat, b, a):
                adj[a].add(b)
                adj[b].add(a)

    cliques: list[frozenset[int]] = []
    _bron_kerbosch(adj, set(), set(range(n)), set(), cliques)

    out = []
    for clique in cliques:
        if not _closed_under_ops(lat, clique):
            raise RuntimeError(
                f"maximal compatible set {sorted(clique)} is not a sublattice")
        if not _distributive_on(lat, clique):
            raise RuntimeError(
                f"maximal compatible set {sorted(clique)} is not distributive")
        if lat.bottom not in clique or lat.top not in clique:
            raise RuntimeError("context misses a bound")
        out.append(Block(parent=lat, elements=tuple(sorted(clique))))
    out.sort(key=lambda blk: blk.elements)
    return out


def homomorphisms(block: Block) -> list[Valuation]:
    """All two-valued homomorphisms on a block, one per atom, in atom order.

    The homomorphism attached to atom p sends x to 1 exactly when p <= x.
    """
    lat = block.parent
    out = []
    for p in block.atoms():
        assignment = tuple((x, int(lat.le(p, x))) for x in block.elements)
        val = Valuation(domain=block, assignment=assignment)
        if not val.verify():
            raise RuntimeError(
                f"atom {lat.names[p]!r} does not induce a homomorphism")
        out.append(val)
    return out
