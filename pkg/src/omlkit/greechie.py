"""Greechie orthogonality diagrams and their atomic pasting.

A diagram lists rank-3 blocks of atom names: each block pastes to its own
eight-element Boolean algebra, and blocks are glued along shared atoms.  The
classic admissibility conditions are enforced at parse time: blocks share at
most one atom, and the block-intersection graph has no loop of order 3 or 4
(such pastings fail to be ortholattices, resp. orthomodular).  The pasted
output is still run through the full lattice validator as a backstop.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import Lattice, build_lattice


class DiagramError(Exception):
    """Base class for diagram parse/validity errors."""


class WrongBlockSize(DiagramError):
    pass


class DuplicateAtomInBlock(DiagramError):
    pass


class BlocksShareTwoAtoms(DiagramError):
    pass


class ShortLoop(DiagramError):
    def __init__(self, message: str, cycle: tuple[int, ...]):
        super().__init__(message)
        self.cycle = cycle


@dataclass(frozen=True)
class GreechieDiagram:
    """Atoms plus rank-3 blocks, in input order."""

    atoms: tuple[str, ...]
    blocks: tuple[tuple[str, str, str], ...]

    @classmethod
    def from_blocks(cls, blocks) -> "GreechieDiagram":
        blocks = tuple(tuple(b) for b in blocks)
        atoms = _collect_atoms(blocks)
        _validate_blocks(blocks, lines=list(range(1, len(blocks) + 1)))
        return cls(atoms=atoms, blocks=blocks)


@dataclass(frozen=True)
class OrthoHypergraph:
    """Vertices plus edges of any size >= 2; colorability input only.

    Unlike a Greechie diagram this carries no pasting guarantees and is
    never turned into a lattice.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, ...], ...]


def _collect_atoms(blocks) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for block in blocks:
        for a in block:
            seen.setdefault(a, None)
    return tuple(seen)


def _validate_blocks(blocks, lines) -> None:
    for block, line in zip(blocks, lines):
        if len(block) != 3:
            raise WrongBlockSize(
                f"line {line}: block has {len(block)} atoms, expected 3")
        if len(set(block)) != 3:
            raise DuplicateAtomInBlock(f"line {line}: repeated atom in block")

    sets = [frozenset(b) for b in blocks]
    link: dict[tuple[int, int], str] = {}
    for i, j in combinations(range(len(sets)), 2):
        shared = sets[i] & sets[j]
        if len(shared) > 1:
            raise BlocksShareTwoAtoms(
                f"lines {lines[i]} and {lines[j]}: blocks share "
                f"{sorted(shared)!r}")
        if shared:
            link[(i, j)] = next(iter(shared))

    def linked(i: int, j: int):
        return link.get((i, j) if i < j else (j, i))

    # loop of order 3: three blocks pairwise glued along distinct atoms
    for i, j, k in combinations(range(len(sets)), 3):
        x, y, z = linked(i, j), linked(j, k), linked(i, k)
        if x and y and z and len({x, y, z}) == 3:
            raise ShortLoop(
                f"blocks {(lines[i], lines[j], lines[k])} form a loop of order 3",
                cycle=(i, j, k))

    # loop of order 4: a cyclic gluing along four distinct atoms with both
    # diagonals free (a glued diagonal would contain an order-3 loop)
    for quad in combinations(range(len(sets)), 4):
        a, b, c, d = quad
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            ring = [linked(cyc[t], cyc[(t + 1) % 4]) for t in range(4)]
            diag = (linked(cyc[0], cyc[2]), linked(cyc[1], cyc[3]))
            if all(ring) and len(set(ring)) == 4 and not any(diag):
                raise ShortLoop(
                    f"blocks {tuple(lines[t] for t in cyc)} form a loop of order 4",
                    cycle=cyc)


def _parse_lines(text: str):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        rows.append((lineno, tuple(stripped.split())))
    return rows


def parse_greechie(text: str) -> GreechieDiagram:
    """Parse a diagram: one block per non-comment line, atoms whitespace
    separated, '#' to end of line is a comment."""
    rows = _parse_lines(text)
    blocks = tuple(block for _, block in rows)
    lines = [lineno for lineno, _ in rows]
    _validate_blocks(blocks, lines)
    return GreechieDiagram(atoms=_collect_atoms(blocks), blocks=blocks)


def parse_hypergraph(text: str) -> OrthoHypergraph:
    """Parse the same line format into a bare hypergraph (edges of any
    size >= 2, no pasting conditions)."""
    rows = _parse_lines(text)
    for lineno, edge in rows:
        if len(edge) < 2:
            raise WrongBlockSize(f"line {lineno}: edge needs at least 2 vertices")
        if len(set(edge)) != len(edge):
            raise DuplicateAtomInBlock(f"line {lineno}: repeated vertex in edge")
    edges = tuple(edge for _, edge in rows)
    return OrthoHypergraph(vertices=_collect_atoms(edges), edges=edges)


def to_hypergraph(diagram: GreechieDiagram) -> OrthoHypergraph:
    """Forgetful conversion: every block becomes an edge."""
    return OrthoHypergraph(vertices=diagram.atoms, edges=diagram.blocks)


def paste(diagram: GreechieDiagram) -> Lattice:
    """Paste the diagram's blocks into a validated orthomodular lattice.

    Elements are 0, 1, the atoms, and one coatom ~a per atom a (so coatoms
    arising in different blocks over the same atom are identified).  The
    order is generated by 0 < a, a < ~b for distinct co-occurring a, b, and
    ~a < 1.  Admissible diagrams always validate; a rejection here means the
    pasting rule itself is broken.
    """
    atoms = diagram.atoms
    m = len(atoms)
    index = {a: i for i, a in enumerate(atoms)}
    bottom = 0
    top = 2 * m + 1
    atom_id = {a: 1 + index[a] for a in atoms}
    coatom_id = {a: 1 + m + index[a] for a in atoms}

    names = ["0"] + list(atoms) + [f"~{a}" for a in atoms] + ["1"]
    ortho = list(range(2 * m + 2))
    ortho[bottom], ortho[top] = top, bottom
    for a in atoms:
        ortho[atom_id[a]] = coatom_id[a]
        ortho[coatom_id[a]] = atom_id[a]

    pairs = [(bottom, top)]
    for a in atoms:
        pairs.append((bottom, atom_id[a]))
        pairs.append((coatom_id[a], top))
    for block in diagram.blocks:
        for a in block:
            for b in block:
                if a != b:
                    pairs.append((atom_id[a], coatom_id[b]))

    return build_lattice(pairs, ortho, names)
