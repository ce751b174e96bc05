"""The possibility operator and the modal layer over a finite lattice.

Every finite orthomodular lattice is complete, hence carries a canonical
possibility operator sending x to the least central element above it.  The
image of that operator generates a Boolean subalgebra, the possibility
space: the algebra of "quantum possibilities" attached to the lattice.  The
operator satisfies seven saturation laws (checked exhaustively here), is the
identity exactly on Boolean lattices, and supports the central equivalence
of this toolkit: a global valuation exists iff some two-valued homomorphism
on the possibility space extends to a compatible family on the contexts.

The modal layer is built inside the lattice itself with respect to its own
center.  For irreducible lattices (center {0, 1}) the possibility space is
trivial and the equivalence degenerates to plain global-valuation existence,
so the interesting test geometry comes from reducible lattices: products and
multi-block pastings, whose centers are nontrivial by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contexts import Block, Valuation, blocks as enumerate_blocks, homomorphisms
from .lattice import Lattice, center, is_boolean
from .valuations import (BudgetExceeded, DEFAULT_BUDGET, SearchOutcome,
                         global_valuation)


class NotBoolean(Exception):
    pass


class Inconclusive(Exception):
    """An inner search ran out of budget; neither side is trustworthy."""


@dataclass(frozen=True)
class ModalLayer:
    """A lattice with its center, possibility operator and possibility space."""

    parent: Lattice
    center_set: tuple[int, ...]
    diamond_map: tuple[int, ...]
    space: Block


def modal_layer(lat: Lattice) -> ModalLayer:
    """Compute the canonical modal layer of a validated lattice."""
    zs = center(lat)
    dmap = []
    for x in range(lat.n):
        above = [z for z in zs if lat.le(x, z)]
        least = above[0]
        for z in above[1:]:
            least = lat.meet(least, z)
        if least not in above or not lat.le(x, least):
            raise RuntimeError(
                f"center is not meet-closed above {lat.names[x]!r}")
        dmap.append(least)

    image = sorted(set(dmap))
    members = set(image)
    while True:
        fresh = set()
        for x in members:
            if lat.comp(x) not in members:
                fresh.add(lat.comp(x))
            for y in members:
                for v in (lat.meet(x, y), lat.join(x, y)):
                    if v not in members:
                        fresh.add(v)
        if not fresh:
            break
        members |= fresh
    if not members <= set(zs):
        raise RuntimeError("possibility space escaped the center")
    space = Block(parent=lat, elements=tuple(sorted(members)))
    return ModalLayer(parent=lat, center_set=tuple(zs),
                      diamond_map=tuple(dmap), space=space)


def diamond(layer: ModalLayer, x: int) -> int:
    """The least central element above x."""
    return layer.diamond_map[x]


def possibility_space(layer: ModalLayer) -> Block:
    """The Boolean subalgebra generated by the possibility image."""
    return layer.space


def possibility_homomorphisms(layer: ModalLayer) -> list[Valuation]:
    """All two-valued homomorphisms on the possibility space."""
    return homomorphisms(layer.space)


@dataclass(frozen=True)
class AxiomCheck:
    key: str
    formula: str
    holds: bool
    witness: tuple[str, ...] | None


def verify_modal_axioms(layer: ModalLayer) -> list[AxiomCheck]:
    """Exhaustively evaluate the seven saturation laws of the operator.

    Failures are report content with witnesses; on a layer built by
    :func:`modal_layer` over a valid lattice they indicate a bug.
    """
    lat = layer.parent
    n = lat.n
    M, J, O = lat.meet_table, lat.join_table, lat.ortho
    D = np.asarray(layer.diamond_map)
    idx = np.arange(n)
    checks: list[AxiomCheck] = []

    def names(*elements):
        return tuple(lat.names[int(e)] for e in elements)

    def push(key, formula, ok_mask, unary):
        if bool(np.all(ok_mask)):
            checks.append(AxiomCheck(key, formula, True, None))
            return
        w = np.argwhere(~np.atleast_1d(ok_mask))[0]
        witness = names(w[0]) if unary else names(*w)
        checks.append(AxiomCheck(key, formula, False, witness))

    push("expansion", "x <= <>x", lat.leq[idx, D], unary=True)
    push("zero", "<>0 == 0", np.array([D[lat.bottom] == lat.bottom]),
         unary=True)
    push("idempotent", "<><>x == <>x", D[D] == D, unary=True)
    push("join_additive", "<>(x v y) == <>x v <>y",
         D[J] == J[np.ix_(D, D)], unary=False)
    push("central_split", "y == (y ^ <>x) v (y ^ ~<>x)",
         J[M[D][:, :], M[O[D]][:, :]] == idx[None, :], unary=False)
    push("meet_stable", "<>(x ^ <>y) == <>x ^ <>y",
         D[M[:, D]] == M[np.ix_(D, D)], unary=False)
    push("complement_bound", "~<>x ^ <>y <= <>(~x ^ (y v x))",
         lat.leq[M[np.ix_(O[D], D)], D[M[O[:, None], J]]], unary=False)
    return checks


def actualization_compatible(layer: ModalLayer, f: Valuation,
                             budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Search for a global valuation whose context restrictions agree with
    f on every intersection with the possibility space."""
    if f.domain.elements != layer.space.elements:
        raise ValueError("homomorphism is not defined on the possibility space")
    if not f.verify():
        raise ValueError("assignment is not a homomorphism")
    return global_valuation(layer.parent, budget=budget, agree_with=f)


@dataclass(frozen=True)
class MksReport:
    """Both sides of the valuation/actualization equivalence."""

    side_a: SearchOutcome
    side_b: tuple[tuple[Valuation, SearchOutcome], ...]

    @property
    def admits_global_valuation(self) -> bool:
        return self.side_a.found

    @property
    def some_homomorphism_actualizes(self) -> bool:
        return any(outcome.found for _, outcome in self.side_b)

    @property
    def agreement(self) -> bool:
        return self.admits_global_valuation == self.some_homomorphism_actualizes


def mks_check(layer: ModalLayer, budget: int = DEFAULT_BUDGET) -> MksReport:
    """Compute both sides of the equivalence by independent exhaustive
    searches and report whether they agree.

    Side A asks for a global valuation outright; side B quantifies over all
    two-valued homomorphisms on the possibility space and asks whether any
    admits a compatible actualization.  Disagreement on genuine verdicts is
    an implementation bug; an exhausted budget raises Inconclusive instead
    of guessing.
    """
    try:
        side_a = global_valuation(layer.parent, budget=budget)
        side_b = tuple(
            (f, actualization_compatible(layer, f, budget=budget))
            for f in possibility_homomorphisms(layer))
    except BudgetExceeded as err:
        raise Inconclusive(
            f"budget exhausted while checking the equivalence: {err}") from err
    return MksReport(side_a=side_a, side_b=side_b)


def classical_consequences(layer: ModalLayer, p: int) -> tuple[int, ...]:
    """Elements of the possibility space above the possibility of p."""
    dp = layer.diamond_map[p]
    return tuple(x for x in layer.space.elements if layer.parent.le(dp, x))


@dataclass(frozen=True)
class CorrespondenceReport:
    homomorphisms_checked: int
    holds: bool
    witness: tuple[str, str] | None


def classical_correspondence_check(layer: ModalLayer) -> CorrespondenceReport:
    """On a Boolean lattice, v(<>x) == v(x) for every homomorphism v.

    The operator collapses to the identity classically, so possibility adds
    no expressive power there; raising NotBoolean keeps the claim scoped to
    where it is made.
    """
    lat = layer.parent
    if not is_boolean(lat):
        raise NotBoolean("the correspondence is claimed for Boolean lattices only")
    block_list = enumerate_blocks(lat)
    if len(block_list) != 1:
        raise RuntimeError("a Boolean lattice must be its own unique context")
    checked = 0
    for v in homomorphisms(block_list[0]):
        assignment = v.as_dict()
        for x in range(lat.n):
            if assignment[layer.diamond_map[x]] != assignment[x]:
                return CorrespondenceReport(
                    homomorphisms_checked=checked, holds=False,
                    witness=(lat.names[x], lat.names[layer.diamond_map[x]]))
        checked += 1
    return CorrespondenceReport(homomorphisms_checked=checked, holds=True,
                                witness=None)
