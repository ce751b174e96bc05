"""Finite ortholattices with exhaustive axiom validation.

A lattice is stored as an explicit n x n order matrix together with an
orthocomplement map.  Meets and joins are computed once, by scanning
lower/upper bound sets, and memoized in n x n tables; all later operations
assume a validated structure.  Desk scale (n up to a few hundred) is the
design point, so clarity wins over asymptotics throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class LatticeError(Exception):
    """Base class for structured rejections raised during validation."""


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class InvolutionViolation(LatticeError):
    pass


class ComplementLawViolation(LatticeError):
    pass


class OrthomodularityViolation(LatticeError):
    pass


class DefinitionMismatch(RuntimeError):
    """Two definitions of the center disagreed: an implementation bug."""


class Lattice:
    """A validated finite orthomodular lattice.

    Instances are immutable once built (arrays are frozen) and may be shared
    freely across threads.  Use :func:`build_lattice` to construct one; the
    constructor itself performs no validation.
    """

    __slots__ = ("n", "leq", "ortho", "meet_table", "join_table",
                 "bottom", "top", "names")

    def __init__(self, n, leq, ortho, meet_table, join_table,
                 bottom, top, names):
        self.n: int = n
        self.leq: np.ndarray = leq
        self.ortho: np.ndarray = ortho
        self.meet_table: np.ndarray = meet_table
        self.join_table: np.ndarray = join_table
        self.bottom: int = bottom
        self.top: int = top
        self.names: tuple[str, ...] = names
        for arr in (leq, ortho, meet_table, join_table):
            arr.setflags(write=False)

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[a, b])

    def comp(self, a: int) -> int:
        return int(self.ortho[a])

    def atoms(self) -> tuple[int, ...]:
        """Elements covering the bottom."""
        out = []
        for x in range(self.n):
            if x == self.bottom:
                continue
            below = [y for y in range(self.n)
                     if self.leq[y, x] and y != x and y != self.bottom]
            if not below:
                out.append(x)
        return tuple(out)

    def covers(self) -> list[tuple[int, int]]:
        """All pairs (x, y) with y covering x, for Hasse diagrams."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        inbetween = lt @ lt
        cov = lt & ~inbetween
        return [(int(a), int(b)) for a, b in np.argwhere(cov)]

    def name(self, a: int) -> str:
        return self.names[a]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self.leq, other.leq)
                and np.array_equal(self.ortho, other.ortho))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, bottom={self.names[self.bottom]!r}, top={self.names[self.top]!r})"


@dataclass(frozen=True)
class TripleReport:
    """Distributivity facts about one ordered triple (a, b, c)."""

    a: int
    b: int
    c: int
    holds_d: bool       # (a v b) ^ c == (a ^ c) v (b ^ c)
    holds_dstar: bool   # (a ^ b) v c == (a v c) ^ (b v c)
    holds_t: bool       # D and D* under all six permutations


def _transitive_closure(rel: np.ndarray) -> np.ndarray:
    closed = rel.copy()
    np.fill_diagonal(closed, True)
    while True:
        nxt = closed | (closed @ closed)
        if np.array_equal(nxt, closed):
            return closed
        closed = nxt


def _meet_join_tables(leq: np.ndarray, names) -> tuple[np.ndarray, np.ndarray]:
    """Compute glb/lub tables, or raise NotALattice at the first bad pair."""
    n = leq.shape[0]
    meet = np.full((n, n), -1, dtype=np.int32)
    join = np.full((n, n), -1, dtype=np.int32)
    for a in range(n):
        for b in range(a, n):
            lw = np.flatnonzero(leq[:, a] & leq[:, b])
            # the glb is the unique lower bound above every other one
            cand = lw[leq[np.ix_(lw, lw)].all(axis=0)]
            if len(cand) != 1:
                raise NotALattice(
                    f"elements {names[a]!r} and {names[b]!r} have no unique meet")
            meet[a, b] = meet[b, a] = int(cand[0])
            up = np.flatnonzero(leq[a, :] & leq[b, :])
            cand = up[leq[np.ix_(up, up)].all(axis=1)]
            if len(cand) != 1:
                raise NotALattice(
                    f"elements {names[a]!r} and {names[b]!r} have no unique join")
            join[a, b] = join[b, a] = int(cand[0])
    return meet, join


def _first_false(ok: np.ndarray):
    """Index of the lexicographically first False entry, or None."""
    bad = np.argwhere(~ok)
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


def build_lattice(order_pairs, ortho, names=None) -> Lattice:
    """Validate and build an orthomodular lattice.

    ``order_pairs`` lists (a, b) meaning a <= b; the reflexive-transitive
    closure is taken, so listing only covering pairs is fine.  ``ortho`` is a
    length-n sequence mapping each element to its orthocomplement; its length
    fixes the element count.  Every axiom is checked exhaustively, in a fixed
    order, and the first violation (under lexicographic element order) is
    raised as a structured rejection.
    """
    ortho = np.asarray(list(ortho), dtype=np.int32)
    n = len(ortho)
    if n == 0:
        raise NotAPoset("empty element set")
    if names is None:
        names = tuple(f"e{i}" for i in range(n))
    else:
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise ValueError("names length does not match element count")
    if ortho.min() < 0 or ortho.max() >= n:
        raise ValueError("ortho maps outside the element range")

    rel = np.zeros((n, n), dtype=bool)
    for a, b in order_pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"order pair ({a}, {b}) outside the element range")
        rel[a, b] = True
    leq = _transitive_closure(rel)

    sym = leq & leq.T & ~np.eye(n, dtype=bool)
    w = _first_false(~sym)
    if w is not None:
        raise NotAPoset(
            f"order cycle through {names[w[0]]!r} and {names[w[1]]!r}")

    meet, join = _meet_join_tables(leq, names)

    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if len(bottoms) != 1 or len(tops) != 1:
        raise NotALattice("no unique bottom/top element")  # unreachable on a finite lattice
    bottom, top = int(bottoms[0]), int(tops[0])

    w = _first_false(ortho[ortho] == np.arange(n))
    if w is not None:
        raise InvolutionViolation(
            f"double complement of {names[w[0]]!r} is {names[ortho[ortho[w[0]]]]!r}")
    # De Morgan: ~(a v b) == ~a ^ ~b
    w = _first_false(ortho[join] == meet[np.ix_(ortho, ortho)])
    if w is not None:
        a, b = w
        raise InvolutionViolation(
            f"De Morgan fails on ({names[a]!r}, {names[b]!r})")

    w = _first_false(meet[np.arange(n), ortho] == bottom)
    if w is not None:
        raise ComplementLawViolation(
            f"{names[w[0]]!r} meets its complement above the bottom")

    # orthomodular law: x v (~x ^ (x v y)) == x v y
    inner = meet[ortho[:, None], join]
    om = join[np.arange(n)[:, None], inner]
    w = _first_false(om == join)
    if w is not None:
        x, y = w
        raise OrthomodularityViolation(
            f"orthomodular law fails on ({names[x]!r}, {names[y]!r})")

    return Lattice(n, leq, ortho, meet, join, bottom, top, names)


def meet(lat: Lattice, a: int, b: int) -> int:
    """Greatest lower bound; total on a valid lattice."""
    return lat.meet(a, b)


def join(lat: Lattice, a: int, b: int) -> int:
    """Least upper bound; total on a valid lattice."""
    return lat.join(a, b)


def _holds_d(lat: Lattice, a: int, b: int, c: int) -> bool:
    return lat.meet(lat.join(a, b), c) == lat.join(lat.meet(a, c), lat.meet(b, c))


def _holds_dstar(lat: Lattice, a: int, b: int, c: int) -> bool:
    return lat.join(lat.meet(a, b), c) == lat.meet(lat.join(a, c), lat.join(b, c))


_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def check_triple(lat: Lattice, a: int, b: int, c: int) -> TripleReport:
    """Evaluate the distributive conditions D, D* and T on (a, b, c)."""
    t = (a, b, c)
    holds_t = all(_holds_d(lat, t[i], t[j], t[k]) and _holds_dstar(lat, t[i], t[j], t[k])
                  for i, j, k in _PERMS)
    return TripleReport(a, b, c,
                        holds_d=_holds_d(lat, a, b, c),
                        holds_dstar=_holds_dstar(lat, a, b, c),
                        holds_t=holds_t)


def center_by_triples(lat: Lattice) -> tuple[int, ...]:
    """Central elements as z with (a, b, z)T for every pair a, b."""
    n = lat.n
    M, J = lat.meet_table, lat.join_table
    idx = np.arange(n)
    out = []
    for z in range(n):
        mz = M[:, z]          # a ^ z
        jz = J[:, z]          # a v z
        ok = (
            # z in the outer slot: (a v b) ^ z == (a ^ z) v (b ^ z), dual
            np.array_equal(M[J, z], J[np.ix_(mz, mz)])
            and np.array_equal(J[M, z], M[np.ix_(jz, jz)])
            # z in an inner slot: (z v b) ^ c == (z ^ c) v (b ^ c), dual
            and np.array_equal(M[jz[:, None], idx[None, :]], J[mz[None, :], M])
            and np.array_equal(J[mz[:, None], idx[None, :]], M[jz[None, :], J])
        )
        if ok:
            out.append(z)
    return tuple(out)


def center_by_decomposition(lat: Lattice) -> tuple[int, ...]:
    """Central elements as z decomposing every a as (a ^ z) v (a ^ ~z)."""
    n = lat.n
    M, J = lat.meet_table, lat.join_table
    idx = np.arange(n)
    return tuple(z for z in range(n)
                 if np.array_equal(J[M[:, z], M[:, lat.ortho[z]]], idx))


def center(lat: Lattice) -> tuple[int, ...]:
    """The set of central elements, computed two ways and cross-checked.

    Route one scans distributive triples ((a, b, z)T for all a, b); route two
    uses the decomposition a == (a ^ z) v (a ^ ~z) for all a.  A mismatch is
    an implementation bug, never valid input, and raises DefinitionMismatch.
    """
    by_triples = center_by_triples(lat)
    by_decomposition = center_by_decomposition(lat)
    if by_triples != by_decomposition:
        raise DefinitionMismatch(
            f"center definitions disagree: triples={by_triples}, "
            f"decomposition={by_decomposition}")
    return by_triples


def is_boolean(lat: Lattice) -> bool:
    """True iff the distributive law x ^ (y v z) == (x ^ y) v (x ^ z) holds."""
    n = lat.n
    M, J = lat.meet_table, lat.join_table
    for x in range(n):
        mx = M[x]
        if not np.array_equal(M[x, J], J[np.ix_(mx, mx)]):
            return False
    return True


def product(l1: Lattice, l2: Lattice, names=None) -> Lattice:
    """Direct product with componentwise operations.

    The center of a product is the product of the centers, which makes
    products the standard way to manufacture lattices with nontrivial
    central structure.
    """
    n1, n2 = l1.n, l2.n
    n = n1 * n2
    if names is None:
        names = tuple(f"({l1.names[i]},{l2.names[j]})"
                      for i in range(n1) for j in range(n2))
    leq = (l1.leq[:, None, :, None] & l2.leq[None, :, None, :]).reshape(n, n)
    ortho = (l1.ortho[:, None] * n2 + l2.ortho[None, :]).reshape(n)
    pairs = [(a, b) for a, b in np.argwhere(leq)]
    return build_lattice(pairs, ortho, names)
