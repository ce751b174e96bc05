"""Standard desk-scale instances: the lattices, diagrams and hypergraphs
exercised by the test suite and shipped as corpus fixtures.

The stateless diagram is the one genuinely hard-to-find object here.  It is
the point/line incidence configuration of a cubic bipartite graph of girth
10 on 35 + 35 vertices (given below by its LCF word): girth 10 of the
incidence graph means blocks pairwise share at most one atom and no loops of
order 3 or 4 occur, so the diagram pastes to an orthomodular lattice.  Every
atom lies in exactly 3 blocks while the block count 35 is not divisible by
3, so no exactly-one-per-block assignment exists: summing "exactly one atom
true per block" over the 35 blocks counts every true atom 3 times, forcing
35 == 0 (mod 3).  The pasted lattice therefore admits no global valuation,
which the backtracking search confirms by exhausting its tree.
"""

from __future__ import annotations

import string
from collections import deque

from .greechie import GreechieDiagram, OrthoHypergraph
from .lattice import Lattice, build_lattice, product

# LCF word of a cubic bipartite girth-10 graph on 70 vertices.  The
# construction below re-derives and re-checks nothing: parsing validates the
# diagram invariants and the paste is re-validated axiom by axiom.
_GIRTH10_LCF = (-29, -19, -13, 13, 21, -27, 27, 33, -13, 13, 19, -21, -33, 29)


def boolean_lattice(k: int) -> Lattice:
    """The Boolean algebra 2^k with subsets named as bitstrings."""
    if not 1 <= k <= 8:
        raise ValueError("k out of the desk-scale range")
    n = 1 << k
    full = n - 1
    pairs = [(a, b) for a in range(n) for b in range(n) if a & b == a]
    ortho = [full ^ a for a in range(n)]
    names = [format(a, f"0{k}b") for a in range(n)]
    return build_lattice(pairs, ortho, names)


def mo_lattice(k: int) -> Lattice:
    """MO(k): the horizontal sum of k four-element blocks (2k atoms)."""
    if not 1 <= k <= 26:
        raise ValueError("k out of the desk-scale range")
    n = 2 * k + 2
    top = n - 1
    names = ["0"]
    ortho = [top] + [0] * (2 * k) + [0]
    pairs = []
    for i in range(k):
        a = 1 + 2 * i
        names += [string.ascii_lowercase[i], string.ascii_lowercase[i] + "'"]
        ortho[a], ortho[a + 1] = a + 1, a
        pairs += [(0, a), (0, a + 1), (a, top), (a + 1, top)]
    names.append("1")
    pairs.append((0, top))
    return build_lattice(pairs, ortho, names)


def chain_diagram(nblocks: int) -> GreechieDiagram:
    """A chain of rank-3 blocks, consecutive blocks sharing one atom."""
    if not 1 <= nblocks <= 12:
        raise ValueError("chain length out of the desk-scale range")
    letters = string.ascii_lowercase
    blocks = [tuple(letters[2 * i + j] for j in range(3))
              for i in range(nblocks)]
    return GreechieDiagram.from_blocks(blocks)


def parity_hypergraph() -> OrthoHypergraph:
    """Nine edges of size 4 with every vertex in exactly two edges.

    Uncolorable by parity: one true vertex per edge makes the total count 9,
    but every vertex is counted twice, so the total must be even.
    """
    vertices: list[str] = []
    edges: dict[int, list[str]] = {i: [] for i in range(9)}
    for i in range(9):
        for step in (1, 2):
            j = (i + step) % 9
            v = f"v{i}{j}"
            vertices.append(v)
            edges[i].append(v)
            edges[j].append(v)
    return OrthoHypergraph(vertices=tuple(vertices),
                           edges=tuple(tuple(edges[i]) for i in range(9)))


def stateless_blocks() -> list[tuple[str, str, str]]:
    """Blocks of the 35-atom, 35-block diagram described in the module
    docstring, in sorted order with atoms named p00..p34."""
    n = 70
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        adj[i].add((i + 1) % n)
        adj[(i + 1) % n].add(i)
    word = _GIRTH10_LCF * (n // len(_GIRTH10_LCF))
    for i, d in enumerate(word):
        j = (i + d) % n
        adj[i].add(j)
        adj[j].add(i)

    side = [-1] * n
    side[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if side[v] == -1:
                side[v] = 1 - side[u]
                queue.append(v)
    points = [v for v in range(n) if side[v] == 0]
    label = {v: f"p{i:02d}" for i, v in enumerate(points)}
    blocks = [tuple(sorted(label[w] for w in adj[v]))
              for v in range(n) if side[v] == 1]
    blocks.sort()
    return blocks


def stateless_diagram() -> GreechieDiagram:
    """A rank-3 diagram whose pasting admits no global valuation."""
    return GreechieDiagram.from_blocks(stateless_blocks())


def corpus_lattices() -> dict[str, Lattice]:
    """Directly constructed corpus lattices (the .json fixtures)."""
    mo2 = mo_lattice(2)
    return {
        "boolean_2_1": boolean_lattice(1),
        "boolean_2_2": boolean_lattice(2),
        "boolean_2_3": boolean_lattice(3),
        "boolean_2_4": boolean_lattice(4),
        "mo2": mo2,
        "mo3": mo_lattice(3),
        "prod_2_x_mo2": product(boolean_lattice(1), mo2),
        "prod_mo2_x_mo2": product(mo2, mo2),
    }


def corpus_diagrams() -> dict[str, GreechieDiagram]:
    """Corpus Greechie diagrams (the .gd fixtures)."""
    out = {f"chain{k}": chain_diagram(k) for k in range(2, 6)}
    out["stateless_35"] = stateless_diagram()
    return out


def corpus_hypergraphs() -> dict[str, OrthoHypergraph]:
    """Corpus colorability hypergraphs (the .hg fixtures)."""
    return {"parity_18_9": parity_hypergraph()}
