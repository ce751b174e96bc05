"""Global valuation search: the finite Kochen-Specker question.

A global valuation is a family of two-valued homomorphisms, one per maximal
context, agreeing on overlaps.  Each homomorphism is pinned by the single
atom of its context sent to 1, so the search assigns {0,1} to atoms under an
exactly-one-per-context constraint with unit propagation (a 1 forces 0 on
every atom sharing a context, two 0s force the remaining atom to 1), then
re-verifies every candidate family law by law before reporting it.

Verdicts distinguish a closed search tree (``exhausted``) from an aborted
one (:class:`BudgetExceeded` is raised, never converted silently).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .contexts import Block, Valuation, blocks as enumerate_blocks
from .greechie import OrthoHypergraph
from .lattice import Lattice

FOUND = "found"
EXHAUSTED = "exhausted"

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(Exception):
    def __init__(self, message: str, nodes_explored: int):
        super().__init__(message)
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class GlobalValuation:
    """A verified compatible family plus the induced total element map."""

    valuations: tuple[Valuation, ...]
    total: dict[int, int]


@dataclass(frozen=True)
class SearchOutcome:
    verdict: str                 # FOUND or EXHAUSTED
    witness: object | None       # GlobalValuation, or a vertex->bit dict
    nodes_explored: int
    wall_time: float

    @property
    def found(self) -> bool:
        return self.verdict == FOUND


class _ExactlyOneSearch:
    """Backtracking over exactly-one-per-group bit assignments.

    Groups and variables keep their given order; branching always picks the
    first unsatisfied group and tries its candidates in ascending variable
    order, so the first witness is the lexicographically least one.
    """

    def __init__(self, nvars: int, groups: list[tuple[int, ...]]):
        self.nvars = nvars
        self.groups = groups
        self.var_groups: list[list[int]] = [[] for _ in range(nvars)]
        for gi, group in enumerate(groups):
            for v in group:
                self.var_groups[v].append(gi)

    def run(self, budget: int, leaf, seed_zeros=()):
        value = [-1] * self.nvars
        ones = [0] * len(self.groups)
        unset = [len(g) for g in self.groups]
        nodes = 0
        start = time.perf_counter()

        def undo(trail):
            while trail:
                x = trail.pop()
                if value[x] == 1:
                    for gi in self.var_groups[x]:
                        ones[gi] -= 1
                for gi in self.var_groups[x]:
                    unset[gi] += 1
                value[x] = -1

        def propagate(x0: int, v0: int, trail) -> bool:
            queue = [(x0, v0)]
            while queue:
                x, v = queue.pop()
                if value[x] == v:
                    continue
                if value[x] == 1 - v:
                    return False
                value[x] = v
                trail.append(x)
                # update every counter of x before conflict checks, so that
                # undo can restore them unconditionally
                for gi in self.var_groups[x]:
                    unset[gi] -= 1
                    if v == 1:
                        ones[gi] += 1
                for gi in self.var_groups[x]:
                    if v == 1:
                        if ones[gi] > 1:
                            return False
                        for y in self.groups[gi]:
                            if y != x and value[y] == -1:
                                queue.append((y, 0))
                    elif ones[gi] == 0:
                        if unset[gi] == 0:
                            return False
                        if unset[gi] == 1:
                            rest = next(y for y in self.groups[gi]
                                        if value[y] == -1)
                            queue.append((rest, 1))
            return True

        def recurse():
            nonlocal nodes
            gi = next((i for i in range(len(self.groups)) if ones[i] == 0),
                      None)
            if gi is None:
                assignment = [v if v != -1 else 0 for v in value]
                return leaf(assignment)
            for x in self.groups[gi]:
                if value[x] != -1:
                    continue
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(
                        f"search aborted after {budget} nodes", nodes)
                trail: list[int] = []
                if propagate(x, 1, trail):
                    witness = recurse()
                    if witness is not None:
                        return witness
                undo(trail)
            return None

        trail0: list[int] = []
        witness = None
        if all(propagate(x, 0, trail0) for x in seed_zeros):
            witness = recurse()
        elapsed = time.perf_counter() - start
        if witness is None:
            return SearchOutcome(EXHAUSTED, None, nodes, elapsed)
        return SearchOutcome(FOUND, witness, nodes, elapsed)


def _atom_variables(lat: Lattice, block_list: list[Block]):
    """Ascending atom ids across all contexts, with index lookup."""
    atom_ids = sorted({p for blk in block_list for p in blk.atoms()})
    return atom_ids, {p: i for i, p in enumerate(atom_ids)}


def _family_from_bits(lat: Lattice, block_list, atom_ids, bits):
    chosen = {atom_ids[i] for i, b in enumerate(bits) if b == 1}
    vals = []
    for blk in block_list:
        picked = [p for p in blk.atoms() if p in chosen]
        if len(picked) != 1:
            return None
        p = picked[0]
        assignment = tuple((x, int(lat.le(p, x))) for x in blk.elements)
        vals.append(Valuation(domain=blk, assignment=assignment))
    return tuple(vals)


def verify_global_valuation(lat: Lattice, family, agree_with=None) -> dict[int, int] | None:
    """Re-check a candidate family against every defining law.

    Returns the induced total map when the family is a genuine global
    valuation (each member a homomorphism, members agreeing on overlaps,
    complements flipped), else None.  When ``agree_with`` is a Valuation,
    each member must also match it on the intersection of their domains.
    """
    total: dict[int, int] = {}
    for val in family:
        if not val.verify():
            return None
        for x, b in val.assignment:
            if total.setdefault(x, b) != b:
                return None
    for x, b in total.items():
        comp = lat.comp(x)
        if comp in total and total[comp] != 1 - b:
            return None
    if agree_with is not None:
        constrained = agree_with.as_dict()
        for val in family:
            for x, b in val.assignment:
                if x in constrained and constrained[x] != b:
                    return None
    return total


def global_valuation(lat: Lattice, block_list=None,
                     budget: int = DEFAULT_BUDGET,
                     agree_with: Valuation | None = None) -> SearchOutcome:
    """Decide whether the lattice admits a global valuation.

    ``agree_with`` seeds the search with a homomorphism that every context
    restriction must match on its domain (used for compatible
    actualizations); atoms incompatible with it are fixed to 0 up front.
    """
    if block_list is None:
        block_list = enumerate_blocks(lat)
    atom_ids, index = _atom_variables(lat, block_list)
    groups = [tuple(index[p] for p in blk.atoms()) for blk in block_list]

    seed_zeros: list[int] = []
    if agree_with is not None:
        constrained = agree_with.as_dict()
        for blk in block_list:
            bound = lat.top
            for x in blk.elements:
                if x in constrained:
                    bound = lat.meet(bound,
                                     x if constrained[x] else lat.comp(x))
            for p in blk.atoms():
                if not lat.le(p, bound):
                    seed_zeros.append(index[p])

    def leaf(bits):
        family = _family_from_bits(lat, block_list, atom_ids, bits)
        if family is None:
            return None
        total = verify_global_valuation(lat, family, agree_with=agree_with)
        if total is None:
            return None
        return GlobalValuation(valuations=family, total=total)

    search = _ExactlyOneSearch(len(atom_ids), groups)
    return search.run(budget, leaf, seed_zeros=sorted(set(seed_zeros)))


def check_coloring(graph: OrthoHypergraph,
                   budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Search for a {0,1} vertex map with exactly one 1 per edge."""
    index = {name: i for i, name in enumerate(graph.vertices)}
    groups = [tuple(index[v] for v in edge) for edge in graph.edges]

    def leaf(bits):
        if any(sum(bits[index[v]] for v in edge) != 1 for edge in graph.edges):
            return None
        return {name: bits[index[name]] for name in graph.vertices}

    search = _ExactlyOneSearch(len(graph.vertices), groups)
    return search.run(budget, leaf)


@dataclass(frozen=True)
class CnfDocument:
    """A DIMACS CNF whose models are exactly the exactly-one assignments."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    var_names: tuple[str, ...]

    def to_dimacs(self) -> str:
        lines = [f"c atom {name} = {i + 1}"
                 for i, name in enumerate(self.var_names)]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"


def _exactly_one_cnf(names: list[str], groups: list[tuple[int, ...]]) -> CnfDocument:
    clauses: list[tuple[int, ...]] = []
    for group in groups:
        clauses.append(tuple(v + 1 for v in group))
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                clauses.append((-(group[i] + 1), -(group[j] + 1)))
    return CnfDocument(num_vars=len(names), clauses=tuple(clauses),
                       var_names=tuple(names))


def to_cnf(obj: Lattice | OrthoHypergraph) -> CnfDocument:
    """Encode the valuation/coloring question as DIMACS CNF.

    One variable per atom (vertex); per context (edge) an at-least-one
    clause plus pairwise at-most-one clauses.  Shared atoms share variables,
    which makes the overlap-equality constraints implicit.
    """
    if isinstance(obj, OrthoHypergraph):
        index = {name: i for i, name in enumerate(obj.vertices)}
        groups = [tuple(index[v] for v in edge) for edge in obj.edges]
        return _exactly_one_cnf(list(obj.vertices), groups)
    block_list = enumerate_blocks(obj)
    atom_ids, index = _atom_variables(obj, block_list)
    groups = [tuple(index[p] for p in blk.atoms()) for blk in block_list]
    return _exactly_one_cnf([obj.names[p] for p in atom_ids], groups)


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    num_vars = 0
    clauses: list[tuple[int, ...]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            num_vars = int(line.split()[2])
            continue
        lits = tuple(int(tok) for tok in line.split() if tok != "0")
        if lits:
            clauses.append(lits)
    return num_vars, clauses


def dimacs_satisfiable(text: str, budget: int = DEFAULT_BUDGET) -> bool:
    """Plain DPLL over parsed DIMACS text, independent of the lattice
    search; used to cross-check the CNF export."""
    num_vars, clauses = parse_dimacs(text)
    nodes = 0

    def simplify(cls, lit):
        out = []
        for clause in cls:
            if lit in clause:
                continue
            reduced = tuple(l for l in clause if l != -lit)
            if not reduced:
                return None
            out.append(reduced)
        return out

    def dpll(cls) -> bool:
        nonlocal nodes
        while True:
            unit = next((c[0] for c in cls if len(c) == 1), None)
            if unit is None:
                break
            cls = simplify(cls, unit)
            if cls is None:
                return False
        if not cls:
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"DPLL aborted after {budget} nodes", nodes)
        lit = min(abs(l) for l in cls[0])
        lit = next(l for l in cls[0] if abs(l) == lit)
        for choice in (lit, -lit):
            reduced = simplify(cls, choice)
            if reduced is not None and dpll(reduced):
                return True
        return False

    return dpll(clauses)
