"""omlkit: finite orthomodular lattices, contexts, global valuations and
the modal possibility operator."""

from .contexts import Block, Valuation, blocks, commutes, homomorphisms
from .greechie import (DiagramError, GreechieDiagram, OrthoHypergraph,
                       parse_greechie, parse_hypergraph, paste, to_hypergraph)
from .lattice import (ComplementLawViolation, DefinitionMismatch,
                      InvolutionViolation, Lattice, LatticeError, NotALattice,
                      NotAPoset, OrthomodularityViolation, TripleReport,
                      build_lattice, center, center_by_decomposition,
                      center_by_triples, check_triple, is_boolean, join,
                      meet, product)
from .modal import (AxiomCheck, CorrespondenceReport, Inconclusive, MksReport,
                    ModalLayer, NotBoolean, actualization_compatible,
                    classical_consequences, classical_correspondence_check,
                    diamond, mks_check, modal_layer, possibility_homomorphisms,
                    possibility_space, verify_modal_axioms)
from .valuations import (BudgetExceeded, CnfDocument, DEFAULT_BUDGET,
                         GlobalValuation, SearchOutcome, check_coloring,
                         dimacs_satisfiable, global_valuation, to_cnf,
                         verify_global_valuation)

__all__ = [
    "Block", "Valuation", "blocks", "commutes", "homomorphisms",
    "DiagramError", "GreechieDiagram", "OrthoHypergraph", "parse_greechie",
    "parse_hypergraph", "paste", "to_hypergraph",
    "ComplementLawViolation", "DefinitionMismatch", "InvolutionViolation",
    "Lattice", "LatticeError", "NotALattice", "NotAPoset",
    "OrthomodularityViolation", "TripleReport", "build_lattice", "center",
    "center_by_decomposition", "center_by_triples", "check_triple",
    "is_boolean", "join", "meet", "product",
    "AxiomCheck", "CorrespondenceReport", "Inconclusive", "MksReport",
    "ModalLayer", "NotBoolean", "actualization_compatible",
    "classical_consequences", "classical_correspondence_check", "diamond",
    "mks_check", "modal_layer", "possibility_homomorphisms",
    "possibility_space", "verify_modal_axioms",
    "BudgetExceeded", "CnfDocument", "DEFAULT_BUDGET", "GlobalValuation",
    "SearchOutcome", "check_coloring", "dimacs_satisfiable",
    "global_valuation", "to_cnf", "verify_global_valuation",
]
