"""Command-line front end.

Three subcommands: ``validate`` (axiom check with structured rejections),
``analyze`` (center, contexts, possibility operator, valuation and
equivalence verdicts as a JSON report) and ``export`` (DOT Hasse diagram or
DIMACS CNF).  Exit codes: 0 ok, 1 semantic failure, 2 format error,
3 budget exceeded.

Reports are deterministic: keys are sorted, searches are sequential, and
wall-clock timings are kept out of the report unless --timings is given, so
two runs on the same input produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .contexts import blocks
from .documents import FormatError, dot_hasse, load_input
from .greechie import DiagramError, paste
from .lattice import LatticeError, center
from .modal import (classical_consequences, mks_check, modal_layer,
                    possibility_homomorphisms)
from .valuations import (BudgetExceeded, DEFAULT_BUDGET, global_valuation,
                         to_cnf)

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_FORMAT = 2
EXIT_BUDGET = 3


def _load(path):
    kind, obj = load_input(path)
    if kind == "diagram":
        return obj, paste(obj)
    return None, obj


def cmd_validate(args) -> int:
    try:
        diagram, lat = _load(args.path)
    except FormatError as err:
        print(f"format error: {err}")
        return EXIT_FORMAT
    except (LatticeError, DiagramError) as err:
        print(f"rejected: {type(err).__name__}: {err}")
        return EXIT_SEMANTIC
    summary = f"accepted: n={lat.n}, bottom={lat.names[lat.bottom]!r}, top={lat.names[lat.top]!r}"
    if diagram is not None:
        summary += f" (pasted from {len(diagram.atoms)} atoms, {len(diagram.blocks)} blocks)"
    print(summary)
    return EXIT_OK


def _witness_atoms(lat, outcome):
    if not outcome.found:
        return None
    return {lat.names[x]: bit for x, bit in sorted(outcome.witness.total.items())
            if x in set(lat.atoms())}


def cmd_analyze(args) -> int:
    try:
        diagram, lat = _load(args.path)
    except FormatError as err:
        print(f"format error: {err}")
        return EXIT_FORMAT
    except (LatticeError, DiagramError) as err:
        print(f"rejected: {type(err).__name__}: {err}")
        return EXIT_SEMANTIC

    budget = args.budget
    want_ks = args.ks or args.mks
    block_list = blocks(lat)
    zs = center(lat)
    report: dict = {
        "command": "analyze",
        "input": str(args.path),
        "budget": budget,
        "lattice": {
            "n": lat.n,
            "bottom": lat.names[lat.bottom],
            "top": lat.names[lat.top],
            "center_size": len(zs),
            "context_count": len(block_list),
        },
    }
    if diagram is not None:
        report["diagram"] = {"atoms": len(diagram.atoms),
                             "blocks": len(diagram.blocks)}
    if args.center:
        report["center"] = [lat.names[z] for z in zs]
    if args.blocks:
        report["contexts"] = [list(blk.element_names()) for blk in block_list]

    exit_code = EXIT_OK
    timings: dict[str, float] = {}
    layer = None
    if args.diamond or args.mks or args.cons is not None:
        layer = modal_layer(lat)
    if args.diamond:
        image = sorted(set(layer.diamond_map))
        report["possibility"] = {
            "operator": {lat.names[x]: lat.names[d]
                         for x, d in enumerate(layer.diamond_map)},
            "quantum_possibilities": [lat.names[x] for x in image],
            "space": [lat.names[x] for x in layer.space.elements],
        }

    try:
        if want_ks:
            outcome = global_valuation(lat, block_list=block_list, budget=budget)
            timings["ks"] = outcome.wall_time
            report["ks"] = {
                "verdict": outcome.verdict,
                "nodes_explored": outcome.nodes_explored,
                "witness": _witness_atoms(lat, outcome),
            }
        if args.mks:
            mks = mks_check(layer, budget=budget)
            timings["mks"] = (mks.side_a.wall_time
                              + sum(o.wall_time for _, o in mks.side_b))
            report["mks"] = {
                "side_a": mks.side_a.verdict,
                "side_b_any": mks.some_homomorphism_actualizes,
                "per_homomorphism": [
                    {"f": {lat.names[x]: bit for x, bit in f.assignment},
                     "verdict": outcome.verdict}
                    for f, outcome in mks.side_b],
                "agreement": mks.agreement,
            }
            if not mks.agreement:
                exit_code = EXIT_SEMANTIC
    except BudgetExceeded as err:
        report["error"] = {"type": "BudgetExceeded",
                           "nodes_explored": err.nodes_explored}
        exit_code = EXIT_BUDGET

    if args.cons is not None:
        target = _resolve_element(lat, args.cons)
        cons = classical_consequences(layer, target)
        report["consequences"] = {
            "of": lat.names[target],
            "possibility": lat.names[layer.diamond_map[target]],
            "set": [lat.names[x] for x in cons],
        }
    if args.timings:
        report["timings"] = timings

    print(json.dumps(report, indent=2, sort_keys=True))
    return exit_code


def _resolve_element(lat, token: str) -> int:
    if token in lat.names:
        return lat.names.index(token)
    try:
        x = int(token)
    except ValueError:
        raise FormatError(f"unknown element {token!r}") from None
    if not 0 <= x < lat.n:
        raise FormatError(f"element id {x} out of range")
    return x


def cmd_export(args) -> int:
    try:
        _, lat = _load(args.path)
        if args.dot:
            payload = dot_hasse(lat)
        else:
            payload = to_cnf(lat).to_dimacs()
    except FormatError as err:
        print(f"format error: {err}")
        return EXIT_FORMAT
    except (LatticeError, DiagramError) as err:
        print(f"rejected: {type(err).__name__}: {err}")
        return EXIT_SEMANTIC
    Path(args.output).write_text(payload, encoding="utf-8")
    print(f"wrote {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omlkit",
        description="finite orthomodular lattice toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="check every lattice axiom")
    p_val.add_argument("path")
    p_val.set_defaults(func=cmd_validate)

    p_ana = sub.add_parser("analyze", help="centers, contexts and verdicts")
    p_ana.add_argument("path")
    p_ana.add_argument("--center", action="store_true")
    p_ana.add_argument("--blocks", action="store_true")
    p_ana.add_argument("--diamond", action="store_true")
    p_ana.add_argument("--ks", action="store_true")
    p_ana.add_argument("--mks", action="store_true")
    p_ana.add_argument("--cons", metavar="ELEMENT", default=None)
    p_ana.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_ana.add_argument("--timings", action="store_true")
    p_ana.set_defaults(func=cmd_analyze)

    p_exp = sub.add_parser("export", help="DOT Hasse diagram or DIMACS CNF")
    p_exp.add_argument("path")
    group = p_exp.add_mutually_exclusive_group(required=True)
    group.add_argument("--dot", action="store_true")
    group.add_argument("--cnf", action="store_true")
    p_exp.add_argument("-o", "--output", required=True)
    p_exp.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as err:
        print(f"format error: {err}")
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
