"""
pq-cores command line.

Subcommands: family, invariants, core, verify, hom. Every command prints a
JSON report on stdout; logs go to stderr (and --log-file).

Exit codes: 0 success, 1 usage or internal error, 2 a DISAGREE verdict,
3 only UNRESOLVED/INDETERMINATE outcomes.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .adapters import graph_to_dot, graph_to_json
from .core import (
    BRUTE_FORCE_CUTOFF,
    Agreement,
    AlgebraError,
    ClassificationError,
    ConstraintError,
    ConstraintMode,
    FamilyParameterError,
    FamilyTag,
    GeneratorError,
    GraphError,
    SearchBudget,
    SpecParseError,
    ValidationSettings,
    budget_from_config,
    chromatic_number,
    classify_core,
    clique_number,
    core_bruteforce,
    cross_validate,
    find_constrained_homomorphism,
    find_homomorphism,
    independence_number,
    is_bipartite,
    load_family,
    orbit_transitivity_check,
    run_acceptance_suite,
)
from .core.core_classifier import constraint_for, pq_form
from .core.graph import is_connected, valency

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DISAGREE = 2
EXIT_UNRESOLVED = 3

_INPUT_ERRORS = (
    SpecParseError,
    FamilyParameterError,
    ClassificationError,
    ConstraintError,
    GeneratorError,
    GraphError,
    AlgebraError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pq-cores", description="Cores of symmetric graphs of order pq")
    parser.add_argument("--budget", type=float, help="seconds per solver call")
    parser.add_argument("--nodes", type=int, help="search nodes per solver call")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing")
    parser.add_argument("--log-level", default="WARNING", help="logging level (default: WARNING)")
    parser.add_argument("--log-file", type=str, default=None, help="also log to this file")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    family = sub.add_parser("family", help="construct a family graph")
    family.add_argument("spec")
    family.add_argument("--export", choices=["dot", "json"])
    family.add_argument("--out", type=str, help="write the export here instead of the report")

    invariants = sub.add_parser("invariants", help="alpha, omega and chi with witnesses")
    invariants.add_argument("spec")

    core = sub.add_parser("core", help="compute and/or classify the core")
    core.add_argument("spec")
    core.add_argument(
        "--method", choices=["brute", "classified", "certificate", "both"], default="both"
    )

    verify = sub.add_parser("verify", help="run the acceptance suite")
    verify.add_argument("--suite", choices=["smoke", "full"], default="smoke")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--seed", type=int, default=0, help="seed of the random oracle corpus")

    hom = sub.add_parser("hom", help="search for a homomorphism")
    hom.add_argument("source")
    hom.add_argument("target", nargs="?")
    hom.add_argument("--constrained", choices=[m.value for m in ConstraintMode])
    return parser


def configure_logging(level: str, log_file: Optional[str]) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def _budget(args: argparse.Namespace) -> SearchBudget:
    config: Dict[str, Any] = {}
    if args.budget is not None:
        config["time_limit"] = args.budget
    if args.nodes is not None:
        config["node_limit"] = args.nodes
    return budget_from_config(config)


def _search_entry(result, witness: Any, timing: bool) -> Dict[str, Any]:
    entry = result.to_dict(timing)
    if result.found and witness is not None:
        entry["witness"] = list(witness)
    return entry


# --- commands ------------------------------------------------------------------


def cmd_family(args: argparse.Namespace, budget: SearchBudget) -> Tuple[Dict[str, Any], int]:
    instance = load_family(args.spec)
    graph = instance.graph
    transitivity = orbit_transitivity_check(graph, instance.generators)
    report: Dict[str, Any] = {
        "family": instance.spec.text,
        "name": graph.name,
        "order": graph.n,
        "edges": graph.edge_count,
        "valency": valency(graph),
        "bipartite": is_bipartite(graph).bipartite,
        "connected": is_connected(graph),
        "generators": list(instance.generators.names),
        **transitivity.to_dict(),
    }
    if args.export:
        text = graph_to_dot(graph) if args.export == "dot" else graph_to_json(graph)
        if args.out:
            Path(args.out).write_text(text)
            report["export"] = {"format": args.export, "path": args.out}
            logger.info(f"wrote {args.export} export to {args.out}")
        else:
            report["export"] = {"format": args.export, "text": text}
    return report, EXIT_OK


def cmd_invariants(args: argparse.Namespace, budget: SearchBudget) -> Tuple[Dict[str, Any], int]:
    instance = load_family(args.spec)
    graph = instance.graph
    alpha = independence_number(graph, budget)
    omega = clique_number(graph, budget)
    chi = chromatic_number(graph, budget)
    report: Dict[str, Any] = {
        "family": instance.spec.text,
        "order": graph.n,
        "alpha": _search_entry(alpha, alpha.witness, args.timing),
        "omega": _search_entry(omega, omega.witness, args.timing),
        "chi": _search_entry(chi, chi.witness, args.timing),
    }
    results = (alpha, omega, chi)
    if alpha.found and omega.found:
        report["alpha_omega_at_most_n"] = alpha.value * omega.value <= graph.n
    undecided = [name for name, r in zip(("alpha", "omega", "chi"), results) if r.indeterminate]
    if undecided:
        report["indeterminate"] = undecided
        return report, EXIT_UNRESOLVED
    return report, EXIT_OK


def cmd_core(args: argparse.Namespace, budget: SearchBudget) -> Tuple[Dict[str, Any], int]:
    instance = load_family(args.spec)
    report: Dict[str, Any] = {"family": instance.spec.text, "method": args.method}

    if args.method == "brute":
        transitivity = orbit_transitivity_check(instance.graph, instance.generators)
        result = core_bruteforce(instance.graph, transitivity.vertex_transitive, budget)
        report["computed"] = result.to_dict()
        return report, EXIT_OK if result.resolved else EXIT_UNRESOLVED

    if args.method == "classified":
        prediction = classify_core(instance.spec, budget)
        report["predicted"] = prediction.to_dict()
        return report, EXIT_OK if prediction.resolved else EXIT_UNRESOLVED

    cutoff = 0 if args.method == "certificate" else BRUTE_FORCE_CUTOFF
    verdict = cross_validate(instance.spec, budget, brute_cutoff=cutoff)
    report.update(verdict.to_dict())
    return report, _agreement_exit([verdict.agreement])


def cmd_verify(args: argparse.Namespace, budget: SearchBudget) -> Tuple[Dict[str, Any], int]:
    settings = ValidationSettings(jobs=args.jobs, seed=args.seed, budget=budget)
    result = run_acceptance_suite(args.suite, settings)
    return result.to_dict(), result.exit_code


def cmd_hom(args: argparse.Namespace, budget: SearchBudget) -> Tuple[Dict[str, Any], int]:
    source_instance = load_family(args.source)
    report: Dict[str, Any] = {"source": source_instance.spec.text}
    if args.constrained:
        spec = pq_form(source_instance.spec)
        if spec.tag is not FamilyTag.GPQRSU:
            raise ConstraintError(
                f"--constrained needs a gpqrsu or g3qr source, got {source_instance.spec.text}"
            )
        mode = ConstraintMode(args.constrained)
        source, target, constraint = constraint_for(spec, mode)
        report["constraint"] = mode.value
        report["source_graph"] = source.name
        report["target_graph"] = target.name
        result = find_constrained_homomorphism(source, target, constraint, budget)
    else:
        if args.target is None:
            raise UsageError("hom needs a target family unless --constrained is given")
        target_instance = load_family(args.target)
        report["target"] = target_instance.spec.text
        result = find_homomorphism(source_instance.graph, target_instance.graph, budget)

    mapping = result.witness.mapping if result.found else None
    report["result"] = _search_entry(result, mapping, args.timing)
    return report, EXIT_UNRESOLVED if result.indeterminate else EXIT_OK


def _agreement_exit(agreements: Sequence[Agreement]) -> int:
    if Agreement.DISAGREE in agreements:
        return EXIT_DISAGREE
    if Agreement.UNRESOLVED in agreements:
        return EXIT_UNRESOLVED
    return EXIT_OK


COMMANDS = {
    "family": cmd_family,
    "invariants": cmd_invariants,
    "core": cmd_core,
    "verify": cmd_verify,
    "hom": cmd_hom,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(json.dumps({"error": f"usage: {exc}", "exit_code": EXIT_ERROR}, indent=2))
        return EXIT_ERROR

    configure_logging(args.log_level, args.log_file)
    started = time.perf_counter()
    try:
        report, code = COMMANDS[args.command](args, _budget(args))
    except UsageError as exc:
        report, code = {"error": f"usage: {exc}"}, EXIT_ERROR
    except SpecParseError as exc:
        report, code = {"error": str(exc), "position": exc.position}, EXIT_ERROR
    except _INPUT_ERRORS as exc:
        report, code = {"error": str(exc)}, EXIT_ERROR
    except Exception as exc:
        logger.exception(f"internal error in '{args.command}'")
        report, code = {"error": f"internal error: {exc}"}, EXIT_ERROR
    else:
        report = {"command": args.command, **report}

    if args.timing:
        report["elapsed_s"] = round(time.perf_counter() - started, 4)
    report["exit_code"] = code
    print(json.dumps(report, indent=2, default=str))
    return code


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
