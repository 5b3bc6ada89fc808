"""
Cross-validation of predicted cores against computed ones.

Up to the brute-force cutoff the computed side is an exact retract search.
Above it, a non-trivial prediction is checked with a core certificate and a
SELF prediction by replaying the conditions that make the graph a core.
"""

import asyncio
import functools
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .algebra import subgroup
from .budget import BudgetExhausted, SearchBudget, SearchStatus
from .clique import clique_number, independence_number
from .core_classifier import SELF, Prediction, classify_core, constraint_for, pq_form
from .families import (
    FamilyInstance,
    FamilySpec,
    FamilyTag,
    build,
    enumerate_family_specs,
    g_pr,
)
from .graph import Graph, complement, is_bipartite, iter_bits, valency
from .homomorphism import (
    ConstraintMode,
    chromatic_number,
    find_constrained_homomorphism,
    find_homomorphism,
)
from .isomorphism import is_isomorphic
from .ms_bounds import replay_ms_proof
from .orbits import orbit_transitivity_check
from .retracts import (
    BRUTE_FORCE_CUTOFF,
    CertificateRejected,
    CoreMethod,
    CoreResult,
    core_bruteforce,
    core_certificate,
    identity_result,
    validate_core_result,
)
from .spec_parser import parse_family

logger = logging.getLogger(__name__)

ACCEPTANCE_ORDERS = {
    "smoke": (6, 10, 14, 15, 22, 26, 33, 35),
    "full": (6, 10, 14, 15, 22, 26, 33, 35, 51, 85),
}

# deleted lexicographic products realising chi <= p, omega >= p and chi > p > omega
DELLEX_CASES = (
    "dellex:gpr:11,2,q=5",
    "dellex:gpr:7,6,q=5",
    "dellex:gpr:17,8,q=5",
)


class Agreement(Enum):
    AGREE = "AGREE"
    DISAGREE = "DISAGREE"
    UNRESOLVED = "UNRESOLVED"


@dataclass
class ValidationSettings:
    brute_cutoff: int = BRUTE_FORCE_CUTOFF
    jobs: int = 1
    seed: int = 0
    oracle_graphs: int = 200
    budget: SearchBudget = field(default_factory=SearchBudget)


@dataclass
class Verdict:
    spec: FamilySpec
    predicted: Prediction
    computed: Optional[CoreResult]
    agreement: Agreement
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        predicted = self.predicted.to_dict()
        trace = predicted.pop("trace")
        return {
            "spec": self.spec.text,
            "predicted": predicted,
            "trace": trace,
            "computed": self.computed.to_dict() if self.computed is not None else None,
            "agreement": self.agreement.value,
            "notes": list(self.notes),
        }


def _expected_core(instance: FamilyInstance, prediction: Prediction) -> FamilyInstance:
    if prediction.core_tag == SELF:
        return instance
    return build(prediction.core_spec)


def _compare(
    computed: CoreResult, expected: Graph, budget: SearchBudget
) -> Tuple[Agreement, List[str]]:
    if computed.core.n != expected.n:
        return Agreement.DISAGREE, [
            f"computed core has order {computed.core.n}, predicted {expected.n}"
        ]
    try:
        iso = is_isomorphic(computed.core, expected, budget=budget)
    except BudgetExhausted:
        return Agreement.UNRESOLVED, ["isomorphism test ran out of budget"]
    if iso is None:
        return Agreement.DISAGREE, ["computed core is not isomorphic to the predicted core"]
    return Agreement.AGREE, []


def replay_self_conditions(
    spec: FamilySpec, budget: Optional[SearchBudget] = None
) -> Tuple[Optional[bool], List[str]]:
    """
    Re-derive a SELF verdict from the conditions that force it.

    Returns (True, notes) when every condition is confirmed, (False, notes)
    when one is refuted, and (None, notes) when a search ran out of budget.

    For DELLEX and GPQRSU the conditions are the same homomorphism and
    chromatic searches classify_core runs, so above the brute-force cutoff
    this repeats the classifier's own evidence rather than checking it
    independently. Only the MS replay uses separate bounds.
    """
    budget = budget or SearchBudget()
    tag = spec.tag
    if tag is FamilyTag.GPR:
        return True, ["vertex-transitive of prime order"]

    if tag is FamilyTag.MS:
        report = replay_ms_proof(spec, budget)
        notes = [f"{check.name}: {check.holds}" for check in report.checks]
        if not report.complete:
            return None, notes + ["bound replay incomplete"]
        return report.forced_core == SELF and not report.failed(), notes

    if tag is FamilyTag.DELLEX:
        base, fiber = spec["base"], spec["fiber"]
        circulant = g_pr(base["p"], base["r"]).graph
        chi = chromatic_number(circulant, budget)
        omega = clique_number(circulant, budget)
        if chi.indeterminate or omega.indeterminate:
            return None, ["chi/omega of the base undecided"]
        holds = chi.value > fiber > omega.value
        return holds, [f"chi={chi.value} > {fiber} > omega={omega.value}: {holds}"]

    if tag in (FamilyTag.GPQRSU, FamilyTag.G3QR):
        full = pq_form(build(spec).spec)
        p, q, r, s, u = (full[k] for k in ("p", "q", "r", "s", "u"))
        small, large = g_pr(p, s).graph, g_pr(q, u).graph
        if full["t"] % q in subgroup(q, r):
            searches = [
                (f"G({p},{s}) -> G({q},{u})", find_homomorphism(small, large, budget)),
                (f"G({q},{u}) -> G({p},{s})", find_homomorphism(large, small, budget)),
            ]
        else:
            searches = []
            for mode in (ConstraintMode.ETA, ConstraintMode.ZETA):
                source, target, constraint = constraint_for(full, mode)
                searches.append(
                    (mode.value, find_constrained_homomorphism(source, target, constraint, budget))
                )
        notes = [f"{what}: {result.status.value}" for what, result in searches]
        if any(result.indeterminate for _, result in searches):
            return None, notes
        return all(result.status is SearchStatus.NONE for _, result in searches), notes

    return False, [f"no SELF replay for {tag.value}"]


def cross_validate(
    spec: FamilySpec,
    budget: Optional[SearchBudget] = None,
    brute_cutoff: int = BRUTE_FORCE_CUTOFF,
    predicted_override: Optional[Prediction] = None,
) -> Verdict:
    """
    Compare classify_core with a computed core.

    `predicted_override` replaces the classifier's answer (negative controls).
    """
    budget = budget or SearchBudget()
    instance = build(spec)
    graph = instance.graph
    prediction = predicted_override or classify_core(spec, budget)

    if not prediction.resolved:
        notes = ["prediction undecided"]
        return Verdict(instance.spec, prediction, None, Agreement.UNRESOLVED, notes)

    if graph.n <= brute_cutoff:
        report = orbit_transitivity_check(graph, instance.generators)
        computed = core_bruteforce(graph, vt=report.vertex_transitive, budget=budget)
        if not computed.resolved:
            verdict = Verdict(
                instance.spec, prediction, computed, Agreement.UNRESOLVED, computed.notes
            )
        else:
            expected = _expected_core(instance, prediction).graph
            agreement, notes = _compare(computed, expected, budget)
            problems = validate_core_result(computed, report.vertex_transitive)
            if problems:
                agreement = Agreement.DISAGREE
            verdict = Verdict(instance.spec, prediction, computed, agreement, notes + problems)
    elif prediction.core_tag != SELF:
        expected = _expected_core(instance, prediction)
        try:
            computed = core_certificate(graph, expected.graph, expected.generators, budget)
        except CertificateRejected as exc:
            rejected = CoreResult(
                graph, SearchStatus.NONE, CoreMethod.CERTIFICATE, notes=[str(exc)]
            )
            verdict = Verdict(instance.spec, prediction, rejected, Agreement.DISAGREE, [str(exc)])
        else:
            agreement = Agreement.AGREE if computed.resolved else Agreement.UNRESOLVED
            verdict = Verdict(instance.spec, prediction, computed, agreement, computed.notes)
    else:
        holds, notes = replay_self_conditions(instance.spec, budget)
        if holds is None:
            verdict = Verdict(instance.spec, prediction, None, Agreement.UNRESOLVED, notes)
        elif holds:
            computed = identity_result(graph, CoreMethod.CLASSIFIED, notes)
            verdict = Verdict(instance.spec, prediction, computed, Agreement.AGREE, notes)
        else:
            refuted = CoreResult(graph, SearchStatus.NONE, CoreMethod.CLASSIFIED, notes=notes)
            verdict = Verdict(instance.spec, prediction, refuted, Agreement.DISAGREE, notes)

    log = logger.warning if verdict.agreement is Agreement.DISAGREE else logger.info
    log(f"{instance.spec.text}: predicted {prediction.core_tag}, {verdict.agreement.value}")
    return verdict


async def cross_validate_batch(
    specs: Sequence[FamilySpec],
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
    brute_cutoff: int = BRUTE_FORCE_CUTOFF,
) -> List[Verdict]:
    """Verdicts in input order; jobs > 1 spreads specs over worker processes."""
    if jobs <= 1:
        return [cross_validate(spec, budget, brute_cutoff) for spec in specs]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            loop.run_in_executor(
                pool, functools.partial(cross_validate, spec, budget, brute_cutoff)
            )
            for spec in specs
        ]
        return list(await asyncio.gather(*futures))


# --- property checks -----------------------------------------------------------


def check_core_properties(
    instance: FamilyInstance, result: CoreResult, budget: Optional[SearchBudget] = None
) -> List[str]:
    """
    Invariants linking a graph to its resolved core. Returns the violations.

    Undecided solver calls are skipped rather than reported.
    """
    if not result.resolved:
        return []
    budget = budget or SearchBudget()
    graph, core = instance.graph, result.core
    report = orbit_transitivity_check(graph, instance.generators)
    problems = validate_core_result(result, report.vertex_transitive)

    alpha = independence_number(graph, budget)
    omega = clique_number(graph, budget)
    if report.vertex_transitive and alpha.found and omega.found:
        if alpha.value * omega.value > graph.n:
            problems.append(f"alpha*omega = {alpha.value * omega.value} > {graph.n}")

    if not is_bipartite(graph).bipartite and omega.found:
        core_omega = clique_number(core, budget)
        if core_omega.found and core_omega.value != omega.value:
            problems.append(f"omega changes: {omega.value} vs core {core_omega.value}")
        chi = chromatic_number(graph, budget)
        core_chi = chromatic_number(core, budget)
        if chi.found and core_chi.found and chi.value != core_chi.value:
            problems.append(f"chi changes: {chi.value} vs core {core_chi.value}")

    if report.arc_transitive:
        val_g, val_core = valency(graph), valency(core)
        if val_g is not None and val_core and val_g % val_core:
            problems.append(f"core valency {val_core} does not divide {val_g}")

    if report.vertex_transitive and alpha.found:
        core_alpha = independence_number(core, budget)
        if core_alpha.found and alpha.value * core.n != core_alpha.value * graph.n:
            problems.append("alpha/|V| differs between graph and core")

    if instance.spec.tag is FamilyTag.GPQRSU and core.n == instance.spec["p"]:
        t, q, r = instance.spec["t"], instance.spec["q"], instance.spec["r"]
        if t % q not in subgroup(q, r):
            for fibre in result.retraction.fibres().values():
                if len({graph.labels[v][0] for v in fibre}) != 1:
                    problems.append("a retraction fibre is not a block {(i, x) : x in Z_q}")
                    break

    for problem in problems:
        logger.warning(f"{instance.spec.text}: {problem}")
    return problems


# --- oracle suite ---------------------------------------------------------------


def _random_graph(rng_seed: int, n: int, density: float) -> Graph:
    nx_graph = nx.gnp_random_graph(n, density, seed=rng_seed)
    return Graph.from_edges(n, nx_graph.edges())


def _exhaustive_clique(graph: Graph) -> int:
    best = 0
    for mask in range(1 << graph.n):
        size = mask.bit_count()
        if size > best and all(mask & ~graph.rows[v] == 1 << v for v in iter_bits(mask)):
            best = size
    return best


def _exhaustive_hom(source: Graph, target: Graph) -> bool:
    edges = source.edges()
    for mapping in itertools.product(range(target.n), repeat=source.n):
        if all(target.adjacent(mapping[u], mapping[v]) for u, v in edges):
            return True
    return False


def _exhaustive_chromatic(graph: Graph) -> int:
    """Minimum over all colourings, enumerated as restricted growth strings."""
    n = graph.n
    if n == 0:
        return 0
    best = n
    colors = [0] * n

    def extend(v: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if v == n:
            best = used
            return
        for c in range(min(used + 1, best)):
            if all(colors[u] != c for u in iter_bits(graph.rows[v]) if u < v):
                colors[v] = c
                extend(v + 1, max(used, c + 1))

    extend(0, 0)
    return best


def _exhaustive_core_order(graph: Graph) -> int:
    edges = graph.edges()
    best = graph.n
    for mapping in itertools.product(range(graph.n), repeat=graph.n):
        if all(graph.adjacent(mapping[u], mapping[v]) for u, v in edges):
            best = min(best, len(set(mapping)))
    return best


def oracle_check(seed: int = 0, count: int = 200, max_order: int = 8) -> List[str]:
    """
    Compare the solvers with exhaustive enumeration on small random graphs.

    Cliques and independent sets use all subsets, chromatic numbers all
    colourings; homomorphisms (into targets of at most 4 vertices) and core
    orders (graphs of at most 6 vertices) use all maps. Returns mismatches.
    """
    mismatches = []
    for i in range(count):
        n = 1 + (seed + i) % max_order
        density = ((seed * 31 + i * 17) % 9 + 1) / 10
        graph = _random_graph(seed * 100003 + i, n, density)
        where = f"graph {i} (n={n}, edges={graph.edges()})"

        omega = clique_number(graph)
        if omega.value != _exhaustive_clique(graph):
            mismatches.append(f"{where}: omega {omega.value}")
        alpha = independence_number(graph)
        if alpha.value != _exhaustive_clique(complement(graph)):
            mismatches.append(f"{where}: alpha {alpha.value}")
        chi = chromatic_number(graph)
        if chi.value != _exhaustive_chromatic(graph):
            mismatches.append(f"{where}: chi {chi.value}")

        target = _random_graph(seed * 7919 + i, 1 + i % 4, 0.6)
        found = find_homomorphism(graph, target).found
        if found != _exhaustive_hom(graph, target):
            mismatches.append(f"{where}: hom into {target.edges()} reported {found}")

        if n <= 6:
            core = core_bruteforce(graph)
            if core.core.n != _exhaustive_core_order(graph):
                mismatches.append(f"{where}: core order {core.core.n}")

    logger.info(f"oracle check seed={seed}: {count} graphs, {len(mismatches)} mismatches")
    return mismatches


# --- acceptance suite ------------------------------------------------------------


@dataclass
class AcceptanceReport:
    suite: str
    verdicts: List[Verdict] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        agreements = {verdict.agreement for verdict in self.verdicts}
        if Agreement.DISAGREE in agreements or self.failures:
            return 2
        if Agreement.UNRESOLVED in agreements:
            return 3
        return 0

    def to_dict(self) -> Dict[str, Any]:
        counts = {a.value: 0 for a in Agreement}
        for verdict in self.verdicts:
            counts[verdict.agreement.value] += 1
        return {
            "suite": self.suite,
            "counts": counts,
            "failures": list(self.failures),
            "verdicts": [verdict.to_dict() for verdict in self.verdicts],
        }


def acceptance_specs(suite: str) -> List[FamilySpec]:
    if suite not in ACCEPTANCE_ORDERS:
        raise ValueError(f"unknown suite '{suite}', expected one of {sorted(ACCEPTANCE_ORDERS)}")
    specs: List[FamilySpec] = []
    for order in ACCEPTANCE_ORDERS[suite]:
        specs.extend(enumerate_family_specs(order))
    if suite == "full":
        known = {spec.text for spec in specs}
        specs.extend(
            spec for spec in map(parse_family, DELLEX_CASES) if spec.text not in known
        )
    return specs


def run_acceptance_suite(
    suite: str = "smoke", settings: Optional[ValidationSettings] = None
) -> AcceptanceReport:
    """Cross-validate every spec of the suite, then run the oracle check."""
    settings = settings or ValidationSettings()
    specs = acceptance_specs(suite)
    logger.info(f"acceptance suite '{suite}': {len(specs)} specs, jobs={settings.jobs}")
    verdicts = asyncio.run(
        cross_validate_batch(specs, settings.budget, settings.jobs, settings.brute_cutoff)
    )
    report = AcceptanceReport(suite, verdicts)
    report.failures.extend(oracle_check(settings.seed, settings.oracle_graphs))
    return report

