"""
Core prediction from the classification tables.

Every FamilySpec is mapped to exactly one table row. Rows whose condition is
a computation (chromatic/clique numbers, plain or constrained homomorphisms
between the prime-order circulant factors) run the exact solvers and record
each evaluated condition in the trace.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .algebra import fermat_index, subgroup
from .budget import SearchBudget, SearchResult, SearchStatus
from .clique import clique_number
from .families import (
    FamilyParameterError,
    FamilySpec,
    FamilyTag,
    build,
    g_pr,
    gpr_spec,
    symmetric_ms_enumerate,
)
from .graph import Graph
from .homomorphism import (
    ConstraintMode,
    HomConstraint,
    chromatic_number,
    find_constrained_homomorphism,
    find_homomorphism,
)

logger = logging.getLogger(__name__)

SELF = "SELF"


class ClassificationError(ValueError):
    """The family lies outside the classified families."""


@dataclass
class TraceEntry:
    condition: str
    value: Any
    source: str

    def to_dict(self) -> Dict[str, Any]:
        return {"condition": self.condition, "value": self.value, "source": self.source}


@dataclass
class Prediction:
    """
    Predicted core of a family instance.

    `core_spec` names the predicted core as a family (G(p,s), K_p = G(p,p-1),
    K_2 = G(2,1)); it is None for SELF or when undecided.
    """

    spec: FamilySpec
    core_tag: str
    row: str
    core_spec: Optional[FamilySpec] = None
    trace: List[TraceEntry] = field(default_factory=list)
    status: SearchStatus = SearchStatus.FOUND

    @property
    def resolved(self) -> bool:
        return self.status is SearchStatus.FOUND

    @property
    def is_self(self) -> bool:
        return self.resolved and self.core_tag == SELF

    def to_dict(self) -> Dict[str, Any]:
        return {
            "core_tag": self.core_tag,
            "core_family": self.core_spec.text if self.core_spec else None,
            "row": self.row,
            "status": self.status.value,
            "trace": [entry.to_dict() for entry in self.trace],
        }


def _complete(n: int) -> FamilySpec:
    return gpr_spec(n, n - 1)


def _undecided(spec: FamilySpec, row: str, trace: List[TraceEntry], what: str) -> Prediction:
    trace.append(TraceEntry(what, "INDETERMINATE", "solver"))
    logger.warning(f"{spec.text}: {what} undecided within budget")
    return Prediction(spec, "UNRESOLVED", row, None, trace, SearchStatus.INDETERMINATE)


# --- constrained homomorphisms for G(pq; r, s, u) ---------------------------


def eta_constraint(spec: FamilySpec) -> Tuple[Graph, Graph, HomConstraint]:
    """
    eta: G(p,s) -> G(q,u) with eta(j) - eta(i) in t^l H(q,r) whenever
    j - i = a^l.
    """
    p, q, r, s, t, a = (spec[k] for k in ("p", "q", "r", "s", "t", "a"))
    source = g_pr(p, s).graph
    target = g_pr(q, spec["u"]).graph
    exponent = {pow(a, l, p): l for l in range(s)}
    arc_class = {(i, j): exponent[(j - i) % p] for i, j in source.arcs()}
    h = subgroup(q, r)
    allowed = {l: h.coset(pow(t, l, q)) for l in range(s)}
    return source, target, HomConstraint(ConstraintMode.ETA, q, arc_class, allowed)


def zeta_constraint(spec: FamilySpec) -> Tuple[Graph, Graph, HomConstraint]:
    """
    zeta: G(q,u) -> G(p,s) with zeta(y) - zeta(x) = a^l whenever
    y - x in t^l H(q,r).

    The coset index l is defined modulo m = u/r, so class c admits every
    a^l with l = c (mod m), 0 <= l < s.
    """
    p, q, r, s, t, u, a = (spec[k] for k in ("p", "q", "r", "s", "t", "u", "a"))
    source = g_pr(q, u).graph
    target = g_pr(p, s).graph
    m = u // r
    h = subgroup(q, r)
    coset_class: Dict[int, int] = {}
    for c in range(m):
        for y in h.coset(pow(t, c, q)):
            coset_class[y] = c
    arc_class = {(x, y): coset_class[(y - x) % q] for x, y in source.arcs()}
    allowed = {c: frozenset(pow(a, l, p) for l in range(s) if l % m == c) for c in range(m)}
    return source, target, HomConstraint(ConstraintMode.ZETA, p, arc_class, allowed)


def constraint_for(spec: FamilySpec, mode: ConstraintMode) -> Tuple[Graph, Graph, HomConstraint]:
    if mode is ConstraintMode.ETA:
        return eta_constraint(spec)
    return zeta_constraint(spec)


# --- symmetric MS graphs ------------------------------------------------------


def ms_case(spec: FamilySpec) -> str:
    """
    Case letter of the symmetric MS core theorem for Gamma(a, p, {}, U).

    a: pq = 15; b: p not Fermat; c: p = F_l with l < s-1; d: p = F_{s-1}
    and |U| = 1; e: p = F_{s-1} and U = U_{e,i}. Here a = 2^s.
    """
    a, p, U = spec["a"], spec["m"], spec["U"]
    if spec["S"]:
        raise ClassificationError(f"{spec.text}: S must be empty for a symmetric MS graph")
    if len(U) != 1:
        try:
            symmetric = {tuple(ms["U"]) for ms in symmetric_ms_enumerate(a, p)}
        except FamilyParameterError as exc:
            raise ClassificationError(f"{spec.text}: {exc}") from None
        if tuple(U) not in symmetric:
            raise ClassificationError(f"{spec.text}: U={U} does not give a symmetric graph")
    if (a, p) == (2, 3):
        return "a"
    index = fermat_index(p)
    if index is None:
        return "b"
    s = a.bit_length() - 1
    if index < s - 1:
        return "c"
    return "d" if len(U) == 1 else "e"


def ms_table_row(spec: FamilySpec) -> Tuple[str, str, str]:
    """(row, core tag, case letter) for a symmetric MS spec."""
    case = ms_case(spec)
    p, U = spec["m"], spec["U"]
    if case == "a":
        if len(U) == 1:
            return "Table 2 row 7", SELF, case
        return "Table 2 row 5", "K_5", case
    if p == 3:
        return ("Table 2 row 7" if len(U) == 1 else "Table 2 row 6"), SELF, case
    if len(U) > 1:
        return "Table 2 row 10", SELF, case
    if case == "d":
        return "Table 2 row 8", f"K_{p}", case
    return "Table 2 row 9", SELF, case


# --- per-family rules -------------------------------------------------------


def _hom_entry(result: SearchResult) -> str:
    return {
        SearchStatus.FOUND: "exists",
        SearchStatus.NONE: "none",
        SearchStatus.INDETERMINATE: "INDETERMINATE",
    }[result.status]


def _plain_hom(
    source: Graph, target: Graph, clique_too_large: bool, budget: SearchBudget
) -> SearchResult:
    # a homomorphism maps cliques injectively
    if clique_too_large:
        return SearchResult(SearchStatus.NONE)
    return find_homomorphism(source, target, budget)


def _classify_pq(
    spec: FamilySpec, budget: SearchBudget, trace: List[TraceEntry], offset: str = ""
) -> Prediction:
    p, q, r, s, t, u = (spec[k] for k in ("p", "q", "r", "s", "t", "u"))
    small, large = gpr_spec(p, s), gpr_spec(q, u)
    t_in_h = t % q in subgroup(q, r)
    trace.append(TraceEntry(f"t={t} in H({q},{r})", t_in_h, "definition"))

    if t_in_h:
        rows = ("Table 1 row 13", "Table 1 row 14", "Table 1 row 15")
        g_small, g_large = g_pr(p, s).graph, g_pr(q, u).graph
        omega_small = clique_number(g_small, budget)
        omega_large = clique_number(g_large, budget)
        if omega_small.indeterminate or omega_large.indeterminate:
            return _undecided(spec, rows[2], trace, "clique numbers of the factors")
        trace.append(
            TraceEntry(
                f"omega(G({p},{s}))={omega_small.value}, "
                f"omega(G({q},{u}))={omega_large.value} equal",
                omega_small.value == omega_large.value,
                "clique pre-filter",
            )
        )
        forward = _plain_hom(g_small, g_large, omega_small.value > omega_large.value, budget)
        trace.append(TraceEntry(f"G({p},{s}) -> G({q},{u})", _hom_entry(forward), "solver"))
        if forward.indeterminate:
            return _undecided(spec, rows[0], trace, "forward homomorphism")
        if forward.found:
            return Prediction(spec, f"G({p},{s})", rows[0] + offset, small, trace)
        backward = _plain_hom(g_large, g_small, omega_large.value > omega_small.value, budget)
        trace.append(TraceEntry(f"G({q},{u}) -> G({p},{s})", _hom_entry(backward), "solver"))
        if backward.indeterminate:
            return _undecided(spec, rows[1], trace, "backward homomorphism")
        if backward.found:
            return Prediction(spec, f"G({q},{u})", rows[1] + offset, large, trace)
        return Prediction(spec, SELF, rows[2] + offset, None, trace)

    rows = ("Table 1 row 16", "Table 1 row 17", "Table 1 row 18")
    source, target, eta = eta_constraint(spec)
    forward = find_constrained_homomorphism(source, target, eta, budget)
    trace.append(TraceEntry(f"eta: G({p},{s}) -> G({q},{u})", _hom_entry(forward), "solver"))
    if forward.indeterminate:
        return _undecided(spec, rows[0], trace, "eta search")
    if forward.found:
        return Prediction(spec, f"G({p},{s})", rows[0] + offset, small, trace)
    source, target, zeta = zeta_constraint(spec)
    backward = find_constrained_homomorphism(source, target, zeta, budget)
    trace.append(TraceEntry(f"zeta: G({q},{u}) -> G({p},{s})", _hom_entry(backward), "solver"))
    if backward.indeterminate:
        return _undecided(spec, rows[1], trace, "zeta search")
    if backward.found:
        return Prediction(spec, f"G({q},{u})", rows[1] + offset, large, trace)
    return Prediction(spec, SELF, rows[2] + offset, None, trace)


def pq_form(spec: FamilySpec) -> FamilySpec:
    """G(3q,r) as G(3q; r, 2, u) with t = -1; other specs unchanged."""
    if spec.tag is not FamilyTag.G3QR:
        return spec
    q, r, u = spec["q"], spec["r"], spec["u"]
    return FamilySpec(
        FamilyTag.GPQRSU, {"p": 3, "q": q, "r": r, "s": 2, "t": q - 1, "u": u, "a": 2}
    )


def _classify_g3q(spec: FamilySpec, budget: SearchBudget, trace: List[TraceEntry]) -> Prediction:
    q, r, u = spec["q"], spec["r"], spec["u"]
    row = "Table 1 row 3" if r % 2 == 0 else "Table 1 row 4"
    trace.append(TraceEntry(f"G(3*{q},{r}) = G(3*{q};{r},2,{u})", True, row))
    prediction = _classify_pq(pq_form(spec), budget, trace, offset=f" via {row}")
    prediction.spec = spec
    return prediction


def _lex_row(n: int, fiber: int) -> str:
    if fiber == 1:
        return "trivial fibre"
    if n == 2:
        return "Table 1 row 7"
    if n == 3:
        return "Table 1 row 5"
    if fiber == 3:
        return "Table 1 row 6"
    return "Table 1 row 7" if n < fiber else "Table 1 row 8"


def _classify_dellex(
    spec: FamilySpec, budget: SearchBudget, trace: List[TraceEntry]
) -> Prediction:
    base, fiber = spec["base"], spec["fiber"]
    n, r = base["p"], base["r"]
    if n < fiber:
        trace.append(TraceEntry(f"base order {n} < fibre {fiber}", True, "Table 1 row 9"))
        return Prediction(spec, f"G({n},{r})", "Table 1 row 9", base, trace)

    circulant = g_pr(n, r).graph
    chi = chromatic_number(circulant, budget)
    if chi.indeterminate:
        return _undecided(spec, "Table 1 rows 10-12", trace, f"chi(G({n},{r}))")
    trace.append(TraceEntry(f"chi(G({n},{r})) <= {fiber}", chi.value <= fiber, "solver"))
    if chi.value <= fiber:
        return Prediction(spec, f"G({n},{r})", "Table 1 row 10", base, trace)
    omega = clique_number(circulant, budget)
    if omega.indeterminate:
        return _undecided(spec, "Table 1 rows 11-12", trace, f"omega(G({n},{r}))")
    trace.append(TraceEntry(f"omega(G({n},{r})) >= {fiber}", omega.value >= fiber, "solver"))
    if omega.value >= fiber:
        return Prediction(spec, f"K_{fiber}", "Table 1 row 11", _complete(fiber), trace)
    trace.append(
        TraceEntry(f"chi={chi.value} > {fiber} > omega={omega.value}", True, "Table 1 row 12")
    )
    return Prediction(spec, SELF, "Table 1 row 12", None, trace)


def classify_core(spec: FamilySpec, budget: Optional[SearchBudget] = None) -> Prediction:
    """
    Predict the core of a family instance from the classification tables.

    Raises:
        ClassificationError: for specs outside the classified families
    """
    budget = budget or SearchBudget()
    full = build(spec).spec
    tag = full.tag
    trace: List[TraceEntry] = []

    if tag is FamilyTag.GPR:
        trace.append(TraceEntry("vertex-transitive of prime order", True, "order argument"))
        prediction = Prediction(full, SELF, "prime order", None, trace)
    elif tag is FamilyTag.G2QR:
        trace.append(TraceEntry("bipartite", True, "Table 1 row 1"))
        prediction = Prediction(full, "K_2", "Table 1 row 1", gpr_spec(2, 1), trace)
    elif tag is FamilyTag.G2_Q_R:
        q, r = full["q"], full["r"]
        trace.append(TraceEntry(f"G(2,{q},{r}) = G({q},{r})[E_2]", True, "Table 1 row 2"))
        prediction = Prediction(full, f"G({q},{r})", "Table 1 row 2", gpr_spec(q, r), trace)
    elif tag is FamilyTag.G3QR:
        prediction = _classify_g3q(full, budget, trace)
    elif tag is FamilyTag.GPQRSU:
        prediction = _classify_pq(full, budget, trace)
    elif tag is FamilyTag.LEX:
        base, fiber = full["base"], full["fiber"]
        row = _lex_row(base["p"], fiber)
        trace.append(TraceEntry(f"lexicographic product with E_{fiber}", True, row))
        prediction = Prediction(full, f"G({base['p']},{base['r']})", row, base, trace)
    elif tag is FamilyTag.DELLEX:
        prediction = _classify_dellex(full, budget, trace)
    elif tag in (FamilyTag.INC, FamilyTag.NONINC):
        row = _design_row(full)
        trace.append(TraceEntry("bipartite", True, row))
        prediction = Prediction(full, "K_2", row, gpr_spec(2, 1), trace)
    elif tag is FamilyTag.MS:
        row, core_tag, case = ms_table_row(full)
        trace.append(TraceEntry(f"symmetric MS case ({case})", core_tag, row))
        core_spec = _complete(int(core_tag[2:])) if core_tag.startswith("K_") else None
        prediction = Prediction(full, core_tag, row, core_spec, trace)
    else:
        raise ClassificationError(f"no classification for {spec.text}")

    logger.info(f"{full.text}: predicted core {prediction.core_tag} ({prediction.row})")
    return prediction


def _design_row(spec: FamilySpec) -> str:
    h11 = spec["design"] == "h11"
    if spec.tag is FamilyTag.INC:
        return "Table 2 row 3" if h11 else "Table 2 row 1"
    return "Table 2 row 4" if h11 else "Table 2 row 2"
