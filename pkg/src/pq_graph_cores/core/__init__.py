"""
PQ Graph Cores - Core Module

Imprimitive symmetric graphs of order pq, exact solvers, and their cores
computed both by retract search and from the classification tables.

Public API exports for the core components.
"""

from .algebra import AlgebraError, SubgroupH, choose_t, fermat_index, is_prime, subgroup
from .budget import (
    BudgetExhausted,
    SearchBudget,
    SearchResult,
    SearchStatus,
    budget_from_config,
)
from .clique import clique_number, independence_number
from .core_classifier import (
    ClassificationError,
    Prediction,
    TraceEntry,
    classify_core,
    eta_constraint,
    zeta_constraint,
)
from .designs import DesignKind, ProjectiveDesign, h11_design, pg_design
from .families import (
    FamilyInstance,
    FamilyParameterError,
    FamilySpec,
    FamilyTag,
    build,
    enumerate_family_specs,
    find_isomorphism_collisions,
    symmetric_ms_enumerate,
)
from .finite_field import FieldGF2a, make_field
from .graph import Graph, GraphError, Homomorphism, complement, is_bipartite
from .homomorphism import (
    ConstraintError,
    ConstraintMode,
    HomConstraint,
    chromatic_number,
    find_constrained_homomorphism,
    find_homomorphism,
    find_retraction,
)
from .isomorphism import find_induced_copy, find_isomorphism, is_isomorphic
from .ms_bounds import BoundCheck, MSProofReport, replay_ms_proof
from .orbits import GeneratorError, GeneratorSet, TransitivityReport, orbit_transitivity_check
from .retracts import (
    BRUTE_FORCE_CUTOFF,
    CertificateLeg,
    CertificateRejected,
    CoreMethod,
    CoreResult,
    core_bruteforce,
    core_certificate,
    is_core,
)
from .spec_parser import SpecParseError, load_family, parse_family
from .validation import (
    AcceptanceReport,
    Agreement,
    ValidationSettings,
    Verdict,
    check_core_properties,
    cross_validate,
    cross_validate_batch,
    oracle_check,
    run_acceptance_suite,
)

__all__ = [
    # Graphs and families
    "Graph",
    "Homomorphism",
    "FamilySpec",
    "FamilyTag",
    "FamilyInstance",
    "GeneratorSet",
    "ProjectiveDesign",
    "DesignKind",
    "FieldGF2a",
    "SubgroupH",
    "build",
    "parse_family",
    "load_family",
    "enumerate_family_specs",
    "find_isomorphism_collisions",
    "symmetric_ms_enumerate",
    "pg_design",
    "h11_design",
    "make_field",
    "subgroup",
    "choose_t",
    "fermat_index",
    "is_prime",
    "complement",
    "is_bipartite",
    # Solvers
    "SearchBudget",
    "SearchResult",
    "SearchStatus",
    "HomConstraint",
    "ConstraintMode",
    "budget_from_config",
    "clique_number",
    "independence_number",
    "chromatic_number",
    "find_homomorphism",
    "find_constrained_homomorphism",
    "find_retraction",
    "find_isomorphism",
    "find_induced_copy",
    "is_isomorphic",
    "orbit_transitivity_check",
    "TransitivityReport",
    # Cores
    "BRUTE_FORCE_CUTOFF",
    "CoreResult",
    "CoreMethod",
    "CertificateLeg",
    "Prediction",
    "TraceEntry",
    "Verdict",
    "Agreement",
    "AcceptanceReport",
    "ValidationSettings",
    "BoundCheck",
    "MSProofReport",
    "core_bruteforce",
    "core_certificate",
    "is_core",
    "classify_core",
    "eta_constraint",
    "zeta_constraint",
    "replay_ms_proof",
    "cross_validate",
    "cross_validate_batch",
    "check_core_properties",
    "oracle_check",
    "run_acceptance_suite",
    # Exceptions
    "AlgebraError",
    "GraphError",
    "FamilyParameterError",
    "SpecParseError",
    "ConstraintError",
    "GeneratorError",
    "ClassificationError",
    "CertificateRejected",
    "BudgetExhausted",
]
