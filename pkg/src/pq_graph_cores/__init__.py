"""
PQ Graph Cores

Cores of imprimitive symmetric graphs of order a product of two distinct
primes: family constructors, exact clique/colouring/homomorphism solvers,
brute-force and classified core computation, and their cross-validation.
"""

__version__ = "0.1.0"

from .core import (
    Agreement,
    FamilySpec,
    Graph,
    SearchBudget,
    build,
    classify_core,
    core_bruteforce,
    cross_validate,
    parse_family,
)

__all__ = [
    "__version__",
    "Graph",
    "FamilySpec",
    "SearchBudget",
    "Agreement",
    "build",
    "parse_family",
    "classify_core",
    "core_bruteforce",
    "cross_validate",
]
