"""Enumeration and classification of Bohemian matrix families."""
from .classifiers import (
    CLASSIFIERS,
    is_nilpotent,
    is_nonderogatory,
    is_normal,
    is_singular,
    is_type1_stable,
    is_type2_stable,
    routh_first_column,
)
from .roots import RootFindingError, RootRadius, aberth_roots, numeric_root_radius
from .runner import (
    DEFAULT_BUDGET,
    PREDICATES,
    BudgetExceeded,
    ClassCounts,
    EnumerationPlan,
    charpoly_database,
    count_range,
    default_budget,
    distinct_charpolys,
    enumerate_family,
)

# the operation is called "enumerate" in the command-line interface
enumerate = enumerate_family  # noqa: A001

__all__ = [
    "CLASSIFIERS",
    "PREDICATES",
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "ClassCounts",
    "EnumerationPlan",
    "RootFindingError",
    "RootRadius",
    "aberth_roots",
    "charpoly_database",
    "count_range",
    "default_budget",
    "distinct_charpolys",
    "enumerate",
    "enumerate_family",
    "is_nilpotent",
    "is_nonderogatory",
    "is_normal",
    "is_singular",
    "is_type1_stable",
    "is_type2_stable",
    "numeric_root_radius",
    "routh_first_column",
]
