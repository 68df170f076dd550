"""Monomial ideals of independent sets of finite simple graphs."""

from .graph import FamilySpec, Graph, GraphParseError, build_family, parse_edge_list
from .ideal import (
    GeneratorOrder,
    LinearQuotientReport,
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    find_linear_quotient_order,
    ideal_of_independent_sets,
    monomial_divides,
    phi,
    set_sizes,
    verify_linear_quotients,
)
from .indep import (
    FormulaConsistencyError,
    IndependencePolynomial,
    centipede_coefficients,
    cycle_power_coefficients,
    enumerate_independent_sets,
    independence_number,
    independence_polynomial,
    path_coefficients,
)
from .invariants import (
    InvariantReport,
    PrimeComponent,
    alexander_dual,
    betti_numbers,
    dual_has_linear_resolution,
    invariant_report,
    is_cohen_macaulay,
    krull_dimension,
    primary_decomposition,
    projective_dimension,
    regularity,
)

__version__ = "0.1.0"
