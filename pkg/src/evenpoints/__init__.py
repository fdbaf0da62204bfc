"""Exact arithmetic for rings of evenly weighted point configurations.

The package computes graded dimensions (stretched two-row Kostka numbers),
degrees, and series identities for the invariant rings of weighted point
configurations on the projective line, and constructs and certifies the
quadratic Groebner basis of the associated toric degeneration when every
weight is even.  Everything is exact: Python integers and fractions, no
floating point.
"""

from .combinatorics import (
    TwoRowTableau,
    WeightVector,
    admissible_partitions,
    as_weights,
    bounded_compositions,
    is_admissible,
    kostka_bruteforce,
    monomial_of_tableau,
    partition_of_tableau,
    prefix_slack,
    slack_profile,
    step_down,
    step_up,
    tableau_from_partition,
)
from .hilbert import (
    SUBSET_CAP,
    GradedSeries,
    RationalHilbertForm,
    binom_count,
    bounded_composition_count,
    cancellation_identity_check,
    degree,
    grassmannian_identity_check,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    koszul_numerical_check,
    multigraded_hilbert,
    rational_form,
)
from .polytope import (
    HPolytope,
    NormalityReport,
    balanced_pair,
    content_polytope,
    even_round,
    from_triangle_coords,
    lattice_points,
    normal_decompose,
    normality_check,
    splitting_signs,
    to_triangle_coords,
    triangle_polytope,
)
from .toric import (
    Binomial,
    BuchbergerReport,
    GroebnerReport,
    Monomial,
    TermOrder,
    buchberger_check,
    groebner_basis,
    groebner_certify,
    groebner_json,
    initial_leads,
    is_norm_minimal,
    is_toric_relation,
    norm_drop_relations,
    radical_certificate,
    standard_monomial_count,
    tail_swap,
    tail_swap_relations,
    term_order,
    toric_variables,
)

__version__ = "0.1.0"
