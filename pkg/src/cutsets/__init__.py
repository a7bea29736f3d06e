"""Cutset profiles in the Boolean lattice 2^[n].

Decides whether a vector of level counts is the profile of a cutset (a
family meeting every maximal chain), computes the extremal function
g_n(m, l), and builds explicit cutsets together with brute-force oracles.
"""
from .binom import CascadeRep, binomial, boundary, cascade, evaluate
from .canonical import (
    BudgetExceeded,
    CanonicalCollection,
    Profile,
    UVVectors,
    emit_sets,
    is_cutset_profile,
    simulate_sets,
    uv,
)
from .colex import Family, Segment, compare_squashed, initial, last, materialize, rank, shade, shadow, unrank
from .constructions import (
    MultiFamily,
    double_by_complements,
    exhaustive_feasible,
    is_cutset,
    profile_of,
    qrs,
    two_level,
)
from .profiles import (
    GTable,
    conjecture_value,
    constant_profile,
    corollary3_value,
    g,
    g_table,
    minusing_profile,
    theorem1_value,
    theorem2_bounds,
    vertical_identity_check,
)

__version__ = "0.1.0"
