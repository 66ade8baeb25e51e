"""Exact lattice-point counts in translated graphical zonotopes, sphere
counts of partition posets via lexicographic shellability, and the
equivariant bookkeeping tying the two together."""

from .graphs import (
    BivariatePolynomial,
    Multigraph,
    Permutation,
    Polynomial,
    automorphisms,
    contract,
    dual_graph,
    ehrhart_complete,
    is_automorphism,
    quotient,
    restrict,
    tutte_complete,
)
from .posets import (
    EdgeOrder,
    FlatPoset,
    LexLabelling,
    Poset,
    SetPartition,
    flats,
    is_omega_integral,
    lex_labelling,
    mediocre_maximal_chains,
    mobius,
    partitions_of_set,
    rank_formula,
    sphere_count,
)
from .zonotopes import (
    Budget,
    BudgetError,
    QuasiPolynomial,
    VectorConfig,
    Zonotope,
    count_via_reciprocity,
    ehrhart_qp,
    graphical_count,
    graphical_interior_count,
    graphical_zonotope,
    interior_lattice_points,
    mobius_count,
    rvol,
)
from .equivariant import (
    ASetData,
    CharacterVector,
    DecompositionReport,
    FixedZonotope,
    a_sets,
    alpha_character,
    face_lattice_feasibility,
    fixed_interior_count,
    fixed_zonotope,
    forest_coefficient_identity,
    homology_character,
    orientation_character,
    permutation_character,
    verify_decomposition,
)
from .hitchin import (
    HitchinInstance,
    SupportReport,
    branch_count,
    gcd_invariance,
    is_d_integral,
    omega_vector,
    partitions_of,
    stalk_dimension,
    supports,
)

__version__ = "0.1.0"
