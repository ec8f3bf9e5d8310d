"""Exact verification toolkit for the symplectic symmetric pair of GL(2n).

The package models, over exact rationals, the combinatorial structure that
controls relative square integrability on the quotient of GL(2n) by the
symplectic group: the involution and its action on the character lattice,
theta-bases and theta-split parabolic subgroups, Weyl double cosets,
Jacquet-module exponents of segment representations, dominant-cone
inequalities, and the classification of distinguished elliptic parameters.
"""

__version__ = "0.1.0"

from .exponents import (
    ExponentVector,
    SegmentDatum,
    casselman_check,
    geometric_lemma_terms,
    relative_casselman_verdict,
    segment_jacquet_exponents,
)
from .involution import (
    InvolutionDatum,
    SignedPermutation,
    SkewForm,
    act_on_involution,
    apply_involution,
    interleaved_symplectic_form,
    is_fixed,
    lattice_action,
    standard_symplectic_form,
)
from .parabolic import (
    ParabolicDatum,
    balanced_partition_check,
    delta_ratio_on_fixed_levi,
    is_theta_elliptic_levi,
    is_theta_split,
    is_theta_stable,
    parabolic_from_partition,
    standard_parabolic,
)
from .parameters import (
    AParameter,
    SL2Rep,
    Summand,
    classify_speh,
    clebsch_gordan,
    factorization_oracle,
    is_X_distinguished,
    is_X_elliptic,
    speh_parameter,
)
from .cosets import (
    CosetCase,
    CosetRep,
    brute_force_double_cosets,
    case1_levi_fixed_points,
    classify_case,
    double_coset_reps,
    elliptic_subset,
)
from .roots import (
    CharacterVector,
    SimpleSystem,
    WeylElement,
    standard_base,
    translate_base,
    w_plus,
)
from .theta import (
    DominantCone,
    RestrictedCharacter,
    ThetaSplitSubset,
    dominant_cone,
    is_theta_base,
    maximal_theta_split_subsets,
    restrict,
    restricted_root_system,
    standard_setup,
    theta_fixed_roots,
    theta_split_subsets,
)
