"""Exact cohomology and deformation theory of pre-Lie algebras with derivations.

Everything is computed over the rationals with exact arithmetic: no
floats, no tolerances. The main objects are pre-Lie algebras given by
structure constants, bimodule representations, derivations into a
module, and the pairs they form. On top of those the package provides
the graded matching bracket, four coboundary operators with their
cochain complexes, the controlling L-infinity structure with its
Maurer-Cartan theory, classification of infinitesimal deformations,
and classification of abelian extensions by second cohomology.
"""

from .cochain import (
    Cochain,
    MixedMap,
    MixedShape,
    SplitDims,
    basis_cochains,
    bidegree_of,
    component,
    decompose_k0,
    lift,
    mixed_space_dim,
    theta_component,
    zero_mixed,
)
from .cohomology import (
    DerPairCochain,
    TwoSlotCochain,
    cohomology_dim,
    d_coeff,
    d_prelie,
    d_regular,
    delta,
    differential_matrix,
    huaD,
    huaD_reg,
    huaD_rep,
    i_embed,
    les_check,
    omega,
    p_project,
    partial,
    space_dimension,
)
from .deformation import (
    DeformationDatum,
    EquivalenceWitness,
    coboundary_datum,
    deformation_cocycle,
    deformed_pair,
    is_equivalence,
    is_infinitesimal_deformation,
    same_cohomology_class,
)
from .exact_linalg import Matrix, kernel_basis, rank, rref, solve
from .extension import (
    AbelianExtension,
    DerPairRepresentation,
    ExtensionCocycle,
    build_extension,
    canonical_section,
    classify,
    derpair_representation_report,
    extract_cocycle,
    coboundary_cocycle,
    induced_base,
    is_section,
    is_derpair_representation,
    is_extension_cocycle,
    regular_module,
    semidirect_product,
    validate_extension,
)
from .io_cli import (
    CliError,
    Document,
    ParseError,
    cli_run,
    emit,
    parse,
    parse_scalar,
    validate_document,
)
from .linfty import (
    LElement,
    MCCandidate,
    higher_lk,
    l1_on_subalgebra,
    l2,
    mc_check,
    mc_residual,
    mc_twisted_check,
    twist,
)
from .mn_bracket import mn_bracket
from .prelie import (
    DerPair,
    PreLieAlgebra,
    RegularPair,
    Representation,
    derivation_cochain,
    is_derivation,
    is_derpair,
    is_morphism,
    is_prelie,
    is_regular_pair,
    is_representation,
    regular_representation,
    representation_report,
    structure_cochain,
    subadjacent_lie,
)

__all__ = [
    "AbelianExtension",
    "CliError",
    "Cochain",
    "DeformationDatum",
    "DerPair",
    "DerPairCochain",
    "DerPairRepresentation",
    "Document",
    "EquivalenceWitness",
    "ExtensionCocycle",
    "LElement",
    "MCCandidate",
    "Matrix",
    "MixedMap",
    "MixedShape",
    "ParseError",
    "PreLieAlgebra",
    "RegularPair",
    "Representation",
    "SplitDims",
    "TwoSlotCochain",
    "basis_cochains",
    "bidegree_of",
    "build_extension",
    "canonical_section",
    "classify",
    "cli_run",
    "coboundary_cocycle",
    "coboundary_datum",
    "cohomology_dim",
    "component",
    "d_coeff",
    "d_prelie",
    "d_regular",
    "decompose_k0",
    "deformation_cocycle",
    "deformed_pair",
    "delta",
    "derivation_cochain",
    "derpair_representation_report",
    "differential_matrix",
    "emit",
    "extract_cocycle",
    "higher_lk",
    "huaD",
    "huaD_reg",
    "huaD_rep",
    "i_embed",
    "induced_base",
    "is_derivation",
    "is_derpair",
    "is_derpair_representation",
    "is_equivalence",
    "is_extension_cocycle",
    "is_infinitesimal_deformation",
    "is_morphism",
    "is_prelie",
    "is_regular_pair",
    "is_representation",
    "is_section",
    "kernel_basis",
    "l1_on_subalgebra",
    "l2",
    "les_check",
    "lift",
    "mc_check",
    "mc_residual",
    "mc_twisted_check",
    "mixed_space_dim",
    "mn_bracket",
    "omega",
    "p_project",
    "parse",
    "parse_scalar",
    "partial",
    "rank",
    "regular_module",
    "regular_representation",
    "representation_report",
    "rref",
    "same_cohomology_class",
    "semidirect_product",
    "solve",
    "space_dimension",
    "structure_cochain",
    "subadjacent_lie",
    "theta_component",
    "twist",
    "validate_document",
    "validate_extension",
    "zero_mixed",
]
