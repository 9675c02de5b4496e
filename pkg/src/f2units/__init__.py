"""Unitary subgroups of modular group algebras of finite 2-groups.

The package builds group algebras over the two-element field as explicit
multiplication tables, enumerates their normalized and unitary units
exhaustively, and independently reconstructs the unitary groups from their
structural decompositions, certifying that both routes agree.
"""

from . import errors
from .errors import (
    BadCosetsError,
    BadIndexError,
    BadOrderError,
    BadSquareElementError,
    CenterQuotientNotKleinError,
    CommutatorNotOrderTwoError,
    F2UnitsError,
    GroupAxiomViolationError,
    GroupMismatchError,
    HypothesisViolationError,
    NoComplementError,
    NoSolutionError,
    NotAbelianError,
    NotAbelianSubgroupError,
    NotASubgroupError,
    NotAUnitError,
    NotInvertingError,
    NotSubsetError,
    NotUnitaryError,
    ParseError,
    TooLargeError,
    WrongIndexError,
)
from .algebra import (
    AlgebraElement,
    annihilator_solve,
    augmentation,
    basis,
    coset_split,
    from_indices,
    ga_add,
    ga_inverse,
    ga_involute,
    ga_mul,
    one,
    parse_element,
    quadrant_split,
    render_element,
    zero,
)
from .catalog import CLASSICAL_ENTRIES, ODOT_ENTRIES, catalog_groups, small_catalog_groups
from .cli import RunConfig, main, parse_group_spec, run
from .decompositions import (
    CheckResult,
    DecompositionReport,
    build_abelian_complement,
    build_central_unipotent,
    build_normal_cofactor,
    build_torsion_complement,
    build_unipotent_factor,
    check_conjugation_closure,
    check_unitary_quadrant_system,
    check_unitary_split_form,
    verify_inverting_decomposition,
    verify_odot_decomposition,
)
from .groups import (
    GroupTable,
    SubgroupSet,
    center,
    commutator_subgroup,
    coset_representatives,
    element_order,
    find_complement_subgroup,
    is_normal,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_inverting_extension,
    make_quaternion,
    order_multiset,
    subgroup_closure,
)
from .involutions import (
    AntiAutomorphism,
    InvertingExtensionForm,
    OdotForm,
    classical_involution,
    detect_inverting_form,
    make_inverting_form,
    make_odot_form,
    odot_involution,
    validate_involution,
)
from .unitgroup import (
    DEFAULT_EXHAUSTIVE_BOUND,
    UnitSet,
    canonical_generators,
    elements_of_order_dividing_2,
    enumerate_normalized_units,
    enumerate_unitary,
    find_complement,
    group_image,
    internal_direct,
    internal_semidirect,
    make_unit_set,
    product_masks,
    structure_predicates,
    unit_subgroup_closure,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AntiAutomorphism",
    "BadCosetsError",
    "BadIndexError",
    "BadOrderError",
    "BadSquareElementError",
    "CenterQuotientNotKleinError",
    "CheckResult",
    "CommutatorNotOrderTwoError",
    "F2UnitsError",
    "CLASSICAL_ENTRIES",
    "DEFAULT_EXHAUSTIVE_BOUND",
    "DecompositionReport",
    "GroupAxiomViolationError",
    "GroupMismatchError",
    "GroupTable",
    "HypothesisViolationError",
    "InvertingExtensionForm",
    "NoComplementError",
    "NoSolutionError",
    "NotASubgroupError",
    "NotAUnitError",
    "NotAbelianError",
    "NotAbelianSubgroupError",
    "NotInvertingError",
    "NotSubsetError",
    "NotUnitaryError",
    "ODOT_ENTRIES",
    "OdotForm",
    "ParseError",
    "RunConfig",
    "SubgroupSet",
    "TooLargeError",
    "UnitSet",
    "WrongIndexError",
    "annihilator_solve",
    "augmentation",
    "basis",
    "build_abelian_complement",
    "build_central_unipotent",
    "build_normal_cofactor",
    "build_torsion_complement",
    "build_unipotent_factor",
    "canonical_generators",
    "catalog_groups",
    "center",
    "check_conjugation_closure",
    "check_unitary_quadrant_system",
    "check_unitary_split_form",
    "classical_involution",
    "commutator_subgroup",
    "coset_representatives",
    "coset_split",
    "detect_inverting_form",
    "element_order",
    "elements_of_order_dividing_2",
    "enumerate_normalized_units",
    "enumerate_unitary",
    "errors",
    "find_complement",
    "find_complement_subgroup",
    "from_indices",
    "ga_add",
    "ga_inverse",
    "ga_involute",
    "ga_mul",
    "group_image",
    "internal_direct",
    "internal_semidirect",
    "is_normal",
    "main",
    "make_cyclic",
    "make_dihedral",
    "make_direct_product",
    "make_inverting_extension",
    "make_inverting_form",
    "make_odot_form",
    "make_quaternion",
    "make_unit_set",
    "odot_involution",
    "one",
    "order_multiset",
    "parse_element",
    "parse_group_spec",
    "product_masks",
    "quadrant_split",
    "render_element",
    "run",
    "small_catalog_groups",
    "structure_predicates",
    "subgroup_closure",
    "unit_subgroup_closure",
    "validate_involution",
    "verify_inverting_decomposition",
    "verify_odot_decomposition",
    "zero",
]
