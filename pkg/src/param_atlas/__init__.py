"""Census, fixed rings, and Levi coverage for moduli of tame parameters.

Preset groups: GL_n (n >= 1), SL_n (n >= 2), GSp_4, GSp_6, U_n (n >= 2).
Everything is exact: integer lattices, Laurent polynomials, small finite
fields.  The `oracle` module shadows the symbolic results with brute force.
"""

from .budget import BudgetExceededError, DEFAULT_BUDGET, check_budget, current_budget
from .census import (
    CensusEntry,
    ComponentGroup,
    ExplicitGroup,
    TwistedClasses,
    UnipotentClass,
    census,
    component_group,
    cyclic_group,
    direct_product,
    partitions,
    quaternion_group,
    symmetric_group_3,
    symplectic_partitions,
    trivial_group,
    twisted_class_count,
    unipotent_classes,
)
from .coverage import (
    CoverageVerdict,
    StandardLevi,
    coverage_report,
    is_regular_in,
    simple_root_permutation,
    standard_levis,
)
from .gf import FiniteField, get_field
from .invariant_rings import (
    GeneratorSet,
    NotInvariantError,
    RingPresentation,
    adams,
    bg_presentation,
    count_points,
    dickson_polynomial,
    expand_in_generators,
    frobenius_pullback,
    fundamental_invariants,
    orbit_sum,
    rewrite_in_generators,
)
from .laurent import LaurentPolynomial
from .oracle import (
    AvoidantReport,
    IdentityReport,
    JacobianReport,
    TwistReport,
    all_automorphisms,
    avoidant_check,
    classify_twist,
    eval_identity_trials,
    inner_twist,
    is_commutant_solution,
    jacobian_probe,
    solve_commutant,
    twisted_orbits_bruteforce,
)
from .root_datum import (
    ArithmeticContext,
    GroupDatum,
    UnsupportedPresetError,
    build_group,
    prime_power_base,
    weyl_elements,
    weyl_order,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticContext",
    "AvoidantReport",
    "BudgetExceededError",
    "CensusEntry",
    "ComponentGroup",
    "CoverageVerdict",
    "DEFAULT_BUDGET",
    "ExplicitGroup",
    "FiniteField",
    "GeneratorSet",
    "GroupDatum",
    "IdentityReport",
    "JacobianReport",
    "LaurentPolynomial",
    "NotInvariantError",
    "RingPresentation",
    "StandardLevi",
    "TwistReport",
    "TwistedClasses",
    "UnipotentClass",
    "UnsupportedPresetError",
    "adams",
    "all_automorphisms",
    "avoidant_check",
    "bg_presentation",
    "build_group",
    "census",
    "check_budget",
    "classify_twist",
    "component_group",
    "count_points",
    "coverage_report",
    "current_budget",
    "cyclic_group",
    "dickson_polynomial",
    "direct_product",
    "eval_identity_trials",
    "expand_in_generators",
    "frobenius_pullback",
    "fundamental_invariants",
    "get_field",
    "inner_twist",
    "is_commutant_solution",
    "is_regular_in",
    "jacobian_probe",
    "orbit_sum",
    "partitions",
    "prime_power_base",
    "quaternion_group",
    "rewrite_in_generators",
    "simple_root_permutation",
    "solve_commutant",
    "standard_levis",
    "symmetric_group_3",
    "symplectic_partitions",
    "trivial_group",
    "twisted_class_count",
    "twisted_orbits_bruteforce",
    "unipotent_classes",
    "weyl_elements",
    "weyl_order",
]
