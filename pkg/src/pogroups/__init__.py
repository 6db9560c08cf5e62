"""Exact computations with partial and linear orders on torsion-free abelian groups of finite rank."""
from .cones import (
    ClosureCone,
    ConeReport,
    ConeSpec,
    closure_cone,
    closure_contains,
    cone_member,
    separating_functional,
    validate_cone,
)
from .dsl import SpecFile, format_spec, format_stack, parse_point, parse_spec
from .errors import DomainError, InputError, ParseError
from .exact import LPResult, gauss_kernel, hermite_normal_form, hnf_solve, lp_feasible
from .extensions import (
    Comparison,
    ExtensionReport,
    HarnessReport,
    archimedean_witness,
    check_hyperplane_condition,
    directed_join,
    intersection_harness,
    is_extension,
    product_leq,
    random_extension,
    separating_extension,
)
from .formal import FormalReal, format_formal, fr_dot, fr_sign, parse_formal
from .groups import CanonicalRep, GroupPresentation, canonical_rep, group_contains, phi, psi
from .stacks import (
    HolderEmbedding,
    OrderComparison,
    OrderStack,
    Sign,
    clarify,
    compare_orders,
    complete_stack,
    holder_map,
    is_archimedean,
    is_clarified,
    is_linear_on,
    kernel_completion,
    leq,
    orders_equal,
    rational_kernel,
    stack_sign,
    zajceva_stack,
)

__version__ = "0.1.0"

__all__ = [
    "archimedean_witness",
    "canonical_rep",
    "CanonicalRep",
    "check_hyperplane_condition",
    "clarify",
    "closure_cone",
    "closure_contains",
    "ClosureCone",
    "compare_orders",
    "Comparison",
    "complete_stack",
    "cone_member",
    "ConeReport",
    "ConeSpec",
    "directed_join",
    "DomainError",
    "ExtensionReport",
    "FormalReal",
    "format_formal",
    "format_spec",
    "format_stack",
    "fr_dot",
    "fr_sign",
    "gauss_kernel",
    "group_contains",
    "GroupPresentation",
    "HarnessReport",
    "hermite_normal_form",
    "hnf_solve",
    "holder_map",
    "HolderEmbedding",
    "InputError",
    "intersection_harness",
    "is_archimedean",
    "is_clarified",
    "is_extension",
    "is_linear_on",
    "kernel_completion",
    "leq",
    "lp_feasible",
    "LPResult",
    "OrderComparison",
    "orders_equal",
    "OrderStack",
    "parse_formal",
    "parse_point",
    "parse_spec",
    "ParseError",
    "phi",
    "product_leq",
    "psi",
    "random_extension",
    "rational_kernel",
    "separating_extension",
    "separating_functional",
    "Sign",
    "SpecFile",
    "stack_sign",
    "validate_cone",
    "zajceva_stack",
]
