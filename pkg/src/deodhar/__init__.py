"""Exact-arithmetic Deodhar decomposition for the flag variety of SL_d.

Classify a flag into its Deodhar component, recover the factorization
parameters by the generalized chamber ansatz, test and sample total
positivity, compute R-polynomials, and draw the chamber arrangements.
"""

from .components import (
    ComponentConditions,
    ComponentDescriptor,
    FactorizationResult,
    build_element,
    chamber_coordinates,
    classify,
    classify_steps,
    component_conditions,
    element_from_coordinates,
    factorize,
    minor_polynomial,
)
from .diagrams import (
    ANSATZ,
    CLASSICAL,
    LOWER,
    UPPER,
    Arrangement,
    ansatz_minor_labels,
    build_arrangement,
    classical_arrangement,
    classify_graphical,
    diagram_formulas,
    render,
)
from .errors import (
    DeodharError,
    DomainError,
    InputError,
    InternalCheckError,
    NotInComponentError,
)
from .linalg import (
    RatMatrix,
    bruhat_position,
    flag_equal,
    matrix_from_json,
    matrix_to_json,
    opposite_position,
    unipotent_representative,
)
from .pinning import (
    GroupFactor,
    GroupWord,
    evaluate,
    gen_acheck,
    gen_sdot,
    gen_sdot_inv,
    gen_x,
    gen_y,
    gmin,
    group_word_from_json,
    group_word_to_json,
    partial,
    perm_matrix,
    reduce_flag,
)
from .positivity import (
    PositiveSample,
    TnnCertificate,
    braid_move_y,
    is_totally_nonnegative,
    random_positive_sample,
    sample_positive,
)
from .subexpr import (
    RPolynomial,
    SubexpressionTrace,
    enumerate_distinguished,
    is_distinguished,
    positive_subexpression,
    r_polynomial,
    trace_from_json,
    trace_to_json,
)
from .weyl import (
    Permutation,
    a_reduced_word,
    act,
    bruhat_leq,
    evaluate_word,
    fundamental_weight,
    identity_perm,
    is_reduced,
    longest_element,
    pair,
    reduced_words,
    simple_reflection,
)

__version__ = "0.1.0"

__all__ = [
    "ANSATZ",
    "Arrangement",
    "CLASSICAL",
    "ComponentConditions",
    "ComponentDescriptor",
    "DeodharError",
    "DomainError",
    "FactorizationResult",
    "GroupFactor",
    "GroupWord",
    "InputError",
    "InternalCheckError",
    "LOWER",
    "NotInComponentError",
    "Permutation",
    "PositiveSample",
    "RPolynomial",
    "RatMatrix",
    "SubexpressionTrace",
    "TnnCertificate",
    "UPPER",
    "a_reduced_word",
    "act",
    "ansatz_minor_labels",
    "braid_move_y",
    "bruhat_leq",
    "bruhat_position",
    "build_arrangement",
    "build_element",
    "chamber_coordinates",
    "classical_arrangement",
    "classify",
    "classify_graphical",
    "classify_steps",
    "component_conditions",
    "diagram_formulas",
    "element_from_coordinates",
    "enumerate_distinguished",
    "evaluate",
    "evaluate_word",
    "factorize",
    "flag_equal",
    "fundamental_weight",
    "gen_acheck",
    "gen_sdot",
    "gen_sdot_inv",
    "gen_x",
    "gen_y",
    "gmin",
    "group_word_from_json",
    "group_word_to_json",
    "identity_perm",
    "is_distinguished",
    "is_reduced",
    "is_totally_nonnegative",
    "longest_element",
    "matrix_from_json",
    "matrix_to_json",
    "minor_polynomial",
    "opposite_position",
    "pair",
    "partial",
    "perm_matrix",
    "positive_subexpression",
    "r_polynomial",
    "random_positive_sample",
    "reduce_flag",
    "reduced_words",
    "render",
    "sample_positive",
    "simple_reflection",
    "trace_from_json",
    "trace_to_json",
    "unipotent_representative",
    "__version__",
]
