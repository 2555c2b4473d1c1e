"""Exact computations with axial algebras of Jordan type 1/2 on three generators."""

from .algebra import (
    Algebra,
    Element,
    change_basis,
    direct_sum,
    ideal_closure,
    is_ideal,
    multiply,
    quotient,
    subalgebra_closure,
)
from .axial import (
    GramForm,
    Miyamoto,
    axis_report,
    classify_2gen,
    frobenius_form,
    miyamoto,
    peirce_decompose,
    quotient_form_check,
    radical,
    verify_axis_identities,
)
from .classifier import (
    UNIVERSAL_BASIS,
    RowMatch,
    classify_parameters,
    evaluate_expression,
    radical_expressions,
    verify_multiplication_table,
    verify_row,
)
from .errors import *  # noqa: F401,F403
from .exactfield import FieldTower, Scalar, normalize, sqrt
from .linalg import Subspace
from .models import (
    ModelAlgebra,
    ParameterTuple,
    build_Fn,
    build_hermitian_jordan,
    build_jform,
    build_matrix_jordan,
    derived_axis,
    realize_universal,
    s7_generators,
    s8_generators,
)

__version__ = "0.1.0"
