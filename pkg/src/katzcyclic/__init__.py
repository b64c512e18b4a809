"""Exact-arithmetic cyclic vectors for differential modules.

Computes the explicit candidate cyclic vector for a module given by its
connection matrix, assembles the universal base-change decomposition
H(X) = sum_s H_s(X) G_s with determinant P(X), and certifies cyclicity
over p-adic Banach rings through exact ultrametric norm bounds.
"""

from .diffmod import (
    CharPReport,
    DifferentialModule,
    apply_nabla,
    charp_counterexample,
    is_basis,
    iterated_matrices,
    module_from_json,
    module_to_json,
    rescale_derivation,
)
from .errors import (
    FactorialNotInvertibleError,
    InternalConsistencyError,
    KatzCyclicError,
    NotInvertibleError,
    ParseError,
    PreconditionError,
    UnsupportedOperationError,
)
from .katz import (
    BaseChangeDecomposition,
    CyclicSearchResult,
    KatzVector,
    alpha,
    base_change,
    companion_form,
    derivative_coefficients,
    epsilon,
    find_cyclic,
    h_matrix,
    invert_coefficients,
    katz_vector,
    specialize_vector,
    vandermonde_det,
)
from .normvalue import NormValue
from .rings import (
    FiniteFieldPolyRing,
    GaussPolynomialRing,
    RationalFunctionField,
    Ring,
    ScaledDerivationRing,
    ring_from_json,
)
from .ultranorm import (
    CyclicityCertificate,
    MatrixNormKind,
    certify_lemma_2_1,
    check_prop_2_3,
    check_prop_2_5,
    check_prop_2_8,
    h_norm_bounds,
    invertibility_witness_norm,
    lemma_2_2_bound,
    matrix_norm,
)

__version__ = "0.1.0"
