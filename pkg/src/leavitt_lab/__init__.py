"""Exact computation in the Leavitt algebra L_{2,R} and Thompson's group V."""

from .algebra import (
    AlgebraElement,
    SpectrumReport,
    UnitaryReducedForm,
    adjoint,
    canonicalize,
    diagonal_unitary,
    embed_matrix,
    full_spectrum_up_to,
    generators,
    is_coefficient_free_at_level,
    is_unitary,
    monomial,
    mul,
    one,
    power,
    reduced_form,
    scalar,
    sign_split,
    u_plus,
    uniform_beta_expand,
    zero,
)
from .errors import (
    CornerConditionViolated,
    InfeasibleDegree,
    LeavittError,
    NotCommuting,
    NotInUV,
    NotProjection,
    NotReducible,
    NotStandardizable,
    NotUnitary,
    RingMismatch,
    UnsupportedRing,
    ZeroProjection,
)
from .polynomials import BivariatePolynomial
from .projections import is_projection, projection_standard_form, twist_to_unital, unit_equivalence
from .relations import (
    commutator,
    evaluate_transfer,
    find_relation,
    relation_search,
    transfer_factorization,
    transfer_polynomial,
)
from .rep import EventuallyPeriodicPath, PathVector, apply_element, apply_to_path, canonical_path
from .rings import QQ, ZZ, Ring, Zmod
from .tensor import TensorElement, independent_up_to, laurent_image, tensor, tensor_mul
from .thompson import (
    FixedPointSet,
    Table,
    act,
    finite_orbit_search,
    fixed_points,
    from_unitary,
    table_compose,
    table_inverse,
    table_reduce,
    to_unitary,
)
from .words import PrefixCode, is_antichain, is_complete_code, kraft_sum, merge_siblings, prefix_relation, refine_code

__version__ = "0.1.0"
