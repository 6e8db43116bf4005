"""Exact Hilbert functions, degree bounds, regular sequences and Nullstellensatz certificates."""

from .core import (
    DEFAULT_PRIME,
    GF,
    QQ,
    Field,
    ParseError,
    Polynomial,
    Ring,
    RingMismatch,
    affine_ring,
    affinize,
    graded_ring,
    homogenize,
    random_polynomial,
)
from .groebner import (
    GREVLEX,
    GroebnerBasis,
    Ideal,
    MonomialOrder,
    buchberger,
    contains_one,
    eliminate,
    ideal_intersection,
    ideal_quotient,
    is_nzd,
    is_regular_sequence,
    is_weak_regular_sequence,
    normal_form,
    projective_closure,
    saturate,
)
from .hilbert import (
    HilbertData,
    HilbertSeries,
    UnitIdealError,
    degree,
    dimension,
    hilbert_brute_force,
    hilbert_data,
    hilbert_function,
    hilbert_series,
)

__version__ = "0.1.0"
