"""Exact computations with group-graded algebras: multiplication algebras,
graded centroids, graded simplicity, multilinear graded identities and
graded isomorphism."""

from .algebra import (
    Element,
    GradedAlgebra,
    make_direct_sum,
    make_elementary_matrix,
    make_group_algebra,
    make_sl2,
    multiply,
    named_bicharacter,
    scalar_extend,
    validate,
)
from .centroid import Centroid, centroid_dimension, graded_centroid, is_graded_division
from .groups import GradeGroup
from .identities import (
    DegreeSignature,
    MultilinearSpace,
    compare_identities,
    identity_space,
    monomial_basis,
    ordinary_identity_space,
    standard_polynomial,
)
from .isomorphism import (
    IsoVerdict,
    IsoWitness,
    invariant_fingerprint,
    search_iso,
    theorem_experiment,
    verify_iso,
)
from .multiplication import (
    MatrixSubalgebra,
    SimplicityVerdict,
    check_graded_simple,
    mult_algebra,
    spin,
    unital_closure,
)
from .scalars import FieldSpec, Scalar, embed, sc_add, sc_inv, sc_mul

__version__ = "0.1.0"
