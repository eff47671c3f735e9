import pytest

from gradedpi import linalg
from gradedpi.algebra import GradedAlgebra, make_direct_sum, make_group_algebra
from gradedpi.centroid import (
    centroid_dimension,
    graded_centroid,
    is_field,
    is_graded_division,
)
from gradedpi.errors import NotGradedSimple, NoUnit
from gradedpi.groups import GradeGroup
from gradedpi.scalars import FieldSpec

from oracles import commuting_maps_dim

Q = FieldSpec.rational()
Q4 = FieldSpec.cyclotomic(4)


def dims(C):
    return {g: len(v) for g, v in C.ops.items()}


def test_examples(simple):
    M2 = simple["z2-m2-00"]
    assert graded_centroid(M2).dim == 1
    C = graded_centroid(simple["z2-group"])
    assert dims(C) == {(0,): 1, (1,): 1}
    assert graded_centroid(simple["z2z2-pauli"]).dim == 1


def test_division_examples(simple, negatives):
    assert is_graded_division(graded_centroid(simple["z2-group"]))
    assert not is_graded_division(graded_centroid(negatives["neg-z2-group-sum"]))
    assert is_graded_division(graded_centroid(simple["z2-m2-01"]))


def test_no_unit():
    Z = GradedAlgebra(Q, GradeGroup(), ["u"], [()], None)
    C = graded_centroid(Z)  # centroid of the zero algebra is all of End, contains id
    assert C.dim == 1
    from gradedpi.centroid import Centroid
    bare = Centroid(Z, {}, "commutant")
    with pytest.raises(NoUnit):
        is_graded_division(bare)


def test_centroid_dimension_examples(simple, negatives):
    assert centroid_dimension(simple["z2-m2-01"]) == 4
    assert centroid_dimension(simple["z2-group"]) == 1
    assert centroid_dimension(simple["z2z2-pauli"]) == 4
    with pytest.raises(NotGradedSimple):
        centroid_dimension(negatives["neg-z2-group-sum"])


def test_commutant_and_center_routes_agree(simple, negatives):
    for A in list(simple.values()) + list(negatives.values()):
        if not A.is_associative:
            continue
        a = graded_centroid(A, "commutant")
        b = graded_centroid(A, "center")
        assert dims(a) == dims(b), A.name
        for _, op in b.basis():
            assert a.coords(op) is not None


def test_total_centroid_matches_ungraded_oracle(simple, negatives):
    # for finite groups the graded centroid is the full centroid
    for A in list(simple.values()) + list(negatives.values()):
        if A.group.is_finite and A.dim <= 6:
            assert graded_centroid(A, "commutant").dim == commuting_maps_dim(A), A.name


def test_gamma_commutative_division_for_simple(simple):
    for A in simple.values():
        C = graded_centroid(A)
        assert C.is_commutative() and C.division_status() is True, A.name
        assert len(C.ops[A.group.identity]) == 1


def test_gamma_as_algebra(simple):
    G = graded_centroid(simple["z3-group-cyclic"]).as_algebra()
    assert G.dim == 3 and G.is_associative and G.is_commutative()


def _op(rows):
    n = len(rows)
    return tuple({r: rows[r][c] for r in range(n) if rows[r][c]} for c in range(n))


def test_field_test():
    ident = linalg.identity_op(2)
    J = _op([[0, -1], [1, 0]])  # J^2 = -1
    P = _op([[1, 0], [0, 0]])  # idempotent
    N = _op([[0, 1], [0, 0]])  # nilpotent
    assert is_field(Q, [ident, J], 2) is True
    assert is_field(Q4, [ident, J], 2) is False  # i is already in the field
    assert is_field(Q, [ident, P], 2) is False
    assert is_field(Q, [ident, N], 2) is False
    assert is_field(Q, [ident], 2) is True
    assert is_field(FieldSpec.prime(3), [ident, J], 2) is None


def test_larger_gamma_e_is_inconclusive():
    # F[Z/4] trivially graded over Q: Gamma_e = Q[x]/(x^4-1) is not a field
    from gradedpi.multiplication import check_graded_simple
    G4 = GradeGroup.cyclic(4)
    A = make_group_algebra(G4, field=Q).trivially_graded()
    assert check_graded_simple(A).verdict == "NotGradedSimple"
    # Q(i) as a 2-dimensional Q-algebra: Gamma_e is a degree-2 field
    Qi = GradedAlgebra.from_products(Q, GradeGroup(), ["1", "i"], [(), ()], {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: -1}})
    v = check_graded_simple(Qi)
    assert v.verdict == "Inconclusive"
