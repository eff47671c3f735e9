"""Acceptance criteria, each exact and timed against its own limit.

Run with pytest (a PASS/FAIL line per criterion appears in the terminal
summary) or directly: ``python tests/test_acceptance.py``.
"""

import itertools
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gradedpi.algebra import make_elementary_matrix
from gradedpi.catalogue import EXPECTED_ISOMORPHIC, negative_catalogue, simple_catalogue
from gradedpi.centroid import centroid_dimension, graded_centroid
from gradedpi.groups import GradeGroup
from gradedpi.identities import (
    compare_identities,
    identity_space,
    ordinary_identity_space,
    signatures,
    standard_polynomial,
)
from gradedpi.isomorphism import ANOMALY, FOUND, NOT_ISO, search_iso, theorem_experiment, verify_iso
from gradedpi.multiplication import (
    GRADED_SIMPLE,
    INCONCLUSIVE,
    NOT_GRADED_SIMPLE,
    check_graded_simple,
    is_homogeneous_ideal,
    mult_algebra,
)
from gradedpi.scalars import FieldSpec

from oracles import brute_kernel_dim, kills, naive_hom_check

F12 = FieldSpec.cyclotomic(12)
RESULTS = []


def _run(num, title, limit, fn):
    t0 = time.perf_counter()
    detail, ok = "", False
    try:
        detail = fn()
        elapsed = time.perf_counter() - t0
        ok = elapsed < limit
        if not ok:
            detail = f"too slow: {detail}"
    except AssertionError as exc:
        elapsed = time.perf_counter() - t0
        detail = f"assertion failed: {exc}"
    line = (f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title} "
            f"[{elapsed:.1f} s, limit {limit} s] {detail}")
    RESULTS.append(line)
    print(line)
    assert ok, line


def fresh():
    """A new catalogue so no cached results leak between timed criteria."""
    return dict(simple_catalogue(F12)), dict(negative_catalogue(F12))


# 1 ------------------------------------------------------------------------


def amitsur_levitzki():
    M2 = make_elementary_matrix(2, [(), ()], GradeGroup(), F12, name="M2")
    dims = {n: identity_space(M2, ((),) * n, associative=True).dim for n in (2, 3)}
    assert dims == {2: 0, 3: 0}, dims
    S4 = identity_space(M2, ((),) * 4, associative=True)
    assert S4.contains(standard_polynomial(4)), "s4 not an identity"
    return f"kernels n=2,3 are 0; s4 in the n=4 kernel (dim {S4.dim})"


def test_criterion_1_amitsur_levitzki():
    _run(1, "M_2 has no identity below degree 4 and satisfies s_4", 10, amitsur_levitzki)


# 2 ------------------------------------------------------------------------


def centroid_is_graded_field():
    simple, _ = fresh()
    for name, A in simple.items():
        C = graded_centroid(A)
        assert C.is_commutative(), f"{name}: centroid not commutative"
        assert C.division_status() is True, f"{name}: centroid not graded division"
        e = len(C.ops.get(A.group.identity, ()))
        assert e == 1, f"{name}: dim Gamma_e = {e}"
    return f"{len(simple)} algebras, all with commutative graded division Gamma and Gamma_e = F"


def test_criterion_2_centroid():
    _run(2, "graded centroid is a commutative graded division algebra, Gamma_e = F", 30,
         centroid_is_graded_field)


# 3 ------------------------------------------------------------------------

REQUIRED = ["z2-group", "z3-group", "z2z2-group", "z2z2-pauli", "z2-m2-01", "z2-m2-00",
            "z3-m3-012", "z2-sl2"]


def simplicity_through_mult_algebra():
    simple, negatives = fresh()
    assert all(r in simple for r in REQUIRED) and len(negatives) >= 2
    checked = 0
    for name, A in list(simple.items()) + list(negatives.items()):
        v = check_graded_simple(A)
        assert v.verdict != INCONCLUSIVE, f"{name}: {v.reason}"
        M = mult_algebra(A)
        vm = check_graded_simple(M.as_algebra())
        assert v.is_simple == vm.is_simple, f"{name}: A {v.verdict}, M(A) {vm.verdict}"
        if name in simple:
            assert v.verdict == GRADED_SIMPLE, f"{name}: {v.reason}"
            n, g = v.data["n"], graded_centroid(A).dim
            assert n * g == A.dim and M.dim == n * n * g, f"{name}: dim M = {M.dim}"
        else:
            assert v.verdict == NOT_GRADED_SIMPLE, f"{name} judged simple"
            assert v.ideal and is_homogeneous_ideal(A, v.ideal), f"{name}: bad certificate"
        checked += 1
    return f"{len(simple)} simple + {len(negatives)} negatives with verified ideals"


def test_criterion_3_simplicity():
    _run(3, "A graded simple iff M(A) graded simple, with dim M(A) = n^2 dim Gamma", 60,
         simplicity_through_mult_algebra)


# 4 ------------------------------------------------------------------------


def equal_ordinary_identities_equal_dimension():
    simple, _ = fresh()
    names = sorted(simple)
    equal = 0
    for a, b in itertools.combinations(names, 2):
        A, B = simple[a], simple[b]
        if compare_identities(A.trivially_graded(), B.trivially_graded(), 4).equal:
            equal += 1
            da, db = centroid_dimension(A), centroid_dimension(B)
            assert da == db, f"{a}: {da} vs {b}: {db}"
    assert equal, "no pair with equal ordinary identities; the check would be vacuous"
    pairs = len(names) * (len(names) - 1) // 2
    return f"{pairs} pairs, {equal} with equal ordinary identities, all with equal dim over Gamma"


def test_criterion_4_centroid_dimension():
    _run(4, "equal ordinary identities up to degree 4 give equal dim over Gamma", 60,
         equal_ordinary_identities_equal_dimension)


# 5 ------------------------------------------------------------------------


def equal_graded_identities_same_mult_identities():
    simple, _ = fresh()
    names = sorted(simple)
    equal = 0
    for a, b in itertools.combinations(names, 2):
        A, B = simple[a], simple[b]
        if A.group != B.group or not compare_identities(A, B, 4).equal:
            continue
        equal += 1
        MA, MB = mult_algebra(A).as_algebra(), mult_algebra(B).as_algebra()
        c = compare_identities(MA.trivially_graded(), MB.trivially_graded(), 3)
        assert c.equal, f"M({a}) and M({b}) differ at {c.signature}"
    assert equal
    return f"{equal} pairs with equal graded identities; multiplication algebras agree"


def test_criterion_5_mult_identities():
    _run(5, "equal graded identities give M(A), M(B) equal ordinary identities", 60,
         equal_graded_identities_same_mult_identities)


# 6 ------------------------------------------------------------------------


def experiment_has_no_anomalies():
    simple, _ = fresh()
    names = list(simple)
    report = theorem_experiment(list(simple.values()), cap=4, names=names, recheck=True)
    assert report.anomalies == 0, [(names[p.a], names[p.b], p.anomaly)
                                   for p in report.pairs if p.verdict_class == ANOMALY]
    found = set()
    for p in report.pairs:
        A, B = report.algebras[p.a], report.algebras[p.b]
        assert p.iso.kind in (FOUND, NOT_ISO), p.iso.kind
        assert p.rechecked, (names[p.a], names[p.b])
        if p.iso.kind == FOUND:
            assert verify_iso(A, B, p.iso.witness)
            found.add((names[p.a], names[p.b]))
    assert found == EXPECTED_ISOMORPHIC, found ^ EXPECTED_ISOMORPHIC
    c = report.counts()
    return (f"{len(report.pairs)} pairs: {c['Agree-Iso']} Agree-Iso, "
            f"{c['Agree-NonIso']} Agree-NonIso, 0 anomalies")


def test_criterion_6_experiment():
    _run(6, "identities agree with isomorphism on every catalogue pair", 180,
         experiment_has_no_anomalies)


# 7 ------------------------------------------------------------------------


def _check_kernels(A, degs, assoc):
    S = identity_space(A, degs, associative=assoc)
    trees = [m.tree for m in S.monomials]
    dim, rows = brute_kernel_dim(A, degs, trees)
    assert S.dim == dim, f"{A.name} {degs}: {S.dim} vs brute force {dim}"
    for f in S.kernel:
        assert kills(rows, [f.get(k, 0) for k in range(len(trees))]), f"{A.name} {degs}"


def oracle_equivalence():
    simple, negatives = fresh()
    small = [A for A in list(simple.values()) + list(negatives.values()) if A.dim <= 4]
    spaces = 0
    for A in small:
        modes = (True, False) if A.is_associative else (False,)
        for assoc in modes:
            cap = 4 if assoc or A.dim <= 3 else 3
            for degs in signatures(A.group, A.support, cap):
                _check_kernels(A, degs, assoc)
                spaces += 1
            T = A.trivially_graded()
            for n in range(1, (4 if assoc else 3) + 1):
                _check_kernels(T, ((),) * n, assoc)
                spaces += 1
    witnesses = 0
    pairs = sorted(EXPECTED_ISOMORPHIC) + [(A.name, A.name) for A in small if A.name in simple]
    for a, b in pairs:
        A, B = simple[a], simple[b]
        v = search_iso(A, B)
        assert v.kind == FOUND, (a, b, v.kind)
        images = []
        for i in range(A.dim):
            img = v.witness.image(A, B, i)
            images.append([img.get(k, 0) for k in range(B.dim)])
        assert naive_hom_check(A, B, images), (a, b)
        witnesses += 1
    return (f"{len(small)} algebras of dim <= 4, {spaces} identity spaces match brute force; "
            f"{witnesses} witnesses pass the naive checker")


def test_criterion_7_oracles():
    _run(7, "evaluation-matrix kernels and witnesses agree with independent oracles", 60,
         oracle_equivalence)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
