"""The built-in catalogue of small graded simple algebras and negatives.

Everything is built over Q(z_m), m taken from ``GRADEDPI_FIELD_ORDER``
(default 12) unless a field is passed.  With m = 12 the field holds i and
z_3, which is all the twisted group algebras and their isomorphisms need.
"""

from __future__ import annotations

import os

from .algebra import (
    make_direct_sum,
    make_elementary_matrix,
    make_group_algebra,
    make_sl2,
    named_bicharacter,
)
from .errors import ConfigurationError, NoEmbedding
from .groups import GradeGroup
from .scalars import FieldSpec

DEFAULT_FIELD_ORDER = 12

Z = GradeGroup(1)
Z2 = GradeGroup.cyclic(2)
Z3 = GradeGroup.cyclic(3)
Z2Z2 = GradeGroup(0, (2, 2))


def default_field():
    raw = os.environ.get("GRADEDPI_FIELD_ORDER", "").strip()
    if not raw:
        return FieldSpec.cyclotomic(DEFAULT_FIELD_ORDER)
    try:
        m = int(raw)
        if m < 1:
            raise ValueError
    except ValueError:
        raise ConfigurationError(f"GRADEDPI_FIELD_ORDER must be a positive integer, got {raw!r}") from None
    return FieldSpec.cyclotomic(m)


def _deg(*xs):
    return [(x,) if isinstance(x, int) else tuple(x) for x in xs]


def _simple_entries(F):
    yield "z2-group", lambda: make_group_algebra(Z2, field=F)
    yield "z2-group-sign", lambda: make_group_algebra(Z2, named_bicharacter(Z2, "sign", F), field=F)
    yield "z2-m2-01", lambda: make_elementary_matrix(2, _deg(0, 1), Z2, F)
    yield "z2-m2-10", lambda: make_elementary_matrix(2, _deg(1, 0), Z2, F)
    yield "z2-m2-00", lambda: make_elementary_matrix(2, _deg(0, 0), Z2, F)
    yield "z2-sl2", lambda: make_sl2(Z2, _deg(0, 1, 1), F)
    yield "z3-group", lambda: make_group_algebra(Z3, field=F)
    yield "z3-group-cyclic", lambda: make_group_algebra(Z3, named_bicharacter(Z3, "cyclic", F), field=F)
    yield "z3-m3-012", lambda: make_elementary_matrix(3, _deg(0, 1, 2), Z3, F)
    yield "z3-m3-001", lambda: make_elementary_matrix(3, _deg(0, 0, 1), Z3, F)
    yield "z3-m3-010", lambda: make_elementary_matrix(3, _deg(0, 1, 0), Z3, F)
    yield "z3-m3-011", lambda: make_elementary_matrix(3, _deg(0, 1, 1), Z3, F)
    yield "z2z2-group", lambda: make_group_algebra(Z2Z2, field=F)
    yield "z2z2-pauli", lambda: make_group_algebra(Z2Z2, named_bicharacter(Z2Z2, "pauli", F), field=F)
    yield "z2z2-pauli-t", lambda: make_group_algebra(Z2Z2, named_bicharacter(Z2Z2, "pauli-t", F), field=F)
    yield "z2z2-m2-e10", lambda: make_elementary_matrix(2, _deg((0, 0), (1, 0)), Z2Z2, F)
    yield "z-m2-01", lambda: make_elementary_matrix(2, _deg(0, 1), Z, F)
    yield "z-m2-10", lambda: make_elementary_matrix(2, _deg(1, 0), Z, F)
    yield "z-sl2", lambda: make_sl2(Z, _deg(0, 1, -1), F)
    yield "z-sl2-rev", lambda: make_sl2(Z, _deg(0, -1, 1), F)


# isomorphic pairs among the simple entries (everything else is pairwise non-isomorphic)
EXPECTED_ISOMORPHIC = {
    ("z2-group", "z2-group-sign"),
    ("z2-m2-01", "z2-m2-10"),
    ("z3-group", "z3-group-cyclic"),
    ("z3-m3-001", "z3-m3-010"),
    ("z2z2-pauli", "z2z2-pauli-t"),
    ("z-m2-01", "z-m2-10"),
    ("z-sl2", "z-sl2-rev"),
}


def _build(name, fn):
    try:
        A = fn()
    except NoEmbedding as exc:
        raise ConfigurationError(
            f"catalogue entry {name} needs more roots of unity than the field has: {exc}"
        ) from None
    A.name = name
    return A


def simple_catalogue(field=None):
    """(name, algebra) pairs of graded simple algebras."""
    F = field or default_field()
    return [(name, _build(name, fn)) for name, fn in _simple_entries(F)]


def negative_catalogue(field=None):
    """Direct sums: never graded simple."""
    F = field or default_field()
    simple = dict(simple_catalogue(F))
    out = [
        ("neg-z2-group-sum", make_direct_sum(simple["z2-group"], simple["z2-group"])),
        ("neg-z2-m2-plus-group", make_direct_sum(simple["z2-m2-01"], simple["z2-group"])),
        ("neg-z2-sl2-sum", make_direct_sum(simple["z2-sl2"], simple["z2-sl2"])),
    ]
    for name, A in out:
        A.name = name
    return out


def full_catalogue(field=None):
    return simple_catalogue(field) + negative_catalogue(field)
