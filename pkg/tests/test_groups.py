import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedpi.errors import EmptySignature, GroupMismatch, ParseError
from gradedpi.groups import GradeGroup, g_id, g_inv, g_op, signature_products

Z = GradeGroup(1)
Z2 = GradeGroup.cyclic(2)
Z3 = GradeGroup.cyclic(3)
K4 = GradeGroup(0, (2, 2))


def test_examples():
    assert g_op(Z2, (1,), (1,)) == (0,)
    assert g_op(K4, (1, 0), (0, 1)) == (1, 1)
    assert g_inv(Z, (3,)) == (-3,)
    assert g_id(K4) == (0, 0)


def test_signature_products():
    assert signature_products(Z2, [(1,), (1,)]) == (0,)
    assert signature_products(K4, [(1, 0), (0, 1), (1, 0)]) == (0, 1)
    assert signature_products(Z3, [(1,)] * 3) == (0,)
    with pytest.raises(EmptySignature):
        signature_products(Z3, [])


def test_mismatch():
    with pytest.raises(GroupMismatch):
        g_op(Z2, (1,), (1, 0))
    with pytest.raises(GroupMismatch):
        Z2.check((2,))


def test_parse_and_format():
    assert GradeGroup.parse("Z/2 x Z/2") == K4
    assert GradeGroup.parse("Z^2 x Z/3") == GradeGroup(2, (3,))
    assert GradeGroup.parse("trivial") == GradeGroup()
    assert str(GradeGroup(2, (3,))) == "Z^2 x Z/3"
    assert K4.parse_degree("(1,0)") == (1, 0)
    assert Z2.parse_degree("g") == (1,)
    assert Z2.parse_degree("e") == (0,)
    assert Z.parse_degree("-1") == (-1,)
    with pytest.raises(ParseError):
        GradeGroup.parse("S3")


@pytest.mark.parametrize("G", [Z2, Z3, K4, GradeGroup(0, (2, 3))])
def test_axioms_exhaustive(G):
    els = G.elements()
    assert len(els) == G.order
    e = G.identity
    for a, b, c in itertools.product(els, repeat=3):
        assert G.op(G.op(a, b), c) == G.op(a, G.op(b, c))
    for a, b in itertools.product(els, repeat=2):
        assert G.op(a, b) == G.op(b, a)
    for a in els:
        assert G.op(a, G.inv(a)) == e and G.op(a, e) == a


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 2)), min_size=1, max_size=6), st.randoms())
def test_signature_product_permutation_invariant(raw, rnd):
    G = GradeGroup(1, (3,))
    sig = [G.element(t) for t in raw]
    shuffled = list(sig)
    rnd.shuffle(shuffled)
    assert signature_products(G, sig) == signature_products(G, shuffled)
