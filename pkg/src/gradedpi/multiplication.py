"""Multiplication algebras, spins, and the graded-simplicity decision.

For an algebra U with basis b_i, M(U) is the associative algebra of linear
maps generated by the left and right multiplications L_b, R_b.  Over an
abelian group every L_b and R_b is homogeneous of degree deg(b), so M(U) has
a homogeneous operator basis, which is what :class:`MatrixSubalgebra` keeps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import linalg
from .algebra import GradedAlgebra, check_grading
from .errors import NotHomogeneous


class MatrixSubalgebra:
    """A subalgebra of End(U) with a homogeneous operator basis.

    ``ops[i]`` is an operator (tuple of sparse columns), ``degrees[i]`` its
    degree and ``labels[i]`` the word in L/R generators that produced it.
    """

    def __init__(self, source, ops, degrees, labels, echelon=None):
        self.source = source
        self.n = source.dim
        self.ops = list(ops)
        self.degrees = list(degrees)
        self.labels = list(labels)
        if echelon is None:
            echelon = linalg.Echelon(track=True)
            for op in self.ops:
                if not echelon.add(linalg.flatten(op)):
                    raise ValueError("operator basis is linearly dependent")
        self._ech = echelon
        self._algebra = None

    @property
    def dim(self):
        return len(self.ops)

    def __repr__(self):
        return f"<MatrixSubalgebra dim={self.dim} on {self.n}-dimensional space>"

    def coords(self, op):
        return self._ech.coords(linalg.flatten(op))

    def contains(self, op):
        return self._ech.contains(linalg.flatten(op))

    def contains_identity(self):
        return self.contains(linalg.identity_op(self.n))

    def is_homogeneous(self):
        A = self.source
        G = A.group
        for op, g in zip(self.ops, self.degrees):
            for j, col in enumerate(op):
                target = G.op(g, A.degrees[j])
                if any(A.degrees[k] != target for k in col):
                    return False
        return True

    def is_closed(self):
        return all(
            self.contains(linalg.compose(p, q)) for p in self.ops for q in self.ops
        )

    def as_algebra(self, name=None):
        """M viewed as an abstract graded algebra on its operator basis."""
        if self._algebra is None:
            n = self.dim
            table = [[None] * n for _ in range(n)]
            for i, p in enumerate(self.ops):
                for j, q in enumerate(self.ops):
                    c = self.coords(linalg.compose(p, q))
                    if c is None:
                        raise ValueError("operator basis is not closed under composition")
                    table[i][j] = c
            base = self.source.name or "U"
            self._algebra = GradedAlgebra(
                self.source.field, self.source.group, self.labels, self.degrees, table,
                name=name or f"M({base})", associative=True,
            )
        return self._algebra


def _generators(A):
    for i, lab in enumerate(A.labels):
        yield f"L[{lab}]", A.left_op(i), A.degrees[i]
        yield f"R[{lab}]", A.right_op(i), A.degrees[i]


def mult_algebra(A):
    """The multiplication algebra M(A), cached on A.

    Associative algebras use M(A) = span{L_a R_b, L_a, R_b}; everything else
    goes through a worklist closure of the generators under composition.
    """
    return A.cached("mult_algebra", lambda: _mult_algebra(A))


def _mult_algebra(A):
    G = A.group
    ech = linalg.Echelon(track=True)
    ops, degs, labels = [], [], []

    def offer(label, op, deg):
        if ech.add(linalg.flatten(op)):
            ops.append(op)
            degs.append(deg)
            labels.append(label)
            return True
        return False

    if A.is_associative:
        return mult_algebra_associative(A)

    gens = list(_generators(A))
    for lab, op, deg in gens:
        offer(lab, op, deg)
    i = 0
    while i < len(ops):
        op, deg, lab = ops[i], degs[i], labels[i]
        for glab, gop, gdeg in gens:
            offer(glab + lab, linalg.compose(gop, op), G.op(gdeg, deg))
        i += 1
    return MatrixSubalgebra(A, ops, degs, labels, ech)


def mult_algebra_associative(A):
    """M(A) for associative A, without a closure loop."""
    G = A.group
    n = A.dim
    ech = linalg.Echelon(track=True)
    ops, degs, labels = [], [], []

    def offer(label, op, deg):
        if ech.add(linalg.flatten(op)):
            ops.append(op)
            degs.append(deg)
            labels.append(label)

    for a in range(n):
        La = A.left_op(a)
        for b in range(n):
            # (L_a R_b)(x) = a x b
            op = linalg.compose(La, A.right_op(b))
            offer(f"L[{A.labels[a]}]R[{A.labels[b]}]", op, G.op(A.degrees[a], A.degrees[b]))
    for a in range(n):
        offer(f"L[{A.labels[a]}]", A.left_op(a), A.degrees[a])
    for b in range(n):
        offer(f"R[{A.labels[b]}]", A.right_op(b), A.degrees[b])
    return MatrixSubalgebra(A, ops, degs, labels, ech)


def unital_closure(M):
    ident = linalg.identity_op(M.n)
    if M.contains(ident):
        return M
    ech = M._ech.copy()
    ech.add(linalg.flatten(ident))
    return MatrixSubalgebra(
        M.source, M.ops + [ident], M.degrees + [M.source.group.identity], M.labels + ["id"], ech
    )


# spins and ideals ---------------------------------------------------------


def _as_vec(v):
    return v.vec if hasattr(v, "vec") else dict(v)


def spin(A, v):
    """Basis of the homogeneous ideal generated by a homogeneous vector v.

    This is the smallest subspace containing v that is stable under every
    L_b and R_b.  The basis vectors returned are homogeneous.
    """
    v = _as_vec(v)
    if not v or A.degree_of(v) is None:
        raise NotHomogeneous("spin needs a nonzero homogeneous vector")
    ech = linalg.Echelon()
    ech.add(v)
    out = [v]
    i = 0
    n = A.dim
    while i < len(out) and len(out) < n:
        w = out[i]
        for b in range(n):
            for x in (A.mul({b: 1}, w), A.mul(w, {b: 1})):
                if x and ech.add(x):
                    out.append(x)
        i += 1
    return out


def is_homogeneous_ideal(A, basis):
    """True when span(basis) is a nonzero proper homogeneous two-sided ideal."""
    if not basis:
        return False
    ech = linalg.Echelon()
    for w in basis:
        if not w or A.degree_of(w) is None or not ech.add(w):
            return False
    if len(ech) >= A.dim:
        return False
    for w in basis:
        for b in range(A.dim):
            if not ech.contains(A.mul({b: 1}, w)) or not ech.contains(A.mul(w, {b: 1})):
                return False
    return True


def _random_homogeneous(A, rng, g):
    idx = A.components[g]
    v = {}
    for i in idx:
        c = rng.randint(-3, 3)
        if c:
            v[i] = c
    return v or {idx[0]: 1}


# verdicts -----------------------------------------------------------------

GRADED_SIMPLE = "GradedSimple"
NOT_GRADED_SIMPLE = "NotGradedSimple"
INCONCLUSIVE = "Inconclusive"


@dataclass
class SimplicityVerdict:
    verdict: str
    reason: str
    ideal: list | None = None
    data: dict = field(default_factory=dict)

    @property
    def is_simple(self):
        return self.verdict == GRADED_SIMPLE

    def recheck(self, A):
        """Re-verify the attached certificate against A."""
        if self.verdict == NOT_GRADED_SIMPLE:
            if self.ideal is not None:
                return is_homogeneous_ideal(A, self.ideal)
            return A.square_is_zero
        if self.verdict == GRADED_SIMPLE:
            return (not A.square_is_zero) and self.data.get("dim_mult") == mult_algebra(A).dim
        return True

    def to_json(self, A):
        out = {"verdict": self.verdict, "reason": self.reason}
        if self.ideal is not None:
            out["ideal"] = [
                {"degree": list(A.degree_of(w)),
                 "vector": {A.labels[k]: A.field.format(c) for k, c in sorted(w.items())}}
                for w in self.ideal
            ]
        if self.data:
            out["data"] = self.data
        return out


def find_ideal(A, centroid=None, seed=0, random_tries=16):
    """Look for a proper nonzero homogeneous ideal; None when nothing turns up.

    Tried in order: images of non-invertible homogeneous centroid elements,
    spins of homogeneous basis vectors, spins of pseudorandom homogeneous
    vectors drawn with a fixed seed.
    """
    n = A.dim
    if A.square_is_zero:
        return [{0: 1}] if n > 1 else None
    if centroid is not None:
        for g, ops in centroid.ops.items():
            for op in ops:
                if not linalg.op_is_invertible(op):
                    img, ech = [], linalg.Echelon()
                    for col in op:
                        if col and ech.add(col):
                            img.append(col)
                    if img and is_homogeneous_ideal(A, img):
                        return img
    for i in range(n):
        w = spin(A, {i: 1})
        if len(w) < n:
            return w
    rng = random.Random(seed)
    support = A.support
    for _ in range(random_tries):
        g = support[rng.randrange(len(support))]
        w = spin(A, _random_homogeneous(A, rng, g))
        if len(w) < n:
            return w
    return None


def check_graded_simple(A, seed=0, random_tries=16):
    """Decide graded simplicity through M(A) = End_Gamma(A).

    A is graded simple exactly when A^2 != 0, the graded centroid Gamma is a
    commutative graded division algebra, and dim M(A) = n^2 dim Gamma with
    n = dim A / dim Gamma.  Inconclusive is returned when Gamma_e is a field
    strictly larger than the base field.
    """
    key = ("simple", seed, random_tries)
    return A.cached(key, lambda: _check_graded_simple(A, seed, random_tries))


def _check_graded_simple(A, seed, random_tries):
    from .centroid import graded_centroid

    check_grading(A)

    def negative(reason, C=None, data=None):
        ideal = find_ideal(A, C, seed=seed, random_tries=random_tries)
        if ideal is None and not A.square_is_zero:
            reason += "; no explicit ideal found"
        return SimplicityVerdict(NOT_GRADED_SIMPLE, reason, ideal, data or {})

    if A.square_is_zero:
        return negative("A^2 = 0")
    C = graded_centroid(A)
    G = A.group
    data = {
        "gamma_dims": {G.format_degree(g): len(ops) for g, ops in C.ops.items()},
        "dim_gamma": C.dim,
    }
    if not C.is_commutative():
        return negative("graded centroid is not commutative", C, data)
    status = C.division_status()
    if status is False:
        return negative("graded centroid is not a graded division algebra", C, data)
    if status is None:
        return SimplicityVerdict(INCONCLUSIVE, "could not decide whether Gamma_e is a field",
                                 None, data)
    e_dim = len(C.ops.get(G.identity, ()))
    if e_dim > 1:
        return SimplicityVerdict(
            INCONCLUSIVE, f"Gamma_e is a field of dimension {e_dim} over the base field", None, data
        )
    if A.dim % C.dim:
        return negative("dim A is not a multiple of dim Gamma", C, data)
    n = A.dim // C.dim
    M = mult_algebra(A)
    data.update(n=n, dim_mult=M.dim)
    if M.dim != n * n * C.dim:
        return negative(f"dim M(A) = {M.dim} != n^2 dim Gamma = {n * n * C.dim}", C, data)
    return SimplicityVerdict(GRADED_SIMPLE, "M(A) = End_Gamma(A)", None, data)
