"""The graded centroid: homogeneous maps commuting with every L_b and R_b.

A homogeneous map phi of degree g lies in the centroid when
phi(x y) = x phi(y) = phi(x) y for all x, y.  Two routes compute it:

* ``commutant``: solve that linear system degree by degree;
* ``center``: for a unital associative algebra the centroid is
  {L_c : c central}, so only the center has to be found.

Both return the same space; the tests compare them.
"""

from __future__ import annotations

import itertools
import warnings
from fractions import Fraction
from dataclasses import dataclass

from . import linalg
from .algebra import GradedAlgebra
from .errors import NotGradedSimple, NoUnit


@dataclass
class Centroid:
    """Per-degree operator bases of the graded centroid of ``source``."""

    source: GradedAlgebra
    ops: dict  # degree -> list of operators, canonical order
    method: str

    def __post_init__(self):
        self.ops = {g: list(v) for g, v in sorted(self.ops.items()) if v}
        self._alg = None
        self._ech = None

    @property
    def dim(self):
        return sum(len(v) for v in self.ops.values())

    @property
    def dims(self):
        return {g: len(v) for g, v in self.ops.items()}

    @property
    def support(self):
        return list(self.ops)

    def basis(self):
        for g, ops in self.ops.items():
            for op in ops:
                yield g, op

    def _echelon(self):
        if self._ech is None:
            ech = linalg.Echelon(track=True)
            for _, op in self.basis():
                ech.add(linalg.flatten(op))
            self._ech = ech
        return self._ech

    def coords(self, op):
        return self._echelon().coords(linalg.flatten(op))

    def is_commutative(self):
        ops = [op for _, op in self.basis()]
        for p, q in itertools.combinations(ops, 2):
            if linalg.compose(p, q) != linalg.compose(q, p):
                return False
        return True

    def as_algebra(self):
        """Gamma as an abstract graded algebra (composition of maps)."""
        if self._alg is None:
            G = self.source.group
            labels, degrees, ops = [], [], []
            for g, block in self.ops.items():
                for t, op in enumerate(block):
                    labels.append(f"phi{G.format_degree(g)}_{t + 1}")
                    degrees.append(g)
                    ops.append(op)
            n = len(ops)
            table = [[self.coords(linalg.compose(ops[i], ops[j])) for j in range(n)]
                     for i in range(n)]
            if any(c is None for row in table for c in row):
                raise ValueError("centroid basis is not closed under composition")
            base = self.source.name or "U"
            self._alg = GradedAlgebra(self.source.field, G, labels, degrees, table,
                                      name=f"Gamma({base})", associative=True)
        return self._alg

    def unit_coords(self):
        return self.coords(linalg.identity_op(self.source.dim))

    def division_status(self):
        """True / False when decided, None when Gamma_e could not be classified."""
        return self.source.cached(("division", self.method), self._division_status)

    def _division_status(self):
        if self.unit_coords() is None:
            raise NoUnit("centroid does not contain the identity")
        G = self.source.group
        e_block = self.ops.get(G.identity, [])
        field_ok = is_field(self.source.field, e_block, self.source.dim)
        if field_ok is not True:
            return field_ok
        d = len(e_block)
        for g, block in self.ops.items():
            if len(block) != d:
                return False
            if not linalg.op_is_invertible(block[0]):
                return False
        return True


def is_graded_division(C):
    """Whether every nonzero homogeneous element of Gamma is invertible.

    An unclassifiable Gamma_e counts as False here; use
    :meth:`Centroid.division_status` for the three-valued answer.
    """
    return C.division_status() is True


# solving ------------------------------------------------------------------


def candidate_degrees(A):
    """Degrees g with g + supp(A) meeting supp(A); all other components vanish."""
    G = A.group
    supp = A.support
    return sorted({G.sub(s, t) for s in supp for t in supp})


def _commutant_degree(A, g):
    """Basis of degree-g maps phi with phi(xy) = x phi(y) = phi(x) y."""
    G = A.group
    n = A.dim
    comps = A.components
    var = {}
    for l in range(n):
        for k in comps.get(G.op(g, A.degrees[l]), ()):
            var[(l, k)] = len(var)
    if not var:
        return []
    tab = A.table
    rows = []
    targets = {l: comps.get(G.op(g, A.degrees[l]), ()) for l in range(n)}
    for i in range(n):
        for j in range(n):
            # phi(b_i b_j) - b_i phi(b_j) and phi(b_i b_j) - phi(b_i) b_j, coordinate-wise
            left, right = {}, {}
            for l, c in tab[i][j].items():
                for k in targets[l]:
                    v = var[(l, k)]
                    for eq in (left, right):
                        row = eq.setdefault(k, {})
                        linalg.axpy(row, c, {v: 1})
            for m in targets[j]:
                v = var[(j, m)]
                for k, c in tab[i][m].items():
                    linalg.axpy(left.setdefault(k, {}), -c, {v: 1})
            for m in targets[i]:
                v = var[(i, m)]
                for k, c in tab[m][j].items():
                    linalg.axpy(right.setdefault(k, {}), -c, {v: 1})
            rows.extend(r for r in left.values() if r)
            rows.extend(r for r in right.values() if r)
    out = []
    for sol in linalg.nullspace(rows, len(var)):
        cols = [dict() for _ in range(n)]
        for (l, k), v in var.items():
            c = sol.get(v)
            if c:
                cols[l][k] = c
        out.append(tuple(cols))
    return out


def find_unit(A):
    """The identity element of A as a sparse vector, or None."""
    e = A.group.identity
    idx = A.components.get(e, ())
    if not idx:
        return None
    n = A.dim
    rows, rhs = [], []
    for j in range(n):
        for side in (0, 1):
            eqs = {}
            for t, l in enumerate(idx):
                prod = A.table[l][j] if side == 0 else A.table[j][l]
                for k, c in prod.items():
                    eqs.setdefault(k, {})[t] = c
            for k in range(n):
                rows.append(eqs.get(k, {}))
                rhs.append(1 if k == j else 0)
    sol = linalg.solve(rows, rhs, len(idx))
    if sol is None:
        return None
    return {idx[t]: c for t, c in sol.items()}


def center_component(A, g):
    """Basis of the degree-g part of the center of A."""
    idx = A.components.get(g, ())
    if not idx:
        return []
    rows = []
    for j in range(A.dim):
        eqs = {}
        for t, l in enumerate(idx):
            for k, c in A.table[l][j].items():
                linalg.axpy(eqs.setdefault(k, {}), c, {t: 1})
            for k, c in A.table[j][l].items():
                linalg.axpy(eqs.setdefault(k, {}), -c, {t: 1})
        rows.extend(r for r in eqs.values() if r)
    return [{idx[t]: c for t, c in v.items()} for v in linalg.nullspace(rows, len(idx))]


def graded_centroid(A, method="auto"):
    """Compute Gamma(A); ``method`` is ``auto``, ``commutant`` or ``center``."""
    if method == "auto":
        method = "center" if A.is_associative and find_unit(A) is not None else "commutant"
    return A.cached(("centroid", method), lambda: _graded_centroid(A, method))


def _graded_centroid(A, method):
    ops = {}
    if method == "commutant":
        for g in candidate_degrees(A):
            ops[g] = _commutant_degree(A, g)
    elif method == "center":
        if not A.is_associative:
            raise ValueError("the center route needs an associative algebra")
        if find_unit(A) is None:
            raise NoUnit("the center route needs a unital algebra")
        for g in A.support:
            ops[g] = [A.left_op_of(c) for c in center_component(A, g)]
    else:
        raise ValueError(f"unknown centroid method {method!r}")
    return Centroid(A, ops, method)


def centroid_dimension(A):
    """n = dim A / dim Gamma(A) for graded simple A."""
    from .multiplication import check_graded_simple

    v = check_graded_simple(A)
    if not v.is_simple:
        raise NotGradedSimple(f"{A.name or 'algebra'} is not graded simple: {v.reason}", verdict=v)
    return A.dim // graded_centroid(A).dim


# field test for Gamma_e -----------------------------------------------------


def is_field(field, ops, n):
    """Whether the span of the commuting operators ``ops`` (containing id) is a field.

    Returns True, False, or None when undecided.  The span must be a
    commutative algebra.  In characteristic 0 a commutative algebra is a
    field iff its trace form is nondegenerate and the minimal polynomial of a
    primitive element is irreducible.
    """
    d = len(ops)
    if d == 0:
        return False
    if d == 1:
        return True
    ech = linalg.Echelon(track=True)
    for op in ops:
        ech.add(linalg.flatten(op))

    def coords(op):
        c = ech.coords(linalg.flatten(op))
        if c is None:
            raise ValueError("operators do not span a subalgebra")
        return c

    one = coords(linalg.identity_op(n))
    mult = [[coords(linalg.compose(ops[i], ops[j])) for j in range(d)] for i in range(d)]
    for i, j in itertools.combinations(range(d), 2):
        if mult[i][j] != mult[j][i]:
            return False
    if field.characteristic:
        return None

    # trace of left multiplication by basis element k in the regular representation
    trace = [sum((mult[k][j].get(j, 0) for j in range(d)), 0) for k in range(d)]
    form = [
        {j: t for j in range(d) if (t := sum((c * trace[k] for k, c in mult[i][j].items()), 0))}
        for i in range(d)
    ]
    if linalg.rank(form) < d:
        return False

    def times(x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                linalg.axpy(out, a * b, mult[i][j])
        return out

    for combo in _small_combos(d):
        x = {i: c for i, c in enumerate(combo) if c}
        poly = _minimal_polynomial(x, one, times)
        if len(poly) - 1 == d:
            return _irreducible(field, poly)
    return None


def _small_combos(d, bound=3):
    yield from ((0,) * i + (1,) + (0,) * (d - i - 1) for i in range(d))
    for base in range(1, bound + 2):
        yield tuple(base ** i for i in range(d))
    for combo in itertools.product(range(-bound, bound + 1), repeat=d):
        if any(combo):
            yield combo


def _minimal_polynomial(x, one, times):
    """Monic minimal polynomial coefficients (constant term first) via Krylov."""
    ech = linalg.Echelon(track=True)
    powers = [one]
    ech.add(one)
    while True:
        nxt = times(powers[-1], x)
        c = ech.coords(nxt)
        if c is not None:
            k = len(powers)
            return [-c.get(i, 0) for i in range(k)] + [1]
        ech.add(nxt)
        powers.append(nxt)


def _irreducible(field, poly):
    import sympy as sp

    X = sp.Symbol("X")
    if field.kind == "rational":
        domain = sp.QQ

        def conv(c):
            q = Fraction(c)
            return sp.Rational(q.numerator, q.denominator)
    else:
        m = field.order
        z = sp.exp(2 * sp.pi * sp.I / m)
        domain = sp.QQ.algebraic_field(z)

        def conv(c):
            return sum(
                (sp.Rational(q.numerator, q.denominator) * z**k for k, q in enumerate(field.coords(c))),
                sp.Integer(0),
            )

    expr = sum((conv(c) * X**i for i, c in enumerate(poly)), sp.Integer(0))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        _, factors = sp.Poly(expr, X, domain=domain).factor_list()
    return len(factors) == 1 and factors[0][1] == 1
