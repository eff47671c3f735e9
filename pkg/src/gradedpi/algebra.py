"""Finite-dimensional group-graded algebras given by structure constants.

A :class:`GradedAlgebra` has a basis b_0..b_{N-1}, each basis vector carrying
a degree in an abelian :class:`~gradedpi.groups.GradeGroup`, and a sparse
structure table ``table[i][j] = {k: c}`` meaning b_i * b_j = sum c b_k.
Associativity is never assumed; it is computed on demand.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import linalg
from .errors import (
    AlgebraMismatch,
    FieldMismatch,
    GradingViolation,
    GroupMismatch,
    NotACocycle,
)
from .groups import TRIVIAL
from .scalars import RATIONAL


class GradedAlgebra:
    """An algebra over ``field`` graded by ``group``; treat instances as immutable."""

    def __init__(self, field, group, labels, degrees, table, name=None, associative=None):
        self.field = field
        self.group = group
        self.labels = tuple(labels)
        self.degrees = tuple(group.check(tuple(d)) for d in degrees)
        n = len(self.labels)
        if n < 1:
            raise ValueError("an algebra needs at least one basis vector")
        if len(self.degrees) != n:
            raise ValueError("one degree per basis vector required")
        if len(set(self.labels)) != n:
            raise ValueError("basis labels must be distinct")
        coerce = field.coerce
        tab = []
        for i in range(n):
            row = []
            for j in range(n):
                src = table[i][j] if table is not None else {}
                out = {}
                for k, c in src.items():
                    if not 0 <= k < n:
                        raise IndexError(f"structure constant index {k} out of range")
                    c = coerce(c)
                    if c:
                        out[k] = c
                row.append(out)
            tab.append(tuple(row))
        self.table = tuple(tab)
        self.name = name
        self._cache = {}
        if associative is not None:
            self._cache["associative"] = associative

    @classmethod
    def from_products(cls, field, group, labels, degrees, products, name=None, **kw):
        """Build from a mapping {(i, j): {k: c}} or an iterable of (i, j, k, c)."""
        n = len(labels)
        table = [[{} for _ in range(n)] for _ in range(n)]
        items = products.items() if isinstance(products, dict) else None
        if items is not None:
            for (i, j), vec in items:
                for k, c in vec.items():
                    table[i][j][k] = table[i][j].get(k, 0) + field.coerce(c)
        else:
            for i, j, k, c in products:
                table[i][j][k] = table[i][j].get(k, 0) + field.coerce(c)
        return cls(field, group, labels, degrees, table, name=name, **kw)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<GradedAlgebra{tag} dim={self.dim} over {self.field}, graded by {self.group}>"

    def same_data(self, other):
        return (
            self.field == other.field
            and self.group == other.group
            and self.labels == other.labels
            and self.degrees == other.degrees
            and self.table == other.table
        )

    def cached(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            val = self._cache[key] = fn()
            return val

    # shape --------------------------------------------------------------

    @property
    def dim(self):
        return len(self.labels)

    @property
    def components(self):
        def build():
            comp = {}
            for i, g in enumerate(self.degrees):
                comp.setdefault(g, []).append(i)
            return {g: tuple(comp[g]) for g in sorted(comp)}

        return self.cached("components", build)

    @property
    def support(self):
        return list(self.components)

    def component_dim(self, g):
        return len(self.components.get(g, ()))

    # products -----------------------------------------------------------

    def mul(self, x, y):
        """Product of two sparse coordinate vectors."""
        out = {}
        tab = self.table
        for i, a in x.items():
            row = tab[i]
            for j, b in y.items():
                prod = row[j]
                if prod:
                    ab = a * b
                    for k, c in prod.items():
                        w = out.get(k, 0) + ab * c
                        if w:
                            out[k] = w
                        else:
                            out.pop(k, None)
        return out

    def left_op(self, i):
        return self.cached(("L", i), lambda: tuple(self.table[i]))

    def right_op(self, i):
        return self.cached(("R", i), lambda: tuple(self.table[j][i] for j in range(self.dim)))

    def left_op_of(self, x):
        return linalg.op_lincomb(((a, self.left_op(i)) for i, a in x.items()), self.dim)

    def degree_of(self, x):
        """Degree of a nonzero homogeneous vector, else None."""
        degs = {self.degrees[i] for i in x}
        return degs.pop() if len(degs) == 1 else None

    @property
    def is_associative(self):
        return self.cached("associative", self._check_associative)

    def _check_associative(self):
        n, mul, tab = self.dim, self.mul, self.table
        basis = [{i: 1} for i in range(n)]
        for i, j in itertools.product(range(n), repeat=2):
            ij = tab[i][j]
            for k in range(n):
                if mul(ij, basis[k]) != mul(basis[i], tab[j][k]):
                    return False
        return True

    @property
    def square_is_zero(self):
        return not any(p for row in self.table for p in row)

    def is_commutative(self):
        return all(self.table[i][j] == self.table[j][i] for i in range(self.dim) for j in range(i))

    # derived algebras ---------------------------------------------------

    def regrade(self, group, degrees, name=None):
        return GradedAlgebra(self.field, group, self.labels, degrees, self.table, name=name or self.name,
                             associative=self._cache.get("associative"))

    def trivially_graded(self):
        return self.cached(
            "trivial", lambda: self.regrade(TRIVIAL, [()] * self.dim, name=self.name)
        )

    def element(self, coords):
        return Element.of(self, coords)

    def basis_element(self, i):
        return Element(self, {i: 1})

    def index(self, label):
        return self.labels.index(label)


@dataclass(frozen=True, eq=False)
class Element:
    """A vector of a graded algebra, stored sparsely."""

    algebra: GradedAlgebra
    vec: dict

    @classmethod
    def of(cls, algebra, coords):
        if isinstance(coords, dict):
            items = coords.items()
        else:
            if len(coords) != algebra.dim:
                raise ValueError(f"expected {algebra.dim} coordinates")
            items = enumerate(coords)
        vec = {}
        for k, c in items:
            c = algebra.field.coerce(c)
            if c:
                vec[k] = c
        return cls(algebra, vec)

    def coords(self):
        return [self.vec.get(i, self.algebra.field.zero) for i in range(self.algebra.dim)]

    @property
    def degree(self):
        return self.algebra.degree_of(self.vec)

    @property
    def is_homogeneous(self):
        return bool(self.vec) and self.degree is not None

    def _other(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements of different algebras")
        return other

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = self.algebra.field.coerce(other)
        return Element(self.algebra, linalg.scale(self.vec, c))

    def __rmul__(self, other):
        c = self.algebra.field.coerce(other)
        return Element(self.algebra, linalg.scale(self.vec, c))

    def __add__(self, other):
        return Element(self.algebra, linalg.add(self.vec, self._other(other).vec))

    def __sub__(self, other):
        return Element(self.algebra, linalg.sub(self.vec, self._other(other).vec))

    def __neg__(self):
        return Element(self.algebra, linalg.scale(self.vec, -1))

    def __eq__(self, other):
        return isinstance(other, Element) and other.algebra is self.algebra and other.vec == self.vec

    def __hash__(self):
        return hash(tuple(sorted(self.vec.items())))

    def __bool__(self):
        return bool(self.vec)

    def __repr__(self):
        A = self.algebra
        if not self.vec:
            return "0"
        parts = []
        for k in sorted(self.vec):
            c = A.field.format(self.vec[k])
            parts.append(A.labels[k] if c == "1" else f"({c})*{A.labels[k]}")
        return " + ".join(parts)


def multiply(x, y):
    if x.algebra is not y.algebra:
        raise AlgebraMismatch("elements of different algebras")
    return Element(x.algebra, x.algebra.mul(x.vec, y.vec))


# validation ---------------------------------------------------------------


@dataclass
class ValidationReport:
    valid: bool
    support: list
    dims: dict
    square_nonzero: bool
    associative: bool

    def as_dict(self, group):
        return {
            "valid": self.valid,
            "support": [list(g) for g in self.support],
            "dims": {group.format_degree(g): d for g, d in self.dims.items()},
            "square_nonzero": self.square_nonzero,
            "associative": self.associative,
        }


def check_grading(A):
    """Raise GradingViolation if some b_i*b_j leaves component deg(b_i)deg(b_j)."""
    G, degs = A.group, A.degrees
    for i, j in itertools.product(range(A.dim), repeat=2):
        target = G.op(degs[i], degs[j])
        for k in A.table[i][j]:
            if degs[k] != target:
                raise GradingViolation(i, j, degs[k])


def validate(A):
    check_grading(A)
    return ValidationReport(
        valid=True,
        support=A.support,
        dims={g: len(ix) for g, ix in A.components.items()},
        square_nonzero=not A.square_is_zero,
        associative=A.is_associative,
    )


# constructors -------------------------------------------------------------


def _matrix_label(i, j, n):
    return f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1}_{j + 1}"


def make_elementary_matrix(n, degs, group=TRIVIAL, field=RATIONAL, name=None):
    """M_n(F) with deg(E_ij) = degs[i]^-1 degs[j]; basis E_11, E_12, ... row-major."""
    if n < 1:
        raise ValueError("n must be positive")
    if len(degs) != n:
        raise ValueError(f"need {n} degrees, got {len(degs)}")
    degs = [group.check(tuple(d)) for d in degs]
    labels, degrees = [], []
    for i in range(n):
        for j in range(n):
            labels.append(_matrix_label(i, j, n))
            degrees.append(group.sub(degs[j], degs[i]))
    products = {}
    for i, j, l in itertools.product(range(n), repeat=3):
        products[(i * n + j, j * n + l)] = {i * n + l: 1}
    return GradedAlgebra.from_products(field, group, labels, degrees, products, name=name,
                                       associative=True)


def bicharacter(group, exponents, field):
    """beta(g, h) = prod_{i,j} z_{gcd(d_i, d_j)}^(q_ij g_i h_j) on a finite group.

    ``exponents`` is the integer matrix q.  Every such beta is a bicharacter,
    hence a 2-cocycle.
    """
    if not group.is_finite:
        raise ValueError("bicharacters are built on finite groups only")
    d = group.torsion
    k = len(d)

    def beta(g, h):
        val = field.one
        for i in range(k):
            for j in range(k):
                q = exponents[i][j]
                if q:
                    e = q * g[i] * h[j]
                    r = math.gcd(d[i], d[j])
                    if e % r:
                        val = val * field.zeta(e % r, r)
        return val

    return {(g, h): beta(g, h) for g in group.elements() for h in group.elements()}


NAMED_BICHARACTERS = {
    # (required torsion shape predicate, exponent matrix)
    "pauli": (lambda t: t == (2, 2), [[0, 0], [1, 0]]),
    "pauli-t": (lambda t: t == (2, 2), [[0, 1], [0, 0]]),
    "clock": (lambda t: len(t) == 2 and t[0] == t[1], [[0, 0], [1, 0]]),
    "sign": (lambda t: t == (2,), [[1]]),
    "cyclic": (lambda t: len(t) == 1, [[1]]),
}


def named_bicharacter(group, kind, field):
    try:
        ok, q = NAMED_BICHARACTERS[kind]
    except KeyError:
        raise ValueError(f"unknown bicharacter {kind!r}; known: {sorted(NAMED_BICHARACTERS)}") from None
    if group.free_rank or not ok(group.torsion):
        raise ValueError(f"bicharacter {kind!r} does not fit the group {group}")
    return bicharacter(group, q, field)


def check_cocycle(group, twist):
    elems = group.elements()
    for g, h, k in itertools.product(elems, repeat=3):
        lhs = twist[(g, h)] * twist[(group.op(g, h), k)]
        rhs = twist[(h, k)] * twist[(g, group.op(h, k))]
        if lhs != rhs:
            raise NotACocycle(g, h, k)


def make_group_algebra(group, twist=None, field=RATIONAL, name=None):
    """The (twisted) group algebra with u_g u_h = twist(g, h) u_{gh}."""
    if not group.is_finite:
        raise ValueError("group algebras need a finite group")
    elems = group.elements()
    index = {g: i for i, g in enumerate(elems)}
    if twist is not None:
        twist = {gh: field.coerce(c) for gh, c in twist.items()}
        for gh in itertools.product(elems, repeat=2):
            if gh not in twist or not twist[gh]:
                raise ValueError(f"twist must be a nonzero scalar on {gh}")
        check_cocycle(group, twist)
    labels = ["u" + group.format_degree(g) for g in elems]
    products = {}
    for g, h in itertools.product(elems, repeat=2):
        c = field.one if twist is None else twist[(g, h)]
        products[(index[g], index[h])] = {index[group.op(g, h)]: c}
    return GradedAlgebra.from_products(field, group, labels, elems, products, name=name,
                                       associative=True)


def make_direct_sum(A, B, name=None):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.group != B.group:
        raise GroupMismatch(f"{A.group} vs {B.group}")
    n, m = A.dim, B.dim
    labels = [f"a.{x}" for x in A.labels] + [f"b.{x}" for x in B.labels]
    table = [[{} for _ in range(n + m)] for _ in range(n + m)]
    for i, j in itertools.product(range(n), repeat=2):
        table[i][j] = dict(A.table[i][j])
    for i, j in itertools.product(range(m), repeat=2):
        table[n + i][n + j] = {n + k: c for k, c in B.table[i][j].items()}
    assoc = None
    if "associative" in A._cache and "associative" in B._cache:
        assoc = A.is_associative and B.is_associative
    return GradedAlgebra(A.field, A.group, labels, A.degrees + B.degrees, table, name=name,
                         associative=assoc)


def make_sl2(group, degs, field=RATIONAL, name=None):
    """The simple Lie algebra sl_2 on h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h.

    ``degs`` gives the degrees of (h, e, f); they must satisfy deg h = e and
    deg e + deg f = e for the bracket to be graded.
    """
    h, e, f = 0, 1, 2
    products = {
        (h, e): {e: 2}, (e, h): {e: -2},
        (h, f): {f: -2}, (f, h): {f: 2},
        (e, f): {h: 1}, (f, e): {h: -1},
    }
    return GradedAlgebra.from_products(field, group, ["h", "e", "f"], degs, products, name=name)


def scalar_extend(A, target, name=None):
    emb = A.field.embed
    table = [[{k: emb(c, target) for k, c in A.table[i][j].items()} for j in range(A.dim)]
             for i in range(A.dim)]
    return GradedAlgebra(target, A.group, A.labels, A.degrees, table, name=name or A.name,
                         associative=A._cache.get("associative"))


def zero_algebra(n=1, group=TRIVIAL, field=RATIONAL, name=None):
    labels = [f"u{i}" for i in range(n)] if n > 1 else ["u"]
    return GradedAlgebra(field, group, labels, [group.identity] * n, None, name=name)

