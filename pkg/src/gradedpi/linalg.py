"""Exact sparse linear algebra over the raw field values of :mod:`scalars`.

Vectors are dicts ``{index: value}`` holding only nonzero entries.  Linear
operators on an N-dimensional space are tuples of N column vectors
(column j is the image of basis vector j).
"""

from __future__ import annotations

from .scalars import inv


def axpy(y, a, x):
    """y += a*x in place; returns y."""
    for k, v in x.items():
        w = y.get(k, 0) + a * v
        if w:
            y[k] = w
        else:
            y.pop(k, None)
    return y


def scale(x, a):
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def add(x, y):
    return axpy(dict(x), 1, y)


def sub(x, y):
    return axpy(dict(x), -1, y)


def lincomb(pairs):
    out = {}
    for a, x in pairs:
        if a:
            axpy(out, a, x)
    return out


class Echelon:
    """Incrementally built row-echelon basis of a space of sparse vectors.

    Each stored row is normalised so its pivot (smallest index) is 1.  With
    ``track=True`` every stored row also remembers its expression in terms
    of the independent vectors accepted so far, numbered in insertion
    order, so :meth:`coords` can solve for coordinates.
    """

    def __init__(self, track=False):
        self.rows = {}
        self.track = track
        self.combos = {} if track else None
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def copy(self):
        e = Echelon(self.track)
        e.rows = dict(self.rows)
        if self.track:
            e.combos = dict(self.combos)
        e.count = self.count
        return e

    def _reduce(self, v, combo):
        rows = self.rows
        v = dict(v)
        while v:
            p = min(v)
            r = rows.get(p)
            if r is None:
                break
            c = v[p]
            for k, x in r.items():
                w = v.get(k, 0) - c * x
                if w:
                    v[k] = w
                else:
                    del v[k]
            if combo is not None:
                axpy(combo, -c, self.combos[p])
        return v

    def reduce(self, v):
        return self._reduce(v, None)

    def contains(self, v):
        return not self._reduce(v, None)

    def add(self, v):
        """Insert v; return True when it was independent of the stored rows."""
        combo = {} if self.track else None
        r = self._reduce(v, combo)
        if not r:
            return False
        p = min(r)
        s = inv(r[p])
        if s != 1:
            r = {k: s * x for k, x in r.items()}
        self.rows[p] = r
        if self.track:
            combo[self.count] = combo.get(self.count, 0) + 1
            self.combos[p] = scale(combo, s)
        self.count += 1
        return True

    def coords(self, v):
        """Coordinates of v in the inserted independent vectors, or None."""
        if not self.track:
            raise ValueError("coords() needs track=True")
        combo = {}
        r = self._reduce(v, combo)
        if r:
            return None
        return scale(combo, -1)

    def pivots(self):
        return sorted(self.rows)

    def rref(self):
        """Fully reduced rows, as a dict pivot -> row."""
        done = {}
        for p in sorted(self.rows, reverse=True):
            r = dict(self.rows[p])
            for q in [k for k in r if k != p and k in done]:
                c = r.get(q)
                if c:
                    axpy(r, -c, done[q])
            done[p] = r
        return {p: done[p] for p in sorted(done)}


def rank(vectors):
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def row_space(vectors, limit=None):
    """Echelon basis of the span; stops early once ``limit`` rows are found."""
    e = Echelon()
    for v in vectors:
        e.add(v)
        if limit is not None and len(e) >= limit:
            break
    return e


def nullspace(rows, ncols):
    """Basis of {x : r.x = 0 for every row r}, as canonical reduced sparse vectors.

    ``rows`` is either an :class:`Echelon` or an iterable of sparse rows
    whose indices lie in ``range(ncols)``.
    """
    ech = rows if isinstance(rows, Echelon) else row_space(rows)
    red = ech.rref()
    free = [c for c in range(ncols) if c not in red]
    out = []
    for f in free:
        v = {f: 1}
        for p, r in red.items():
            c = r.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return canonical_basis(out)


def canonical_basis(vectors):
    """Reduced row echelon basis of the span, ordered by pivot."""
    red = row_space(vectors).rref()
    return [red[p] for p in sorted(red)]


def solve(rows, rhs, ncols):
    """One solution x of rows . x = rhs (rhs a list of values), or None."""
    aug = []
    for r, b in zip(rows, rhs):
        a = dict(r)
        if b:
            a[ncols] = b
        aug.append(a)
    red = row_space(aug).rref()
    if ncols in red:
        return None
    x = {}
    for p, r in red.items():
        c = r.get(ncols)
        if c:
            x[p] = c
    return x


# operators ---------------------------------------------------------------


def apply(op, v):
    out = {}
    for j, a in v.items():
        col = op[j]
        if col:
            axpy(out, a, col)
    return out


def compose(p, q):
    """The operator p o q."""
    return tuple(apply(p, col) for col in q)


def identity_op(n):
    return tuple({j: 1} for j in range(n))


def flatten(op):
    n = len(op)
    out = {}
    for j, col in enumerate(op):
        for i, a in col.items():
            out[j * n + i] = a
    return out


def unflatten(vec, n):
    cols = [dict() for _ in range(n)]
    for key, a in vec.items():
        j, i = divmod(key, n)
        cols[j][i] = a
    return tuple(cols)


def op_lincomb(pairs, n):
    return unflatten(lincomb((a, flatten(op)) for a, op in pairs), n)


def op_is_invertible(op):
    return rank(op) == len(op)


def dense_to_sparse(rows):
    return [{j: a for j, a in enumerate(r) if a} for r in rows]


def sparse_to_dense(v, n, zero=0):
    return [v.get(j, zero) for j in range(n)]


def dense_inverse(mat):
    """Inverse of a square dense matrix (list of rows), or None if singular."""
    n = len(mat)
    aug = [{**{j: a for j, a in enumerate(row) if a}, n + i: 1} for i, row in enumerate(mat)]
    ech = row_space(aug)
    red = ech.rref()
    if any(p not in red for p in range(n)):
        return None
    return [[red[i].get(n + j, 0) for j in range(n)] for i in range(n)]


def dense_matmul(a, b):
    if not a:
        return []
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * m
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out
