"""Multilinear graded polynomial identities.

For a signature (g_1, ..., g_n) the multilinear monomials in x_1..x_n are
indexed by a permutation and (outside associative mode) a bracketing.  An
identity is a coefficient vector killed by the evaluation matrix whose rows
come from substituting homogeneous basis vectors x_i in A_{g_i}: by
multilinearity, vanishing on basis tuples is the same as vanishing
everywhere.  The identity space is therefore the kernel of that matrix, and
two algebras have the same identities in a signature exactly when the row
spaces of their evaluation matrices agree.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from . import linalg
from .errors import (
    CapExceeded,
    EmptySignature,
    FieldMismatch,
    GroupMismatch,
    ModeMismatch,
)

MAX_CAP = 6
DEFAULT_CAP = 4


# monomials ----------------------------------------------------------------


def _trees(leaves):
    """Full binary bracketings of a leaf sequence, left-heavy splits first."""
    n = len(leaves)
    if n == 1:
        yield leaves[0]
        return
    for k in range(n - 1, 0, -1):
        for left in _trees(leaves[:k]):
            for right in _trees(leaves[k:]):
                yield (left, right)


def _left_nested(leaves):
    t = leaves[0]
    for x in leaves[1:]:
        t = (t, x)
    return t


@dataclass(frozen=True)
class Monomial:
    """A multilinear monomial; ``tree`` is a nested pair tuple of 0-based variable indices."""

    perm: tuple
    tree: object
    associative: bool

    def text(self):
        if self.associative:
            return "*".join(f"x{i + 1}" for i in self.perm)
        return _tree_text(self.tree, top=True)

    def __str__(self):
        return self.text()


def _tree_text(t, top=False):
    if isinstance(t, int):
        return f"x{t + 1}"
    s = _tree_text(t[0]) + "*" + _tree_text(t[1])
    return s if top else f"({s})"


def catalan(k):
    return math.comb(2 * k, k) // (k + 1)


def monomial_count(n, associative):
    return math.factorial(n) * (1 if associative else catalan(n - 1))


def _check_size(n, cap=MAX_CAP):
    if n < 1:
        raise EmptySignature("signatures need at least one variable")
    if n > cap:
        raise CapExceeded(f"degree {n} exceeds the cap {cap}")


def monomial_basis(n, associative, cap=MAX_CAP):
    """Permutations in lexicographic order; bracketings in a fixed order inside each."""
    _check_size(n, cap)
    key = (n, associative)
    if key not in _MONOMIALS:
        out = []
        for perm in itertools.permutations(range(n)):
            if associative:
                out.append(Monomial(perm, _left_nested(perm), True))
            else:
                out.extend(Monomial(perm, t, False) for t in _trees(perm))
        _MONOMIALS[key] = tuple(out)
    return _MONOMIALS[key]


_MONOMIALS = {}


def standard_polynomial(n):
    """s_n = sum over permutations of sgn(p) x_p(1) ... x_p(n), in associative coordinates."""
    vec = {}
    for idx, m in enumerate(monomial_basis(n, True)):
        vec[idx] = _sign(m.perm)
    return vec


def _sign(perm):
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def format_polynomial(vec, monomials, field):
    """Text such as ``x1*x2 - x2*x1`` or ``(1/2 + z) (x1*x2)*x3``."""
    if not vec:
        return "0"
    parts = []
    for idx in sorted(vec):
        c = vec[idx]
        mono = monomials[idx].text()
        text = field.format(c)
        neg = False
        if text.startswith("-") and not any(ch in text[1:] for ch in "+-"):
            neg, text = True, text[1:]
        if text == "1":
            term = mono
        elif any(ch in text for ch in " +-"):
            term = f"({text}) {mono}"
        else:
            term = f"{text} {mono}"
        parts.append(("-" if neg else "+", term))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


# signatures ---------------------------------------------------------------


@dataclass(frozen=True)
class DegreeSignature:
    degrees: tuple
    associative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(tuple(g) for g in self.degrees))
        if not self.degrees:
            raise EmptySignature("signatures need at least one variable")

    @property
    def n(self):
        return len(self.degrees)

    def monomials(self):
        return monomial_basis(self.n, self.associative)

    def describe(self, group):
        return ", ".join(f"x{i + 1}:{group.format_degree(g)}" for i, g in enumerate(self.degrees))

    def to_json(self, group):
        return {
            "degrees": [group.format_degree(g) for g in self.degrees],
            "associative": self.associative,
        }


def signatures(group, support, cap):
    """Signatures up to reordering, sizes 1..cap, each sorted, in lexicographic order."""
    _check_size(cap)
    support = sorted(support)
    for n in range(1, cap + 1):
        yield from itertools.combinations_with_replacement(support, n)


# evaluation ---------------------------------------------------------------


def evaluate_tree(A, tree, values, memo=None):
    """Value of a bracketed monomial at the vectors ``values`` (indexed by variable)."""
    if isinstance(tree, int):
        return values[tree]
    if memo is not None and tree in memo:
        return memo[tree]
    out = A.mul(evaluate_tree(A, tree[0], values, memo), evaluate_tree(A, tree[1], values, memo))
    if memo is not None:
        memo[tree] = out
    return out


def evaluate(A, vec, monomials, values):
    """f(values) for a coefficient vector f over ``monomials``."""
    memo = {}
    out = {}
    for idx, c in vec.items():
        linalg.axpy(out, c, evaluate_tree(A, monomials[idx].tree, values, memo))
    return out


def basis_tuples(A, sig):
    comps = A.components
    slots = [comps.get(g, ()) for g in sig.degrees]
    return itertools.product(*slots)


def _rows_for(A, monomials, values):
    memo = {}
    vals = [evaluate_tree(A, m.tree, values, memo) for m in monomials]
    rows = {}
    for col, v in enumerate(vals):
        for k, c in v.items():
            rows.setdefault(k, {})[col] = c
    return rows.values()


def _resolve_mode(A, associative):
    if associative is None:
        return A.is_associative
    if associative and not A.is_associative:
        raise ModeMismatch("associative mode needs an associative algebra")
    return bool(associative)


def _random_homogeneous(A, g, rng):
    idx = A.components.get(g, ())
    v = {}
    for i in idx:
        c = rng.randint(-3, 3)
        if c:
            v[i] = c
    return v


def evaluation_rows(A, sig, probes=2, seed=0):
    """Echelon basis of the row space of the evaluation matrix (cached on A).

    A few pseudorandom homogeneous tuples are tried first; their rows lie in
    the row space by multilinearity, and once the rank equals the number of
    monomials the basis tuples need not be visited at all.
    """
    key = ("rows", sig)
    return A.cached(key, lambda: _evaluation_rows(A, sig, probes, seed))


def _evaluation_rows(A, sig, probes, seed):
    monomials = sig.monomials()
    ncols = len(monomials)
    ech = linalg.Echelon()
    if any(not A.components.get(g) for g in sig.degrees):
        return ech
    tuples = math.prod(len(A.components[g]) for g in sig.degrees)
    if tuples > 4 * ncols:
        rng = random.Random(seed)
        stale = 0
        for _ in range(probes * ncols):
            values = [_random_homogeneous(A, g, rng) for g in sig.degrees]
            before = len(ech)
            for row in _rows_for(A, monomials, values):
                ech.add(row)
            if len(ech) == ncols:
                return ech
            stale = stale + 1 if len(ech) == before else 0
            if stale >= 2:
                break
    seen = set()
    for tup in basis_tuples(A, sig):
        values = [{i: 1} for i in tup]
        for row in _rows_for(A, monomials, values):
            key = frozenset(row.items())
            if key in seen:
                continue
            seen.add(key)
            ech.add(row)
            if len(ech) == ncols:
                return ech
    return ech


@dataclass
class MultilinearSpace:
    """Identities of ``algebra`` in one signature; ``kernel`` rows are in reduced echelon form."""

    signature: DegreeSignature
    monomials: tuple
    kernel: list
    rank: int
    algebra_name: str | None = None

    @property
    def dim(self):
        return len(self.kernel)

    def contains(self, vec):
        red = linalg.row_space(self.kernel)
        return red.contains(vec)

    def verify(self, A):
        """Re-evaluate every kernel vector on every basis tuple."""
        for tup in basis_tuples(A, self.signature):
            values = [{i: 1} for i in tup]
            for f in self.kernel:
                if evaluate(A, f, self.monomials, values):
                    return False
        return True

    def polynomials(self, field):
        return [format_polynomial(f, self.monomials, field) for f in self.kernel]

    def to_json(self, A):
        return {
            "signature": self.signature.to_json(A.group),
            "monomials": len(self.monomials),
            "rank": self.rank,
            "kernel_dim": self.dim,
            "identities": self.polynomials(A.field),
        }


def identity_space(A, sig, associative=None):
    """Multilinear graded identities of A with variables of degrees ``sig``."""
    if not isinstance(sig, DegreeSignature):
        sig = DegreeSignature(tuple(sig), _resolve_mode(A, associative))
    else:
        _resolve_mode(A, sig.associative)
    for g in sig.degrees:
        A.group.check(g)
    _check_size(sig.n)
    monomials = sig.monomials()
    ech = evaluation_rows(A, sig)
    kernel = linalg.nullspace(ech, len(monomials))
    return MultilinearSpace(sig, monomials, kernel, len(ech), A.name)


def ordinary_identity_space(A, n, associative=None, cap=MAX_CAP):
    """Identities of A forgetting the grading (all variables of degree e)."""
    _check_size(n, cap)
    T = A.trivially_graded()
    return identity_space(T, (T.group.identity,) * n, associative)


# comparison ---------------------------------------------------------------


@dataclass
class IdentityComparison:
    """Outcome of comparing identity spaces signature by signature."""

    equal: bool
    cap: int
    associative: bool
    checked: int
    signature: DegreeSignature | None = None
    side: str | None = None  # "A-only": identity of A but not of B; "B-only" the reverse
    polynomial: dict | None = None
    witness: tuple | None = None  # basis indices in the other algebra where it is nonzero
    value: dict | None = None
    extra: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return "Equal" if self.equal else "Separating"

    def swapped(self):
        if self.equal:
            return self
        side = "B-only" if self.side == "A-only" else "A-only"
        return IdentityComparison(False, self.cap, self.associative, self.checked,
                                  self.signature, side, self.polynomial, self.witness, self.value)

    def recheck(self, A, B):
        """Re-verify: the polynomial kills every basis tuple on one side, not the witness on the other."""
        if self.equal:
            return True
        sat, other = (A, B) if self.side == "A-only" else (B, A)
        monos = self.signature.monomials()
        for tup in basis_tuples(sat, self.signature):
            if evaluate(sat, self.polynomial, monos, [{i: 1} for i in tup]):
                return False
        val = evaluate(other, self.polynomial, monos, [{i: 1} for i in self.witness])
        return bool(val)

    def to_json(self, A, B):
        out = {"verdict": self.verdict, "cap": self.cap, "associative": self.associative,
               "signatures_checked": self.checked}
        if not self.equal:
            sig = self.signature
            other = B if self.side == "A-only" else A
            monos = sig.monomials()
            out.update(
                side=self.side,
                signature=sig.to_json(A.group),
                polynomial=format_polynomial(self.polynomial, monos, A.field),
                variables={f"x{i + 1}": A.group.format_degree(g) for i, g in enumerate(sig.degrees)},
                witness=[other.labels[i] for i in self.witness],
                value={other.labels[k]: other.field.format(c) for k, c in sorted(self.value.items())},
            )
        return out


def _check_pair(A, B):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.group != B.group:
        raise GroupMismatch(f"{A.group} vs {B.group}")


def _separator(S, other, sig):
    """A kernel vector of S that does not vanish on ``other``, with a witness tuple."""
    monos = sig.monomials()
    ker_s = linalg.nullspace(evaluation_rows(S, sig), len(monos))
    rows_o = evaluation_rows(other, sig)
    for f in ker_s:
        if any(sum((r.get(k, 0) * c for k, c in f.items()), 0) for r in rows_o.rows.values()):
            for tup in basis_tuples(other, sig):
                val = evaluate(other, f, monos, [{i: 1} for i in tup])
                if val:
                    return f, tup, val
    return None


def compare_identities(A, B, cap=DEFAULT_CAP, associative=None):
    """Compare multilinear graded identities of A and B up to degree ``cap``.

    Associative monomials are used when both algebras are associative (or
    when ``associative`` forces a mode).  Returns the first separating
    identity in canonical signature order, or Equal.
    """
    _check_pair(A, B)
    _check_size(cap)
    if associative is None:
        associative = A.is_associative and B.is_associative
    else:
        _resolve_mode(A, associative)
        _resolve_mode(B, associative)
    support = sorted(set(A.support) | set(B.support))
    checked = 0
    for degs in signatures(A.group, support, cap):
        sig = DegreeSignature(degs, associative)
        checked += 1
        ea, eb = evaluation_rows(A, sig), evaluation_rows(B, sig)
        if len(ea) == len(eb) and all(ea.contains(r) for r in eb.rows.values()):
            continue
        for S, O, side in ((A, B, "A-only"), (B, A, "B-only")):
            found = _separator(S, O, sig)
            if found:
                f, tup, val = found
                return IdentityComparison(False, cap, associative, checked, sig, side, f,
                                          tuple(tup), val)
        raise AssertionError("row spaces differ but no separating identity was found")
    return IdentityComparison(True, cap, associative, checked)
