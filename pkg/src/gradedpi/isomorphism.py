"""Graded isomorphism: certificates, invariants, a bounded search, and the
pairwise experiment comparing "same identities" with "isomorphic".

Verdicts are three-valued.  ``Found`` carries a witness that
:func:`verify_iso` re-checks, ``NotIso`` carries either a differing
invariant or a separating identity, and ``Inconclusive`` means the search
budget ran out.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .algebra import GradedAlgebra
from .centroid import graded_centroid
from .errors import (
    ConfigurationError,
    FieldMismatch,
    GroupMismatch,
    NotGradedSimple,
    ShapeMismatch,
)
from .identities import DEFAULT_CAP, DegreeSignature, compare_identities, identity_space, signatures
from .multiplication import INCONCLUSIVE, check_graded_simple, mult_algebra

FOUND = "Found"
NOT_ISO = "NotIso"

DEFAULT_BUDGET = 20000


def _check_pair(A, B):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.group != B.group:
        raise GroupMismatch(f"{A.group} vs {B.group}")


# witnesses ----------------------------------------------------------------


@dataclass
class IsoWitness:
    """blocks[g][r] = coordinates in B_g of the image of the r-th basis vector of A_g."""

    blocks: dict

    def image(self, A, B, i):
        g = A.degrees[i]
        r = A.components[g].index(i)
        cols = B.components[g]
        return {cols[c]: a for c, a in enumerate(self.blocks[g][r]) if a}

    def apply(self, A, B, x):
        out = {}
        for i, a in x.items():
            linalg.axpy(out, a, self.image(A, B, i))
        return out

    def inverse(self):
        blocks = {}
        for g, m in self.blocks.items():
            inv = linalg.dense_inverse(m)
            if inv is None:
                raise ValueError("witness block is singular")
            blocks[g] = inv
        return IsoWitness(blocks)

    def then(self, other):
        """The composite map: first self (A -> B), then other (B -> C)."""
        return IsoWitness({g: linalg.dense_matmul(m, other.blocks[g]) for g, m in self.blocks.items()})

    @classmethod
    def identity(cls, A):
        return cls({g: [[1 if r == c else 0 for c in range(len(ix))] for r in range(len(ix))]
                    for g, ix in A.components.items()})

    @classmethod
    def from_images(cls, A, B, images):
        """Build from images[i] = sparse B-vector for each basis index i of A."""
        blocks = {}
        for g, ix in A.components.items():
            cols = B.components.get(g, ())
            pos = {k: c for c, k in enumerate(cols)}
            rows = []
            for i in ix:
                row = [0] * len(cols)
                for k, a in images[i].items():
                    if k not in pos:
                        raise ShapeMismatch(f"image of {A.labels[i]} leaves degree {g}")
                    row[pos[k]] = a
                rows.append(row)
            blocks[g] = rows
        return cls(blocks)

    def to_json(self, A, B):
        out = {}
        for i in range(A.dim):
            img = self.image(A, B, i)
            out[A.labels[i]] = {B.labels[k]: B.field.format(c) for k, c in sorted(img.items())}
        return out


def verify_iso(A, B, W):
    """Exact check that W is a degree-preserving algebra isomorphism A -> B."""
    _check_pair(A, B)
    degs = set(A.components) | set(B.components) | set(W.blocks)
    for g in degs:
        na, nb = A.component_dim(g), B.component_dim(g)
        m = W.blocks.get(g)
        if m is None:
            if na or nb:
                raise ShapeMismatch(f"no block for degree {g}")
            continue
        if len(m) != na or any(len(r) != nb for r in m):
            raise ShapeMismatch(f"block for degree {g} is not {na} x {nb}")
        if na != nb:
            return False
        if na and linalg.dense_inverse([[A.field.coerce(c) for c in r] for r in m]) is None:
            return False
    images = [W.apply(A, B, {i: 1}) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = W.apply(A, B, A.table[i][j])
            if lhs != B.mul(images[i], images[j]):
                return False
    return True


# invariants ---------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Invariants that any graded isomorphism preserves, compared field by field."""

    component_dims: tuple
    associative: bool
    dim_mult: int
    dim_gamma: int
    gamma_dims: tuple
    dim_over_gamma: int | None
    identity_dims: tuple

    FIELDS = ("component_dims", "associative", "dim_mult", "dim_gamma", "gamma_dims",
              "dim_over_gamma", "identity_dims")

    def as_tuple(self):
        return tuple(getattr(self, f) for f in self.FIELDS)

    def mismatch(self, other):
        """Name and both values of the first differing invariant, or None."""
        for f in self.FIELDS:
            a, b = getattr(self, f), getattr(other, f)
            if a != b:
                return f, a, b
        return None

    def to_json(self, group):
        fmt = group.format_degree
        return {
            "component_dims": {fmt(g): d for g, d in self.component_dims},
            "associative": self.associative,
            "dim_mult": self.dim_mult,
            "dim_gamma": self.dim_gamma,
            "gamma_dims": {fmt(g): d for g, d in self.gamma_dims},
            "dim_over_gamma": self.dim_over_gamma,
            "identity_dims": {" ".join(fmt(g) for g in sig): d for sig, d in self.identity_dims},
        }


def invariant_fingerprint(A, cap=DEFAULT_CAP):
    return A.cached(("fingerprint", cap), lambda: _fingerprint(A, cap))


def _fingerprint(A, cap):
    C = graded_centroid(A)
    v = check_graded_simple(A)
    assoc = A.is_associative
    ids = []
    for degs in signatures(A.group, A.support, cap):
        ids.append((degs, identity_space(A, DegreeSignature(degs, assoc)).dim))
    return Fingerprint(
        component_dims=tuple((g, len(ix)) for g, ix in A.components.items()),
        associative=assoc,
        dim_mult=mult_algebra(A).dim,
        dim_gamma=C.dim,
        gamma_dims=tuple(sorted(C.dims.items())),
        dim_over_gamma=v.data.get("n") if v.is_simple else None,
        identity_dims=tuple(ids),
    )


def _describe(value, group):
    """JSON-friendly rendering of a fingerprint entry."""
    if isinstance(value, tuple) and value and isinstance(value[0], tuple):
        out = {}
        for key, d in value:
            if key and isinstance(key[0], tuple):
                out[" ".join(group.format_degree(g) for g in key)] = d
            else:
                out[group.format_degree(key)] = d
        return out
    return value


# search -------------------------------------------------------------------


def generated_subalgebra(A, vectors):
    """Echelon basis of the subalgebra (products of any length) generated by ``vectors``."""
    ech = linalg.Echelon()
    basis = []
    for v in vectors:
        if ech.add(v):
            basis.append(v)
    i = 0
    while i < len(basis):
        x = basis[i]
        for y in basis[: i + 1]:
            for p in (A.mul(x, y), A.mul(y, x)):
                if p and ech.add(p):
                    basis.append(p)
        i += 1
    return ech


def generating_set(A):
    """Greedy homogeneous generating set: basis vectors that grow the subalgebra most."""
    chosen = []
    current = 0
    while current < A.dim:
        best, best_dim = None, current
        for i in range(A.dim):
            if i in chosen:
                continue
            d = len(generated_subalgebra(A, [{j: 1} for j in chosen + [i]]))
            if d > best_dim:
                best, best_dim = i, d
        if best is None:
            break
        chosen.append(best)
        current = best_dim
    return chosen


class _Graph:
    """Partial linear map A -> B stored as the graph {(x, psi(x))}, closed under products."""

    def __init__(self, A, B):
        self.A, self.B = A, B
        self.na, self.nb = A.dim, B.dim
        self.dom = linalg.Echelon()  # A coords first: a pivot in the B block means ill-defined
        self.img = linalg.Echelon()  # B coords first: a pivot in the A block means not injective
        self.pairs = []

    def copy(self):
        g = _Graph.__new__(_Graph)
        g.A, g.B, g.na, g.nb = self.A, self.B, self.na, self.nb
        g.dom, g.img, g.pairs = self.dom.copy(), self.img.copy(), list(self.pairs)
        return g

    def _add(self, x, y):
        na, nb = self.na, self.nb
        v = dict(x)
        for k, c in y.items():
            v[na + k] = c
        r = self.dom.reduce(v)
        if not r:
            return True, False
        if min(r) >= na:
            return False, False
        w = dict(y)
        for k, c in x.items():
            w[nb + k] = c
        r2 = self.img.reduce(w)
        if not r2 or min(r2) >= nb:
            return False, False
        self.dom.add(v)
        self.img.add(w)
        return True, True

    def extend(self, x, y):
        """Add x -> y and close under products; False on any inconsistency."""
        ok, new = self._add(x, y)
        if not ok:
            return False
        if not new:
            return True
        A, B = self.A, self.B
        queue = [(x, y)]
        while queue:
            p = queue.pop()
            self.pairs.append(p)
            for q in list(self.pairs):
                for (a, b) in ((A.mul(p[0], q[0]), B.mul(p[1], q[1])),
                               (A.mul(q[0], p[0]), B.mul(q[1], p[1]))):
                    if not a and not b:
                        continue
                    ok, new = self._add(a, b)
                    if not ok:
                        return False
                    if new:
                        queue.append((a, b))
        return True

    def determines(self, x):
        """Whether x already lies in the domain of the partial map."""
        r = self.dom.reduce(x)
        return not r or min(r) >= self.na

    @property
    def complete(self):
        return len(self.dom) == self.na

    def images(self):
        red = self.dom.rref()
        na = self.na
        return [{k - na: c for k, c in red[i].items() if k >= na} for i in range(na)]


def candidate_scalars(field):
    if field.kind == "prime":
        return list(field.roots_of_unity())
    out = list(field.roots_of_unity())
    out += [c for c in (2, -2) if c not in out]
    return out


@dataclass
class IsoVerdict:
    kind: str  # Found / NotIso / Inconclusive
    witness: IsoWitness | None = None
    reason: str | None = None  # InvariantMismatch / SeparatingIdentity for NotIso
    invariant: tuple | None = None  # (name, value for A, value for B)
    separating: object = None  # IdentityComparison
    nodes: int = 0
    config: dict = field(default_factory=dict)

    def swapped(self):
        w = self.witness.inverse() if self.witness is not None else None
        inv = None
        if self.invariant is not None:
            name, a, b = self.invariant
            inv = (name, b, a)
        sep = self.separating.swapped() if self.separating is not None else None
        return IsoVerdict(self.kind, w, self.reason, inv, sep, self.nodes, dict(self.config))

    def recheck(self, A, B):
        """Re-verify the certificate from scratch on fresh copies of A and B."""
        A, B = _fresh(A), _fresh(B)
        if self.kind == FOUND:
            return verify_iso(A, B, self.witness)
        if self.kind == NOT_ISO and self.reason == "InvariantMismatch":
            cap = self.config.get("cap", DEFAULT_CAP)
            mm = invariant_fingerprint(A, cap).mismatch(invariant_fingerprint(B, cap))
            return mm is not None and mm[0] == self.invariant[0]
        if self.kind == NOT_ISO:
            return self.separating.recheck(A, B)
        return True

    def to_json(self, A, B):
        out = {"verdict": self.kind, "nodes": self.nodes, "config": self.config}
        if self.witness is not None:
            out["witness"] = self.witness.to_json(A, B)
        if self.reason:
            out["reason"] = self.reason
        if self.invariant is not None:
            name, a, b = self.invariant
            out["invariant"] = {"name": name, "A": _describe(a, A.group), "B": _describe(b, B.group)}
        if self.separating is not None and self.reason == "SeparatingIdentity":
            out["separating"] = self.separating.to_json(A, B)
        return out


def _fresh(A):
    return GradedAlgebra(A.field, A.group, A.labels, A.degrees, A.table, name=A.name)


def find_witness(A, B, budget=DEFAULT_BUDGET):
    """Backtracking over monomial images of a generating set; (witness or None, nodes, exhausted)."""
    gens = generating_set(A)
    scalars = candidate_scalars(A.field)
    nodes = 0
    exhausted = False

    def candidates(i):
        comp = B.components.get(A.degrees[i], ())
        for k in comp:
            for c in scalars:
                yield {k: c}

    def rec(depth, graph):
        nonlocal nodes, exhausted
        if graph.complete:
            W = IsoWitness.from_images(A, B, graph.images())
            return W if verify_iso(A, B, W) else None
        if depth == len(gens):
            return None
        x = {gens[depth]: 1}
        if graph.determines(x):
            return rec(depth + 1, graph)
        for y in candidates(gens[depth]):
            if nodes >= budget:
                exhausted = True
                return None
            nodes += 1
            g2 = graph.copy()
            if g2.extend(x, y):
                W = rec(depth + 1, g2)
                if W is not None:
                    return W
            if exhausted:
                return None
        return None

    W = rec(0, _Graph(A, B))
    return W, nodes, exhausted


def search_iso(A, B, cap=DEFAULT_CAP, budget=DEFAULT_BUDGET):
    """Fingerprints, then identities, then witness search, then Inconclusive."""
    _check_pair(A, B)
    config = {"cap": cap, "budget": budget, "scalars": "roots of unity and +-2",
              "generators": [A.labels[i] for i in generating_set(A)]}
    mm = invariant_fingerprint(A, cap).mismatch(invariant_fingerprint(B, cap))
    if mm is not None:
        return IsoVerdict(NOT_ISO, reason="InvariantMismatch", invariant=mm, config=config)
    cmp = compare_identities(A, B, cap)
    if not cmp.equal:
        return IsoVerdict(NOT_ISO, reason="SeparatingIdentity", separating=cmp, config=config)
    W, nodes, exhausted = find_witness(A, B, budget)
    if W is not None:
        return IsoVerdict(FOUND, witness=W, nodes=nodes, config=config)
    if exhausted:
        return IsoVerdict(INCONCLUSIVE, reason="search budget exhausted", nodes=nodes, config=config)
    return IsoVerdict(INCONCLUSIVE, reason="no monomial witness exists in the candidate family",
                      nodes=nodes, config=config)


# the experiment -----------------------------------------------------------

AGREE_ISO = "Agree-Iso"
AGREE_NONISO = "Agree-NonIso"
ANOMALY = "Anomaly"


@dataclass
class PairResult:
    a: int
    b: int
    identities: object  # IdentityComparison
    iso: IsoVerdict
    verdict_class: str
    anomaly: str | None = None
    rechecked: bool | None = None


def classify(identities, iso):
    if iso.kind == INCONCLUSIVE:
        return ANOMALY, "inconclusive isomorphism search"
    if identities.equal and iso.kind == FOUND:
        return AGREE_ISO, None
    if not identities.equal and iso.kind == NOT_ISO:
        return AGREE_NONISO, None
    if identities.equal:
        return ANOMALY, "equal identities but not isomorphic"
    return ANOMALY, "separating identity for isomorphic algebras (internal error)"


@dataclass
class ExperimentReport:
    names: list
    algebras: list
    pairs: list
    skipped: list
    config: dict

    @property
    def anomalies(self):
        return sum(p.verdict_class == ANOMALY for p in self.pairs)

    def counts(self):
        out = {AGREE_ISO: 0, AGREE_NONISO: 0, ANOMALY: 0}
        for p in self.pairs:
            out[p.verdict_class] += 1
        return out

    def to_json(self):
        pairs = []
        for p in self.pairs:
            A, B = self.algebras[p.a], self.algebras[p.b]
            rec = {
                "a": self.names[p.a],
                "b": self.names[p.b],
                "group": str(A.group),
                "class": p.verdict_class,
                "identities": p.identities.to_json(A, B),
                "iso": p.iso.to_json(A, B),
            }
            if p.anomaly:
                rec["anomaly"] = p.anomaly
            if p.rechecked is not None:
                rec["rechecked"] = p.rechecked
            pairs.append(rec)
        return {
            "catalogue": [
                {"name": n, "field": str(A.field), "group": str(A.group), "dim": A.dim}
                for n, A in zip(self.names, self.algebras)
            ],
            "config": self.config,
            "counts": self.counts(),
            "anomalies": self.anomalies,
            "pairs": pairs,
            "skipped_pairs": [{"a": self.names[a], "b": self.names[b], "reason": r}
                              for a, b, r in self.skipped],
            "note": "identity spaces are compared for multilinear identities up to the cap only",
        }


def theorem_experiment(algebras, cap=DEFAULT_CAP, budget=DEFAULT_BUDGET, names=None,
                       recheck=False, seed=0):
    """Compare identities and isomorphism for every pair of catalogue algebras.

    Entries must be graded simple with Gamma_e equal to the base field.
    Pairs over different fields or groups cannot be isomorphic as graded
    algebras over the same group and are listed as skipped.
    """
    algebras = list(algebras)
    names = list(names) if names is not None else [A.name or f"#{i}" for i, A in enumerate(algebras)]
    for i, A in enumerate(algebras):
        v = check_graded_simple(A, seed=seed)
        if v.verdict == INCONCLUSIVE:
            raise ConfigurationError(
                f"entry {i} ({names[i]}): {v.reason}; use a larger cyclotomic field"
            )
        if not v.is_simple:
            raise NotGradedSimple(f"entry {i} ({names[i]}) is not graded simple: {v.reason}",
                                  index=i, verdict=v)
    order = sorted(range(len(algebras)), key=lambda i: names[i])
    pairs, skipped = [], []
    for x, y in itertools.combinations(order, 2):
        a, b = (x, y) if names[x] <= names[y] else (y, x)
        A, B = algebras[a], algebras[b]
        if A.field != B.field or A.group != B.group:
            skipped.append((a, b, "different field or grading group"))
            continue
        ids = compare_identities(A, B, cap)
        iso = search_iso(A, B, cap, budget)
        cls, why = classify(ids, iso)
        res = PairResult(a, b, ids, iso, cls, why)
        if recheck:
            res.rechecked = ids.recheck(A, B) and iso.recheck(A, B)
        pairs.append(res)
    config = {"cap": cap, "budget": budget, "seed": seed,
              "fields": sorted({str(A.field) for A in algebras})}
    return ExperimentReport(names, algebras, pairs, skipped, config)
