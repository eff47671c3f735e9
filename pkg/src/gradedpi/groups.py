"""Finitely generated abelian grading groups Z^r x Z/d1 x ... x Z/dk.

Group elements (degrees) are plain tuples of ints of length r + k, written
additively; the torsion coordinates are kept reduced into ``[0, d_i)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import EmptySignature, GroupMismatch, ParseError


@dataclass(frozen=True)
class GradeGroup:
    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion orders must be >= 2, got {self.torsion}")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    # construction -------------------------------------------------------

    @classmethod
    def cyclic(cls, d):
        return cls(0, (d,))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("1", "trivial", "{e}", ""):
            return cls()
        r, tors = 0, []
        for part in re.split(r"\s*[x×]\s*", text):
            part = part.replace(" ", "")
            mt = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if mt:
                r += int(mt.group(1) or 1)
                continue
            mt = re.fullmatch(r"Z/(?:\()?(\d+)(?:\))?(?:Z)?", part)
            if mt:
                tors.append(int(mt.group(1)))
                continue
            raise ParseError(f"cannot parse group factor {part!r} in {text!r}")
        try:
            return cls(r, tuple(tors))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"

    # elements -----------------------------------------------------------

    @property
    def rank(self):
        """Length of the coordinate vector of an element."""
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        if not self.is_finite:
            raise ValueError("infinite group")
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def element(self, coords):
        """Reduce an integer vector into the canonical representative."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise GroupMismatch(f"{coords} is not an element of {self}")
        r = self.free_rank
        return coords[:r] + tuple(c % d for c, d in zip(coords[r:], self.torsion))

    def check(self, g):
        if not isinstance(g, tuple) or len(g) != self.rank:
            raise GroupMismatch(f"{g!r} is not an element of {self}")
        r = self.free_rank
        for c, d in zip(g[r:], self.torsion):
            if not 0 <= c < d:
                raise GroupMismatch(f"{g!r} is not reduced in {self}")
        return g

    @property
    def identity(self):
        return (0,) * self.rank

    def op(self, g, h):
        self.check(g)
        self.check(h)
        return self.element(a + b for a, b in zip(g, h))

    def inv(self, g):
        self.check(g)
        return self.element(-a for a in g)

    def sub(self, g, h):
        return self.op(g, self.inv(h))

    def product(self, sig):
        if not sig:
            raise EmptySignature("signature must be nonempty")
        out = self.identity
        for g in sig:
            out = self.op(out, g)
        return out

    def elements(self):
        """All elements of a finite group, in lexicographic order."""
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return [tuple(t) for t in itertools.product(*(range(d) for d in self.torsion))]

    def generator(self, i=0):
        g = [0] * self.rank
        g[i] = 1
        return tuple(g)

    def parse_degree(self, text):
        """Parse ``e``, ``g``/``g2``, an integer, or a tuple such as ``(1,0)`` / ``1:0``."""
        t = text.strip()
        if t in ("e", "0") and self.rank != 1:
            return self.identity
        if t == "e":
            return self.identity
        mt = re.fullmatch(r"g(\d*)", t)
        if mt:
            idx = int(mt.group(1) or 1) - 1
            if not 0 <= idx < self.rank:
                raise ParseError(f"{t!r}: {self} has {self.rank} generators")
            return self.generator(idx)
        t = t.strip("()[]")
        try:
            coords = [int(c) for c in re.split(r"[,:\s]+", t) if c]
        except ValueError:
            raise ParseError(f"cannot parse degree {text!r}") from None
        try:
            return self.element(coords)
        except GroupMismatch as exc:
            raise ParseError(str(exc)) from None

    def format_degree(self, g):
        if self.rank == 1:
            return str(g[0])
        return "(" + ",".join(str(c) for c in g) + ")"


def g_op(group, g, h):
    return group.op(g, h)


def g_inv(group, g):
    return group.inv(g)


def g_id(group):
    return group.identity


def signature_products(group, sig):
    return group.product(sig)


TRIVIAL = GradeGroup()
