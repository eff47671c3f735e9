"""Exact coefficient fields: Q, cyclotomic fields Q(z_m) and prime fields F_p.

Inside the library a field element is a *raw* value:

* ``int`` or ``fractions.Fraction`` for rational numbers (in any field of
  characteristic zero),
* :class:`Cyc` for an irrational element of Q(z_m),
* :class:`Mod` for an element of F_p.

Raw values support ``+ - * /`` and truthiness (zero is falsy), which is all
the exact linear algebra needs.  A :class:`Cyc` whose coordinates collapse to
a rational number is returned as that rational number, so every element has
exactly one representation and ``==`` is a canonical equality test.

:class:`Scalar` pairs a raw value with its :class:`FieldSpec`; it is the
user-facing value type and checks that both operands live in the same field.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, NoEmbedding, ParseError, SpecMismatch


def _is_prime(p):
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def _poly_divexact(num, den):
    # integer coefficient lists, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num[: len(den) - 1]), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of the m-th cyclotomic polynomial, lowest degree first."""
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _CycloContext:
    """Precomputed power table of z_m in the power basis 1, z, ..., z^(phi-1)."""

    def __init__(self, m):
        self.m = m
        poly = cyclotomic_polynomial(m)
        self.phi = phi = len(poly) - 1
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(max(m, 2 * phi)):
            powers.append(tuple(cur))
            # multiply by z and reduce with z^phi = -sum poly[i] z^i
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * poly[i]
        self.powers = powers

    def make(self, coeffs):
        if not any(coeffs[1:]):
            return coeffs[0]
        return Cyc(self, tuple(coeffs))

    def mul(self, a, b):
        phi = self.phi
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for i, v in enumerate(self.powers[k]):
                    if v:
                        out[i] += c * v
        return out

    def power(self, k):
        return self.powers[k % self.m]


@lru_cache(maxsize=None)
def _context(m):
    return _CycloContext(m)


def _rat_coords(x, phi):
    out = [0] * phi
    out[0] = x
    return out


class Cyc:
    """An irrational element of Q(z_m), stored in the power basis of z_m."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx, c):
        self.ctx = ctx
        self.c = c

    @property
    def m(self):
        return self.ctx.m

    def _coords_of(self, other):
        if isinstance(other, Cyc):
            if other.ctx is not self.ctx:
                raise SpecMismatch(f"Q(z{self.ctx.m}) vs Q(z{other.ctx.m})")
            return other.c
        if isinstance(other, (int, Fraction)):
            return None
        return NotImplemented

    def __add__(self, other):
        oc = self._coords_of(other)
        if oc is NotImplemented:
            return NotImplemented
        if oc is None:
            c = list(self.c)
            c[0] += other
            return self.ctx.make(c)
        return self.ctx.make([x + y for x, y in zip(self.c, oc)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.ctx, tuple(-x for x in self.c))

    def __sub__(self, other):
        oc = self._coords_of(other)
        if oc is NotImplemented:
            return NotImplemented
        if oc is None:
            c = list(self.c)
            c[0] -= other
            return self.ctx.make(c)
        return self.ctx.make([x - y for x, y in zip(self.c, oc)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oc = self._coords_of(other)
        if oc is NotImplemented:
            return NotImplemented
        if oc is None:
            if not other:
                return 0
            return Cyc(self.ctx, tuple(x * other for x in self.c))
        return self.ctx.make(self.ctx.mul(self.c, oc))

    __rmul__ = __mul__

    def inverse(self):
        # solve (self * x) = 1 in the power basis
        ctx = self.ctx
        phi = ctx.phi
        cols = []
        for j in range(phi):
            basis = [0] * phi
            basis[j] = 1
            cols.append(ctx.mul(self.c, basis))
        rows = [[Fraction(cols[j][i]) for j in range(phi)] + [Fraction(int(i == 0))] for i in range(phi)]
        for col in range(phi):
            piv = next(r for r in range(col, phi) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = 1 / rows[col][col]
            rows[col] = [v * inv for v in rows[col]]
            for r in range(phi):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return ctx.make([_tidy(rows[i][phi]) for i in range(phi)])

    def __truediv__(self, other):
        if isinstance(other, Cyc):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return self * (Fraction(1) / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = 1, self
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Cyc) and other.ctx is self.ctx and other.c == self.c

    def __hash__(self):
        return hash((self.ctx.m, self.c))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Cyc({self.ctx.m}, {format_cyclotomic(self.c)})"


def _tidy(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


class Mod:
    """Residue class modulo a prime."""

    __slots__ = ("p", "v")

    def __init__(self, v, p):
        self.p = p
        self.v = v % p

    def _val(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise SpecMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise DivisionByZero(f"{other} has no image in GF({self.p})")
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else Mod(o - self.v, self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __mul__(self, other):
        o = self._val(other)
        return NotImplemented if o is None else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if not self.v:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return self.inverse() * o

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Mod(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return other.p == self.p and other.v == self.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return False

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"


def inv(x):
    """Multiplicative inverse of a raw value, never falling back to floats."""
    if not x:
        raise DivisionByZero("division by zero")
    if isinstance(x, int):
        return Fraction(1, x)
    if isinstance(x, Fraction):
        return 1 / x
    return x.inverse()


def format_cyclotomic(coeffs):
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        c = Fraction(c)
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)} {mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"""^\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<z>z(?:\s*\^\s*(?P<exp>\d+))?)?\s*$"""
)
_FIELD = re.compile(r"^\s*(?:Q\s*\(\s*(?:z|zeta|ζ)_?(?P<m>\d+)\s*\)|(?P<q>Q|QQ)|(?:GF|F_?)\s*\(?\s*(?P<p>\d+)\s*\)?)\s*$")


@dataclass(frozen=True)
class FieldSpec:
    """One of Q, Q(z_m) or F_p, always in canonical form.

    Use :meth:`rational`, :meth:`cyclotomic`, :meth:`prime` or :meth:`parse`
    rather than the constructor: they fold Q(z_1), Q(z_2) into Q and Q(z_m)
    with m = 2 (mod 4) into Q(z_{m/2}).
    """

    kind: str
    order: int = 1

    @classmethod
    def rational(cls):
        return cls("rational", 1)

    @classmethod
    def cyclotomic(cls, m):
        if m < 1:
            raise ValueError(f"cyclotomic order must be positive, got {m}")
        if m % 4 == 2:
            m //= 2
        if m == 1:
            return cls.rational()
        return cls("cyclotomic", m)

    @classmethod
    def prime(cls, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls("prime", p)

    @classmethod
    def parse(cls, text):
        mt = _FIELD.match(text)
        if not mt:
            raise ParseError(f"cannot parse field {text!r}")
        if mt.group("m"):
            return cls.cyclotomic(int(mt.group("m")))
        if mt.group("q"):
            return cls.rational()
        return cls.prime(int(mt.group("p")))

    def __str__(self):
        if self.kind == "rational":
            return "Q"
        if self.kind == "cyclotomic":
            return f"Q(z{self.order})"
        return f"GF({self.order})"

    @property
    def characteristic(self):
        return self.order if self.kind == "prime" else 0

    @property
    def degree(self):
        """Dimension over the prime field."""
        return _context(self.order).phi if self.kind == "cyclotomic" else 1

    @property
    def unity_order(self):
        """Number of roots of unity in the field (characteristic zero only)."""
        if self.kind == "rational":
            return 2
        if self.kind == "cyclotomic":
            m = self.order
            return m if m % 2 == 0 else 2 * m
        return self.order - 1

    @property
    def zero(self):
        return Mod(0, self.order) if self.kind == "prime" else 0

    @property
    def one(self):
        return Mod(1, self.order) if self.kind == "prime" else 1

    def coerce(self, x):
        """Bring an int, Fraction, string or raw value of this field into raw form."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise SpecMismatch(f"{x.field} vs {self}")
            return x.value
        if isinstance(x, str):
            return self.parse_element(x)
        if self.kind == "prime":
            if isinstance(x, Mod):
                if x.p != self.order:
                    raise SpecMismatch(f"GF({x.p}) vs {self}")
                return x
            if isinstance(x, (int, Fraction)):
                return Mod(0, self.order) + x
            raise SpecMismatch(f"{x!r} is not an element of {self}")
        if isinstance(x, (int, Fraction)):
            return _tidy(x)
        if isinstance(x, Cyc):
            if self.kind != "cyclotomic" or x.ctx.m != self.order:
                raise SpecMismatch(f"element of Q(z{x.ctx.m}) used in {self}")
            return x
        raise SpecMismatch(f"{x!r} is not an element of {self}")

    def contains(self, x):
        try:
            self.coerce(x)
        except (SpecMismatch, DivisionByZero):
            return False
        return True

    def coords(self, x):
        """Coordinates of a raw value: power-basis rationals, or the residue."""
        if self.kind == "prime":
            return (self.coerce(x).v,)
        if isinstance(x, Cyc):
            return tuple(Fraction(c) for c in x.c)
        phi = self.degree
        return tuple(Fraction(c) for c in _rat_coords(x, phi))

    def from_coords(self, coeffs):
        if self.kind == "prime":
            (v,) = coeffs
            return Mod(int(v), self.order)
        if self.kind == "rational":
            (v,) = coeffs
            return _tidy(Fraction(v))
        ctx = _context(self.order)
        if len(coeffs) != ctx.phi:
            raise ValueError(f"expected {ctx.phi} coordinates, got {len(coeffs)}")
        return ctx.make([_tidy(Fraction(c)) for c in coeffs])

    def zeta(self, k=1, r=None):
        """The root of unity z_r^k as a raw value (r defaults to the field's own order)."""
        if self.kind == "prime":
            raise NoEmbedding("roots of unity are not provided for prime fields")
        big = self.unity_order
        r = self.order if r is None else r
        if big % r:
            raise NoEmbedding(f"{self} has no primitive {r}-th root of unity")
        e = (k * (big // r)) % big
        if self.kind == "rational":
            return 1 if e == 0 else -1
        ctx = _context(self.order)
        m = self.order
        if big == m:
            return ctx.make(list(ctx.power(e)))
        # m odd: z_{2m} = -z_m^((m+1)/2)
        half = (m + 1) // 2
        sign = -1 if e % 2 else 1
        return ctx.make([sign * c for c in ctx.power(e * half)])

    def roots_of_unity(self):
        if self.kind == "prime":
            p = self.order
            return [Mod(v, p) for v in range(1, p)]
        return [self.zeta(k, self.unity_order) for k in range(self.unity_order)]

    def format(self, x):
        x = self.coerce(x)
        if self.kind == "prime":
            return str(x.v)
        if isinstance(x, Cyc):
            return format_cyclotomic(x.c)
        return str(Fraction(x))

    def parse_element(self, text):
        text = text.strip()
        if not text:
            raise ParseError("empty scalar")
        if self.kind == "prime":
            try:
                return Mod(int(text), self.order)
            except ValueError:
                raise ParseError(f"bad element of {self}: {text!r}") from None
        # split into signed terms
        s = text.replace(" ", "")
        if s[0] not in "+-":
            s = "+" + s
        parts = re.findall(r"([+-])([^+-]+)", s)
        if "".join(a + b for a, b in parts) != s:
            raise ParseError(f"bad scalar {text!r}")
        total = 0
        for sign, body in parts:
            mt = _TERM.match(body)
            if not mt or (mt.group("coef") is None and mt.group("z") is None):
                raise ParseError(f"bad term {body!r} in {text!r}")
            coef = Fraction(mt.group("coef")) if mt.group("coef") else Fraction(1)
            if sign == "-":
                coef = -coef
            if mt.group("z"):
                if self.kind != "cyclotomic":
                    raise ParseError(f"z is not defined in {self}")
                k = int(mt.group("exp") or 1)
                term = self.zeta(k) * coef
            else:
                term = coef
            total = total + term
        return _tidy(total) if isinstance(total, Fraction) else total

    def embed(self, x, target):
        """Image of a raw value of this field under the canonical embedding."""
        x = self.coerce(x)
        if target == self:
            return x
        if self.kind == "prime" or target.kind == "prime":
            raise NoEmbedding(f"no canonical embedding {self} -> {target}")
        if self.kind == "rational":
            return x
        if target.kind == "rational" or target.unity_order % self.order:
            raise NoEmbedding(f"no canonical embedding {self} -> {target}")
        if not isinstance(x, Cyc):
            return x
        out = 0
        for k, c in enumerate(x.c):
            if c:
                out = out + target.zeta(k, self.order) * c
        return out


RATIONAL = FieldSpec.rational()


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field."""

    field: FieldSpec
    value: object

    @classmethod
    def of(cls, field, x):
        return cls(field, field.coerce(x))

    @classmethod
    def parse(cls, field, text):
        return cls(field, field.parse_element(text))

    @property
    def coeffs(self):
        return self.field.coords(self.value)

    def _check(self, other):
        if not isinstance(other, Scalar):
            return Scalar.of(self.field, other)
        if other.field != self.field:
            raise SpecMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        return sc_add(self, self._check(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sc_add(self, -self._check(other))

    def __rsub__(self, other):
        return sc_add(-self, self._check(other))

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def __mul__(self, other):
        return sc_mul(self, self._check(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return sc_mul(self, sc_inv(self._check(other)))

    def __pow__(self, k):
        out = Scalar(self.field, self.field.one)
        base = self if k >= 0 else sc_inv(self)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)


def _same(a, b):
    if a.field != b.field:
        raise SpecMismatch(f"{a.field} vs {b.field}")


def sc_add(a, b):
    _same(a, b)
    return Scalar(a.field, a.value + b.value)


def sc_mul(a, b):
    _same(a, b)
    return Scalar(a.field, a.value * b.value)


def sc_inv(a):
    return Scalar(a.field, inv(a.value))


def embed(a, target):
    return Scalar(target, a.field.embed(a.value, target))
