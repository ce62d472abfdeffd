"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from operator import add, sub
from typing import Mapping

from ..errors import ContextMismatch, MissingAssignment, UnknownVariable
from ..ffield import FieldElement, PrimeField
from .context import LEX, MonomialOrder, VarContext, as_order


def normalize_coeff(c):
    """Store integral rationals as ``int`` so the common case stays fast."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return normalize_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficient {c!r} is not rational")


def divide_coeff(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    return normalize_coeff(Fraction(a) / b)


class MPoly:
    """A polynomial over Q in the variables of a :class:`VarContext`.

    ``terms`` maps exponent vectors to nonzero coefficients.  Instances are
    treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VarContext, terms: Mapping[tuple, object] | None = None):
        clean = {}
        n = len(ctx)
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {n} variables")
            c = normalize_coeff(c)
            if c != 0:
                clean[exp] = c
        self.ctx = ctx
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # terms already normalized and pruned
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        obj._hash = None
        return obj

    # -- coercion ---------------------------------------------------------

    def _lift(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly(self.ctx, {self.ctx.unit: other})
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = normalize_coeff(v)
            else:
                out.pop(e, None)
        return MPoly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return MPoly._raw(
            self.ctx, {e: normalize_coeff(c) for e, c in out.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> MPoly:
        c = normalize_coeff(c)
        if c == 0:
            return self.ctx.zero()
        return MPoly._raw(
            self.ctx, {e: normalize_coeff(v * c) for e, v in self.terms.items()}
        )

    def mul_term(self, exp: tuple, c) -> MPoly:
        """Multiply by the single term ``c * x^exp``."""
        c = normalize_coeff(c)
        if c == 0:
            return self.ctx.zero()
        return MPoly._raw(
            self.ctx,
            {tuple(map(add, e, exp)): normalize_coeff(v * c) for e, v in self.terms.items()},
        )

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {self.ctx.unit: normalize_coeff(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        from .text import to_text

        return f"MPoly({to_text(self)!r})"

    def __str__(self):
        from .text import to_text

        return to_text(self)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(self.ctx.unit, 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, name: str) -> int:
        i = self.ctx.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def used_variables(self) -> tuple:
        n = len(self.ctx)
        return tuple(
            self.ctx.names[i] for i in range(n) if any(e[i] for e in self.terms)
        )

    def sorted_terms(self, order: MonomialOrder = LEX, reverse: bool = True) -> list:
        key = as_order(order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def leading_term(self, order: MonomialOrder = LEX) -> tuple:
        """``(exponent, coefficient)`` of the largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = as_order(order).key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder = LEX) -> tuple:
        return self.leading_term(order)[0]

    def leading_coeff(self, order: MonomialOrder = LEX):
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder = LEX) -> MPoly:
        return self.scale(divide_coeff(1, self.leading_coeff(order)))

    def coefficient_lcm(self) -> int:
        """Least common multiple of the coefficient denominators."""
        out = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                out = out * c.denominator // gcd(out, c.denominator)
        return out

    def integer_content(self) -> int:
        """gcd of the coefficients, for a polynomial with integer coefficients."""
        g = 0
        for c in self.terms.values():
            if not isinstance(c, int):
                raise ValueError("content needs integer coefficients")
            g = gcd(g, c)
        return g

    def monomial_content(self) -> tuple:
        """The largest monomial dividing every term."""
        if not self.terms:
            return self.ctx.unit
        it = iter(self.terms)
        low = list(next(it))
        for e in it:
            low = [min(a, b) for a, b in zip(low, e)]
        return tuple(low)

    def divide_monomial(self, exp: tuple) -> MPoly:
        out = {}
        for e, c in self.terms.items():
            q = tuple(map(sub, e, exp))
            if min(q, default=0) < 0:
                raise ValueError("monomial does not divide polynomial")
            out[q] = c
        return MPoly._raw(self.ctx, out)

    # -- maps -------------------------------------------------------------

    def to_context(self, ctx: VarContext) -> MPoly:
        """Re-embed into another context that contains every used variable."""
        if ctx == self.ctx:
            return self
        pos = []
        for i, name in enumerate(self.ctx.names):
            if name in ctx:
                pos.append((i, ctx.index(name)))
            elif any(e[i] for e in self.terms):
                raise UnknownVariable(name)
        n = len(ctx)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, j in pos:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return MPoly._raw(ctx, out)

    def substitute(self, mapping: Mapping[str, MPoly]) -> MPoly:
        """Simultaneous substitution of polynomials for variables.

        The result lives in the images' common context.  Variables that are
        not mapped are sent to the same-named variable of that context.
        """
        for name in mapping:
            if name not in self.ctx:
                raise UnknownVariable(name)
        images = list(mapping.values())
        target = images[0].ctx if images else self.ctx
        for im in images:
            if not isinstance(im, MPoly):
                raise TypeError("substitution images must be MPoly")
            if im.ctx != target:
                raise ContextMismatch("substitution images must share one context")
        per_var = []
        for name in self.ctx.names:
            if name in mapping:
                per_var.append(mapping[name])
            elif name in target:
                per_var.append(target.var(name))
            else:
                per_var.append(None)
        cache: dict = {}

        def power(i, k):
            if (i, k) not in cache:
                base = per_var[i]
                if base is None:
                    raise UnknownVariable(self.ctx.names[i])
                cache[(i, k)] = base if k == 1 else power(i, k - 1) * base
            return cache[(i, k)]

        acc: dict = {}
        unit = target.unit
        for e, c in self.terms.items():
            term = MPoly._raw(target, {unit: c})
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for te, tc in term.terms.items():
                acc[te] = acc.get(te, 0) + tc
        return MPoly._raw(target, {e: normalize_coeff(c) for e, c in acc.items() if c})

    def evaluate(self, assignment: Mapping[str, object], field: PrimeField | None = None):
        """Image under the evaluation homomorphism into F_p."""
        if field is None:
            for v in assignment.values():
                if isinstance(v, FieldElement):
                    field = v.field
                    break
            else:
                raise ValueError("cannot infer the field; pass field=")
        p = field.modulus
        vals = []
        for i, name in enumerate(self.ctx.names):
            if name in assignment:
                vals.append(field(assignment[name]).value)
            elif any(e[i] for e in self.terms):
                raise MissingAssignment(name)
            else:
                vals.append(0)
        total = 0
        for e, c in self.terms.items():
            if isinstance(c, Fraction):
                num, den = c.numerator, c.denominator
                if den % p == 0:
                    raise ZeroDivisionError(f"coefficient {c} undefined mod {p}")
                v = num * pow(den, -1, p)
            else:
                v = c
            for x, k in zip(vals, e):
                if k:
                    v = v * pow(x, k, p) % p
            total += v
        return field(total)

    def map_coeffs(self, fn) -> MPoly:
        return MPoly(self.ctx, {e: fn(c) for e, c in self.terms.items()})


def monomial_divides(a: tuple, b: tuple) -> bool:
    """True when x^a divides x^b."""
    for i, j in zip(a, b):
        if i > j:
            return False
    return True


def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(map(max, a, b))
