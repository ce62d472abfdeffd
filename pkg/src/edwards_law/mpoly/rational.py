"""Fractions of polynomials, standing in for elements of a localization."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import ContextMismatch, DivisionByZero
from .poly import MPoly


class RationalPair:
    """``num / den`` with ``den`` a nonzero polynomial.

    No polynomial gcd is ever taken.  :meth:`cancel` only strips the common
    monomial factor and integer content, which is cheap and keeps the
    fractions produced by composing addition laws small.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = num.ctx.one()
        if not isinstance(den, MPoly):
            den = num.ctx.const(den)
        if not isinstance(num, MPoly):
            num = den.ctx.const(num)
        if num.ctx != den.ctx:
            raise ContextMismatch("numerator and denominator contexts differ")
        if den.is_zero():
            raise DivisionByZero("denominator is the zero polynomial")
        self.num = num
        self.den = den

    @property
    def ctx(self):
        return self.num.ctx

    def __repr__(self):
        return f"RationalPair(({self.num}) / ({self.den}))"

    def _lift(self, other) -> RationalPair:
        if isinstance(other, RationalPair):
            if other.ctx != self.ctx:
                raise ContextMismatch("rational pairs live in different contexts")
            return other
        if isinstance(other, MPoly):
            return RationalPair(other)
        if isinstance(other, (int, Fraction)):
            return RationalPair(self.ctx.const(other))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalPair(self.num + o.num, self.den).cancel()
        return RationalPair(self.num * o.den + o.num * self.den, self.den * o.den).cancel()

    __radd__ = __add__

    def __neg__(self):
        return RationalPair(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RationalPair(self.num * o.num, self.den * o.den).cancel()

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        if self.den == o.den:
            return RationalPair(self.num, o.num).cancel()
        return RationalPair(self.num * o.den, self.den * o.num).cancel()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def inverse(self) -> RationalPair:
        return RationalPair(self.ctx.one()) / self

    def cancel(self) -> RationalPair:
        """Strip common monomial factors and integer content."""
        if self.num.is_zero():
            return RationalPair(self.num, self.ctx.one())
        mn, md = self.num.monomial_content(), self.den.monomial_content()
        common = tuple(map(min, mn, md))
        num, den = self.num, self.den
        if any(common):
            num, den = num.divide_monomial(common), den.divide_monomial(common)
        if all(isinstance(c, int) for c in num.terms.values()) and all(
            isinstance(c, int) for c in den.terms.values()
        ):
            g = gcd(num.integer_content(), den.integer_content())
            # keep the denominator's leading sign fixed so equal fractions look equal
            if den.leading_coeff() < 0:
                g = -g
            if g not in (0, 1):
                num, den = num.scale(Fraction(1, g)), den.scale(Fraction(1, g))
        return RationalPair(num, den)

    def cross_equal(self, other: RationalPair) -> bool:
        """Equality as rational functions (cross multiplication)."""
        o = self._lift(other)
        return self.num * o.den == o.num * self.den

    def substitute(self, mapping) -> RationalPair:
        return RationalPair(self.num.substitute(mapping), self.den.substitute(mapping))

    def evaluate(self, assignment, field=None):
        d = self.den.evaluate(assignment, field)
        if d == 0:
            raise DivisionByZero("denominator vanishes at this point")
        return self.num.evaluate(assignment, field) / d


def rational_sub_simplify(a: RationalPair, b: RationalPair) -> RationalPair:
    """``a - b`` by plain cross multiplication, without any cancellation."""
    if a.ctx != b.ctx:
        raise ContextMismatch("rational pairs live in different contexts")
    return RationalPair(a.num * b.den - b.num * a.den, a.den * b.den)


def as_rational(x, ctx) -> RationalPair:
    if isinstance(x, RationalPair):
        return x
    if isinstance(x, MPoly):
        return RationalPair(x)
    return RationalPair(ctx.const(x))


__all__ = ["RationalPair", "rational_sub_simplify", "as_rational"]
