"""Arithmetic in prime fields F_p with p an odd prime.

Elements are immutable.  Mixing elements of different fields raises
:class:`MixedFields`; division by zero raises :class:`DivisionByZero`
instead of quietly returning zero.
"""

from __future__ import annotations

from functools import total_ordering

from .errors import DivisionByZero, MixedFields, NotASquare

# Deterministic Miller-Rabin witnesses, valid for every n below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= _MR_LIMIT:
        raise ValueError(f"modulus {n} too large for the deterministic primality test")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field of residues modulo an odd prime."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int):
        modulus = int(modulus)
        if modulus == 2:
            raise ValueError("characteristic 2 is not supported")
        if not is_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeField is immutable")

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"element of {value.field} used in {self}")
            return value
        return FieldElement(value, self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("PrimeField", self.modulus))

    def __repr__(self):
        return f"PrimeField({self.modulus})"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self):
        """Iterate over all elements in increasing representative order."""
        for v in range(self.modulus):
            yield FieldElement(v, self)

    def nonsquare(self) -> FieldElement:
        """The smallest quadratic non-residue."""
        for v in range(2, self.modulus):
            if pow(v, (self.modulus - 1) // 2, self.modulus) == self.modulus - 1:
                return FieldElement(v, self)
        raise AssertionError("every odd prime field has a non-residue")


@total_ordering
class FieldElement:
    """A residue class ``value mod field.modulus``.

    Ordering compares canonical representatives; it has no algebraic
    meaning and exists for deterministic sorting and tie-breaks.
    """

    __slots__ = ("value", "field")

    def __init__(self, value, field: PrimeField):
        object.__setattr__(self, "value", int(value) % field.modulus)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.modulus != self.field.modulus:
                raise MixedFields(
                    f"cannot combine F_{self.field.modulus} with F_{other.field.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.modulus
        return NotImplemented

    def _new(self, value: int) -> FieldElement:
        return FieldElement(value, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.field.modulus}")
        return self._new(pow(self.value, -1, self.field.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return self._new(pow(self.value, n, self.field.modulus))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.modulus
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.value, self.field.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F{self.field.modulus}({self.value})"

    def __str__(self):
        return str(self.value)

    def is_square(self) -> bool:
        """Euler's criterion: a^((p-1)/2) is 0 or 1."""
        p = self.field.modulus
        return pow(self.value, (p - 1) // 2, p) in (0, 1)

    def sqrt(self) -> FieldElement:
        """Square root by Tonelli-Shanks; the smaller representative is returned."""
        if not self.is_square():
            raise NotASquare(f"{self.value} is not a square mod {self.field.modulus}")
        r = _tonelli_shanks(self.value, self.field.modulus)
        return self._new(min(r, self.field.modulus - r))


def _tonelli_shanks(a: int, p: int) -> int:
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
