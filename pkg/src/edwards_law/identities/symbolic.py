"""Symbolic Edwards curves: curve polynomials, the two addition laws, the
symmetries and the denominator polynomials, all over Q[params, coords].

A symbolic point is a pair of :class:`RationalPair` coordinates, so the
addition laws compose freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import BadSlot, ModeMismatch
from ..mpoly import MPoly, RationalPair, VarContext, exact_divide

Point = tuple  # (RationalPair, RationalPair)


def coordinate_names(slots: Sequence, extra: Sequence[str] = ()) -> list[str]:
    """Variable order x_a, x_b, y_a, y_b, then x_k, y_k for later slots."""
    slots = list(slots)
    names = []
    if len(slots) >= 2:
        a, b = slots[:2]
        names += [f"x{a}", f"x{b}", f"y{a}", f"y{b}"]
        rest = slots[2:]
    else:
        rest = slots
    for s in rest:
        names += [f"x{s}", f"y{s}"]
    return names + list(extra)


@dataclass(frozen=True)
class SymbolicCurve:
    """An Edwards curve over a polynomial ring with named point slots.

    ``mode == "general"`` carries parameters ``c`` and ``d``; ``"rescaled"``
    carries ``t`` with ``c = 1`` and ``d = t^2``.
    """

    mode: str
    ctx: VarContext
    slots: tuple

    @classmethod
    def general(cls, slots=(1, 2), extra=(), names=None) -> SymbolicCurve:
        names = names or coordinate_names(slots, extra) + ["c", "d"]
        return cls("general", VarContext(names), tuple(slots))

    @classmethod
    def rescaled(cls, slots=(1, 2), extra=(), names=None) -> SymbolicCurve:
        names = names or coordinate_names(slots, extra) + ["t"]
        return cls("rescaled", VarContext(names), tuple(slots))

    def __post_init__(self):
        if self.mode not in ("general", "rescaled"):
            raise ValueError(f"unknown curve mode {self.mode!r}")
        params = ("c", "d") if self.mode == "general" else ("t",)
        for p in params:
            if p not in self.ctx:
                raise ValueError(f"context lacks parameter {p}")
        for s in self.slots:
            if f"x{s}" not in self.ctx or f"y{s}" not in self.ctx:
                raise BadSlot(f"slot {s} has no coordinates in {self.ctx}")

    @property
    def c(self) -> MPoly:
        return self.ctx.var("c") if self.mode == "general" else self.ctx.one()

    @property
    def d(self) -> MPoly:
        if self.mode == "general":
            return self.ctx.var("d")
        return self.t ** 2

    @property
    def t(self) -> MPoly:
        if self.mode != "rescaled":
            raise ModeMismatch("t exists only on the rescaled curve")
        return self.ctx.var("t")

    def coords(self, slot) -> tuple[MPoly, MPoly]:
        if slot not in self.slots:
            raise BadSlot(f"slot {slot} not in {self.slots}")
        return self.ctx.var(f"x{slot}"), self.ctx.var(f"y{slot}")

    def point(self, slot) -> Point:
        x, y = self.coords(slot)
        return RationalPair(x), RationalPair(y)

    def require_rescaled(self, what: str):
        if self.mode != "rescaled":
            raise ModeMismatch(f"{what} needs the rescaled curve")

    def with_context(self, names) -> SymbolicCurve:
        return SymbolicCurve(self.mode, VarContext(names), self.slots)


# -- curve polynomial -------------------------------------------------------

_GENERAL_BASE = VarContext(["x", "y", "c", "d"])
_RESCALED_BASE = VarContext(["x", "y", "t"])


def base_curve_polynomial(mode: str) -> MPoly:
    """e(x, y) in its own small ring."""
    if mode == "general":
        x, y, c, d = _GENERAL_BASE.vars("x", "y", "c", "d")
        return x**2 + c * y**2 - 1 - d * x**2 * y**2
    x, y, t = _RESCALED_BASE.vars("x", "y", "t")
    return x**2 + y**2 - 1 - t**2 * x**2 * y**2


def build_curve(sym: SymbolicCurve, slot) -> MPoly:
    """The curve polynomial e_slot, obtained by substitution from e(x, y)."""
    x, y = sym.coords(slot)
    mapping = {"x": x, "y": y}
    if sym.mode == "general":
        mapping.update(c=sym.ctx.var("c"), d=sym.ctx.var("d"))
    else:
        mapping["t"] = sym.ctx.var("t")
    return base_curve_polynomial(sym.mode).substitute(mapping)


def curve_value(sym: SymbolicCurve, P: Point) -> RationalPair:
    """e evaluated at a symbolic point."""
    x, y = P
    return x * x + y * y * sym.c - 1 - x * x * y * y * sym.d


# -- symmetries ---------------------------------------------------------------

def iota(P: Point) -> Point:
    return P[0], -P[1]


def rho(P: Point) -> Point:
    return -P[1], P[0]


def rho_inverse(P: Point) -> Point:
    return P[1], -P[0]


def rho_power(P: Point, k: int) -> Point:
    for _ in range(k % 4):
        P = rho(P)
    return P


def tau(sym: SymbolicCurve, P: Point) -> Point:
    sym.require_rescaled("tau")
    t = sym.t
    return (P[0] * t).inverse(), (P[1] * t).inverse()


# -- addition laws ----------------------------------------------------------

def add0(sym: SymbolicCurve, P: Point, Q: Point) -> Point:
    (x1, y1), (x2, y2) = P, Q
    c, d = sym.c, sym.d
    m = x1 * x2 * y1 * y2 * d
    return (x1 * x2 - y1 * y2 * c) / (1 - m), (x1 * y2 + y1 * x2) / (1 + m)


def add1(sym: SymbolicCurve, P: Point, Q: Point) -> Point:
    """The extended law, generated as the tau-conjugate of add0."""
    sym.require_rescaled("the extended addition")
    return tau(sym, add0(sym, tau(sym, P), Q))


def add1_formula(sym: SymbolicCurve, P: Point, Q: Point) -> Point:
    """The extended law written out directly."""
    sym.require_rescaled("the extended addition")
    (x1, y1), (x2, y2) = P, Q
    return (x1 * y1 - x2 * y2) / (x2 * y1 - x1 * y2), (x1 * y1 + x2 * y2) / (x1 * x2 + y1 * y2)


def add(sym: SymbolicCurve, which: int, P: Point, Q: Point) -> Point:
    return add0(sym, P, Q) if which == 0 else add1(sym, P, Q)


def build_add(sym: SymbolicCurve, which="plus0", slots=(1, 2)) -> Point:
    """Symbolic sum of the points in two slots under plus0 or plus1."""
    which = {"plus0": 0, "plus1": 1, 0: 0, 1: 1}[which]
    if which == 1:
        sym.require_rescaled("plus1")
    i, j = slots
    return add(sym, which, sym.point(i), sym.point(j))


# -- denominators -----------------------------------------------------------

def delta_factors(sym: SymbolicCurve, which: int, P: Point, Q: Point) -> tuple:
    """(delta_x, delta_y) of the law ``which`` at (P, Q) as rational functions."""
    (x1, y1), (x2, y2) = P, Q
    if which == 0:
        m = x1 * x2 * y1 * y2 * sym.d
        return 1 - m, 1 + m
    sym.require_rescaled("delta_1")
    return x2 * y1 - x1 * y2, x1 * x2 + y1 * y2


def delta(sym: SymbolicCurve, which: int, P: Point, Q: Point) -> RationalPair:
    dx, dy = delta_factors(sym, which, P, Q)
    return dx * dy


def clear(r: RationalPair, factor: MPoly) -> MPoly:
    """``r * factor`` as a polynomial; fails unless the denominator cancels."""
    num = r.num * factor
    q = exact_divide(num, r.den)
    if q is None:
        raise ValueError("factor does not clear the denominator")
    return q


def numerator(r: RationalPair) -> MPoly:
    return r.cancel().num


def build_deltas(sym: SymbolicCurve) -> dict:
    """Denominator polynomials for the first two slots (and the third, if any).

    Keys: ``delta_plus``, ``delta_minus``, ``delta`` and, on the rescaled
    curve, ``delta1_x``, ``delta1_y``, ``delta1``.  With three slots the
    associativity denominators ``Delta_x`` and ``Delta_y`` are added.
    """
    if len(sym.slots) < 2:
        raise BadSlot("need at least two point slots")
    a, b = sym.slots[:2]
    P, Q = sym.point(a), sym.point(b)
    dm, dp = (numerator(v) for v in delta_factors(sym, 0, P, Q))
    out = {"delta_plus": dp, "delta_minus": dm, "delta": dp * dm}
    if sym.mode == "rescaled":
        d1x, d1y = (numerator(v) for v in delta_factors(sym, 1, P, Q))
        out.update(delta1_x=d1x, delta1_y=d1y, delta1=d1x * d1y)
    if len(sym.slots) >= 3:
        out.update(associativity_denominators(sym, *sym.slots[:3]))
    return out


def associativity_denominators(sym: SymbolicCurve, i=1, j=2, k=3) -> dict:
    """Delta_x and Delta_y for generic associativity of slots i, j, k.

    Delta_x = delta_x(P3', P3) * delta_x(P1, P1') * delta_ij * delta_jk with
    P3' = P1 + P2 and P1' = P2 + P3, denominators cleared.
    """
    P1, P2, P3 = sym.point(i), sym.point(j), sym.point(k)
    S12, S23 = add0(sym, P1, P2), add0(sym, P2, P3)
    d12 = numerator(delta(sym, 0, P1, P2))
    d23 = numerator(delta(sym, 0, P2, P3))
    out = {}
    for label, comp in (("Delta_x", 0), ("Delta_y", 1)):
        outer_left = clear(delta_factors(sym, 0, S12, P3)[comp], d12)
        outer_right = clear(delta_factors(sym, 0, P1, S23)[comp], d23)
        out[label] = outer_left * outer_right
        out[label + "_factors"] = (outer_left, outer_right)
    return out
