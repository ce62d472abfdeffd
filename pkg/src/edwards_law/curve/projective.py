"""The projective curve: two affine copies glued along E_oo by tau."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Ambiguous, NoRuleApplies
from . import affine as A
from .affine import AffinePoint, GroupElement
from .params import CurveParams


@dataclass(frozen=True)
class ProjPoint:
    """[point, i] with i in F_2."""

    point: AffinePoint
    i: int

    def key(self) -> tuple:
        return (self.i % 2, *self.point.key())

    def __str__(self):
        return f"[{self.point}, {self.i}]"


@dataclass(frozen=True)
class PointClass:
    """A gluing class: one member off E_oo, two members on it."""

    members: frozenset

    @property
    def rep(self) -> ProjPoint:
        return min(self.members, key=ProjPoint.key)

    def key(self) -> tuple:
        return self.rep.key()

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        return str(self.rep)

    def to_list(self) -> list:
        return [list(m.key()) for m in sorted(self.members, key=ProjPoint.key)]


def glue(P: AffinePoint, i: int, params: CurveParams) -> PointClass:
    A.require_on_curve(params, P)
    params.require_rescaled("the projective curve")
    i %= 2
    members = {ProjPoint(P, i)}
    if P.in_oo():
        members.add(ProjPoint(A.tau(P, params), 1 - i))
    return PointClass(frozenset(members))


def identity_class(params: CurveParams) -> PointClass:
    return glue(A.identity(params), 0, params)


def proj_neg(X: PointClass, params: CurveParams) -> PointClass:
    m = X.rep
    return glue(A.iota(m.point), m.i, params)


def act(g: GroupElement, X: PointClass, params: CurveParams) -> PointClass:
    """rho[P, i] = [rho P, i] and tau[P, i] = [P, i + 1]."""
    m = X.rep
    P = A.rho_power(m.point, g.k)
    return glue(P, m.i + g.tau_bit, params)


# -- dichotomy ------------------------------------------------------------------

@dataclass(frozen=True)
class Summable:
    rule: int


@dataclass(frozen=True)
class Unsummable:
    """Q = tau rho^k iota P."""

    k: int

    @property
    def g(self) -> GroupElement:
        return GroupElement(1, self.k)


def dichotomy(P: AffinePoint, Q: AffinePoint, params: CurveParams):
    """Summable(rule) for the first rule with nonzero delta, otherwise
    Unsummable(k) with Q = tau rho^k iota P.

    Raises NoRuleApplies if neither case holds, which cannot happen for
    points of the curve when t^2 != 1.
    """
    for rule in (0, 1):
        if A.summable(rule, P, Q, params):
            return Summable(rule)
    if P.in_oo():
        iP = A.iota(P)
        for k in range(4):
            if A.tau(A.rho_power(iP, k), params) == Q:
                return Unsummable(k)
    raise NoRuleApplies(f"dichotomy fails for {P}, {Q}")


# -- addition -----------------------------------------------------------------

def candidates(X: PointClass, Y: PointClass, params: CurveParams) -> list:
    """Every (class, member pair, rule) that the addition rule produces."""
    out = []
    for m in X.members:
        for n in Y.members:
            for rule in (0, 1):
                if A.summable(rule, m.point, n.point, params):
                    S = A.add(rule, m.point, n.point, params, check=False)
                    out.append((glue(S, m.i + n.i, params), m, n, rule))
    return out


def proj_add(X: PointClass, Y: PointClass, params: CurveParams) -> PointClass:
    """Sum of two classes; every applicable rule is evaluated and must agree."""
    found = candidates(X, Y, params)
    if not found:
        raise NoRuleApplies(f"no rule adds {X} and {Y}")
    results = {c for c, *_ in found}
    if len(results) > 1:
        raise Ambiguous(f"{X} + {Y} has {len(results)} distinct values")
    return found[0][0]


def enumerate_classes(params: CurveParams) -> list[PointClass]:
    """All classes of E, sorted by canonical representative."""
    seen = set()
    for P in A.enumerate_points(params):
        for i in (0, 1):
            seen.add(glue(P, i, params))
    return sorted(seen)
