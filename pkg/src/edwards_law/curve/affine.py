"""Affine points, the two addition laws and the symmetries iota, rho, tau."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotOnCurve, NotSummable, TauOffDomain
from ..ffield import FieldElement
from .params import CurveParams


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    @classmethod
    def of(cls, params: CurveParams, x, y) -> AffinePoint:
        F = params.field
        return cls(F(x), F(y))

    def key(self) -> tuple:
        return int(self.x), int(self.y)

    def in_oo(self) -> bool:
        """Both coordinates nonzero."""
        return bool(self.x) and bool(self.y)

    def __lt__(self, other):
        return self.key() < other.key()

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self):
        return f"({int(self.x)}, {int(self.y)})"


def identity(params: CurveParams) -> AffinePoint:
    return AffinePoint.of(params, 1, 0)


def curve_value(P: AffinePoint, params: CurveParams) -> FieldElement:
    x2, y2 = P.x * P.x, P.y * P.y
    return x2 + params.c * y2 - 1 - params.d * x2 * y2


def on_curve(P: AffinePoint, params: CurveParams) -> bool:
    return not curve_value(P, params)


def require_on_curve(params: CurveParams, *points):
    for P in points:
        if not on_curve(P, params):
            raise NotOnCurve(f"{P} is not on {params}")


# -- denominators --------------------------------------------------------------

def delta0_factors(P: AffinePoint, Q: AffinePoint, params: CurveParams) -> tuple:
    """(delta_minus, delta_plus) = (1 - d x1 y1 x2 y2, 1 + d x1 y1 x2 y2)."""
    m = params.d * P.x * P.y * Q.x * Q.y
    return 1 - m, 1 + m


def delta1_factors(P: AffinePoint, Q: AffinePoint, params: CurveParams) -> tuple:
    """(x2 y1 - x1 y2, x1 x2 + y1 y2)."""
    return Q.x * P.y - P.x * Q.y, P.x * Q.x + P.y * Q.y


def delta(which: int, P: AffinePoint, Q: AffinePoint, params: CurveParams) -> FieldElement:
    a, b = (delta0_factors if which == 0 else delta1_factors)(P, Q, params)
    return a * b


def summable(which: int, P, Q, params) -> bool:
    return bool(delta(which, P, Q, params))


# -- addition -------------------------------------------------------------------

def add0(P: AffinePoint, Q: AffinePoint, params: CurveParams, check: bool = True) -> AffinePoint:
    if check:
        require_on_curve(params, P, Q)
    dm, dp = delta0_factors(P, Q, params)
    if not dm or not dp:
        raise NotSummable(f"{P} and {Q} are not summable by the basic law")
    x = (P.x * Q.x - params.c * P.y * Q.y) / dm
    y = (P.x * Q.y + P.y * Q.x) / dp
    return AffinePoint(x, y)


def add1(P: AffinePoint, Q: AffinePoint, params: CurveParams, check: bool = True) -> AffinePoint:
    params.require_rescaled("the extended addition")
    if check:
        require_on_curve(params, P, Q)
    dx, dy = delta1_factors(P, Q, params)
    if not dx or not dy:
        raise NotSummable(f"{P} and {Q} are not summable by the extended law")
    x = (P.x * P.y - Q.x * Q.y) / dx
    y = (P.x * P.y + Q.x * Q.y) / dy
    return AffinePoint(x, y)


def add(which: int, P, Q, params, check: bool = True) -> AffinePoint:
    return (add0 if which == 0 else add1)(P, Q, params, check)


# -- symmetries ---------------------------------------------------------------

def iota(P: AffinePoint, params: CurveParams | None = None) -> AffinePoint:
    return AffinePoint(P.x, -P.y)


def rho(P: AffinePoint, params: CurveParams | None = None) -> AffinePoint:
    return AffinePoint(-P.y, P.x)


def rho_power(P: AffinePoint, k: int) -> AffinePoint:
    for _ in range(k % 4):
        P = rho(P)
    return P


def tau(P: AffinePoint, params: CurveParams) -> AffinePoint:
    t = params.require_rescaled("tau")
    if not P.in_oo():
        raise TauOffDomain(f"tau is undefined at {P}")
    return AffinePoint((t * P.x).inverse(), (t * P.y).inverse())


def symmetry(P: AffinePoint, which: str, params: CurveParams) -> AffinePoint:
    """Apply ``iota``, ``rho`` or ``tau``."""
    if which == "iota":
        return iota(P)
    if which == "rho":
        return rho(P)
    if which == "tau":
        return tau(P, params)
    raise ValueError(f"unknown symmetry {which!r}")


@dataclass(frozen=True, order=True)
class GroupElement:
    """tau^tau_bit rho^k, an element of the order-eight group G."""

    tau_bit: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "tau_bit", self.tau_bit % 2)
        object.__setattr__(self, "k", self.k % 4)

    def apply(self, P: AffinePoint, params: CurveParams) -> AffinePoint:
        P = rho_power(P, self.k)
        return tau(P, params) if self.tau_bit else P

    def is_identity(self) -> bool:
        return self.tau_bit == 0 and self.k == 0

    def __str__(self):
        rot = f"rho^{self.k}" if self.k else ""
        if self.tau_bit:
            return "tau" + (" " + rot if rot else "")
        return rot or "1"


GROUP_G = tuple(GroupElement(a, k) for a in (0, 1) for k in range(4))


# -- enumeration --------------------------------------------------------------

def enumerate_points(params: CurveParams) -> list[AffinePoint]:
    """All affine points, sorted by (x, y) representatives."""
    F = params.field
    p = F.modulus
    c, d = int(params.c), int(params.d)
    squares = {}
    for v in range(p):
        squares.setdefault(v * v % p, []).append(v)
    out = []
    for x in range(p):
        x2 = x * x % p
        # (c - d x^2) y^2 = 1 - x^2
        a, b = (c - d * x2) % p, (1 - x2) % p
        if a == 0:
            ys = range(p) if b == 0 else []
        else:
            ys = squares.get(b * pow(a, -1, p) % p, [])
        out += [AffinePoint(F(x), F(y)) for y in sorted(ys)]
    return out


def enumerate_oo(params: CurveParams) -> list[AffinePoint]:
    return [P for P in enumerate_points(params) if P.in_oo()]


def random_point(params: CurveParams, rng) -> AffinePoint:
    """A uniformly chosen x with a random square root for y, retried until
    the curve has a point above x."""
    F = params.field
    while True:
        x = F(rng.randrange(F.modulus))
        x2 = x * x
        a, b = params.c - params.d * x2, 1 - x2
        if not a:
            if not b:
                return AffinePoint(x, F(rng.randrange(F.modulus)))
            continue
        r = b / a
        if r.is_square():
            y = r.sqrt()
            return AffinePoint(x, y if rng.random() < 0.5 else -y)
