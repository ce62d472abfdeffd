"""Curve parameters over a prime field."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import HypothesisViolated, ModeMismatch
from ..ffield import FieldElement, PrimeField


@dataclass(frozen=True)
class CurveParams:
    """x^2 + c y^2 = 1 + d x^2 y^2 over ``field``.

    The rescaled form has c = 1 and d = t^2 and stores ``t``; the general
    form leaves ``t`` as None.
    """

    field: PrimeField
    c: FieldElement
    d: FieldElement
    t: FieldElement | None = None

    @classmethod
    def general(cls, p: int, c: int, d: int) -> CurveParams:
        F = PrimeField(p)
        return cls(F, F(c), F(d))

    @classmethod
    def rescaled(cls, p: int, t: int) -> CurveParams:
        F = PrimeField(p)
        t = F(t)
        if t in (F(0), F(1), F(-1)):
            raise HypothesisViolated(f"t must avoid 0 and +-1, got t = {t}")
        return cls(F, F(1), t * t, t)

    @property
    def form(self) -> str:
        return "general" if self.t is None else "rescaled"

    @property
    def p(self) -> int:
        return self.field.modulus

    def require_rescaled(self, what: str) -> FieldElement:
        if self.t is None:
            raise ModeMismatch(f"{what} needs rescaled parameters")
        return self.t

    def describe(self) -> dict:
        out = {"p": self.p, "c": int(self.c), "d": int(self.d)}
        if self.t is not None:
            out["t"] = int(self.t)
        return out

    def __str__(self):
        if self.t is not None:
            return f"E(F_{self.p}, t={int(self.t)})"
        return f"C(F_{self.p}, c={int(self.c)}, d={int(self.d)})"


def rescale(params: CurveParams) -> CurveParams:
    """The rescaled curve isomorphic to ``params`` under y -> sqrt(c) y.

    Needs c nonzero and both c and d/c squares; t is the smaller root.
    """
    if params.t is not None:
        return params
    c, d = params.c, params.d
    if not c:
        raise HypothesisViolated("rescaling needs c != 0")
    ratio = d / c
    if not c.is_square() or not ratio.is_square():
        raise HypothesisViolated("rescaling needs c and d to be squares")
    return CurveParams.rescaled(params.p, int(ratio.sqrt()))


def rescale_point(params: CurveParams, x, y):
    """Image of (x, y) on ``rescale(params)``."""
    return x, y * params.c.sqrt()
