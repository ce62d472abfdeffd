"""Agreement between the numeric addition laws and the symbolic ones
evaluated at the same points."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..identities import symbolic as S
from . import affine as A
from .params import CurveParams


@dataclass
class BridgeResult:
    layer: str
    pairs: int = 0
    mismatches: int = 0
    witness: list | None = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0 and self.pairs > 0


def _symbolic(params: CurveParams, which: int):
    if params.t is None:
        sym = S.SymbolicCurve.general(slots=(1, 2))
        env = {"c": params.c, "d": params.d}
    else:
        sym = S.SymbolicCurve.rescaled(slots=(1, 2))
        env = {"t": params.t}
    return S.build_add(sym, which, (1, 2)), env


def _assignment(env, P, Q):
    return {**env, "x1": P.x, "y1": P.y, "x2": Q.x, "y2": Q.y}


def bridge_check(params: CurveParams, layer: str, count: int = 1000, seed: int = 0) -> BridgeResult:
    """``layer`` is ``affine0``, ``affine1`` or ``coherence``.

    Draws random on-curve pairs until ``count`` of them are summable for the
    layer (for coherence: under both laws), then compares.
    """
    rng = random.Random(f"{layer}:{seed}")
    res = BridgeResult(layer)
    if layer in ("affine0", "affine1"):
        which = int(layer[-1])
        (sx, sy), env = _symbolic(params, which)
    elif layer != "coherence":
        raise ValueError(f"unknown layer {layer!r}")
    attempts = 0
    while res.pairs < count:
        attempts += 1
        if attempts > 100 * count:
            break
        P, Q = A.random_point(params, rng), A.random_point(params, rng)
        if layer == "coherence":
            if not (A.summable(0, P, Q, params) and A.summable(1, P, Q, params)):
                continue
            lhs, rhs = A.add0(P, Q, params), A.add1(P, Q, params)
        else:
            if not A.summable(which, P, Q, params):
                continue
            lhs = A.add(which, P, Q, params)
            a = _assignment(env, P, Q)
            rhs = A.AffinePoint(sx.evaluate(a, params.field), sy.evaluate(a, params.field))
        res.pairs += 1
        if lhs != rhs:
            res.mismatches += 1
            if res.witness is None:
                res.witness = [[int(P.x), int(P.y)], [int(Q.x), int(Q.y)]]
    return res
