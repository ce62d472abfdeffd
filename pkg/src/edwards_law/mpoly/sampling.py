"""Random F_p-points on the zero set of a polynomial system.

The system is first replaced by its lex Groebner basis, which is
triangular: every element involves only its leading variable and the
variables after it.  Variables are then solved from last to first, free
ones drawn at random, constrained ones taken from the roots of the
resulting univariate polynomials.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..ffield import PrimeField
from .context import LEX, VarContext
from .groebner import groebner
from .poly import MPoly

_BRUTE_FORCE_LIMIT = 1 << 20


def _solving_order(basis: tuple) -> VarContext:
    """Variables of degree at most one everywhere first (they are eliminated
    cheaply and solved last); the rest keep their order."""
    ctx = basis[0].ctx
    top = [max((e[i] for b in basis for e in b.terms), default=0) for i in range(len(ctx))]
    linear = [n for n, k in zip(ctx.names, top) if k <= 1]
    return VarContext(linear + [n for n in ctx.names if n not in linear])


@lru_cache(maxsize=256)
def _triangular(basis: tuple) -> tuple:
    if not basis:
        return ()
    ctx = _solving_order(basis)
    return tuple(groebner([b.to_context(ctx) for b in basis], LEX))


def _leading_index(p: MPoly) -> int:
    e = p.leading_monomial(LEX)
    for i, k in enumerate(e):
        if k:
            return i
    return len(e)


def _univariate(p: MPoly, idx: int, values: dict, modulus: int) -> list[int]:
    """Coefficients (low degree first) of p in variable idx, others fixed."""
    deg = max(e[idx] for e in p.terms)
    coeffs = [0] * (deg + 1)
    for e, c in p.terms.items():
        if isinstance(c, Fraction):
            v = c.numerator * pow(c.denominator, -1, modulus)
        else:
            v = c
        for j, k in enumerate(e):
            if k and j != idx:
                v = v * pow(values[j], k, modulus) % modulus
        coeffs[e[idx]] = (coeffs[e[idx]] + v) % modulus
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _roots(coeffs: list[int], field: PrimeField) -> list[int]:
    p = field.modulus
    deg = len(coeffs) - 1
    if deg == 1:
        return [(-coeffs[0]) * pow(coeffs[1], -1, p) % p]
    if deg == 2:
        c0, c1, c2 = coeffs
        disc = field(c1 * c1 - 4 * c0 * c2)
        if not disc.is_square():
            return []
        s = disc.sqrt().value
        inv = pow(2 * c2, -1, p)
        return sorted({(-c1 + s) * inv % p, (-c1 - s) * inv % p})
    if p > _BRUTE_FORCE_LIMIT:
        raise ValueError(f"root search of degree {deg} over F_{p} is too expensive")
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % p
    return [int(v) for v in np.nonzero(acc == 0)[0]]


def sample_zeros(
    basis: Sequence[MPoly],
    field: PrimeField,
    count: int,
    rng: random.Random,
    ctx=None,
    max_attempts: int | None = None,
) -> list[dict]:
    """Up to ``count`` assignments (name -> int) at which every basis
    polynomial vanishes.  Fewer are returned if the search budget runs out.
    """
    basis = tuple(b for b in basis if not b.is_zero())
    if basis:
        ctx = basis[0].ctx
    elif ctx is None:
        raise ValueError("an empty system needs an explicit context")
    tri = _triangular(basis)
    if tri:
        ctx = tri[0].ctx
    if any(g.is_constant() for g in tri):
        return []
    p = field.modulus
    by_var: dict[int, list] = {}
    for g in tri:
        by_var.setdefault(_leading_index(g), []).append(g)
    if max_attempts is None:
        max_attempts = 50 * count + 200
    out = []
    n = len(ctx)
    for _ in range(max_attempts):
        if len(out) >= count:
            break
        values: dict[int, int] = {}
        ok = True
        for idx in reversed(range(n)):
            polys = by_var.get(idx)
            if not polys:
                values[idx] = rng.randrange(p)
                continue
            unis = [_univariate(g, idx, values, p) for g in polys]
            live = [u for u in unis if len(u) > 1]
            if any(len(u) == 1 and u[0] != 0 for u in unis):
                ok = False
                break
            if not live:
                values[idx] = rng.randrange(p)
                continue
            live.sort(key=len)
            candidates = [
                r
                for r in _roots(live[0], field)
                if all(_horner(u, r, p) == 0 for u in live[1:])
            ]
            if not candidates:
                ok = False
                break
            values[idx] = rng.choice(candidates)
        if ok:
            out.append({ctx.names[i]: v for i, v in values.items()})
    return out


def _horner(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc
