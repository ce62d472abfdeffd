"""Buchberger's algorithm, optionally tracking each basis element as a
combination of the input generators."""

from __future__ import annotations

from operator import sub
from typing import Sequence

from ..errors import ContextMismatch
from .context import LEX, MonomialOrder, as_order
from .division import reduce
from .poly import MPoly, divide_coeff, monomial_divides, monomial_lcm


def s_polynomial(f: MPoly, g: MPoly, order: MonomialOrder = LEX) -> MPoly:
    (fm, fc), (gm, gc) = f.leading_term(order), g.leading_term(order)
    lcm = monomial_lcm(fm, gm)
    return f.mul_term(tuple(map(sub, lcm, fm)), divide_coeff(1, fc)) - g.mul_term(
        tuple(map(sub, lcm, gm)), divide_coeff(1, gc)
    )


class _Element:
    __slots__ = ("poly", "lm", "rep")

    def __init__(self, poly, lm, rep):
        self.poly, self.lm, self.rep = poly, lm, rep


def _combine(rep, pairs):
    """rep - sum(q * other_rep) over ``pairs`` of (q, other_rep)."""
    out = list(rep)
    for q, other in pairs:
        if q.is_zero():
            continue
        for k, r in enumerate(other):
            if r:
                out[k] = out[k] - q * r
    return out


def _scale_rep(rep, c):
    return [r.scale(c) for r in rep]


def _reduce_tracked(poly, rep, basis, order, track):
    quots, rem = reduce(poly, [b.poly for b in basis], order)
    if track:
        rep = _combine(rep, [(q, b.rep) for q, b in zip(quots, basis)])
    return rem, rep


def _buchberger(gens: Sequence[MPoly], order: MonomialOrder, track: bool):
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ctx = gens[0].ctx
    for g in gens:
        if g.ctx != ctx:
            raise ContextMismatch("generators must share one context")
    m = len(gens)
    zero = ctx.zero()
    key = order.key

    basis: list[_Element] = []
    for k, g in enumerate(gens):
        if g.is_zero():
            continue
        rep = [zero] * m
        rep[k] = ctx.one()
        lc = g.leading_coeff(order)
        poly = g.monic(order)
        rep = _scale_rep(rep, divide_coeff(1, lc)) if track else rep
        basis.append(_Element(poly, poly.leading_monomial(order), rep))
    if not basis:
        return [], []

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_key(p):
        i, j = p
        return (key(monomial_lcm(basis[i].lm, basis[j].lm)), j, i)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        a, b = basis[i], basis[j]
        lcm = monomial_lcm(a.lm, b.lm)
        # first criterion: coprime leading monomials
        if all(x == 0 or y == 0 for x, y in zip(a.lm, b.lm)):
            continue
        # chain criterion
        skip = False
        for k, c in enumerate(basis):
            if k in (i, j):
                continue
            if (
                monomial_divides(c.lm, lcm)
                and (min(i, k), max(i, k)) not in pairs
                and (min(j, k), max(j, k)) not in pairs
            ):
                skip = True
                break
        if skip:
            continue
        s = s_polynomial(a.poly, b.poly, order)
        if track:
            ua = tuple(map(sub, lcm, a.lm))
            ub = tuple(map(sub, lcm, b.lm))
            rep = [
                ra.mul_term(ua, 1) - rb.mul_term(ub, 1) for ra, rb in zip(a.rep, b.rep)
            ]
        else:
            rep = None
        rem, rep = _reduce_tracked(s, rep, basis, order, track)
        if rem.is_zero():
            continue
        lc = rem.leading_coeff(order)
        rem = rem.monic(order)
        if track:
            rep = _scale_rep(rep, divide_coeff(1, lc))
        n = len(basis)
        basis.append(_Element(rem, rem.leading_monomial(order), rep))
        pairs |= {(k, n) for k in range(n)}

    # minimal basis: drop elements whose leading monomial is a multiple of another's
    minimal = []
    for k, el in enumerate(basis):
        redundant = False
        for k2, other in enumerate(basis):
            if k2 == k or not monomial_divides(other.lm, el.lm):
                continue
            if other.lm != el.lm or k2 < k:
                redundant = True
                break
        if not redundant:
            minimal.append(el)

    # inter-reduction
    reduced = []
    for k, el in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        rem, rep = _reduce_tracked(el.poly, el.rep, others, order, track)
        lc = rem.leading_coeff(order)
        if lc != 1:
            rem = rem.monic(order)
            if track:
                rep = _scale_rep(rep, divide_coeff(1, lc))
        reduced.append(_Element(rem, rem.leading_monomial(order), rep))
    reduced.sort(key=lambda el: key(el.lm), reverse=True)
    return [el.poly for el in reduced], [el.rep for el in reduced]


def groebner(generators: Sequence[MPoly], order: MonomialOrder = LEX) -> list[MPoly]:
    """Reduced, monic Groebner basis of the ideal generated by ``generators``.

    Elements are sorted by leading monomial, largest first.
    """
    basis, _ = _buchberger(generators, as_order(order), track=False)
    return basis


def lift_groebner(
    generators: Sequence[MPoly], order: MonomialOrder = LEX
) -> tuple[list[MPoly], list[list[MPoly]]]:
    """Reduced Groebner basis together with its expression in the generators.

    ``matrix[k][i]`` is the coefficient of ``generators[i]`` in ``basis[k]``.
    """
    return _buchberger(generators, as_order(order), track=True)


def is_groebner(basis: Sequence[MPoly], order: MonomialOrder = LEX) -> bool:
    order = as_order(order)
    for j in range(len(basis)):
        for i in range(j):
            _, rem = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
            if not rem.is_zero():
                return False
    return True
