"""Multivariate division with remainder (the naive algorithm)."""

from __future__ import annotations

import heapq
from operator import add, sub
from typing import Sequence

from ..errors import ContextMismatch
from .context import LEX, MonomialOrder, as_order
from .poly import MPoly, divide_coeff, monomial_divides, normalize_coeff


def reduce(
    target: MPoly, divisors: Sequence[MPoly], order: MonomialOrder = LEX
) -> tuple[list[MPoly], MPoly]:
    """Divide ``target`` by ``divisors``.

    Returns ``(cofactors, remainder)`` with
    ``target == sum(q * g for q, g in zip(cofactors, divisors)) + remainder``
    and no remainder term divisible by a divisor's leading monomial.  At each
    step the current leading term is divided by the first divisor, in
    sequence order, whose leading monomial divides it.
    """
    order = as_order(order)
    ctx = target.ctx
    for g in divisors:
        if g.ctx != ctx:
            raise ContextMismatch(f"divisor context {g.ctx} != {ctx}")
        if g.is_zero():
            raise ValueError("cannot divide by the zero polynomial")

    leads = []
    for g in divisors:
        lm, lc = g.leading_term(order)
        tail = [(e, c) for e, c in g.terms.items() if e != lm]
        leads.append((lm, lc, tail))

    hk = order.heap_key
    work = dict(target.terms)
    heap = [(hk(e), e) for e in work]
    heapq.heapify(heap)
    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict = {}

    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for i, (lm, lc, tail) in enumerate(leads):
            if monomial_divides(lm, m):
                qe = tuple(map(sub, m, lm))
                qc = divide_coeff(c, lc)
                qi = quotients[i]
                v = qi.get(qe, 0) + qc
                if v:
                    qi[qe] = v
                else:
                    del qi[qe]
                for e, gc in tail:
                    ne = tuple(map(add, e, qe))
                    old = work.get(ne)
                    nv = (0 if old is None else old) - qc * gc
                    if nv:
                        if old is None:
                            heapq.heappush(heap, (hk(ne), ne))
                        work[ne] = nv
                    elif old is not None:
                        del work[ne]
                break
        else:
            remainder[m] = c

    cofactors = [
        MPoly._raw(ctx, {e: normalize_coeff(c) for e, c in q.items()}) for q in quotients
    ]
    rem = MPoly._raw(ctx, {e: normalize_coeff(c) for e, c in remainder.items()})
    return cofactors, rem


def exact_divide(p: MPoly, q: MPoly) -> MPoly | None:
    """``p / q`` when ``q`` divides ``p`` exactly, else ``None``.

    A single polynomial is a Groebner basis of its ideal, so a zero
    remainder is equivalent to divisibility.
    """
    (quot,), rem = reduce(p, [q])
    return quot if rem.is_zero() else None


def replay_residual(target: MPoly, cofactors: Sequence[MPoly], divisors: Sequence[MPoly]) -> MPoly:
    """``target - sum(cofactor * divisor)``; zero for a valid certificate."""
    acc = target
    for q, g in zip(cofactors, divisors):
        if q:
            acc = acc - q * g
    return acc
