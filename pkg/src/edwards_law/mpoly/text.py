"""Canonical text form of polynomials.

A polynomial is written as a signed sum of terms ``coeff*var^e*...``,
largest monomial first under the chosen order.  A coefficient of 1 is
omitted in front of a non-constant monomial; rationals are written ``p/q``.
Examples: ``-x1^2*y1^2*d + x1^2 + c*y1^2 - 1`` and ``3/2*x*y - 7``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .context import LEX, MonomialOrder, VarContext
from .poly import MPoly

_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def _monomial_text(ctx: VarContext, exp: tuple) -> str:
    parts = []
    for name, k in zip(ctx.names, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def to_text(p: MPoly, order: MonomialOrder = LEX) -> str:
    if p.is_zero():
        return "0"
    out = []
    for exp, c in p.sorted_terms(order):
        neg = c < 0
        mag = -c if neg else c
        mono = _monomial_text(p.ctx, exp)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def parse_poly(text: str, ctx: VarContext) -> MPoly:
    """Inverse of :func:`to_text` (also accepts ``**`` for powers)."""
    text = text.strip().replace("**", "^")
    if not text:
        raise ValueError("empty polynomial text")
    terms: dict = {}
    pos = 0
    n = len(ctx)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        pos = m.end()
        coeff = Fraction(-1 if sign == "-" else 1)
        exp = [0] * n
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            exp[ctx.index(name.strip())] += int(power) if power else 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + coeff
    return MPoly(ctx, terms)
