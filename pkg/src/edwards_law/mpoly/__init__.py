"""Exact sparse polynomial arithmetic over Q: division, Groebner bases,
evaluation into prime fields and rational pairs."""

from .context import GREVLEX, LEX, MonomialOrder, VarContext, as_order
from .division import exact_divide, reduce, replay_residual
from .groebner import groebner, is_groebner, lift_groebner, s_polynomial
from .poly import MPoly, monomial_divides, monomial_lcm
from .rational import RationalPair, as_rational, rational_sub_simplify
from .text import parse_poly, to_text


def poly_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    """Functional form of ``+``, ``-`` and ``*``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: MPoly, mapping) -> MPoly:
    return p.substitute(mapping)


def evaluate(p: MPoly, assignment, field=None):
    return p.evaluate(assignment, field)


__all__ = [
    "GREVLEX",
    "LEX",
    "MPoly",
    "MonomialOrder",
    "RationalPair",
    "VarContext",
    "as_order",
    "as_rational",
    "evaluate",
    "exact_divide",
    "groebner",
    "is_groebner",
    "lift_groebner",
    "monomial_divides",
    "monomial_lcm",
    "parse_poly",
    "poly_arith",
    "rational_sub_simplify",
    "reduce",
    "replay_residual",
    "s_polynomial",
    "substitute",
    "to_text",
]
