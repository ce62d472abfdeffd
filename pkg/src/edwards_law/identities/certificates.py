"""Ideal-membership certificates: construction, replay, JSON form."""

from __future__ import annotations

import hashlib
import json
import random
from functools import lru_cache
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Sequence

from ..errors import NotInvertible, ReductionFailed
from ..ffield import PrimeField
from ..mpoly import (
    LEX,
    MPoly,
    MonomialOrder,
    RationalPair,
    VarContext,
    as_order,
    exact_divide,
    lift_groebner,
    parse_poly,
    rational_sub_simplify,
    reduce,
    replay_residual,
    to_text,
)
from ..mpoly.sampling import sample_zeros

ENGINE_VERSION = "1"
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Certificate:
    """``target == sum(cofactors[i] * basis[i])``, checkable by expansion.

    ``declared_invertibles`` lists every factor cleared from a denominator
    while forming ``target``.  ``method`` records how the cofactors were
    found: plain division by the basis, division by a lifted Groebner
    basis, or an identity with an empty basis.
    """

    name: str
    target: MPoly
    basis: tuple
    cofactors: tuple
    declared_invertibles: tuple = ()
    order: MonomialOrder = LEX
    method: str = "division"
    notes: dict = dc_field(default_factory=dict, compare=False)

    @property
    def ctx(self) -> VarContext:
        return self.target.ctx

    @property
    def variables(self) -> tuple:
        return self.ctx.names

    def residual(self) -> MPoly:
        return replay_residual(self.target, self.cofactors, self.basis)

    def term_counts(self) -> dict:
        return {
            "target": len(self.target),
            "cofactors": sum(len(q) for q in self.cofactors),
            "max_cofactor_degree": max(
                (q.total_degree() for q in self.cofactors), default=-1
            ),
        }


@dataclass
class Verification:
    ok: bool
    detail: str = ""
    samples: int = 0

    def __bool__(self):
        return self.ok


# -- construction -------------------------------------------------------------

def _covered(n: int, consts) -> bool:
    """True when every prime factor of n divides some declared constant."""
    n = abs(n)
    for c in consts:
        g = gcd(n, c)
        while g > 1:
            n //= g
            g = gcd(n, c)
    return n == 1


def strip_invertibles(den: MPoly, invertibles: Sequence[MPoly]) -> MPoly | None:
    """Divide out declared invertibles; ``None`` if something else remains.

    A leftover constant is accepted when its prime factors all divide
    declared constant invertibles (units of Z always are).
    """
    polys = [p for p in invertibles if not p.is_constant()]
    consts = []
    for p in invertibles:
        if p.is_constant():
            v = Fraction(p.constant_value())
            consts += [abs(v.numerator), v.denominator]
    changed = True
    while changed and not den.is_constant():
        changed = False
        for inv in polys:
            q = exact_divide(den, inv)
            while q is not None:
                den, changed = q, True
                q = exact_divide(den, inv)
    if not den.is_constant():
        return None
    v = Fraction(den.constant_value())
    if not (_covered(v.numerator, consts) and _covered(v.denominator, consts)):
        return None
    return den


@lru_cache(maxsize=64)
def _lifted(basis: tuple, order: MonomialOrder):
    return lift_groebner(list(basis), order)


def membership_certificate(
    name: str,
    target: MPoly,
    basis: Sequence[MPoly],
    order: MonomialOrder = LEX,
    invertibles: Sequence[MPoly] = (),
    use_groebner: bool = False,
) -> Certificate:
    """Find cofactors for ``target`` in the ideal of ``basis``.

    Plain division is tried first.  If it leaves a remainder (or
    ``use_groebner`` is set) the target is reduced by a Groebner basis that
    carries its expression in ``basis``, so the cofactors still refer to
    the original generators.
    """
    order = as_order(order)
    basis = tuple(basis)
    if not basis:
        if not target.is_zero():
            raise ReductionFailed(name, target)
        return Certificate(name, target, (), (), tuple(invertibles), order, "identity")
    if not use_groebner:
        cofactors, rem = reduce(target, basis, order)
        if rem.is_zero():
            return Certificate(
                name, target, basis, tuple(cofactors), tuple(invertibles), order, "division"
            )
    gb, matrix = _lifted(basis, order)
    quots, rem = reduce(target, gb, order)
    if not rem.is_zero():
        raise ReductionFailed(name, rem)
    zero = target.ctx.zero()
    cofactors = [zero] * len(basis)
    for q, row in zip(quots, matrix):
        if q.is_zero():
            continue
        for i, r in enumerate(row):
            if r:
                cofactors[i] = cofactors[i] + q * r
    return Certificate(
        name, target, basis, tuple(cofactors), tuple(invertibles), order, "groebner"
    )


def equivalence_certificate(
    name: str,
    lhs: RationalPair,
    rhs: RationalPair,
    basis: Sequence[MPoly],
    invertibles: Sequence[MPoly],
    order: MonomialOrder = LEX,
    use_groebner: bool = False,
) -> Certificate:
    """Certify ``lhs == rhs`` modulo ``basis`` in a localization.

    The target is the numerator of the cross-multiplied difference; its
    denominator must be a product of ``invertibles``.
    """
    diff = rational_sub_simplify(lhs, rhs)
    if strip_invertibles(diff.den, invertibles) is None:
        raise NotInvertible(f"{name}: denominator is not a product of declared invertibles")
    return membership_certificate(name, diff.num, basis, order, invertibles, use_groebner)


# -- verification -----------------------------------------------------------

def verify_certificate(
    cert: Certificate, samples: int = 20, prime: int = 10007, seed: int = 0
) -> Verification:
    """Exact replay plus a randomized kernel-property check over F_prime."""
    if len(cert.cofactors) != len(cert.basis):
        return Verification(False, "cofactor count does not match basis size")
    residual = cert.residual()
    if not residual.is_zero():
        e, c = residual.leading_term(cert.order)
        term = to_text(MPoly(cert.ctx, {e: c}))
        return Verification(False, f"replay fails; leading residual term {term}")
    field = PrimeField(prime)
    rng = random.Random(f"{cert.name}:{seed}")
    points = sample_zeros(cert.basis, field, samples, rng, ctx=cert.ctx)
    for pt in points:
        if cert.target.evaluate(pt, field) != 0:
            return Verification(False, f"target does not vanish at {pt}", len(points))
    detail = "" if len(points) == samples else f"only {len(points)} sample points found"
    return Verification(True, detail, len(points))


# -- serialization -----------------------------------------------------------

def _integral(cert: Certificate) -> tuple:
    """(target, basis, cofactors, invertibles) scaled to integer coefficients."""
    basis, cofactors = [], []
    for b, q in zip(cert.basis, cert.cofactors):
        s = b.coefficient_lcm()
        basis.append(b.scale(s))
        cofactors.append(q.scale(Fraction(1, s)))
    scale = lcm(cert.target.coefficient_lcm(), *(q.coefficient_lcm() for q in cofactors))
    target = cert.target.scale(scale)
    cofactors = [q.scale(scale) for q in cofactors]
    invertibles = list(cert.declared_invertibles)
    if scale != 1:
        invertibles.append(cert.ctx.const(scale))
    return target, basis, cofactors, invertibles


def certificate_to_dict(cert: Certificate) -> dict:
    target, basis, cofactors, invertibles = _integral(cert)
    o = cert.order
    return {
        "schema": SCHEMA_VERSION,
        "name": cert.name,
        "variables": list(cert.variables),
        "order": str(o),
        "method": cert.method,
        "target": to_text(target, o),
        "basis": [to_text(b, o) for b in basis],
        "cofactors": [to_text(q, o) for q in cofactors],
        "invertibles": [to_text(v, o) for v in invertibles],
    }


def certificate_from_dict(data: dict) -> Certificate:
    ctx = VarContext(data["variables"])
    order = as_order(data.get("order", "lex"))

    def parse(s):
        return parse_poly(s, ctx)

    return Certificate(
        name=data["name"],
        target=parse(data["target"]),
        basis=tuple(parse(s) for s in data["basis"]),
        cofactors=tuple(parse(s) for s in data["cofactors"]),
        declared_invertibles=tuple(parse(s) for s in data.get("invertibles", [])),
        order=order,
        method=data.get("method", "division"),
    )


def dump_certificate(cert: Certificate, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(certificate_to_dict(cert), indent=2) + "\n")
    return path


def load_certificate(path) -> Certificate:
    return certificate_from_dict(json.loads(Path(path).read_text()))


def cache_key(name: str) -> str:
    return hashlib.sha256(f"{name}\0{ENGINE_VERSION}".encode()).hexdigest()[:24]


def cache_path(cache_dir, name: str) -> Path:
    return Path(cache_dir) / f"{cache_key(name)}.json"
