"""The named polynomial identities behind the Edwards group law.

Each entry builds one :class:`Certificate`.  Identities between pairs of
rational functions are split into components (``name.x``, ``name.y``);
tuple-valued memberships into numbered components (``name.0``, ...).
"""

from __future__ import annotations

import fnmatch
from functools import lru_cache
from itertools import product
from typing import Callable

from ..errors import EdwardsLawError
from ..mpoly import GREVLEX, LEX, MPoly, RationalPair
from . import symbolic as S
from .certificates import (
    Certificate,
    cache_path,
    dump_certificate,
    equivalence_certificate,
    load_certificate,
    membership_certificate,
)
from .symbolic import SymbolicCurve

_REGISTRY: dict[str, Callable[[], Certificate]] = {}


def _register(name):
    def deco(fn):
        _REGISTRY[name] = fn
        return fn

    return deco


def _components(lhs, rhs):
    return {"x": (lhs[0], rhs[0]), "y": (lhs[1], rhs[1])}


def _nums(*rationals) -> list[MPoly]:
    """Numerators of rational functions, as polynomials to be inverted."""
    out = []
    for r in rationals:
        r = r if isinstance(r, RationalPair) else RationalPair(r)
        num = r.cancel().num
        if not num.is_constant() and num not in out:
            out.append(num)
    return out


def _delta_nums(sym, which, P, Q) -> list[MPoly]:
    return _nums(*S.delta_factors(sym, which, P, Q))


def _coords(sym) -> list[MPoly]:
    out = []
    for s in sym.slots:
        out += list(sym.coords(s))
    return out


# -- contexts -------------------------------------------------------------------

GENERAL_1 = SymbolicCurve.general(slots=(1,))
GENERAL_2 = SymbolicCurve.general(slots=(1, 2))
GENERAL_3 = SymbolicCurve.general(slots=(1, 2, 3))
RESCALED_1 = SymbolicCurve.rescaled(slots=(1,))
RESCALED_2 = SymbolicCurve.rescaled(slots=(1, 2))
RESCALED_3 = SymbolicCurve.rescaled(slots=(1, 2, 3))
# lex priority under which division reproduces the published cofactors
AFFINE_CLOSURE_CURVE = SymbolicCurve.general(
    slots=(1, 2), names=["x2", "y1", "y2", "c", "x1", "d"]
)
DICHOTOMY_CURVE = SymbolicCurve.rescaled(slots=(0, 1))
INVERSE_UNIQUE_CURVE = SymbolicCurve.rescaled(slots=(1, 2), extra=("qx", "qy"))


def _e(sym):
    return [S.build_curve(sym, s) for s in sym.slots]


# -- affine group law ---------------------------------------------------------

@_register("closure")
def _closure():
    sym = GENERAL_2
    P, Q = sym.point(1), sym.point(2)
    value = S.curve_value(sym, S.add0(sym, P, Q))
    return equivalence_certificate(
        "closure", value, RationalPair(sym.ctx.zero()), _e(sym),
        _delta_nums(sym, 0, P, Q),
    )


def _inverse(comp):
    sym = GENERAL_1
    P = sym.point(1)
    lhs = S.add0(sym, P, S.iota(P))
    one = sym.ctx.one()
    rhs = (RationalPair(one), RationalPair(sym.ctx.zero()))
    a, b = _components(lhs, rhs)[comp]
    return equivalence_certificate(
        f"inverse.{comp}", a, b, _e(sym), _delta_nums(sym, 0, P, S.iota(P))
    )


for _c in "xy":
    _register(f"inverse.{_c}")(lambda _c=_c: _inverse(_c))


def _assoc_generic(comp):
    sym = GENERAL_3
    P1, P2, P3 = (sym.point(s) for s in (1, 2, 3))
    lhs = S.add0(sym, S.add0(sym, P1, P2), P3)
    rhs = S.add0(sym, P1, S.add0(sym, P2, P3))
    a, b = _components(lhs, rhs)[comp]
    dens = S.associativity_denominators(sym)
    invertibles = list(dens["Delta_x_factors" if comp == "x" else "Delta_y_factors"])
    invertibles += _delta_nums(sym, 0, P1, P2) + _delta_nums(sym, 0, P2, P3)
    cert = equivalence_certificate(f"assoc_generic.{comp}", a, b, _e(sym), invertibles)
    cert.notes["Delta"] = dens["Delta_x" if comp == "x" else "Delta_y"]
    return cert


for _c in "xy":
    _register(f"assoc_generic.{_c}")(lambda _c=_c: _assoc_generic(_c))


def affine_closure_parts(sym: SymbolicCurve = AFFINE_CLOSURE_CURVE):
    """(target, basis) with target (1 - c d y1^2 y2^2)(1 - d y1^2 x2^2) and
    basis (e1, delta, e2)."""
    x1, y1 = sym.coords(1)
    x2, y2 = sym.coords(2)
    c, d = sym.c, sym.d
    target = (1 - c * d * y1**2 * y2**2) * (1 - d * y1**2 * x2**2)
    e1, e2 = _e(sym)
    delta = S.build_deltas(sym)["delta"]
    return target, (e1, delta, e2)


@_register("affine_closure")
def _affine_closure():
    target, basis = affine_closure_parts()
    return membership_certificate("affine_closure", target, basis, LEX)


# -- extended addition -----------------------------------------------------------

def _coherence_add(comp):
    sym = RESCALED_2
    P, Q = sym.point(1), sym.point(2)
    a, b = _components(S.add0(sym, P, Q), S.add1(sym, P, Q))[comp]
    inv = _delta_nums(sym, 0, P, Q) + _delta_nums(sym, 1, P, Q)
    return equivalence_certificate(f"coherence_add.{comp}", a, b, _e(sym), inv)


for _c in "xy":
    _register(f"coherence_add.{_c}")(lambda _c=_c: _coherence_add(_c))


def _add1_formula(comp):
    sym = RESCALED_2
    P, Q = sym.point(1), sym.point(2)
    a, b = _components(S.add1(sym, P, Q), S.add1_formula(sym, P, Q))[comp]
    inv = [sym.t] + _coords(sym) + _delta_nums(sym, 1, P, Q)
    return equivalence_certificate(f"add1_formula.{comp}", a, b, (), inv)


for _c in "xy":
    _register(f"add1_formula.{_c}")(lambda _c=_c: _add1_formula(_c))


@_register("coherence_closure")
def _coherence_closure():
    sym = RESCALED_2
    P, Q = sym.point(1), sym.point(2)
    value = S.curve_value(sym, S.add1(sym, P, Q))
    return equivalence_certificate(
        "coherence_closure", value, RationalPair(sym.ctx.zero()), _e(sym),
        _delta_nums(sym, 1, P, Q),
    )


def _tau_invariance(i, comp):
    sym = RESCALED_2
    P, Q = sym.point(1), sym.point(2)
    tP, tQ = S.tau(sym, P), S.tau(sym, Q)
    lhs, rhs = S.add(sym, i, tP, Q), S.add(sym, i, P, tQ)
    inv = [sym.t] + _coords(sym) + _delta_nums(sym, i, tP, Q) + _delta_nums(sym, i, P, tQ)
    a, b = _components(lhs, rhs)[comp]
    return equivalence_certificate(f"tau_invariance_{i}.{comp}", a, b, (), inv)


def _rho_invariance(i, comp):
    sym = RESCALED_2
    P, Q = sym.point(1), sym.point(2)
    lhs = S.add(sym, i, S.rho(P), Q)
    rhs = S.rho(S.add(sym, i, P, Q))
    inv = _delta_nums(sym, i, S.rho(P), Q) + _delta_nums(sym, i, P, Q)
    a, b = _components(lhs, rhs)[comp]
    return equivalence_certificate(f"rho_invariance_{i}.{comp}", a, b, (), inv)


def _rho_delta(i):
    sym = RESCALED_2
    P, Q = sym.point(1), sym.point(2)
    sign = 1 if i == 0 else -1
    lhs = S.delta(sym, i, P, S.rho(Q))
    rhs = S.delta(sym, i, P, Q) * sign
    return equivalence_certificate(f"rho_delta_{i}", lhs, rhs, (), [])


def _iota_sigma(which, comp):
    sym = RESCALED_1
    P = sym.point(1)
    if which == "tau":
        lhs, rhs = S.iota(S.tau(sym, P)), S.tau(sym, S.iota(P))
        inv = [sym.t] + _coords(sym)
    else:
        lhs, rhs = S.iota(S.rho(P)), S.rho_inverse(S.iota(P))
        inv = []
    a, b = _components(lhs, rhs)[comp]
    return equivalence_certificate(f"iota_{which}.{comp}", a, b, (), inv)


def _iota_add(i, comp):
    sym = RESCALED_2
    P, Q = sym.point(1), sym.point(2)
    lhs = S.iota(S.add(sym, i, P, Q))
    rhs = S.add(sym, i, S.iota(P), S.iota(Q))
    inv = _delta_nums(sym, i, P, Q) + _delta_nums(sym, i, S.iota(P), S.iota(Q))
    a, b = _components(lhs, rhs)[comp]
    return equivalence_certificate(f"iota_add_{i}.{comp}", a, b, (), inv)


for _i in (0, 1):
    for _c in "xy":
        _register(f"tau_invariance_{_i}.{_c}")(lambda _i=_i, _c=_c: _tau_invariance(_i, _c))
        _register(f"rho_invariance_{_i}.{_c}")(lambda _i=_i, _c=_c: _rho_invariance(_i, _c))
        _register(f"iota_add_{_i}.{_c}")(lambda _i=_i, _c=_c: _iota_add(_i, _c))
    _register(f"rho_delta_{_i}")(lambda _i=_i: _rho_delta(_i))
for _w in ("tau", "rho"):
    for _c in "xy":
        _register(f"iota_{_w}.{_c}")(lambda _w=_w, _c=_c: _iota_sigma(_w, _c))


# -- dichotomy ------------------------------------------------------------------

def dichotomy_system(sign: str):
    """Generators (e(x0,y0), e(x1,y1), delta', delta_sign) for P = (x1, y1)
    against tau(Q0), Q0 = (x0, y0), with denominators cleared."""
    sym = DICHOTOMY_CURVE
    x0, y0 = sym.coords(0)
    t = sym.t
    P = sym.point(1)
    Q = S.tau(sym, sym.point(0))
    d0x, _ = S.delta_factors(sym, 0, P, Q)
    d1x, d1y = S.delta_factors(sym, 1, P, Q)
    delta_prime = S.clear(d0x, x0 * y0)
    delta_sign = S.clear(d1x if sign == "plus" else d1y, t * x0 * y0)
    e0, e1 = _e(sym)
    return sym, [e0, e1, delta_prime, delta_sign]


def dichotomy_targets(sign: str) -> list[MPoly]:
    sym = DICHOTOMY_CURVE
    x0, y0 = sym.coords(0)
    x1, y1 = sym.coords(1)
    t = sym.t
    if sign == "plus":
        return [x0**2 - y1**2, y0**2 - x1**2, x0 * y0 - x1 * y1]
    return [
        2 * x0 * y0 * (x0**2 - y1**2),
        2 * (1 - t**2) * x0 * y0 * (y0**2 - x1**2),
        x0 * y0 - x1 * y1,
    ]


def _dichotomy(sign, k):
    sym, basis = dichotomy_system(sign)
    x0, y0 = sym.coords(0)
    inv = [sym.t, x0, y0]
    if sign == "minus":
        inv += [sym.ctx.const(2), 1 - sym.t**2]
    target = dichotomy_targets(sign)[k]
    return membership_certificate(
        f"dichotomy_{sign}.{k}", target, basis, LEX, inv, use_groebner=True
    )


for _s in ("plus", "minus"):
    for _k in range(3):
        _register(f"dichotomy_{_s}.{_k}")(lambda _s=_s, _k=_k: _dichotomy(_s, _k))


def inverse_unique_system(i: int):
    """(e1, e2, qx*delta_ix - 1, qy*delta_iy - 1, nu_iy, nu_ix - delta_ix)."""
    sym = INVERSE_UNIQUE_CURVE
    qx, qy = sym.ctx.vars("qx", "qy")
    sx, sy = S.build_add(sym, i, (1, 2))
    sx, sy = sx.cancel(), sy.cancel()
    e1, e2 = _e(sym)
    return sym, [e1, e2, qx * sx.den - 1, qy * sy.den - 1, sy.num, sx.num - sx.den]


# lex elimination through qx, qy blows up; grevlex keeps cofactors small
def _inverse_unique(i, comp):
    sym, basis = inverse_unique_system(i)
    x1, y1 = sym.coords(1)
    x2, y2 = sym.coords(2)
    target = x1 - x2 if comp == "x" else y1 + y2
    return membership_certificate(
        f"inverse_unique_{i}.{comp}", target, basis, GREVLEX, use_groebner=True
    )


for _i in (0, 1):
    for _c in "xy":
        _register(f"inverse_unique_{_i}.{_c}")(lambda _i=_i, _c=_c: _inverse_unique(_i, _c))


# -- projective associativity -------------------------------------------------------

def _law(sym, which, P, Q):
    # the written-out extended law; its tau-conjugate form would also demand
    # that the coordinates of a nested sum be invertible
    return S.add0(sym, P, Q) if which == 0 else S.add1_formula(sym, P, Q)


def _assoc_mixed(i, j, k, l, comp):
    sym = RESCALED_3
    P1, P2, P3 = (sym.point(s) for s in (1, 2, 3))
    S12 = _law(sym, k, P1, P2)
    S23 = _law(sym, j, P2, P3)
    lhs = _law(sym, l, S12, P3)
    rhs = _law(sym, i, P1, S23)
    inv = (
        _delta_nums(sym, k, P1, P2)
        + _delta_nums(sym, j, P2, P3)
        + _delta_nums(sym, l, S12, P3)
        + _delta_nums(sym, i, P1, S23)
    )
    a, b = _components(lhs, rhs)[comp]
    return equivalence_certificate(
        f"assoc_mixed_{i}{j}{k}{l}.{comp}", a, b, _e(sym), inv
    )


for _i, _j, _k, _l in product((0, 1), repeat=4):
    for _c in "xy":
        _register(f"assoc_mixed_{_i}{_j}{_k}{_l}.{_c}")(
            lambda _i=_i, _j=_j, _k=_k, _l=_l, _c=_c: _assoc_mixed(_i, _j, _k, _l, _c)
        )


def _tau_annihilates(k, which):
    sym = RESCALED_1
    P = sym.point(1)
    Q = S.tau(sym, S.rho_power(S.iota(P), k))
    value = S.delta(sym, which, P, Q)
    inv = [sym.t] + _coords(sym)
    return equivalence_certificate(
        f"tau_annihilates_{k}.delta{which}", value, RationalPair(sym.ctx.zero()), (), inv
    )


for _k in range(4):
    for _w in (0, 1):
        _register(f"tau_annihilates_{_k}.delta{_w}")(lambda _k=_k, _w=_w: _tau_annihilates(_k, _w))


# -- public interface ------------------------------------------------------------

def certificate_names() -> list[str]:
    return list(_REGISTRY)


def family(name: str) -> str:
    return name.split(".", 1)[0]


def match_names(pattern: str | None) -> list[str]:
    """Names selected by a glob (``*``, ``?``, ``[``) or a plain substring."""
    names = certificate_names()
    if not pattern:
        return names
    if any(ch in pattern for ch in "*?["):
        return [n for n in names if fnmatch.fnmatchcase(n, pattern)]
    return [n for n in names if pattern in n]


@lru_cache(maxsize=None)
def _build(name: str) -> Certificate:
    return _REGISTRY[name]()


def certify(name: str, cache_dir=None) -> Certificate:
    """Build the certificate ``name``; raises ReductionFailed if it does not hold.

    With ``cache_dir`` the certificate is read from, or written to, a JSON
    file keyed by name and engine version.
    """
    if name not in _REGISTRY:
        raise KeyError(f"unknown identity {name!r}")
    if cache_dir is not None:
        path = cache_path(cache_dir, name)
        if path.exists():
            try:
                return load_certificate(path)
            except (ValueError, KeyError, EdwardsLawError):
                path.unlink()
        cert = _build(name)
        dump_certificate(cert, path)
        return cert
    return _build(name)


def certify_all(pattern: str | None = None, cache_dir=None) -> list[Certificate]:
    return [certify(n, cache_dir) for n in match_names(pattern)]


__all__ = [
    "certificate_names",
    "certify",
    "certify_all",
    "dichotomy_system",
    "dichotomy_targets",
    "affine_closure_parts",
    "inverse_unique_system",
    "match_names",
    "family",
]
