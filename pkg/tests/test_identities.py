import dataclasses
import json
import random

import pytest

from edwards_law.curve import CurveParams, random_point
from edwards_law.errors import BadSlot, ModeMismatch, ReductionFailed
from edwards_law.ffield import PrimeField
from edwards_law.identities import (
    Certificate,
    SymbolicCurve,
    add0,
    add1,
    add1_formula,
    affine_closure_parts,
    build_add,
    build_curve,
    build_deltas,
    certificate_from_dict,
    certificate_names,
    certificate_to_dict,
    certify,
    dichotomy_system,
    dichotomy_targets,
    family,
    load_certificate,
    match_names,
    membership_certificate,
    verify_certificate,
)
from edwards_law.identities import symbolic as S
from edwards_law.identities.certificates import cache_path
from edwards_law.mpoly import LEX, RationalPair, exact_divide, parse_poly

from frozen import ASSOC_GENERIC_DEGREE_BOUND

G2 = SymbolicCurve.general((1, 2))
R2 = SymbolicCurve.rescaled((1, 2))
F = PrimeField(10007)

FAMILIES = {
    "closure", "inverse", "assoc_generic", "affine_closure", "coherence_add",
    "add1_formula", "coherence_closure", "tau_invariance_0", "tau_invariance_1",
    "rho_invariance_0", "rho_invariance_1", "rho_delta_0", "rho_delta_1",
    "iota_tau", "iota_rho", "iota_add_0", "iota_add_1",
    "dichotomy_plus", "dichotomy_minus", "inverse_unique_0", "inverse_unique_1",
    "tau_annihilates_0", "tau_annihilates_1", "tau_annihilates_2", "tau_annihilates_3",
}


@pytest.fixture(scope="module")
def all_certs():
    return {name: certify(name) for name in certificate_names()}


# -- symbolic objects -----------------------------------------------------------

def test_build_curve_examples():
    x1, y1, c, d = G2.ctx.vars("x1", "y1", "c", "d")
    assert build_curve(G2, 1) == x1**2 + c * y1**2 - 1 - d * x1**2 * y1**2
    x2, y2, t = R2.ctx.vars("x2", "y2", "t")
    assert build_curve(R2, 2) == x2**2 + y2**2 - 1 - t**2 * x2**2 * y2**2
    for sym, params in ((G2, {"c": 5, "d": 7}), (R2, {"t": 3})):
        asg = {"x1": 1, "y1": 0, **params}
        assert build_curve(sym, 1).evaluate(asg, F) == 0


def test_build_curve_bad_slot():
    with pytest.raises(BadSlot):
        build_curve(G2, 3)


def test_plus0_circle_specialization():
    x1, x2, y1, y2 = G2.ctx.vars("x1", "x2", "y1", "y2")
    circle = {"c": G2.ctx.one(), "d": G2.ctx.zero()}
    sx, sy = build_add(G2, "plus0")
    assert sx.substitute(circle).cross_equal(RationalPair(x1 * x2 - y1 * y2))
    assert sy.substitute(circle).cross_equal(RationalPair(x1 * y2 + y1 * x2))


def test_plus0_with_identity():
    P = G2.point(1)
    one, zero = RationalPair(G2.ctx.one()), RationalPair(G2.ctx.zero())
    sx, sy = add0(G2, P, (one, zero))
    assert sx.cross_equal(P[0]) and sy.cross_equal(P[1])


def test_plus1_tau_conjugation_is_the_formula():
    P, Q = R2.point(1), R2.point(2)
    for a, b in zip(add1(R2, P, Q), add1_formula(R2, P, Q)):
        assert a.cross_equal(b)


def test_plus1_needs_rescaled():
    with pytest.raises(ModeMismatch):
        build_add(G2, "plus1")


def test_build_deltas_examples():
    D = build_deltas(R2)
    x1, x2, y1, y2, t = R2.ctx.vars("x1", "x2", "y1", "y2", "t")
    assert D["delta"] == 1 - t**4 * x1**2 * y1**2 * x2**2 * y2**2
    assert D["delta1_x"] == x2 * y1 - x1 * y2
    assert D["delta1_y"] == x1 * x2 + y1 * y2
    Dg = build_deltas(G2)
    asg = {"x1": 3, "x2": 5, "y1": 7, "y2": 11, "c": 2, "d": 0}
    assert Dg["delta"].evaluate(asg, F) == 1


def test_plus0_swap_symmetry():
    P, Q = G2.point(1), G2.point(2)
    for a, b in zip(add0(G2, P, Q), add0(G2, Q, P)):
        assert a.num == b.num and a.den == b.den


# -- certificates ---------------------------------------------------------------

def test_catalog_covers_every_family():
    assert {family(n) for n in certificate_names()} == FAMILIES | {
        f"assoc_mixed_{i}{j}{k}{l}" for i in "01" for j in "01" for k in "01" for l in "01"
    }


def test_every_certificate_verifies(all_certs):
    for name, cert in all_certs.items():
        assert cert.residual().is_zero(), name
        v = verify_certificate(cert, samples=5)
        assert v.ok, (name, v.detail)


def test_affine_closure_cofactors(all_certs):
    cert = all_certs["affine_closure"]
    ctx = cert.ctx
    expected = ["x2^2*y1^2*y2^2*d^2", "-y1^2*d + 1", "-y1^2*d"]
    assert list(cert.cofactors) == [parse_poly(s, ctx) for s in expected]


def test_affine_closure_transcribed():
    target, (e1, delta, e2) = affine_closure_parts()
    ctx = target.ctx
    x2, y1, y2, d = ctx.vars("x2", "y1", "y2", "d")
    cofactors = (d**2 * y1**2 * y2**2 * x2**2, 1 - d * y1**2, -d * y1**2)
    cert = Certificate("affine_closure", target, (e1, delta, e2), cofactors)
    assert verify_certificate(cert).ok


def test_mutated_certificate_fails(all_certs):
    for name in ("affine_closure", "closure", "dichotomy_minus.1"):
        cert = all_certs[name]
        bumped = (cert.cofactors[0] + 1,) + cert.cofactors[1:]
        v = verify_certificate(dataclasses.replace(cert, cofactors=bumped))
        assert not v.ok and "replay fails" in v.detail


def test_closure_on_the_circle(all_certs):
    cert = all_certs["closure"]
    circle = {"c": cert.ctx.one(), "d": cert.ctx.zero()}
    sub = [p.substitute(circle) for p in (cert.target, *cert.basis, *cert.cofactors)]
    n = len(cert.basis)
    target, basis, cofactors = sub[0], sub[1:1 + n], sub[1 + n:]
    acc = target
    for q, b in zip(cofactors, basis):
        acc = acc - q * b
    assert acc.is_zero()


def test_dichotomy_correction_both_directions():
    sym, basis = dichotomy_system("minus")
    x0, y0, x1, t = sym.ctx.vars("x0", "y0", "x1", "t")
    inv = [t, x0, y0, sym.ctx.const(2), 1 - t**2]
    with pytest.raises(ReductionFailed) as info:
        membership_certificate("uncorrected", y0**2 - x1**2, basis, LEX, inv, use_groebner=True)
    assert not info.value.remainder.is_zero()
    corrected = dichotomy_targets("minus")[1]
    assert corrected == 2 * (1 - t**2) * x0 * y0 * (y0**2 - x1**2)
    cert = membership_certificate("corrected", corrected, basis, LEX, inv, use_groebner=True)
    assert verify_certificate(cert).ok


def test_assoc_generic_degree_bound(all_certs):
    degrees = [all_certs[f"assoc_generic.{c}"].term_counts()["max_cofactor_degree"] for c in "xy"]
    assert max(degrees) == ASSOC_GENERIC_DEGREE_BOUND


def test_assoc_generic_invertibles_divide_denominators(all_certs):
    sym = SymbolicCurve.general((1, 2, 3))
    dens = S.associativity_denominators(sym)
    D = build_deltas(sym)
    d23 = S.numerator(S.delta(sym, 0, sym.point(2), sym.point(3)))
    product = dens["Delta_x"] * dens["Delta_y"] * D["delta"] * d23
    for c in "xy":
        cert = all_certs[f"assoc_generic.{c}"]
        assert cert.notes["Delta"] == dens[f"Delta_{c}"]
        for inv in cert.declared_invertibles:
            assert exact_divide(product, inv) is not None


def test_coherence_numeric_corollary():
    params = CurveParams.rescaled(10007, 5)
    rng = random.Random(7)
    s0, s1 = build_add(R2, "plus0"), build_add(R2, "plus1")
    D = build_deltas(R2)
    checked = 0
    while checked < 100:
        P, Q = random_point(params, rng), random_point(params, rng)
        asg = {"x1": P.x, "y1": P.y, "x2": Q.x, "y2": Q.y, "t": 5}
        if not D["delta"].evaluate(asg, F) or not D["delta1"].evaluate(asg, F):
            continue
        if not (P.x and P.y and Q.x and Q.y):
            continue
        assert [r.evaluate(asg, F) for r in s0] == [r.evaluate(asg, F) for r in s1]
        checked += 1


# -- serialization and lookup ---------------------------------------------------

def test_json_round_trip(all_certs):
    for name in ("affine_closure", "closure", "dichotomy_plus.0", "inverse_unique_1.x"):
        data = certificate_to_dict(all_certs[name])
        back = certificate_from_dict(json.loads(json.dumps(data)))
        assert back.residual().is_zero()
        assert data["schema"] == 1
        assert set(data) >= {"name", "variables", "order", "target", "basis", "cofactors", "invertibles"}


def test_exported_coefficients_are_integers(all_certs):
    data = certificate_to_dict(all_certs["dichotomy_minus.0"])
    assert "/" not in json.dumps(data)


def test_cache_round_trip(tmp_path):
    a = certify("inverse.x", tmp_path)
    path = cache_path(tmp_path, "inverse.x")
    assert path.exists()
    b = certify("inverse.x", tmp_path)
    assert load_certificate(path).residual().is_zero()
    assert a.target == b.target


def test_corrupt_cache_is_rebuilt(tmp_path):
    path = cache_path(tmp_path, "closure")
    path.write_text("{not json")
    assert certify("closure", tmp_path).residual().is_zero()


def test_match_names():
    assert match_names("affine_closure") == ["affine_closure"]
    assert len(match_names("assoc_mixed_*")) == 32
    assert match_names("dichotomy_minus.?") == [f"dichotomy_minus.{k}" for k in range(3)]
    assert match_names(None) == certificate_names()
    assert match_names("no_such_identity") == []
    with pytest.raises(KeyError):
        certify("no_such_identity")
