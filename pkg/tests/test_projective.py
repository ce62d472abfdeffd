import itertools

import pytest

from edwards_law.curve import (
    GROUP_G,
    AffinePoint,
    CurveParams,
    GroupElement,
    Summable,
    Unsummable,
    act,
    delta,
    dichotomy,
    enumerate_classes,
    enumerate_oo,
    enumerate_points,
    glue,
    group_check,
    identity,
    identity_class,
    iota,
    proj_add,
    proj_neg,
    rho_power,
    delta_relations,
    tau,
)
from edwards_law.errors import NotOnCurve

from frozen import CLASS_COUNTS, NONSUMMABLE_WITNESS
from oracles import classes_bf, nonsummable_witness_bf, tau_bf

PROJECTIVE = sorted(CLASS_COUNTS)


def test_glue_examples(e13):
    O = identity(e13)
    assert len(glue(O, 0, e13).members) == 1
    for P in enumerate_oo(e13):
        X = glue(P, 0, e13)
        assert X == glue(tau(P, e13), 1, e13)
        assert len(X.members) == 2
    with pytest.raises(NotOnCurve):
        glue(AffinePoint.of(e13, 0, 0), 0, e13)


def test_canonical_representative(e13):
    for X in enumerate_classes(e13):
        assert X.rep.key() == min(m.key() for m in X.members)


@pytest.mark.parametrize("key", PROJECTIVE)
def test_class_counts_match_oracle(key):
    p, t = key
    params = CurveParams.rescaled(p, t)
    ours = {frozenset((m.point.key(), m.i) for m in X.members) for X in enumerate_classes(params)}
    theirs = {frozenset(g) for g in classes_bf(p, t)}
    assert ours == theirs
    assert len(ours) == CLASS_COUNTS[key]


@pytest.mark.parametrize("key", PROJECTIVE)
def test_every_oo_point_in_one_pair_class(key):
    params = CurveParams.rescaled(*key)
    classes = enumerate_classes(params)
    for P in enumerate_oo(params):
        for i in (0, 1):
            owners = [X for X in classes if any(m.point == P and m.i == i for m in X.members)]
            assert len(owners) == 1 and len(owners[0].members) == 2


# -- dichotomy ------------------------------------------------------------------

@pytest.mark.parametrize("key", PROJECTIVE)
def test_nonsummable_witness(key):
    p, t = key
    params = CurveParams.rescaled(p, t)
    (P, Q) = NONSUMMABLE_WITNESS[key]
    assert nonsummable_witness_bf(p, t) == (P, Q)
    res = dichotomy(AffinePoint.of(params, *P), AffinePoint.of(params, *Q), params)
    assert isinstance(res, Unsummable)
    assert res.g.apply(iota(AffinePoint.of(params, *P)), params).key() == Q


def test_dichotomy_identity_partner(e13):
    O = identity(e13)
    for P in enumerate_points(e13):
        assert dichotomy(P, O, e13) == Summable(0)
        assert dichotomy(O, P, e13) == Summable(0)


def test_dichotomy_tau_iota_case(e13):
    hits = 0
    for P in enumerate_oo(e13):
        Q = AffinePoint.of(e13, *tau_bf(iota(P).key(), 13, 2))
        if not delta(0, P, Q, e13) and not delta(1, P, Q, e13):
            assert dichotomy(P, Q, e13) == Unsummable(0)
            hits += 1
    assert hits > 0


@pytest.mark.parametrize("key", PROJECTIVE)
def test_dichotomy_total_and_exact(key):
    params = CurveParams.rescaled(*key)
    for P, Q in itertools.product(enumerate_points(params), repeat=2):
        res = dichotomy(P, Q, params)
        if isinstance(res, Summable):
            assert delta(res.rule, P, Q, params)
            if res.rule == 1:
                assert not delta(0, P, Q, params)
        else:
            assert not delta(0, P, Q, params) and not delta(1, P, Q, params)
            assert tau(rho_power(iota(P), res.k), params) == Q


# -- projective addition ----------------------------------------------------------

def test_identity_and_inverse(e13):
    O = identity_class(e13)
    for X in enumerate_classes(e13):
        assert proj_add(X, O, e13) == X
        assert proj_add(X, proj_neg(X, e13), e13) == O


def test_nonsummable_pair_adds_projectively(e13):
    P = AffinePoint.of(e13, 4, 5)
    X = glue(P, 0, e13)
    S = proj_add(X, X, e13)
    # doubling through the tau-shift rule: [P + tau P, 1]
    Y = glue(tau(P, e13), 1, e13)
    assert S == proj_add(X, Y, e13)
    assert S in enumerate_classes(e13)


def test_group_action_commutes_with_addition(e13):
    classes = enumerate_classes(e13)
    for g in (GroupElement(0, 1), GroupElement(1, 0)):
        for X, Y in itertools.product(classes, repeat=2):
            assert proj_add(act(g, X, e13), Y, e13) == act(g, proj_add(X, Y, e13), e13)


def test_action_is_free_on_pair_classes(e13):
    for g in GROUP_G:
        if g.is_identity():
            continue
        for P in enumerate_oo(e13):
            assert g.apply(P, e13) != P


@pytest.mark.parametrize("key", PROJECTIVE)
def test_projective_group_full(key):
    report = group_check(CurveParams.rescaled(*key), "projective", "full")
    assert report.ok, [i.to_dict() for i in report.failures()]
    n = CLASS_COUNTS[key]
    assert report.counts["classes"] == n
    assert report.item("associativity").checked == n**3
    assert report.item("covering").checked == n * n
    assert report.item("semi").checked > 0


def test_delta_relations_at_13_2(e13):
    rel = delta_relations(e13)
    for name, (applicable, failed, witness) in rel.items():
        if not name.endswith("_literal"):
            assert failed == 0, (name, witness)
    assert {n for n, (a, _, _) in rel.items() if a == 0} == {"1", "6", "7"}


@pytest.mark.parametrize("p,t", [(29, 3), (37, 3), (41, 5)])
def test_delta_relations_nonvacuous(p, t):
    rel = delta_relations(CurveParams.rescaled(p, t))
    for name, (applicable, failed, witness) in rel.items():
        if not name.endswith("_literal"):
            assert applicable > 0 and failed == 0, (name, witness)


def test_literal_relation_seven_is_informational(e13):
    report = group_check(e13, "projective", "full")
    lit = report.item("delta_relation.7_literal")
    assert lit.informational and lit.failed > 0
    assert report.ok
