"""Exhaustive and sampled group-axiom checks on affine and projective curves."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product

from ..errors import Ambiguous, HypothesisViolated, NoRuleApplies, NotOnCurve
from . import affine as A
from . import projective as PR
from .affine import GROUP_G, AffinePoint, GroupElement
from .params import CurveParams

REPORT_SCHEMA = 1
EXHAUSTIVE_LIMIT = 64
SAMPLED_TRIPLES = 1000


@dataclass
class Item:
    name: str
    checked: int = 0
    failed: int = 0
    witness: list | None = None
    sampled: bool = False
    informational: bool = False

    def record(self, ok: bool, witness=None):
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.witness is None:
                self.witness = witness() if callable(witness) else witness

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failed": self.failed,
            "witness": self.witness,
        }
        if self.sampled:
            out["sampled"] = True
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class Report:
    mode: str
    level: str
    params: dict
    seed: int
    counts: dict = field(default_factory=dict)
    items: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items if not i.informational)

    def item(self, name: str) -> Item:
        for i in self.items:
            if i.name == name:
                return i
        raise KeyError(name)

    def failures(self) -> list[Item]:
        return [i for i in self.items if not i.ok and not i.informational]

    def to_dict(self) -> dict:
        """Everything except timing, so equal runs serialize identically."""
        return {
            "schema": REPORT_SCHEMA,
            "mode": self.mode,
            "level": self.level,
            "params": self.params,
            "seed": self.seed,
            "ok": self.ok,
            "counts": self.counts,
            "items": [i.to_dict() for i in self.items],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


class _Run:
    """Collects items and their wall time."""

    def __init__(self, report: Report):
        self.report = report

    def item(self, name, **kw) -> Item:
        it = Item(name, **kw)
        self.report.items.append(it)
        return it

    def timed(self, name, fn):
        t0 = time.perf_counter()
        fn()
        self.report.timing[name] = round(time.perf_counter() - t0, 6)


def _pt(P: AffinePoint) -> list:
    return [int(P.x), int(P.y)]


def _triples(n: int, level: str, rng: random.Random):
    if level == "full" and n <= EXHAUSTIVE_LIMIT:
        return product(range(n), repeat=3), False
    return [tuple(rng.randrange(n) for _ in range(3)) for _ in range(SAMPLED_TRIPLES)], True


def group_check(params: CurveParams, mode: str = "affine", level: str = "full", seed: int = 0) -> Report:
    """Check the group axioms of the affine curve (basic law) or of the
    projective curve E.  Raises HypothesisViolated if the parameters do not
    have c square and d non-square (affine), or are not rescaled with
    t^2 != 1 (projective)."""
    if mode not in ("affine", "projective"):
        raise ValueError(f"unknown mode {mode!r}")
    if level not in ("axioms", "full"):
        raise ValueError(f"unknown level {level!r}")
    report = Report(mode, level, params.describe(), seed)
    rng = random.Random(seed)
    if mode == "affine":
        _affine(params, level, rng, report)
    else:
        _projective(params, level, rng, report)
    return report


# -- affine --------------------------------------------------------------------

def delta_zero_witness(params: CurveParams, points=None):
    """A pair (P, Q) with delta(P, Q) = 0, or None."""
    for P in points or A.enumerate_points(params):
        for Q in points or A.enumerate_points(params):
            if not A.delta(0, P, Q, params):
                return P, Q
    return None


def check_affine_hypotheses(params: CurveParams):
    problems = []
    if not params.c.is_square():
        problems.append(f"c = {params.c} is not a square")
    if params.d.is_square():
        problems.append(f"d = {params.d} is a square")
    if problems:
        w = delta_zero_witness(params)
        witness = None if w is None else [_pt(w[0]), _pt(w[1])]
        raise HypothesisViolated("; ".join(problems), witness)


def _affine(params, level, rng, report):
    check_affine_hypotheses(params)
    run = _Run(report)
    pts = A.enumerate_points(params)
    n = len(pts)
    index = {P: k for k, P in enumerate(pts)}
    report.counts = {"points": n}
    O = index[A.identity(params)]

    summ = run.item("summability")
    clos = run.item("closure")
    table = [[None] * n for _ in range(n)]

    def build():
        for a, b in product(range(n), repeat=2):
            P, Q = pts[a], pts[b]
            ok = bool(A.delta(0, P, Q, params))
            summ.record(ok, lambda: [_pt(P), _pt(Q)])
            if not ok:
                continue
            S = A.add0(P, Q, params, check=False)
            k = index.get(S)
            clos.record(k is not None, lambda: [_pt(P), _pt(Q), _pt(S)])
            table[a][b] = k

    run.timed("table", build)
    _table_axioms(run, table, n, O, lambda a: index[A.iota(pts[a])], lambda a: _pt(pts[a]), level, rng)


def _table_axioms(run, table, n, O, neg, label, level, rng):
    ident = run.item("identity")
    inv = run.item("inverse")
    comm = run.item("commutativity")

    def pairs():
        for a in range(n):
            ident.record(table[a][O] == a and table[O][a] == a, lambda: [label(a)])
            inv.record(table[a][neg(a)] == O, lambda: [label(a)])
            for b in range(n):
                comm.record(table[a][b] == table[b][a], lambda: [label(a), label(b)])

    run.timed("pairs", pairs)
    triples, sampled = _triples(n, level, rng)
    assoc = run.item("associativity", sampled=sampled)

    def assoc_run():
        for a, b, c in triples:
            ab, bc = table[a][b], table[b][c]
            lhs = None if ab is None else table[ab][c]
            rhs = None if bc is None else table[a][bc]
            assoc.record(lhs is not None and lhs == rhs, lambda: [label(a), label(b), label(c)])

    run.timed("associativity", assoc_run)


# -- projective -----------------------------------------------------------------

def _projective(params, level, rng, report):
    if params.t is None:
        raise HypothesisViolated("projective checks need rescaled parameters (c = 1, d = t^2)")
    run = _Run(report)
    pts = A.enumerate_points(params)
    oo = [P for P in pts if P.in_oo()]
    classes = PR.enumerate_classes(params)
    n = len(classes)
    cindex = {X: k for k, X in enumerate(classes)}
    report.counts = {"points": len(pts), "oo": len(oo), "classes": n}
    O = cindex[PR.identity_class(params)]

    cover = run.item("covering")
    welldef = run.item("well_definedness")
    clos = run.item("closure")
    table = [[None] * n for _ in range(n)]

    def label(a):
        return list(classes[a].key())

    def build():
        for a, b in product(range(n), repeat=2):
            X, Y = classes[a], classes[b]
            try:
                S = PR.proj_add(X, Y, params)
            except NoRuleApplies:
                cover.record(False, lambda: [label(a), label(b)])
                continue
            except Ambiguous:
                cover.record(True)
                welldef.record(False, lambda: [label(a), label(b)])
                continue
            except NotOnCurve:
                cover.record(True)
                welldef.record(True)
                clos.record(False, lambda: [label(a), label(b)])
                continue
            cover.record(True)
            welldef.record(True)
            clos.record(S in cindex, lambda: [label(a), label(b)])
            table[a][b] = cindex.get(S)

    run.timed("table", build)
    _table_axioms(
        run, table, n, O, lambda a: cindex[PR.proj_neg(classes[a], params)], label, level, rng
    )
    run.timed("fixed_points", lambda: _fixed_points(run, params, oo))
    run.timed("dichotomy", lambda: _dichotomy(run, params, pts))
    run.timed("inverse_unique", lambda: _inverse_unique(run, params, pts))
    run.timed("delta_relations", lambda: _delta_relations(run, params, pts))
    run.timed("semi", lambda: _semi(run, params, pts, table, cindex))
    run.timed("equivariance", lambda: _equivariance(run, params, classes, table, cindex))


def _fixed_points(run, params, oo):
    free = run.item("fixed_point_free")
    order = run.item("g_order_eight")
    for P in oo:
        for g in GROUP_G:
            if not g.is_identity():
                free.record(g.apply(P, params) != P, lambda: [str(g), _pt(P)])
    images = {tuple(g.apply(P, params) for P in oo) for g in GROUP_G}
    order.record(len(images) == 8, [len(images)])


def _dichotomy(run, params, pts):
    total = run.item("dichotomy_total")
    exact = run.item("dichotomy_exact")
    for P in pts:
        for Q in pts:
            d0 = bool(A.delta(0, P, Q, params))
            d1 = bool(A.delta(1, P, Q, params))
            try:
                r = PR.dichotomy(P, Q, params)
            except NoRuleApplies:
                total.record(False, [_pt(P), _pt(Q)])
                continue
            total.record(True)
            if isinstance(r, PR.Summable):
                ok = (d0 if r.rule == 0 else (d1 and not d0))
            else:
                ok = (
                    not d0 and not d1 and P.in_oo()
                    and r.g.apply(A.iota(P), params) == Q
                )
            # pairs of the form Q = tau rho^k iota P have both deltas zero
            if P.in_oo():
                for k in range(4):
                    if GroupElement(1, k).apply(A.iota(P), params) == Q:
                        ok = ok and not d0 and not d1
            exact.record(ok, lambda: [_pt(P), _pt(Q)])


def _inverse_unique(run, params, pts):
    item = run.item("inverse_unique")
    O = A.identity(params)
    for P in pts:
        for Q in pts:
            for rule in (0, 1):
                if A.summable(rule, P, Q, params) and A.add(rule, P, Q, params, False) == O:
                    item.record(Q == A.iota(P), lambda: [_pt(P), _pt(Q), rule])


def delta_relations(params: CurveParams, pts=None) -> dict:
    """The eight delta relations, plus P0 variants of the last two.

    delta stands for delta_0 and delta' for delta_1.  Each entry maps a
    name to ``(applicable, failed, witness)``.
    """
    pts = pts if pts is not None else A.enumerate_points(params)
    oo = [P for P in pts if P.in_oo()]

    def D(w, P, Q):
        return bool(A.delta(w, P, Q, params))

    def tau(P):
        return A.tau(P, params)

    iota = A.iota
    out: dict = {}

    def rec(name, hyp, concl, witness):
        a, f, w = out.get(name, (0, 0, None))
        if hyp:
            a += 1
            if not concl:
                f += 1
                w = w or witness()
        out[name] = (a, f, w)

    for name in ("1", "2", "3", "4", "5", "6", "7", "8", "7_literal", "8_literal"):
        out[name] = (0, 0, None)
    for P1 in pts:
        for P2 in oo:
            wit = lambda: [_pt(P1), _pt(P2)]  # noqa: E731
            if P1.in_oo():
                rec("1", D(0, tau(P1), tau(P2)), D(0, P1, P2), wit)
                rec("2", D(1, tau(P1), tau(P2)), D(1, P1, P2), wit)
            rec("3", D(0, P1, P2) and D(0, P1, tau(P2)), D(1, P1, P2), wit)
            rec("4", D(1, P1, P2) and D(1, P1, tau(P2)), D(0, P1, P2), wit)
            tip, ip = tau(iota(P2)), iota(P2)
            if D(1, P1, P2):
                S = A.add1(P1, P2, params, False)
                rec("5", D(1, S, tip), D(0, S, ip), wit)
                rec("8", D(0, S, tip), D(1, S, ip), wit)
            if D(0, P1, P2):
                S = A.add0(P1, P2, params, False)
                rec("6", D(0, S, tip), D(1, S, ip), wit)
                rec("7", D(1, S, tip), D(0, S, ip), wit)
    # variants of the last two that sum P0 and P1 but test against P2
    for P0 in pts:
        for P1 in pts:
            s0 = A.add0(P0, P1, params, False) if D(0, P0, P1) else None
            s1 = A.add1(P0, P1, params, False) if D(1, P0, P1) else None
            for P2 in oo:
                wit = lambda: [_pt(P0), _pt(P1), _pt(P2)]  # noqa: E731
                tip, ip = tau(iota(P2)), iota(P2)
                if s0 is not None:
                    rec("7_literal", D(0, P1, P2) and D(1, s0, tip), D(0, s0, ip), wit)
                if s1 is not None:
                    rec("8_literal", D(1, P1, P2) and D(0, s1, tip), D(1, s1, ip), wit)
    return out


def _delta_relations(run, params, pts):
    for name, (applicable, failed, witness) in delta_relations(params, pts).items():
        item = run.item(f"delta_relation.{name}", informational=name.endswith("literal"))
        item.checked, item.failed, item.witness = applicable, failed, witness


def _semi(run, params, pts, table, cindex):
    """([P,0] + [Q,0]) + [iota Q, 0] = [P, 0]."""
    item = run.item("semi")
    for P in pts:
        for Q in pts:
            p = cindex[PR.glue(P, 0, params)]
            q = cindex[PR.glue(Q, 0, params)]
            iq = cindex[PR.glue(A.iota(Q), 0, params)]
            pq = table[p][q]
            item.record(pq is not None and table[pq][iq] == p, lambda: [_pt(P), _pt(Q)])


def _equivariance(run, params, classes, table, cindex):
    """g X + Y = g (X + Y) for the generators g = rho, tau."""
    item = run.item("equivariance")
    for g in (GroupElement(0, 1), GroupElement(1, 0)):
        for a, X in enumerate(classes):
            gx = cindex[PR.act(g, X, params)]
            for b in range(len(classes)):
                s = table[a][b]
                ok = s is not None and table[gx][b] == cindex[PR.act(g, classes[s], params)]
                item.record(ok, lambda: [str(g), list(X.key()), list(classes[b].key())])


__all__ = [
    "EXHAUSTIVE_LIMIT",
    "Item",
    "Report",
    "SAMPLED_TRIPLES",
    "check_affine_hypotheses",
    "delta_zero_witness",
    "group_check",
    "delta_relations",
]
