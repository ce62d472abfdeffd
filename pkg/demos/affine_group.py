"""The affine group law over small prime fields, and what breaks when d is a square."""

from edwards_law.curve import AffinePoint, CurveParams, add0, group_check
from edwards_law.errors import HypothesisViolated, NotSummable

for p, c, d in [(5, 1, 2), (13, 1, 2), (17, 1, 3), (29, 1, 2)]:
    report = group_check(CurveParams.general(p, c, d), "affine", "full")
    assoc = report.item("associativity")
    print(f"p={p:2d} c={c} d={d}: {report.counts['points']:2d} points, "
          f"{assoc.checked:5d} triples, axioms hold: {report.ok}")

# d = 4 = 2^2 over F_13: the basic law has a pair it cannot add
bad = CurveParams.general(13, 1, 4)
try:
    group_check(bad, "affine", "full")
except HypothesisViolated as exc:
    print(f"\nd = 4 over F_13: {exc}; witness {exc.witness}")
    P, Q = (AffinePoint.of(bad, *xy) for xy in exc.witness)
    try:
        add0(P, Q, bad)
    except NotSummable as err:
        print("  ", err)
