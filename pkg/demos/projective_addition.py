"""Adding on the glued curve E over F_13 with t = 2.

The pair P = Q = (4, 5) defeats both affine laws, but the class [P, 0]
also contains [tau P, 1], and the extended law can add P to tau P.
"""

from edwards_law.curve import (
    AffinePoint, CurveParams, delta, dichotomy, enumerate_classes, glue, group_check, tau,
)
from edwards_law.curve.projective import candidates

E = CurveParams.rescaled(13, 2)
P = AffinePoint.of(E, 4, 5)
print("delta_0(P, P) =", delta(0, P, P, E), " delta_1(P, P) =", delta(1, P, P, E))
print("dichotomy:", dichotomy(P, P, E), " tau P =", tau(P, E))

X = glue(P, 0, E)
print("\nclass of [P, 0]:", X.to_list())
for cls, m, n, rule in candidates(X, X, E):
    print(f"  {m} + {n} by law {rule} -> {cls.to_list()}")

print(f"\n|E| = {len(enumerate_classes(E))}")
report = group_check(E, "projective", "full")
for item in report.items:
    tag = "note" if item.informational else ("ok" if item.ok else "FAIL")
    print(f"  {item.name:18s} {tag:4s} {item.checked}")
