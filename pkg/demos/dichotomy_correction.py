"""Why the dichotomy target needs its extra factor.

Against the generators e(x0,y0), e(x1,y1), delta' and delta_minus the
bare difference y0^2 - x1^2 leaves a nonzero remainder, while the same
difference multiplied by 2 (1 - t^2) x0 y0 reduces to zero.  The removed
factors are units once t^2 != 1 and x0 y0 != 0, which holds on the
points where the dichotomy is applied.
"""

from edwards_law.errors import ReductionFailed
from edwards_law.identities import dichotomy_system, membership_certificate
from edwards_law.mpoly import LEX, to_text

sym, basis = dichotomy_system("minus")
x0, y0, x1, t = sym.ctx.vars("x0", "y0", "x1", "t")
for g in basis:
    print("generator:", to_text(g))

bare = y0**2 - x1**2
try:
    membership_certificate("bare", bare, basis, LEX, use_groebner=True)
except ReductionFailed as exc:
    print(f"\n{to_text(bare)}  ->  remainder with {len(exc.remainder)} terms:")
    print("   ", to_text(exc.remainder))

fixed = 2 * (1 - t**2) * x0 * y0 * bare
cert = membership_certificate("fixed", fixed, basis, LEX, use_groebner=True)
print(f"\n2(1 - t^2) x0 y0 ({to_text(bare)})  ->  remainder 0,",
      f"{cert.term_counts()['cofactors']} cofactor terms")
