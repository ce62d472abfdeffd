"""Build the affine-closure certificate, print it, and replay it.

The target (1 - c d y1^2 y2^2)(1 - d y1^2 x2^2) lies in the ideal
generated by e1, delta and e2.  Any evaluation that kills the generators
therefore kills the target, so if delta vanishes at two curve points then
d or c*d has to be a square.
"""

import random

from edwards_law.ffield import PrimeField
from edwards_law.identities import certify, verify_certificate
from edwards_law.mpoly import to_text

cert = certify("affine_closure")
print("target  :", to_text(cert.target))
for q, b in zip(cert.cofactors, cert.basis):
    print(f"  ({to_text(q)}) * ({to_text(b)})")
print("replay residual is zero:", cert.residual().is_zero())

v = verify_certificate(cert, samples=20, seed=1)
print(f"kernel check at {v.samples} random zeros of the basis over F_10007:", v.ok)

# the replay identity holds at any point, on the curve or not
F = PrimeField(10007)
rng = random.Random(0)
point = {name: rng.randrange(F.modulus) for name in cert.variables}
lhs = cert.target.evaluate(point, F)
rhs = sum((q.evaluate(point, F) * b.evaluate(point, F) for q, b in zip(cert.cofactors, cert.basis)), F(0))
print("target(point) =", lhs, " sum of cofactor*basis =", rhs)
