"""The same sum computed two ways: the field formula, and the symbolic
rational function evaluated at the point."""

from edwards_law.curve import CurveParams, bridge_check

for params, layer in [
    (CurveParams.general(10007, 1, 5), "affine0"),
    (CurveParams.rescaled(10007, 3), "affine1"),
    (CurveParams.rescaled(10007, 3), "coherence"),
]:
    res = bridge_check(params, layer, count=1000, seed=0)
    print(f"{layer:9s} on {params}: {res.pairs} pairs, {res.mismatches} mismatches")
