"""Edwards curves over F_p: affine group law, extended addition, the glued
projective curve, and exhaustive axiom checks."""

from .affine import (
    GROUP_G,
    AffinePoint,
    GroupElement,
    add,
    add0,
    add1,
    curve_value,
    delta,
    delta0_factors,
    delta1_factors,
    enumerate_oo,
    enumerate_points,
    identity,
    iota,
    on_curve,
    random_point,
    rho,
    rho_power,
    summable,
    symmetry,
    tau,
)
from .bridge import BridgeResult, bridge_check
from .check import Item, Report, group_check, delta_relations
from .params import CurveParams, rescale, rescale_point
from .projective import (
    PointClass,
    ProjPoint,
    Summable,
    Unsummable,
    act,
    dichotomy,
    enumerate_classes,
    glue,
    identity_class,
    proj_add,
    proj_neg,
)

__all__ = [
    "GROUP_G",
    "AffinePoint",
    "BridgeResult",
    "CurveParams",
    "GroupElement",
    "Item",
    "PointClass",
    "ProjPoint",
    "Report",
    "Summable",
    "Unsummable",
    "act",
    "add",
    "add0",
    "add1",
    "bridge_check",
    "curve_value",
    "delta",
    "delta0_factors",
    "delta1_factors",
    "dichotomy",
    "enumerate_classes",
    "enumerate_oo",
    "enumerate_points",
    "glue",
    "group_check",
    "identity",
    "identity_class",
    "iota",
    "on_curve",
    "proj_add",
    "proj_neg",
    "random_point",
    "rescale",
    "rescale_point",
    "rho",
    "rho_power",
    "summable",
    "symmetry",
    "delta_relations",
    "tau",
]
