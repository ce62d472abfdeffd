"""Symbolic Edwards-curve algebra and machine-checkable identity certificates."""

from .catalog import (
    affine_closure_parts,
    certificate_names,
    certify,
    certify_all,
    dichotomy_system,
    dichotomy_targets,
    family,
    inverse_unique_system,
    match_names,
)
from .certificates import (
    Certificate,
    Verification,
    certificate_from_dict,
    certificate_to_dict,
    dump_certificate,
    equivalence_certificate,
    load_certificate,
    membership_certificate,
    strip_invertibles,
    verify_certificate,
)
from .symbolic import (
    SymbolicCurve,
    add0,
    add1,
    add1_formula,
    build_add,
    build_curve,
    build_deltas,
    curve_value,
    delta,
    delta_factors,
    iota,
    rho,
    tau,
)

__all__ = [
    "Certificate",
    "SymbolicCurve",
    "Verification",
    "add0",
    "add1",
    "add1_formula",
    "affine_closure_parts",
    "build_add",
    "build_curve",
    "build_deltas",
    "certificate_from_dict",
    "certificate_names",
    "certificate_to_dict",
    "certify",
    "certify_all",
    "curve_value",
    "delta",
    "delta_factors",
    "dichotomy_system",
    "dichotomy_targets",
    "dump_certificate",
    "equivalence_certificate",
    "family",
    "inverse_unique_system",
    "iota",
    "load_certificate",
    "match_names",
    "membership_certificate",
    "rho",
    "strip_invertibles",
    "tau",
    "verify_certificate",
]
