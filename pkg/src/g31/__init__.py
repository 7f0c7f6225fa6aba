"""Exact construction and verification of the order-46080 rank-4 complex
reflection group obtained by pulling the hyperoctahedral group in six
variables back through the exterior-square morphism.

All arithmetic is exact over the Gaussian rationals; there is no floating
point anywhere in the package.
"""

from .gaussian import GaussRat, I, ONE, ZERO, parse, sqrt_gaussian
from .matrices import Mat, Poly, charpoly, det, kernel_basis, rank
from .extsq import (
    NotInImage,
    SqrtNotInField,
    compound2,
    factor_decomposable,
    is_decomposable,
    lambda2,
    spin_lift,
    wedge_form,
)
from .signed_perm import Perm6, ScaledSignedPerm, group_generators
from .engine import GroupTable
from .outer_s6 import OuterAutomorphism, get_tau
from .build import G31Context
from .checks import CHECK_IDS, REGISTRY, RunConfig, run_checks

__all__ = [
    "GaussRat",
    "I",
    "ONE",
    "ZERO",
    "parse",
    "sqrt_gaussian",
    "Mat",
    "Poly",
    "charpoly",
    "det",
    "kernel_basis",
    "rank",
    "NotInImage",
    "SqrtNotInField",
    "compound2",
    "factor_decomposable",
    "is_decomposable",
    "lambda2",
    "spin_lift",
    "wedge_form",
    "Perm6",
    "ScaledSignedPerm",
    "group_generators",
    "GroupTable",
    "OuterAutomorphism",
    "get_tau",
    "G31Context",
    "CHECK_IDS",
    "REGISTRY",
    "RunConfig",
    "run_checks",
]
