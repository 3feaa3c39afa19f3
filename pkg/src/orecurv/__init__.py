"""Linear recurrence operators: desingularization and p-curvature invariants."""

from .poly import FieldSpec, Poly, QQ, RatFun, content_poly, series_inverse, shift
from .center import CenterPoly, norm, norm_ratfun, to_center, from_center, z_poly
from .ore import (
    CompanionMatrix,
    OrePoly,
    adjusted_leading,
    adjusted_trailing,
    companion,
    content,
    gcrd,
    lc_star,
    lclm,
    ore_mul,
    prim,
    reduce_mod_p,
    right_divide,
    tc_star,
)

__all__ = [
    "FieldSpec",
    "Poly",
    "QQ",
    "RatFun",
    "content_poly",
    "series_inverse",
    "shift",
    "CenterPoly",
    "norm",
    "norm_ratfun",
    "to_center",
    "from_center",
    "z_poly",
    "CompanionMatrix",
    "OrePoly",
    "adjusted_leading",
    "adjusted_trailing",
    "companion",
    "content",
    "gcrd",
    "lc_star",
    "lclm",
    "ore_mul",
    "prim",
    "reduce_mod_p",
    "right_divide",
    "tc_star",
]
