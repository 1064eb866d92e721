"""Ratios of Gauss hypergeometric functions with integer parameter shifts.

Core surface: 2F1 evaluation over the cut plane and on the branch-cut banks,
the shifted-ratio machinery (boundary densities, Taylor data, contiguous
ladders), regular C-fractions and their J-contractions, asymptotic
classification at z=1 and z=oo, generalized Nevanlinna indices, and the
integral representations with their verification harness.
"""

from .hyp2f1_core import (
    GammaSign,
    Params,
    abs2_on_cut,
    gamma_sign,
    hyp2f1,
    hyp2f1_on_cut,
    pochhammer,
)
from .shift_engine import (
    BoundaryDensity,
    RealPoly,
    Shifts,
    boundary_im,
    compute_B,
    compute_Pr_closed,
    compute_Pr_taylor,
    contiguous_ladder,
    derive_shifts,
    ratio_at_one,
    ratio_taylor,
    ratio_value,
)
from .cfrac_engine import (
    CFrac,
    JFrac,
    contract_to_jfrac,
    eval_cfrac,
    eval_jfrac,
    gauss_cfrac_010,
    gauss_cfrac_011,
    hankel_dets,
    series_to_cfrac,
)
from .asymptotics import (
    AsymptoticAtInfinity,
    AsymptoticAtOne,
    classify_at_infinity,
    classify_at_one,
)
from .nevanlinna import (
    NevanlinnaClass,
    NotInSUnion,
    RunckelReport,
    bp_sign_on_unit_interval,
    classify_gauss_ratio,
    classify_nonterminating_cfrac,
    classify_terminating_cfrac,
    pick_negative_count,
    runckel_check,
)
from .integral_rep import (
    QuadratureResult,
    Representation,
    build_representation,
    eval_representation,
    moment_identity_check,
    verify_example,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
