"""Exact cubic Gauss sums over finite-field towers, their periods and closed forms."""

from .chars import Character, lift_by_norm, make_character, principal
from .closedform import (
    period_polynomial,
    periods_from_eta,
    predict_b_factor,
    r1_r2,
    rep_4p,
    rep_eisenstein,
    rep_x2_3y2,
    structure_constants,
)
from .cyclo import CycloInt, Eisenstein
from .errors import (
    FieldTooLarge,
    GaussSumError,
    InvalidParams,
    MixedRings,
    NoSuchBinomial,
    NotOneModSix,
    NotPrime,
    NoValidAssociate,
    OrderNotDividing,
    ReducibleBinomial,
)
from .ffield import FFElt, FieldHandle, extend, find_irreducible_binomial, make_field
from .gsum import GaussSumResult, a_sum, b_sum, gauss_periods, gauss_sum, jacobi_a
from .verify import CheckKind, CheckReport, SuiteReport, run_check, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
