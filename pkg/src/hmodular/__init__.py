"""Exact arithmetic for Clifford-Vahlen 2x2 groups over Gamma_n(Z) and for 2x2
groups over imaginary quadratic and quaternion orders: decomposition into
elementary generators, relation checking, presentations and amalgam splits."""

from .clifford import CliffordElement, enumerate_units, gamma_membership, involutions, norm_sq
from .contexts import GammaContext, context_from_name, gamma
from .errors import HModularError, ParseError
from .parsing import parse_element
from .presentations import (
    Presentation,
    abelianization,
    amalgam_split,
    builtin_presentation,
    check_hom,
    counterexample_o5,
    split_report,
    verify_presentation,
)
from .rings import RingContext, RingElement, discretely_normed, ge2_classification
from .smith import AbelianInvariants, snf
from .vahlen import VahlenMatrix, dieudonne_det_sq, gl_membership, mat_inverse, pseudo_det, slplus_membership
from .words import GenWord, decompose, eval_word, parse_word, verify_relation_families

__all__ = [
    "CliffordElement", "enumerate_units", "gamma_membership", "involutions", "norm_sq",
    "GammaContext", "context_from_name", "gamma", "HModularError", "ParseError", "parse_element",
    "Presentation", "abelianization", "amalgam_split", "builtin_presentation", "check_hom",
    "counterexample_o5", "split_report", "verify_presentation", "RingContext", "RingElement",
    "discretely_normed", "ge2_classification", "AbelianInvariants", "snf", "VahlenMatrix",
    "dieudonne_det_sq", "gl_membership", "mat_inverse", "pseudo_det", "slplus_membership",
    "GenWord", "decompose", "eval_word", "parse_word", "verify_relation_families",
]
