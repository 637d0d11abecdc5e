"""Brjuno-type functions: real series, jump/Holder diagnostics, complex
boundary values, and exact reference oracles for quadratic irrationals."""

from .cfrac import (CFExpansion, CFKind, FareyTriple, expand, farey_parents,
                    rational_depth)
from .complexbw import (TermContribution, TruncationPlan, complex_brjuno,
                        complex_semi, complex_wilton, enumerate_fractions,
                        term_contributions)
from .delta import (HolderReport, JumpReport, delta_minus_direct,
                    delta_minus_series, delta_plus, holder_estimate, jump_at,
                    popcorn)
from .dilog import li2
from .errors import DomainError, RationalInputError
from .oracle import PeriodicCF, closed_form_B, periodic_value, recheck
from .realfuncs import (DEFAULT_CONFIG, EvalConfig, EvalResult, b_minus_ext,
                        brjuno, brjuno_half, even_part, f_func, f_tilde, frac,
                        g_func, odd_part, phi, qlog_approximant, semi_brjuno,
                        w_plus_ext, wilton)
from .sampling import (DefectReport, SamplePlan, defect_report,
                       near_excluded_rational, sample_points)

__version__ = "0.1.0"

__all__ = [
    "CFExpansion", "CFKind", "FareyTriple", "expand", "farey_parents",
    "rational_depth", "TermContribution", "TruncationPlan", "complex_brjuno",
    "complex_semi", "complex_wilton", "enumerate_fractions",
    "term_contributions", "HolderReport", "JumpReport", "delta_minus_direct",
    "delta_minus_series", "delta_plus", "holder_estimate", "jump_at",
    "popcorn", "li2", "DomainError", "RationalInputError", "PeriodicCF",
    "closed_form_B", "periodic_value", "recheck", "DEFAULT_CONFIG",
    "EvalConfig", "EvalResult", "b_minus_ext", "brjuno", "brjuno_half",
    "even_part", "f_func", "f_tilde", "frac", "g_func", "odd_part", "phi",
    "qlog_approximant", "semi_brjuno", "w_plus_ext", "wilton", "DefectReport",
    "SamplePlan", "defect_report", "near_excluded_rational", "sample_points",
]
