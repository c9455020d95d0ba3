"""Continued fractions with bounded partial quotients and the SL_2(F_p) toolkit around them."""

from .cont_frac import (Mat2, cf_to_matrix, continuant, cyclic_trace, evaluate, expand,
                        format_cf, parse_fraction)
from .modular_search import (SearchRecord, evaluate_n_bounds, exponent_table,
                             min_modular_denominator, power_intersect_search)
from .sl2_group import GroupSet, ModMat2, sl2, standard_borel
from .zaremba_enum import count_fractions, enumerate_fractions, estimate_dimension, split_parity

__version__ = "0.1.0"

__all__ = [
    "GroupSet", "Mat2", "ModMat2", "SearchRecord", "cf_to_matrix", "continuant",
    "count_fractions", "cyclic_trace", "enumerate_fractions", "estimate_dimension",
    "evaluate", "evaluate_n_bounds", "expand", "exponent_table", "format_cf",
    "min_modular_denominator", "parse_fraction", "power_intersect_search", "sl2",
    "split_parity", "standard_borel",
]
