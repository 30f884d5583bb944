"""Dimension and Bose distance of BCH codes of length (q^m - 1)/lambda.

The main entry points are ``bchdim.dimension.dimension`` and
``bchdim.bose.bose_distance``; the function is not re-exported here so that
``bchdim.dimension`` keeps naming the module.
"""

from .bose import bose_distance, bose_profile, bose_special_ab
from .cyclotomic import coset, coset_size, is_coset_leader, leaders_in_range
from .dimension import (
    count_assertions,
    delta_profile,
    dimension_even_small,
    dimension_odd_small,
    dimension_special_ab,
)
from .errors import BchError, UnsupportedRange
from .kernels import BACKEND
from .nonnarrow import nonnarrow_bose, nonnarrow_dimension, nonnarrow_eligible
from .params import BchParams
from .reference import bose_oracle, dimension_oracle

__all__ = [
    "BACKEND",
    "BchError",
    "BchParams",
    "UnsupportedRange",
    "bose_distance",
    "bose_oracle",
    "bose_profile",
    "bose_special_ab",
    "count_assertions",
    "coset",
    "coset_size",
    "delta_profile",
    "dimension_even_small",
    "dimension_odd_small",
    "dimension_oracle",
    "dimension_special_ab",
    "is_coset_leader",
    "leaders_in_range",
    "nonnarrow_bose",
    "nonnarrow_dimension",
    "nonnarrow_eligible",
]
