"""Exact probability measures valued in the hyperbolic (split-complex) numbers."""

from .errors import HProbError
from .hyperbolic import (E, EDAG, K, ONE, ZERO, HNum, OrderRel, ZdClass, add, classify,
                         compare, conj, hmod, in_zero_divisor_set, inverse, is_nonneg,
                         is_strictly_positive_invertible, mul, parse_hnum, sup_d)
from .inference import (FSE, BayesBranch, BayesResult, ChainCondition, CondCase, CondTag,
                        IndepCase, IndepReport, bayes, chain_mult, complement_independence,
                        cond, conditional_space, independence, joint_independence,
                        mult_theorem, total_probability)
from .space import (Event, ProbSpace, Regime, build_space, complement_law,
                    continuity_limit, increasing_limit, measure, monotone_compare,
                    subadditivity_check, union_inclusion_exclusion)

__version__ = "0.1.0"

__all__ = [
    "BayesBranch",
    "BayesResult",
    "ChainCondition",
    "CondCase",
    "CondTag",
    "E",
    "EDAG",
    "Event",
    "FSE",
    "HNum",
    "HProbError",
    "IndepCase",
    "IndepReport",
    "K",
    "ONE",
    "OrderRel",
    "ProbSpace",
    "Regime",
    "ZERO",
    "ZdClass",
    "add",
    "bayes",
    "build_space",
    "chain_mult",
    "classify",
    "compare",
    "complement_independence",
    "complement_law",
    "cond",
    "conditional_space",
    "conj",
    "continuity_limit",
    "hmod",
    "in_zero_divisor_set",
    "increasing_limit",
    "independence",
    "inverse",
    "is_nonneg",
    "is_strictly_positive_invertible",
    "joint_independence",
    "measure",
    "monotone_compare",
    "mul",
    "mult_theorem",
    "parse_hnum",
    "subadditivity_check",
    "sup_d",
    "total_probability",
    "union_inclusion_exclusion",
]
