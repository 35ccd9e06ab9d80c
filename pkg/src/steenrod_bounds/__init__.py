"""Exact Steenrod-algebra combinatorics and the realization bounds built on it.

Submodules: ``seqcomb`` (exponent sequences, excess), ``milnor`` (the
Bockstein quotient in the Milnor basis), ``adem`` (Adem normal form oracle),
``polyaction`` (action on polynomial cohomology), ``bounds`` (k_U / k_SO).
"""

__version__ = "0.1.0"

from .bounds import bound_report, ku_bounds, kso_bounds, paper_table
from .milnor import MilnorElement, chi_pr, milnor_product, milnor_to_admissible
from .seqcomb import enumerate_upsilon_r, ex, gamma, gamma_inv, greatest_in_upsilon_r

__all__ = [
    "MilnorElement",
    "bound_report",
    "chi_pr",
    "enumerate_upsilon_r",
    "ex",
    "gamma",
    "gamma_inv",
    "greatest_in_upsilon_r",
    "ku_bounds",
    "kso_bounds",
    "milnor_product",
    "milnor_to_admissible",
    "paper_table",
]
