"""Recognizers and polynomial TD-coloring solvers for special graph classes."""

from .base import ClassSolution, Rejection
from .bipartite import Bipartition, recognize_bipartite
from .chain import ChainPartition, chain_coloring, chi_td_chain, recognize_chain
from .cograph import Cotree, chi_td_cograph, cotree_chromatic_number, recognize_cograph
from .split import SplitPartition, chi_td_split, omega_plus_one_coloring, recognize_split

__all__ = [
    "Bipartition",
    "ChainPartition",
    "ClassSolution",
    "Cotree",
    "Rejection",
    "SplitPartition",
    "chain_coloring",
    "chi_td_chain",
    "chi_td_cograph",
    "chi_td_split",
    "cotree_chromatic_number",
    "omega_plus_one_coloring",
    "recognize_bipartite",
    "recognize_chain",
    "recognize_cograph",
    "recognize_split",
]
