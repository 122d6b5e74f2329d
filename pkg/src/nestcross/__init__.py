"""Nestings, crossings and pattern statistics on permutations, matchings and fillings."""

from .core import (
    BarredPermutation,
    Filling,
    FillingFlags,
    HattedPermutation,
    Matching,
    MarkedMatching,
    PartitionShape,
    Permutation,
    box_components,
    boxcomp,
    boxed_sum,
    comp,
    direct_sum,
    direct_sum_all,
    filling_predicates,
    irreducible_components,
    is_enriched_permutation,
)
from .stats import FillStats, MatchStats, PermStats, fill_stats, match_stats, perm_stats

__version__ = "0.1.0"

__all__ = [
    "BarredPermutation",
    "Filling",
    "FillingFlags",
    "FillStats",
    "HattedPermutation",
    "Matching",
    "MarkedMatching",
    "MatchStats",
    "PartitionShape",
    "PermStats",
    "Permutation",
    "box_components",
    "boxcomp",
    "boxed_sum",
    "comp",
    "direct_sum",
    "direct_sum_all",
    "fill_stats",
    "filling_predicates",
    "irreducible_components",
    "is_enriched_permutation",
    "match_stats",
    "perm_stats",
]
