"""Concordance of preference orderings through their common subsequences."""

from .index import ABSENT, PositionIndex, TruthTable, build_position_index, build_truth_table
from .kernel import (
    ConcordanceReport,
    distance,
    kappa_pair,
    kappa_set,
    max_common_count,
    normalized_concordance,
    outlier_scores,
)
from .lcs import EnumerationCapExceeded, LcsSet, PsiArray, all_lcs, psi_lengths, theta
from .model import BucketOrdering, OrderingParseError, OrderingSet, dedupe, ordering_set, parse_ordering, parse_orderings
from .scs import CoveringSet, build_b_set, common_symbols, smallest_covering_set, upsilon

__version__ = "0.1.0"
