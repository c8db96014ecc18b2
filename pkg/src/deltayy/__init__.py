"""Delta-YY and YY-delta transformations on 6-regular multigraphs."""

from .canonical import canonical_graph, canonical_key, graph_from_key, is_isomorphic
from .classify import (Finiteness, classify_finiteness, doubled_cubic_finiteness,
                       find_excluded, match_addon)
from .explore import Budget, ClassEnumeration, Status, enumerate_class, reduce_greedy
from .io import FormatError, format_mg, parse_graph, parse_graph6, parse_mg
from .multigraph import Multigraph, double, girth_simple, simplified, stats
from .transform import apply_delta_yy, apply_yy_delta, find_deltas, find_wyes, neighbors

__all__ = [
    "Budget", "ClassEnumeration", "Finiteness", "FormatError", "Multigraph", "Status",
    "apply_delta_yy", "apply_yy_delta", "canonical_graph", "canonical_key",
    "classify_finiteness", "double", "doubled_cubic_finiteness", "enumerate_class",
    "find_deltas", "find_excluded", "find_wyes", "format_mg", "girth_simple",
    "graph_from_key", "is_isomorphic", "match_addon", "neighbors", "parse_graph",
    "parse_graph6", "parse_mg", "reduce_greedy", "simplified", "stats",
]
