"""Exact solver and verification toolkit for k-distance mutual-visibility."""

from .errors import (BoundNotApplicable, BudgetExceeded, ConnectivityError, GraphFormatError,
                     InvariantViolation, KvisError, ParameterError, ShapeError, SizeLimitError)
from .graph import (DistanceMatrix, Graph, VertexSet, all_pairs, clique_number, from_edge_list,
                    independence_number, read_edge_list, to_edge_list)
from .solver import SolveResult, enumerate_maximum_sets, mu_k_bruteforce, mu_k_exact
from .visibility import geodesic_exists_avoiding, is_k_mv_set, is_sk_visible

__version__ = "0.1.0"
