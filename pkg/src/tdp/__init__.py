"""Partition L-free cubic graphs into two total dominating sets."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6, validate_cubic
from .generators import gen_named, random_cubic, truncate
from .motif import PieceKind, c4_through, check_embedding, find_l_witness, template_of, triangle_through
from .partition import Partition, Piece, f_partition, validate_partition
from .coloring import Color, base_coloring, dependent_coloring, two_coupon_color, verify_coupon, verify_total_dominating
from .oracle import enumerate_f_partitions, exact_two_colorable, onh, total_domatic_number

__all__ = [
    "Graph", "GraphError", "parse_edge_list", "parse_graph6", "serialize_edge_list",
    "serialize_graph6", "validate_cubic", "gen_named", "random_cubic", "truncate",
    "PieceKind", "c4_through", "check_embedding", "find_l_witness", "template_of",
    "triangle_through", "Partition", "Piece", "f_partition", "validate_partition",
    "Color", "base_coloring", "dependent_coloring", "two_coupon_color", "verify_coupon",
    "verify_total_dominating", "enumerate_f_partitions", "exact_two_colorable", "onh",
    "total_domatic_number",
]
