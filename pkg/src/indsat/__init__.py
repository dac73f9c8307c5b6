"""Executable induced-saturation toolkit: dimension, 2-Hamming decompositions,
goodness classification, saturation checks and the explicit constructions."""

from .classifier import GoodnessVerdict, classify, find_chipped
from .coloring import NiceColoring, dimension, search_nice, verify_nice
from .decomposition import TwoHammingDecomposition, decompose, is_balanced, min_k
from .embedding import contains_induced, find_embedding
from .errors import ContractError, Graph6Error, ResourceLimitError
from .graph import Graph, parse_graph6, to_graph6
from .hamming import HammingGraph, build
from .iso import are_isomorphic, canonical_form, graphs
from .modular import blowup, is_prime, theorem20_check
from .saturation import search_saturating, verify, verify_hamming

__all__ = [
    "ContractError", "Graph", "Graph6Error", "GoodnessVerdict", "HammingGraph", "NiceColoring",
    "ResourceLimitError", "TwoHammingDecomposition", "are_isomorphic", "blowup", "build",
    "canonical_form", "classify", "contains_induced", "decompose", "dimension", "find_chipped",
    "find_embedding", "graphs", "is_balanced", "is_prime", "min_k", "parse_graph6",
    "search_nice", "search_saturating", "theorem20_check", "to_graph6", "verify",
    "verify_hamming", "verify_nice",
]
