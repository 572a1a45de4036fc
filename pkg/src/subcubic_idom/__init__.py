"""Independent domination toolkit for subcubic graphs."""

from .graph import Graph, GraphError, VertexSet
from .solver import IdCertificate, Provenance, min_id_set, oracle_min_id_set
from .halver import half_bound_id_set
from .classifier import ExtremalClass, classify, recognize_shape

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "IdCertificate",
    "Provenance",
    "min_id_set",
    "oracle_min_id_set",
    "half_bound_id_set",
    "ExtremalClass",
    "classify",
    "recognize_shape",
]
