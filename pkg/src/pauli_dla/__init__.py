"""Classify Lie algebras generated by Pauli strings via quadratic forms over GF(2)."""

from .classifier import (
    Classification,
    ComponentReport,
    Summand,
    canonicalize,
    check_generates_full,
    classify,
    classify_vectors,
    equiv_classes,
    forbidden_witness,
)
from .gf2 import Echelon, HyperbolicBasis, QuadraticForm, analyze_radical, space_type, symplectic_gram_schmidt
from .graphs import Graph, MultiGraph, RootCertificate, frustration_graph, line_graph, recognize_root
from .oracle import catalog_forbidden, closure, verify_classification
from .pauli import PauliString, parse_pauli, render_pauli

__all__ = [
    "Classification",
    "ComponentReport",
    "Echelon",
    "Graph",
    "HyperbolicBasis",
    "MultiGraph",
    "PauliString",
    "QuadraticForm",
    "RootCertificate",
    "Summand",
    "analyze_radical",
    "canonicalize",
    "catalog_forbidden",
    "check_generates_full",
    "classify",
    "classify_vectors",
    "closure",
    "equiv_classes",
    "forbidden_witness",
    "frustration_graph",
    "line_graph",
    "parse_pauli",
    "recognize_root",
    "render_pauli",
    "space_type",
    "symplectic_gram_schmidt",
    "verify_classification",
]
