"""Odd colourings of graphs, with a constructive 8-colouring of planar graphs."""

from .colouring import (
    Colouring,
    chi_odd_exact,
    forbidden_set,
    is_odd_colouring,
    is_odd_forest,
    is_proper,
    odd_defects,
    solve_odd_k,
)
from .configurations import ConfigMatch, find_claim1_config, find_claim2_config
from .discharging import apply_rules, counterexample_audit, discharge, initial_charges
from .embedding import RotationSystem, embed_planar, trace_faces, validate_embedding
from .errors import (
    BudgetExhausted,
    EmbeddingError,
    GuaranteeViolated,
    MalformedInputError,
    NotEmbeddableError,
    OddColourError,
    ParseError,
)
from .graph import Graph
from .pipeline import ReductionTrace, colour_even_order, four_forest_partition, odd_colour_planar_8

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "Colouring",
    "ConfigMatch",
    "EmbeddingError",
    "Graph",
    "GuaranteeViolated",
    "MalformedInputError",
    "NotEmbeddableError",
    "OddColourError",
    "ParseError",
    "ReductionTrace",
    "RotationSystem",
    "apply_rules",
    "chi_odd_exact",
    "colour_even_order",
    "counterexample_audit",
    "discharge",
    "embed_planar",
    "find_claim1_config",
    "find_claim2_config",
    "forbidden_set",
    "four_forest_partition",
    "initial_charges",
    "is_odd_colouring",
    "is_odd_forest",
    "is_proper",
    "odd_colour_planar_8",
    "odd_defects",
    "solve_odd_k",
    "trace_faces",
    "validate_embedding",
]
