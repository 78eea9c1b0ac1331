"""Exact local metric dimension of graphs and corona products."""

from .errors import (
    ClassificationError,
    DisconnectedGraphError,
    FamilyError,
    GraphError,
    InconsistentBounds,
    InstanceTooLarge,
    LmdError,
    RuleNotApplicable,
)
from .families import FamilySpec, build_family, parse_family
from .graph import Graph, corona, join
from .localmetric import (
    DimensionResult,
    apex_in_some_basis,
    is_local_metric_generator,
    local_metric_dimension,
)

__all__ = [
    "ClassificationError",
    "DimensionResult",
    "DisconnectedGraphError",
    "FamilyError",
    "FamilySpec",
    "Graph",
    "GraphError",
    "InconsistentBounds",
    "InstanceTooLarge",
    "LmdError",
    "RuleNotApplicable",
    "apex_in_some_basis",
    "build_family",
    "corona",
    "is_local_metric_generator",
    "join",
    "local_metric_dimension",
    "parse_family",
]
