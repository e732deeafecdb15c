"""Random graphs on surfaces at desk scale: exact censuses of labeled graphs
with bounded genus, embedding search, structural statistics, genus-controlled
constructions and samplers."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BudgetError,
    CapabilityError,
    DecodeError,
    GraphError,
    PreconditionError,
    SamplerError,
    SGNMError,
    UndefinedProbabilityError,
)
from .graph import LabeledGraph, make_graph  # noqa: E402

__all__ = [
    "BudgetError",
    "CapabilityError",
    "DecodeError",
    "GraphError",
    "LabeledGraph",
    "PreconditionError",
    "SGNMError",
    "SamplerError",
    "UndefinedProbabilityError",
    "make_graph",
]
