"""Quaternary logic synthesis toolkit."""

from ._core import (
    Netlist,
    ParseError,
    QFunction,
    SopExpr,
    apply,
    bounds,
    circuit,
    lower,
    operator_tables,
    synthesize,
)

__all__ = [
    "Netlist",
    "ParseError",
    "QFunction",
    "SopExpr",
    "apply",
    "bounds",
    "circuit",
    "lower",
    "operator_tables",
    "synthesize",
]
