"""Clifford algebra kernel on bitmask blades.

Basis blades are unsigned 64-bit masks (bit k-1 set means generator
e_k is a factor) and the geometric product is XOR of masks times a
computed sign, the twist.  The package provides four independent
implementations of the sign, exact rational multivectors, symbolic
twist tables with a block-substitution generator, and a CLI.
"""

from .kernel import (
    ALGORITHMS,
    TraceStep,
    blade_product,
    grade,
    grade_sign,
    tree_trace,
    twist,
    twist_closed,
    twist_oracle,
    twist_recursive,
    twist_tree,
)
from .multivector import Algebra, Multivector
from .notation import (
    ExpressionSyntaxError,
    MalformedBladeError,
    NotationError,
    UnrepresentableError,
    format_blade,
    parse_blade,
    parse_expression,
)
from .selftest import run_selftest
from .tables import (
    MAX_DIM,
    SymbolicSign,
    TwistTable,
    render_block_letters,
    render_table,
    table_blocks,
    table_direct,
    twist_symbolic,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "Algebra",
    "ExpressionSyntaxError",
    "MAX_DIM",
    "MalformedBladeError",
    "Multivector",
    "NotationError",
    "SymbolicSign",
    "TraceStep",
    "TwistTable",
    "UnrepresentableError",
    "blade_product",
    "format_blade",
    "grade",
    "grade_sign",
    "parse_blade",
    "parse_expression",
    "render_block_letters",
    "render_table",
    "run_selftest",
    "table_blocks",
    "table_direct",
    "tree_trace",
    "twist",
    "twist_closed",
    "twist_oracle",
    "twist_recursive",
    "twist_symbolic",
    "twist_tree",
    "__version__",
]
