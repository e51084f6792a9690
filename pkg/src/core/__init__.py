"""
Core module for the linear representation toolkit
"""

from .errors import (
    LinRepError,
    InputError,
    FunctionParseError,
    DomainClosureError,
    DimensionMismatchError,
    EnumerationCapError,
    ChainViolationError,
    InvariantError
)
from .poly import IntPoly
from .polymat import (
    IntMatrix,
    PolyMatrix,
    char_matrix,
    determinant,
    leibniz_determinant,
    adjugate,
    apply_vector
)
from .funcgraph import (
    FiniteFunction,
    parse_function,
    render_function,
    func_matrix,
    enumerate_functions
)
from .linrep import (
    Mode,
    RowPolynomials,
    LinearRepresentation,
    Certificate,
    row_polynomials,
    threshold,
    construct,
    verify
)
from .oracle import SearchBudget, SearchResult, search_minimal

__all__ = [
    'LinRepError',
    'InputError',
    'FunctionParseError',
    'DomainClosureError',
    'DimensionMismatchError',
    'EnumerationCapError',
    'ChainViolationError',
    'InvariantError',
    'IntPoly',
    'IntMatrix',
    'PolyMatrix',
    'char_matrix',
    'determinant',
    'leibniz_determinant',
    'adjugate',
    'apply_vector',
    'FiniteFunction',
    'parse_function',
    'render_function',
    'func_matrix',
    'enumerate_functions',
    'Mode',
    'RowPolynomials',
    'LinearRepresentation',
    'Certificate',
    'row_polynomials',
    'threshold',
    'construct',
    'verify',
    'SearchBudget',
    'SearchResult',
    'search_minimal'
]
