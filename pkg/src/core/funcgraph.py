"""
Functions on Finite Sets
Image-table representation, parsing, enumeration and adjacency matrices.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .errors import DomainClosureError, EnumerationCapError, FunctionParseError, InputError
from .polymat import IntMatrix


logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r'[,\s]+')
_UNSIGNED = re.compile(r'[0-9]+')
_SIGNED = re.compile(r'-?[0-9]+')


@dataclass(frozen=True)
class FiniteFunction:
    """
    A function f on {0, ..., n-1}, stored as its image table.

    images[i] = f(i); every image lies in {0, ..., n-1}.
    """
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        for i, image in enumerate(images):
            if not 0 <= image < n:
                raise DomainClosureError(i, image, n)
        object.__setattr__(self, 'images', images)

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, i: int) -> int:
        """Return f(i)"""
        if not 0 <= i < self.n:
            raise InputError(f"index {i} is outside the domain {{0, ..., {self.n - 1}}}")
        return self.images[i]

    __call__ = apply

    def render(self) -> str:
        """Comma-separated images with no spaces"""
        return ','.join(str(v) for v in self.images)

    def __str__(self) -> str:
        return self.render()


def parse_int_list(text: str, allow_negative: bool = False) -> List[int]:
    """
    Parse a comma- or whitespace-separated list of integers.

    Raises:
        FunctionParseError: On a token that is not a (non-negative) integer
    """
    tokens = [tok for tok in _SEPARATORS.split(text.strip()) if tok]
    values = []
    for position, tok in enumerate(tokens):
        if not _SIGNED.fullmatch(tok):
            raise FunctionParseError(f"token {position} ('{tok}') is not an integer")
        if not allow_negative and not _UNSIGNED.fullmatch(tok):
            raise FunctionParseError(f"token {position} ('{tok}') is negative")
        values.append(int(tok))
    return values


def parse_function(text: str) -> FiniteFunction:
    """
    Parse an image table such as '0,1,1' or '0 1 1'.

    Empty input yields the function on the empty set (n = 0).

    Raises:
        FunctionParseError: On a non-integer token
        DomainClosureError: On an image >= n
    """
    f = FiniteFunction(tuple(parse_int_list(text)))
    logger.debug(f"Parsed function on n={f.n}: {f.render()}")
    return f


def render_function(f: FiniteFunction) -> str:
    return f.render()


def apply(f: FiniteFunction, i: int) -> int:
    return f.apply(i)


def func_matrix(f: FiniteFunction) -> IntMatrix:
    """Adjacency matrix A_f with A[i][j] = 1 iff f(i) = j"""
    return IntMatrix(f.n, tuple(
        tuple(1 if f.images[i] == j else 0 for j in range(f.n))
        for i in range(f.n)
    ))


def enumerate_functions(n: int, cap: Optional[int] = None) -> Iterator[FiniteFunction]:
    """
    Yield all n^n functions on {0, ..., n-1} in lexicographic order.

    Args:
        n: Domain size
        cap: Largest n allowed; defaults to the configured enumeration cap

    Raises:
        EnumerationCapError: If n exceeds the cap (checked before yielding)
    """
    if cap is None:
        from src.config import get_settings
        cap = get_settings().enum_cap
    if n < 0:
        raise InputError(f"domain size must be non-negative, got {n}")
    if n > cap:
        raise EnumerationCapError(n, cap)

    logger.info(f"Enumerating {n ** n} functions on n={n}")
    return (FiniteFunction(images) for images in itertools.product(range(n), repeat=n))
