"""
Exact Linear Algebra over Z[x]
Characteristic matrices, fraction-free determinants and adjugates.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import DimensionMismatchError, InvariantError
from .poly import IntPoly


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of arbitrary-precision integers"""
    n: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        _check_square(self.n, self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> 'IntMatrix':
        return cls(len(rows), tuple(tuple(int(v) for v in row) for row in rows))

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.rows[i][j]

    def apply(self, y: Sequence[int]) -> List[int]:
        """Matrix-vector product A y"""
        if len(y) != self.n:
            raise DimensionMismatchError(
                f"vector of length {len(y)} does not match matrix dimension {self.n}"
            )
        return [sum(a * b for a, b in zip(row, y)) for row in self.rows]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix with IntPoly entries, stored row-major"""
    n: int
    rows: Tuple[Tuple[IntPoly, ...], ...]

    def __post_init__(self):
        _check_square(self.n, self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[IntPoly]]) -> 'PolyMatrix':
        return cls(len(rows), tuple(tuple(row) for row in rows))

    @classmethod
    def scalar(cls, p: IntPoly, n: int) -> 'PolyMatrix':
        """p times the n x n identity"""
        zero = IntPoly.zero()
        return cls(n, tuple(
            tuple(p if i == j else zero for j in range(n)) for i in range(n)
        ))

    @classmethod
    def identity(cls, n: int) -> 'PolyMatrix':
        return cls.scalar(IntPoly.one(), n)

    def __getitem__(self, key: Tuple[int, int]) -> IntPoly:
        i, j = key
        return self.rows[i][j]

    def minor(self, row: int, col: int) -> 'PolyMatrix':
        """The (n-1) x (n-1) matrix with the given row and column removed"""
        return PolyMatrix(self.n - 1, tuple(
            tuple(entry for j, entry in enumerate(r) if j != col)
            for i, r in enumerate(self.rows) if i != row
        ))

    def __matmul__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchError(
                f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}"
            )
        n = self.n
        return PolyMatrix(n, tuple(
            tuple(
                sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), IntPoly.zero())
                for j in range(n)
            )
            for i in range(n)
        ))

    def to_lists(self) -> List[List[List[int]]]:
        """Entries as lowest-degree-first coefficient lists"""
        return [[entry.to_list() for entry in row] for row in self.rows]


def _check_square(n: int, rows: Sequence[Sequence]) -> None:
    if len(rows) != n or any(len(row) != n for row in rows):
        raise DimensionMismatchError(f"matrix is not {n}x{n}")


def char_matrix(a: IntMatrix) -> PolyMatrix:
    """The characteristic matrix x I - A"""
    x = IntPoly.x()
    return PolyMatrix(a.n, tuple(
        tuple(
            x - a[i, j] if i == j else IntPoly.constant(-a[i, j])
            for j in range(a.n)
        )
        for i in range(a.n)
    ))


def exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """
    Quotient of num by den in Z[x], where den is known to divide num.

    Raises:
        InvariantError: If den is zero or the division leaves a remainder
    """
    if den.is_zero():
        raise InvariantError("exact division by the zero polynomial")
    if num.is_zero():
        return num

    rem = list(num.coeffs)
    lead = den.leading_coeff()
    dd = den.degree()
    quotient = [0] * max(len(rem) - dd, 1)

    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lead:
            raise InvariantError(
                f"inexact division: {num} / {den} (coefficient {c} not divisible by {lead})"
            )
        q = c // lead
        quotient[k - dd] = q
        for i, d in enumerate(den.coeffs):
            rem[k - dd + i] -= q * d

    if any(rem[:dd]):
        raise InvariantError(f"inexact division: {num} / {den} leaves remainder")
    return IntPoly(tuple(quotient))


def determinant(m: PolyMatrix) -> IntPoly:
    """
    Determinant by fraction-free Bareiss elimination.

    A zero pivot is replaced by the first lower row with a nonzero entry in
    the pivot column; if there is none the determinant is 0. The 0 x 0
    determinant is 1.
    """
    n = m.n
    if n == 0:
        return IntPoly.one()

    rows = [list(row) for row in m.rows]
    prev = IntPoly.one()
    sign = 1

    for k in range(n - 1):
        if rows[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not rows[i][k].is_zero()), None)
            if swap is None:
                return IntPoly.zero()
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
            logger.debug(f"Bareiss pivot swap: rows {k} <-> {swap}")

        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = exact_div(pivot * rows[i][j] - rows[i][k] * rows[k][j], prev)
            rows[i][k] = IntPoly.zero()
        prev = pivot

    return rows[n - 1][n - 1].scale(sign)


def leibniz_determinant(m: PolyMatrix) -> IntPoly:
    """Determinant as the signed sum over permutations (reference for small n)"""
    total = IntPoly.zero()
    for perm in itertools.permutations(range(m.n)):
        term = IntPoly.constant(_permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * m[i, j]
            if term.is_zero():
                break
        total = total + term
    return total


def _permutation_sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def adjugate(m: PolyMatrix) -> PolyMatrix:
    """
    Classical adjugate: entry (i, j) is (-1)^(i+j) times the determinant
    of m with row j and column i removed.
    """
    n = m.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            cofactor = determinant(m.minor(j, i))
            row.append(-cofactor if (i + j) % 2 else cofactor)
        rows.append(tuple(row))
    return PolyMatrix(n, tuple(rows))


def apply_vector(m: PolyMatrix, v: Sequence[int], t: int) -> List[int]:
    """
    Evaluate M(t) v.

    Raises:
        DimensionMismatchError: If len(v) != n
    """
    if len(v) != m.n:
        raise DimensionMismatchError(
            f"vector of length {len(v)} does not match matrix dimension {m.n}"
        )
    return [
        sum(entry.eval_at(t) * vk for entry, vk in zip(row, v))
        for row in m.rows
    ]
