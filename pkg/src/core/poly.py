"""
Univariate Polynomials over the Integers
Dense, immutable polynomials with arbitrary-precision coefficients.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union


@dataclass(frozen=True)
class IntPoly:
    """
    Dense polynomial in Z[x].

    coeffs[k] holds the coefficient of x^k. The tuple is normalized on
    construction: it is empty (the zero polynomial) or ends in a nonzero
    entry. The degree of the zero polynomial is 0.
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> 'IntPoly':
        """Build from a lowest-degree-first coefficient sequence"""
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> 'IntPoly':
        """The constant polynomial c"""
        return cls((c,))

    @classmethod
    def x(cls) -> 'IntPoly':
        """The indeterminate x"""
        return cls((0, 1))

    @classmethod
    def zero(cls) -> 'IntPoly':
        return cls()

    @classmethod
    def one(cls) -> 'IntPoly':
        return cls((1,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Index of the highest nonzero coefficient; 0 for the zero polynomial"""
        return max(len(self.coeffs) - 1, 0)

    def leading_coeff(self) -> int:
        """Coefficient of x^degree; 0 for the zero polynomial"""
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        """Coefficient of x^k (0 beyond the stored range)"""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def coeff_bound(self) -> int:
        """Sum of the absolute values of all coefficients"""
        return sum(abs(c) for c in self.coeffs)

    def eval_at(self, t: int) -> int:
        """Exact value p(t) by Horner's rule"""
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def scale(self, c: int) -> 'IntPoly':
        """Multiply every coefficient by the integer c"""
        return IntPoly(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> 'IntPoly':
        """Multiply by x^k"""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __add__(self, other: Union['IntPoly', int]) -> 'IntPoly':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self) -> 'IntPoly':
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union['IntPoly', int]) -> 'IntPoly':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> 'IntPoly':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Union['IntPoly', int]) -> 'IntPoly':
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly()
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return IntPoly(tuple(result))

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        return self.eval_at(t)

    def to_list(self) -> List[int]:
        """Coefficients lowest-degree-first (the canonical rendering)"""
        return list(self.coeffs)

    def __str__(self) -> str:
        return str(self.to_list())

    def pretty(self, var: str = 'x') -> str:
        """Conventional rendering, e.g. 'x^3 - 2x^2 + x'"""
        if self.is_zero():
            return '0'

        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return ' '.join(terms)


def _coerce(value: Union[IntPoly, int]):
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    return NotImplemented


# Functional spellings of the ring operations

def degree(p: IntPoly) -> int:
    return p.degree()


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def neg(p: IntPoly) -> IntPoly:
    return -p


def scale(p: IntPoly, c: int) -> IntPoly:
    return p.scale(c)


def eval_at(p: IntPoly, t: int) -> int:
    return p.eval_at(t)


def coeff_bound(p: IntPoly) -> int:
    return p.coeff_bound()


def leading_coeff(p: IntPoly) -> int:
    return p.leading_coeff()
