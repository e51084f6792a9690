"""
Linear Representations of Finite Functions
Builds m, a and an injective j with j(f(i)) = a * j(i) (mod m) from the
adjugate of the characteristic matrix x I - A_f.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from .errors import ChainViolationError, DimensionMismatchError, InputError, InvariantError
from .funcgraph import FiniteFunction, func_matrix
from .poly import IntPoly
from .polymat import PolyMatrix, adjugate, char_matrix, determinant


logger = logging.getLogger(__name__)

MIN_THRESHOLD = 2


class Mode(Enum):
    """How the evaluation point x (or the whole triple) was obtained"""
    BOUND = "bound-derived"
    TIGHT = "tight"
    EXPLICIT = "explicit"
    USER = "user-supplied"

    @property
    def constructed(self) -> bool:
        return self is not Mode.USER


@dataclass(frozen=True)
class RowPolynomials:
    """
    Row polynomials p_i(x) = sum_k adj(xI - A)[i][k] * (k+1) and det(xI - A).
    """
    n: int
    p: Tuple[IntPoly, ...]
    char_poly: IntPoly
    adjugate: PolyMatrix

    def evaluate(self, x: int) -> Tuple[List[int], int]:
        """Return ([p_0(x), ..., p_{n-1}(x)], char_poly(x))"""
        return [p.eval_at(x) for p in self.p], self.char_poly.eval_at(x)


@dataclass(frozen=True)
class LinearRepresentation:
    """
    A modulus m, multiplier a and embedding j with j(f(i)) = a * j(i) (mod m).

    x is the evaluation point for constructed representations and None for
    user-supplied ones.
    """
    n: int
    x: Optional[int]
    m: int
    a: int
    j: Tuple[int, ...]
    mode: Mode

    @property
    def degenerate(self) -> bool:
        return self.n == 0

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form; integers are rendered as decimal strings"""
        return {
            'n': self.n,
            'x': None if self.x is None else str(self.x),
            'm': str(self.m),
            'a': str(self.a),
            'j': [str(v) for v in self.j],
            'mode': self.mode.value,
        }


@dataclass(frozen=True)
class CertificateEntry:
    """Verification record for one domain element"""
    i: int
    image: int
    j_i: int
    j_image: int
    a_j_i_mod_m: int
    residual: Optional[int]
    congruent: bool


@dataclass(frozen=True)
class Certificate:
    """Per-element checks of a candidate linear representation"""
    entries: Tuple[CertificateEntry, ...]
    injective: bool
    ordered: bool
    congruent: bool
    identity_holds: Optional[bool]
    mode: Mode
    modulus: int

    @property
    def passed(self) -> bool:
        if not (self.injective and self.congruent):
            return False
        if self.mode.constructed:
            return self.ordered and bool(self.identity_holds)
        return True

    def first_failure(self) -> Optional[str]:
        """Describe the first failed check, or None if verification passed"""
        if not self.injective:
            return self._injectivity_failure()
        for entry in self.entries:
            if not entry.congruent:
                return (
                    f"congruence at i={entry.i}: j(f(i))={entry.j_image} but "
                    f"a*j(i) mod m={entry.a_j_i_mod_m}"
                )
        if self.mode.constructed:
            if not self.ordered:
                return "ordering: chain 0 < j(0) < ... < j(n-1) < m does not hold"
            for entry in self.entries:
                if entry.residual != 0:
                    return f"exact identity at i={entry.i}: residual {entry.residual}"
        return None

    def _injectivity_failure(self) -> str:
        seen: Dict[int, int] = {}
        for entry in self.entries:
            if entry.j_i in seen:
                return (
                    f"injectivity at i={entry.i}: j(i)={entry.j_i} repeats j({seen[entry.j_i]})"
                )
            if not 0 <= entry.j_i < self.modulus:
                return (
                    f"injectivity at i={entry.i}: j(i)={entry.j_i} is outside [0, {self.modulus})"
                )
            seen[entry.j_i] = entry.i
        return "injectivity: j values are not distinct residues in [0, m)"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'injective': self.injective,
            'ordered': self.ordered,
            'congruent': self.congruent,
            'identity_holds': self.identity_holds,
            'first_failure': self.first_failure(),
            'entries': [
                {
                    'i': e.i,
                    'f_i': e.image,
                    'j_i': str(e.j_i),
                    'j_f_i': str(e.j_image),
                    'a_j_i_mod_m': str(e.a_j_i_mod_m),
                    'residual': None if e.residual is None else str(e.residual),
                }
                for e in self.entries
            ],
        }


def row_polynomials(f: FiniteFunction) -> RowPolynomials:
    """
    Compute p_i(x) = sum_k M(x)[i][k] * (k+1) with M = adj(xI - A_f).

    Raises:
        InputError: If n = 0
        InvariantError: If a row polynomial lacks degree n-1 and leading
            coefficient i+1, or det(xI - A) is not monic of degree n
    """
    n = f.n
    if n == 0:
        raise InputError("row polynomials are undefined for the empty function (n = 0)")

    chi = char_matrix(func_matrix(f))
    adj = adjugate(chi)
    char_poly = determinant(chi)

    p = tuple(
        sum((adj[i, k].scale(k + 1) for k in range(n)), IntPoly.zero())
        for i in range(n)
    )

    if char_poly.degree() != n or char_poly.leading_coeff() != 1:
        raise InvariantError(f"characteristic polynomial {char_poly} is not monic of degree {n}")
    for i, poly in enumerate(p):
        if poly.degree() != n - 1 or poly.leading_coeff() != i + 1:
            raise InvariantError(
                f"row polynomial p_{i} = {poly} should have degree {n - 1} "
                f"and leading coefficient {i + 1}"
            )

    logger.debug(f"Row polynomials for {f.render()}: {[str(q) for q in p]}")
    return RowPolynomials(n=n, p=p, char_poly=char_poly, adjugate=adj)


def threshold_targets(rp: RowPolynomials) -> List[Tuple[str, IntPoly]]:
    """
    The polynomials whose positivity gives the strict chain and x < m.

    p_0, consecutive differences p_{i+1} - p_i, m - p_{n-1}, and m - x
    (the last omitted for n = 1, where m = x - 1).
    """
    n = rp.n
    targets = [("p_0", rp.p[0])]
    for i in range(n - 1):
        targets.append((f"p_{i + 1} - p_{i}", rp.p[i + 1] - rp.p[i]))
    targets.append((f"m - p_{n - 1}", rp.char_poly - rp.p[n - 1]))
    if n >= 2:
        targets.append(("m - x", rp.char_poly - IntPoly.x()))
    return targets


def threshold(rp: RowPolynomials) -> int:
    """
    Sufficiency point x*: every integer x >= x* satisfies the strict chain
    (and x < m for n >= 2). It is the largest coefficient bound among the
    targets, and at least 2.

    Raises:
        InvariantError: If a target has a non-positive leading coefficient
    """
    bound = MIN_THRESHOLD
    for name, poly in threshold_targets(rp):
        if poly.leading_coeff() < 1:
            raise InvariantError(
                f"threshold target {name} = {poly} has non-positive leading coefficient"
            )
        bound = max(bound, poly.coeff_bound())
    return bound


def chain_violation(values: List[int], m: int) -> Optional[str]:
    """First violated inequality of 0 < y_0 < ... < y_{n-1} < m, or None"""
    chain = [0] + list(values) + [m]
    labels = ["0"] + [f"y_{i}" for i in range(len(values))] + ["m"]
    for k in range(len(chain) - 1):
        if not chain[k] < chain[k + 1]:
            return f"{labels[k]} < {labels[k + 1]} fails ({chain[k]} >= {chain[k + 1]})"
    return None


def chain_violation_at(rp: RowPolynomials, x: int) -> Optional[str]:
    values, m = rp.evaluate(x)
    return chain_violation(values, m)


def tight_x(rp: RowPolynomials) -> int:
    """
    Smallest x >= 2 at which the strict chain holds.

    Raises:
        InvariantError: If no x up to the threshold qualifies
    """
    limit = threshold(rp)
    for x in range(MIN_THRESHOLD, limit + 1):
        if chain_violation_at(rp, x) is None:
            logger.debug(f"Tight scan accepted x={x} (threshold {limit})")
            return x
    raise InvariantError(f"tight scan found no valid x up to the threshold {limit}")


def construct(
    f: FiniteFunction,
    mode: Mode = Mode.BOUND,
    x: Optional[int] = None,
    rp: Optional[RowPolynomials] = None,
) -> LinearRepresentation:
    """
    Construct a linear representation of f.

    Args:
        f: The function to represent
        mode: BOUND uses the threshold, TIGHT the smallest valid x,
            EXPLICIT the supplied x
        x: Evaluation point, required for EXPLICIT
        rp: Row polynomials of f, if already computed

    Returns:
        LinearRepresentation with m = det(xI - A)(x), j_i = p_i(x), a = x mod m

    Raises:
        InputError: On a missing or non-positive explicit x
        ChainViolationError: If an explicit x breaks the strict chain
    """
    if mode is Mode.USER:
        raise InputError("user-supplied representations are not constructed")
    if mode is Mode.EXPLICIT:
        if x is None:
            raise InputError("explicit mode requires an evaluation point x")
        if x < 1:
            raise InputError(f"explicit x must be >= 1, got {x}")
    elif x is not None:
        raise InputError(f"an explicit x cannot be combined with mode '{mode.value}'")

    if f.n == 0:
        x_value = x if mode is Mode.EXPLICIT else MIN_THRESHOLD
        logger.info("Empty function: returning the degenerate representation")
        return LinearRepresentation(n=0, x=x_value, m=1, a=0, j=(), mode=mode)

    if rp is None:
        rp = row_polynomials(f)
    if mode is Mode.BOUND:
        x_value = threshold(rp)
    elif mode is Mode.TIGHT:
        x_value = tight_x(rp)
    else:
        x_value = x
        violation = chain_violation_at(rp, x_value)
        if violation is not None:
            raise ChainViolationError(x_value, violation)

    values, m = rp.evaluate(x_value)
    rep = LinearRepresentation(
        n=f.n, x=x_value, m=m, a=x_value % m, j=tuple(values), mode=mode
    )
    logger.info(f"Constructed representation of {f.render()}: x={x_value}, m={m} ({mode.value})")
    return rep


def verify(f: FiniteFunction, rep: LinearRepresentation) -> Certificate:
    """
    Check injectivity, ordering, congruence and (for constructed modes) the
    exact identity j(f(i)) = x * j(i) - m * (i+1).

    Raises:
        DimensionMismatchError: If rep.n != f.n or len(rep.j) != f.n
    """
    if rep.n != f.n or len(rep.j) != f.n:
        raise DimensionMismatchError(
            f"representation has n={rep.n} with {len(rep.j)} j-values, function has n={f.n}"
        )
    if rep.m < 1:
        raise InputError(f"modulus must be a positive integer, got {rep.m}")

    m = rep.m
    injective = all(0 <= v < m for v in rep.j) and len(set(rep.j)) == len(rep.j)
    ordered = chain_violation(list(rep.j), m) is None
    check_identity = rep.mode.constructed and rep.x is not None

    entries = []
    for i in range(f.n):
        image = f.images[i]
        j_i, j_image = rep.j[i], rep.j[image]
        residual = rep.x * j_i - m * (i + 1) - j_image if check_identity else None
        entries.append(CertificateEntry(
            i=i,
            image=image,
            j_i=j_i,
            j_image=j_image,
            a_j_i_mod_m=(rep.a * j_i) % m,
            residual=residual,
            congruent=(rep.a * j_i - j_image) % m == 0,
        ))

    congruent = all(e.congruent for e in entries)
    identity_holds = all(e.residual == 0 for e in entries) if check_identity else None
    certificate = Certificate(
        entries=tuple(entries),
        injective=injective,
        ordered=ordered,
        congruent=congruent,
        identity_holds=identity_holds,
        mode=rep.mode,
        modulus=m,
    )
    logger.debug(f"Verification of {f.render()} (m={m}): passed={certificate.passed}")
    return certificate
