"""
Exhaustive Sweeps
Construct, verify and optionally minimize every function on {0, ..., n-1}.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from .errors import InputError
from .funcgraph import FiniteFunction, enumerate_functions
from .linrep import Certificate, LinearRepresentation, Mode, construct, verify
from .oracle import SearchBudget, search_minimal


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BatchRow:
    """Result of one function in a sweep"""
    function: FiniteFunction
    representation: LinearRepresentation
    certificate: Certificate
    minimal_m: Optional[int] = None

    @property
    def verified(self) -> bool:
        return self.certificate.passed


@dataclass(frozen=True)
class BatchSummary:
    """Totals of a sweep"""
    n: int
    mode: Mode
    total: int
    verified: int
    failures: List[str]
    with_minimal: bool

    def to_dict(self):
        return {
            'n': self.n,
            'mode': self.mode.value,
            'total': self.total,
            'verified': self.verified,
            'failures': list(self.failures),
            'with_minimal': self.with_minimal,
        }


def _process(
    f: FiniteFunction,
    mode: Mode,
    with_minimal: bool,
    budget: Optional[SearchBudget],
) -> BatchRow:
    rep = construct(f, mode)
    certificate = verify(f, rep)
    minimal_m = None
    if with_minimal:
        result = search_minimal(f, budget)
        minimal_m = result.representation.m if result.found else None
    return BatchRow(function=f, representation=rep, certificate=certificate, minimal_m=minimal_m)


def run_sweep(
    n: int,
    mode: Mode = Mode.BOUND,
    with_minimal: bool = False,
    workers: int = 1,
    budget: Optional[SearchBudget] = None,
    cap: Optional[int] = None,
) -> List[BatchRow]:
    """
    Process every function on n elements.

    Rows are returned in lexicographic order of the image tables regardless
    of the number of workers.

    Raises:
        EnumerationCapError: If n exceeds the enumeration cap
    """
    if mode not in (Mode.BOUND, Mode.TIGHT):
        raise InputError(f"sweeps run in bound or tight mode, not '{mode.value}'")

    functions = list(enumerate_functions(n, cap=cap))
    if workers <= 1:
        rows = [_process(f, mode, with_minimal, budget) for f in functions]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(
                lambda f: _process(f, mode, with_minimal, budget), functions
            ))

    logger.info(f"Sweep over n={n} ({mode.value}) processed {len(rows)} functions")
    return rows


def summarize(n: int, mode: Mode, rows: List[BatchRow], with_minimal: bool) -> BatchSummary:
    failures = [row.function.render() for row in rows if not row.verified]
    if failures:
        logger.error(f"{len(failures)} functions failed verification on n={n}")
    return BatchSummary(
        n=n,
        mode=mode,
        total=len(rows),
        verified=len(rows) - len(failures),
        failures=failures,
        with_minimal=with_minimal,
    )
