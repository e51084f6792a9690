"""
Minimal-Modulus Search
Brute-force backtracking for the smallest m admitting a linear representation,
checked directly against the definition rather than the construction.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from .errors import InputError
from .funcgraph import FiniteFunction
from .linrep import LinearRepresentation, Mode


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the minimal-modulus search"""
    max_m: int = 64
    max_assignments: int = 10_000_000

    def __post_init__(self):
        if self.max_m < 1:
            raise InputError(f"max_m must be >= 1, got {self.max_m}")
        if self.max_assignments < 1:
            raise InputError(f"max_assignments must be >= 1, got {self.max_assignments}")


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of a search.

    searched_through is the largest modulus that was searched completely;
    exhausted is set when the node budget ran out before max_m was reached.
    """
    representation: Optional[LinearRepresentation]
    searched_through: int
    nodes: int
    exhausted: bool = False

    @property
    def found(self) -> bool:
        return self.representation is not None


class _BudgetExhausted(Exception):
    pass


class _Search:
    """Depth-first assignment of j values for one (m, a) cell"""

    def __init__(self, f: FiniteFunction, m: int, a: int, nodes: int, max_nodes: int):
        self.f = f
        self.m = m
        self.a = a
        self.nodes = nodes
        self.max_nodes = max_nodes
        self.j: List[Optional[int]] = [None] * f.n
        self.used: Dict[int, int] = {}

    def _propagate(self, start: int, value: int) -> Optional[List[int]]:
        """
        Assign j[start] = value and force the forward orbit.

        Returns the newly assigned indices, or None on a conflict (after
        undoing every assignment made here).
        """
        assigned = []
        index, current = start, value
        while True:
            existing = self.j[index]
            if existing is not None:
                if existing == current:
                    return assigned
                self._undo(assigned)
                return None
            if current in self.used:
                self._undo(assigned)
                return None
            self.j[index] = current
            self.used[current] = index
            assigned.append(index)
            index, current = self.f.images[index], (self.a * current) % self.m

    def _undo(self, assigned: List[int]) -> None:
        for index in assigned:
            del self.used[self.j[index]]
            self.j[index] = None

    def run(self, position: int = 0) -> bool:
        n = self.f.n
        while position < n and self.j[position] is not None:
            position += 1
        if position == n:
            return True

        for value in range(self.m):
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise _BudgetExhausted()
            assigned = self._propagate(position, value)
            if assigned is None:
                continue
            if self.run(position + 1):
                return True
            self._undo(assigned)
        return False


def search_minimal(f: FiniteFunction, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Find the representation with the smallest modulus m in [max(n, 1), max_m].

    Ties are broken by smallest a, then lexicographically smallest j. Assigning
    j on an element forces j along its forward orbit (j(f(i)) = a * j(i)).

    Args:
        f: The function to represent
        budget: Search limits; defaults to the configured oracle budget

    Returns:
        SearchResult; representation is None when nothing was found
    """
    if budget is None:
        from src.config import get_settings
        settings = get_settings()
        budget = SearchBudget(
            max_m=settings.oracle_max_m, max_assignments=settings.oracle_max_assignments
        )

    if f.n == 0:
        rep = LinearRepresentation(n=0, x=None, m=1, a=0, j=(), mode=Mode.USER)
        return SearchResult(representation=rep, searched_through=1, nodes=0)

    nodes = 0
    # moduli below n cannot hold n distinct residues
    searched_through = max(f.n, 1) - 1
    for m in range(max(f.n, 1), budget.max_m + 1):
        for a in range(m):
            search = _Search(f, m, a, nodes, budget.max_assignments)
            try:
                found = search.run()
            except _BudgetExhausted:
                logger.info(
                    f"Search budget of {budget.max_assignments} nodes exhausted at m={m}"
                )
                return SearchResult(
                    representation=None,
                    searched_through=searched_through,
                    nodes=search.nodes,
                    exhausted=True,
                )
            nodes = search.nodes
            if found:
                rep = LinearRepresentation(
                    n=f.n, x=None, m=m, a=a, j=tuple(search.j), mode=Mode.USER
                )
                logger.info(f"Minimal representation of {f.render()}: m={m}, a={a}")
                return SearchResult(representation=rep, searched_through=m, nodes=nodes)
        searched_through = m
        logger.debug(f"No representation of {f.render()} with m={m}")

    return SearchResult(
        representation=None, searched_through=budget.max_m, nodes=nodes
    )
