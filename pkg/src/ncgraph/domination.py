"""Exact minimum dominating sets.

The solver is a branch and bound over bitsets: pick the undominated vertex
with the fewest ways to be dominated and branch on each vertex of its closed
neighbourhood.  A greedy cover gives the initial incumbent.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .graphs import SimpleGraph, bits

__all__ = [
    "SizeBoundExceeded",
    "DominatingSetResult",
    "is_dominating_set",
    "domination_number",
    "greedy_dominating_set",
    "brute_force_gamma",
    "gamma_bounds_check",
    "SOLVER_BOUND",
    "BRUTE_FORCE_BOUND",
]

SOLVER_BOUND = 64
BRUTE_FORCE_BOUND = 20


class SizeBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class DominatingSetResult:
    gamma: int
    witness: tuple[int, ...]
    lower_bound: int
    greedy_bound: int

    def to_dict(self, labels=None) -> dict:
        witness = [labels[v] for v in self.witness] if labels is not None else list(self.witness)
        return {"gamma": self.gamma, "witness": witness}


def _closed_masks(graph: SimpleGraph) -> list[int]:
    return [row | (1 << v) for v, row in enumerate(graph.adjacency)]


def is_dominating_set(graph: SimpleGraph, vertices) -> bool:
    full = (1 << graph.vertex_count) - 1
    covered = 0
    for v in vertices:
        covered |= graph.adjacency[v] | (1 << v)
    return covered & full == full


def greedy_dominating_set(graph: SimpleGraph) -> tuple[int, ...]:
    """Repeatedly take the vertex covering most undominated vertices (lowest index on ties)."""
    closed = _closed_masks(graph)
    undominated = (1 << graph.vertex_count) - 1
    chosen = []
    while undominated:
        v = max(range(graph.vertex_count), key=lambda u: ((closed[u] & undominated).bit_count(), -u))
        chosen.append(v)
        undominated &= ~closed[v]
    return tuple(sorted(chosen))


def domination_number(graph: SimpleGraph) -> DominatingSetResult:
    m = graph.vertex_count
    if m < 1:
        raise ValueError("graph must have at least one vertex")
    if m > SOLVER_BOUND:
        raise SizeBoundExceeded(f"solver handles at most {SOLVER_BOUND} vertices, got {m}")

    closed = _closed_masks(graph)
    lower = math.ceil(m / (graph.max_degree() + 1))
    greedy = greedy_dominating_set(graph)

    # isolated vertices must dominate themselves
    forced = [v for v in range(m) if graph.adjacency[v] == 0]
    start_cover = 0
    for v in forced:
        start_cover |= closed[v]
    full = (1 << m) - 1

    best = list(greedy)
    chosen = list(forced)

    def search(undominated: int) -> None:
        nonlocal best
        if not undominated:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        budget = len(best) - len(chosen) - 1  # vertices we may still add to beat best
        if budget <= 0:
            return
        # lower bound on vertices still needed
        reach = max((closed[v] & undominated).bit_count() for v in range(m))
        if -(-undominated.bit_count() // reach) > budget:
            return
        # undominated vertex with the fewest dominators, lowest index on ties
        target = min(bits(undominated), key=lambda u: (closed[u].bit_count(), u))
        for v in bits(closed[target]):
            chosen.append(v)
            search(undominated & ~closed[v])
            chosen.pop()

    search(full & ~start_cover)
    witness = tuple(sorted(best))
    gamma = len(witness)
    assert is_dominating_set(graph, witness)
    assert lower <= gamma <= len(greedy), (lower, gamma, len(greedy))
    return DominatingSetResult(gamma, witness, lower, len(greedy))


def brute_force_gamma(graph: SimpleGraph) -> int:
    """Smallest dominating set size by trying subsets in increasing size."""
    m = graph.vertex_count
    if m > BRUTE_FORCE_BOUND:
        raise SizeBoundExceeded(f"brute force handles at most {BRUTE_FORCE_BOUND} vertices, got {m}")
    if m == 0:
        return 0
    for size in range(1, m + 1):
        for subset in itertools.combinations(range(m), size):
            if is_dominating_set(graph, subset):
                return size
    return m


def gamma_bounds_check(graph: SimpleGraph) -> bool:
    """Check the classical domination inequalities for ``graph`` and its complement.

    * no isolated vertex implies ``gamma <= m/2``
    * ``gamma + gamma_bar <= m + 1`` and ``gamma * gamma_bar <= m``
    * ``gamma == 1`` iff some vertex has degree ``m - 1``
    """
    m = graph.vertex_count
    g = domination_number(graph).gamma
    gbar = domination_number(graph.complement()).gamma
    ok = True
    if graph.min_degree() > 0:
        ok &= 2 * g <= m
    ok &= g + gbar <= m + 1
    ok &= g * gbar <= m
    ok &= (g == 1) == (graph.max_degree() == m - 1)
    return bool(ok)
