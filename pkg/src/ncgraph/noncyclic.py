"""The non-cyclic graph of a finite group and its complement."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import SimpleGraph
from .groups import (
    FiniteGroup,
    cyclicizer_of,
    is_cyclic_group,
    order_two_and_three_sets,
    pair_generates_cyclic,
    subgroup_generated,
)

__all__ = [
    "GroupIsCyclic",
    "NonCyclicGraph",
    "build_noncyclic_graph",
    "noncyclic_complement",
    "degree_identity_check",
    "is_acceptable",
    "cyclic_pair_table",
    "acceptable_closed_parts",
]


class GroupIsCyclic(ValueError):
    """Raised when a non-cyclic graph is requested for a cyclic group."""


@dataclass(frozen=True)
class NonCyclicGraph:
    """A graph on ``G \\ Cyc(G)``; vertex ``i`` is group element ``vertex_elements[i]``.

    ``complemented`` records whether ``graph`` is the non-cyclic graph itself
    or its complement.
    """

    graph: SimpleGraph
    group: FiniteGroup = field(repr=False)
    vertex_elements: tuple[int, ...]
    cyc: frozenset[int]
    complemented: bool = False

    @property
    def labels(self) -> list[str]:
        return [self.group.names[x] for x in self.vertex_elements]

    def vertex_of(self, element: int) -> int:
        return self.vertex_elements.index(element)


def cyclic_pair_table(group: FiniteGroup) -> list[list[bool]]:
    """``table[x][y]`` is True iff ``<x, y>`` is cyclic; computed once per unordered pair."""
    n = group.order
    table = [[False] * n for _ in range(n)]
    for x in range(n):
        table[x][x] = True
        for y in range(x + 1, n):
            table[x][y] = table[y][x] = pair_generates_cyclic(group, x, y)
    return table


def build_noncyclic_graph(group: FiniteGroup) -> NonCyclicGraph:
    if is_cyclic_group(group):
        raise GroupIsCyclic(f"group of order {group.order} is cyclic; its non-cyclic graph has no vertices")
    cyc_pairs = cyclic_pair_table(group)
    cyc = frozenset(y for y in range(group.order) if all(cyc_pairs[x][y] for x in range(group.order)))
    vertices = tuple(x for x in range(group.order) if x not in cyc)
    adj = []
    for x in vertices:
        row = 0
        for j, y in enumerate(vertices):
            if not cyc_pairs[x][y]:
                row |= 1 << j
        adj.append(row)
    graph = SimpleGraph(len(vertices), adj)
    return NonCyclicGraph(graph, group, vertices, cyc)


def noncyclic_complement(ncg: NonCyclicGraph) -> NonCyclicGraph:
    return NonCyclicGraph(
        ncg.graph.complement(), ncg.group, ncg.vertex_elements, ncg.cyc, not ncg.complemented
    )


def degree_identity_check(ncg: NonCyclicGraph) -> bool:
    """Each vertex ``x`` of the non-cyclic graph has degree ``n - |Cyc_G(x)|``."""
    graph = noncyclic_complement(ncg).graph if ncg.complemented else ncg.graph
    n = ncg.group.order
    return all(
        graph.degree(v) == n - len(cyclicizer_of(ncg.group, x))
        for v, x in enumerate(ncg.vertex_elements)
    )


def is_acceptable(group: FiniteGroup) -> bool:
    """Every non-identity element has order 2 or 3, and both orders occur."""
    twos, threes = order_two_and_three_sets(group)
    return bool(twos) and bool(threes) and len(twos) + len(threes) + 1 == group.order


def acceptable_closed_parts(group: FiniteGroup) -> tuple[bool, bool]:
    """Whether ``S ∪ {e}`` and ``T ∪ {e}`` are subgroups (S, T: elements of order 2, 3)."""
    twos, threes = order_two_and_three_sets(group)
    s_star, t_star = twos | {0}, threes | {0}
    return (
        subgroup_generated(group, s_star) == s_star,
        subgroup_generated(group, t_star) == t_star,
    )

