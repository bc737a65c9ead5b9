"""Simple undirected graphs over vertices ``0..m-1`` with bitset adjacency.

``adjacency[v]`` is a Python int whose bit ``u`` is set iff ``u ~ v``.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "SimpleGraph",
    "ComponentKind",
    "ComponentDescriptor",
    "bits",
    "components",
    "matches_clique_plus_isolated",
    "is_union_of_p2_and_isolated",
    "is_single_cycle",
    "complete_graph",
    "empty_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "disjoint_union",
]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class SimpleGraph:
    def __init__(self, vertex_count: int, adjacency: Sequence[int]):
        if len(adjacency) != vertex_count:
            raise ValueError("adjacency must have one bitset per vertex")
        full = (1 << vertex_count) - 1
        for v, row in enumerate(adjacency):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{vertex_count - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adjacency[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        self.vertex_count = vertex_count
        self.adjacency = tuple(adjacency)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(vertex_count, adj)

    def __len__(self) -> int:
        return self.vertex_count

    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleGraph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"SimpleGraph(m={self.vertex_count}, edges={self.edge_count()})"

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range 0..{self.vertex_count - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in bits(self.adjacency[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def neighborhood(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(bits(self.adjacency[v]))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighborhood(v) | {v}

    def complement(self) -> "SimpleGraph":
        full = (1 << self.vertex_count) - 1
        return SimpleGraph(
            self.vertex_count,
            [full & ~row & ~(1 << v) for v, row in enumerate(self.adjacency)],
        )

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(sum(1 << pos[u] for u in bits(self.adjacency[v]) if u in pos))
        return SimpleGraph(len(vertices), adj)

    def bfs_distances(self, source: int) -> list[int | None]:
        self._check(source)
        dist: list[int | None] = [None] * self.vertex_count
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in bits(self.adjacency[v]):
                if dist[u] is None:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def distance(self, u: int, v: int) -> int | None:
        """Shortest-path length, or ``None`` when ``v`` is unreachable from ``u``."""
        self._check(v)
        return self.bfs_distances(u)[v]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return None not in self.bfs_distances(0)

    def diameter(self) -> int | None:
        """Largest distance between two vertices; ``None`` for a disconnected graph."""
        best = 0
        for v in range(self.vertex_count):
            dist = self.bfs_distances(v)
            if None in dist:
                return None
            best = max(best, max(dist))
        return best

    def universal_vertex(self) -> int | None:
        """First vertex adjacent to all others, if any."""
        target = self.vertex_count - 1
        for v, row in enumerate(self.adjacency):
            if row.bit_count() == target:
                return v
        return None

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.vertex_count - 1 for row in self.adjacency)

    # -- export --------------------------------------------------------------

    def to_dict(self, labels: Sequence[str] | None = None) -> dict:
        labels = list(labels) if labels is not None else [str(v) for v in range(self.vertex_count)]
        return {"m": self.vertex_count, "edges": [list(e) for e in self.edges()], "labels": labels}

    def to_json(self, labels: Sequence[str] | None = None) -> str:
        return json.dumps(self.to_dict(labels))

    def to_dot(self, labels: Sequence[str] | None = None, name: str = "G") -> str:
        labels = list(labels) if labels is not None else [str(v) for v in range(self.vertex_count)]
        lines = [f"graph {json.dumps(name)} {{"]
        for v in range(self.vertex_count):
            lines.append(f"  {v} [label={json.dumps(labels[v])}];")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "SimpleGraph":
        return cls.from_edges(data["m"], [tuple(e) for e in data["edges"]])


# -- constructors used in tests and demos -------------------------------------


def empty_graph(m: int) -> SimpleGraph:
    return SimpleGraph(m, [0] * m)


def complete_graph(m: int) -> SimpleGraph:
    full = (1 << m) - 1
    return SimpleGraph(m, [full & ~(1 << v) for v in range(m)])


def cycle_graph(m: int) -> SimpleGraph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(m: int) -> SimpleGraph:
    return SimpleGraph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def star_graph(leaves: int) -> SimpleGraph:
    """K_{1,leaves} with the hub at vertex 0."""
    return SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    adj, offset = [], 0
    for g in graphs:
        adj.extend(row << offset for row in g.adjacency)
        offset += g.vertex_count
    return SimpleGraph(offset, adj)


# -- components ---------------------------------------------------------------


class ComponentKind(enum.Enum):
    ISOLATED = "isolated"
    P2 = "P2"
    CLIQUE = "clique"
    CYCLE = "cycle"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentDescriptor:
    kind: ComponentKind
    size: int
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind is ComponentKind.CLIQUE:
            return f"K{self.size}"
        if self.kind is ComponentKind.CYCLE:
            return f"C{self.size}"
        if self.kind is ComponentKind.ISOLATED:
            return "K1"
        return f"{self.kind.value}({self.size})"


def _classify(graph: SimpleGraph, vertices: tuple[int, ...]) -> ComponentKind:
    k = len(vertices)
    if k == 1:
        return ComponentKind.ISOLATED
    if k == 2:
        return ComponentKind.P2
    mask = sum(1 << v for v in vertices)
    inner = [(graph.adjacency[v] & mask).bit_count() for v in vertices]
    if all(d == k - 1 for d in inner):
        return ComponentKind.CLIQUE
    if k >= 4 and all(d == 2 for d in inner):
        return ComponentKind.CYCLE
    return ComponentKind.OTHER


def components(graph: SimpleGraph) -> list[ComponentDescriptor]:
    """Connected components in order of their smallest vertex, each classified.

    Precedence: one vertex is isolated, two are P2, a complete component is
    a clique (triangles included), a 2-regular one on 4+ vertices a cycle.
    """
    seen = 0
    out = []
    for v in range(graph.vertex_count):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= graph.adjacency[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        vertices = tuple(bits(comp))
        out.append(ComponentDescriptor(_classify(graph, vertices), len(vertices), vertices))
    return out


def matches_clique_plus_isolated(graph: SimpleGraph, clique_size: int, isolated_count: int) -> bool:
    """True iff ``graph`` is exactly ``K_clique_size ∪ isolated_count·K1``."""
    comps = components(graph)
    isolated = sum(1 for c in comps if c.kind is ComponentKind.ISOLATED)
    big = [c for c in comps if c.kind is not ComponentKind.ISOLATED]
    if clique_size == 1:
        return not big and isolated == isolated_count + 1
    if len(big) != 1 or isolated != isolated_count:
        return False
    c = big[0]
    # a 2-clique is reported as P2
    return c.size == clique_size and c.kind in (ComponentKind.CLIQUE, ComponentKind.P2)


def is_union_of_p2_and_isolated(graph: SimpleGraph) -> tuple[int, int] | None:
    """``(p2_count, isolated_count)`` if every component is P2 or K1, else ``None``."""
    p2 = isolated = 0
    for c in components(graph):
        if c.kind is ComponentKind.P2:
            p2 += 1
        elif c.kind is ComponentKind.ISOLATED:
            isolated += 1
        else:
            return None
    return p2, isolated


def is_single_cycle(graph: SimpleGraph) -> bool:
    """Connected and 2-regular on at least 3 vertices; a triangle counts."""
    return (
        graph.vertex_count >= 3
        and all(d == 2 for d in graph.degrees())
        and graph.is_connected()
    )
