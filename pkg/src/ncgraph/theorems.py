"""Statement-level checks of the non-cyclic graph results over a group catalog.

Each check produces one :class:`ReportEntry` per applicable group.  Checks
whose hypothesis does not hold for a group are recorded as ``na``.  The
"if and only if" characterizations are checked in both directions, the
converse only over the groups supplied, so a pass means "no counterexample
in the catalog" and nothing more.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from .catalog import CatalogEntry
from .domination import DominatingSetResult, domination_number, gamma_bounds_check
from .graphs import ComponentKind, components, is_single_cycle, matches_clique_plus_isolated, is_union_of_p2_and_isolated
from .groups import (
    FiniteGroup,
    direct_product,
    cyclic_group,
    dihedral_group,
    elementary_abelian_2,
    groups_isomorphic,
    is_abelian,
    is_cyclic_group,
    symmetric_group,
)
from .noncyclic import (
    NonCyclicGraph,
    acceptable_closed_parts,
    build_noncyclic_graph,
    is_acceptable,
    noncyclic_complement,
)

__all__ = [
    "Status",
    "ReportEntry",
    "VerificationReport",
    "STRUCTURAL_CHECKS",
    "CHARACTERIZATION_CHECKS",
    "ACCEPTABLE_CHECKS",
    "DOMINATION_CHECKS",
    "verify_structural_lemmas",
    "verify_characterizations",
    "verify_acceptable_theory",
    "verify_domination_theorems",
    "run_all",
]

Builder = Callable[[FiniteGroup], NonCyclicGraph]

SCOPE_NOTE = (
    "converse directions of the characterizations are checked exhaustively over "
    "the supplied catalog (orders <= 20 for the standard catalog); this is not a proof"
)


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NA = "na"


@dataclass(frozen=True)
class ReportEntry:
    theorem: str
    group: str
    status: Status
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "group": self.group,
            "status": self.status.value,
            "witness": self.witness or "",
        }


@dataclass
class VerificationReport:
    entries: list[ReportEntry] = field(default_factory=list)
    observations: list[str] = field(default_factory=list)
    scope_note: str = SCOPE_NOTE

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.entries + other.entries, self.observations + other.observations)

    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if e.status is Status.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures()

    def lookup(self, theorem: str, group: str) -> ReportEntry:
        for e in self.entries:
            if e.theorem == theorem and e.group == group:
                return e
        raise KeyError((theorem, group))

    def by_theorem(self, theorem: str) -> list[ReportEntry]:
        return [e for e in self.entries if e.theorem == theorem]

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps([e.to_dict() for e in self.entries], indent=indent)

    def summary(self) -> str:
        counts = {s: 0 for s in Status}
        for e in self.entries:
            counts[e.status] += 1
        return f"{counts[Status.PASS]} pass, {counts[Status.FAIL]} fail, {counts[Status.NA]} n/a"


# -- per-group data ----------------------------------------------------------


class _GroupData:
    """Everything the checks need about one group, computed lazily."""

    def __init__(self, entry: CatalogEntry, builder: Builder):
        self.name = entry.name
        self.group = entry.group
        self.n = entry.group.order
        self.cyclic = is_cyclic_group(entry.group)
        self._builder = builder

    def elem(self, x: int) -> str:
        return self.group.names[x]

    @cached_property
    def ncg(self) -> NonCyclicGraph:
        return self._builder(self.group)

    @cached_property
    def co(self) -> NonCyclicGraph:
        return noncyclic_complement(self.ncg)

    @property
    def t(self) -> int:
        return len(self.ncg.cyc)

    @cached_property
    def gamma(self) -> DominatingSetResult:
        return domination_number(self.ncg.graph)

    @cached_property
    def gamma_bar(self) -> DominatingSetResult:
        return domination_number(self.co.graph)

    @cached_property
    def elementary_abelian_2(self) -> bool:
        return self.n > 1 and all(k <= 2 for k in self.group.element_orders)

    def isomorphic_to(self, ref: FiniteGroup) -> bool:
        return groups_isomorphic(self.group, ref)


@dataclass(frozen=True)
class _Check:
    theorem: str
    applies: Callable[[_GroupData], bool]
    run: Callable[[_GroupData], str | None]  # returns a witness on failure

    def __call__(self, d: _GroupData) -> ReportEntry:
        if d.cyclic or not self.applies(d):
            return ReportEntry(self.theorem, d.name, Status.NA)
        witness = self.run(d)
        if witness is None:
            return ReportEntry(self.theorem, d.name, Status.PASS)
        return ReportEntry(self.theorem, d.name, Status.FAIL, witness)


def _always(d: _GroupData) -> bool:
    return True


def _trivial_cyc(d: _GroupData) -> bool:
    return d.t == 1


# -- structural lemmas ---------------------------------------------------------


def _connected_diameter(d):
    diam = d.ncg.graph.diameter()
    if diam is None:
        return "graph is disconnected"
    if diam > 3:
        return f"diameter {diam} > 3"


def _diameter_one(d):
    diam = d.ncg.graph.diameter()
    if (diam == 1) != d.elementary_abelian_2:
        return f"diameter {diam}, elementary abelian 2-group: {d.elementary_abelian_2}"


def _cyc_index(d):
    if d.n // d.t < 3:
        return f"[G:Cyc(G)] = {d.n // d.t} with |Cyc(G)| = {d.t}"


def _complement_min_degree(d):
    g = d.co.graph
    if g.min_degree() < 2:
        v = g.degrees().index(g.min_degree())
        return f"vertex {d.co.labels[v]} has degree {g.min_degree()} in the complement"


def _vertex_count(d):
    k = d.ncg.graph.vertex_count
    if not k < d.n < 2 * k:
        return f"k = {k}, n = {d.n}"
    if 0 in d.ncg.vertex_elements:
        return "identity is a vertex"


def _inverse_neighbourhood(d):
    ncg, grp = d.ncg, d.group
    pos = {x: i for i, x in enumerate(ncg.vertex_elements)}
    for v, x in enumerate(ncg.vertex_elements):
        xi = grp.inverse(x)
        if xi not in pos:
            return f"inverse of {d.elem(x)} is not a vertex"
        if ncg.graph.adjacency[v] != ncg.graph.adjacency[pos[xi]]:
            return f"N({d.elem(x)}) != N({d.elem(xi)})"


def _min_degree(d):
    g = d.ncg.graph
    if g.min_degree() < 2:
        v = g.degrees().index(g.min_degree())
        return f"vertex {d.ncg.labels[v]} has degree {g.min_degree()}"


def _involutions_adjacent(d):
    ncg = d.ncg
    inv = [v for v, x in enumerate(ncg.vertex_elements) if d.group.element_order(x) == 2]
    for i in inv:
        for j in inv:
            if i < j and not ncg.graph.has_edge(i, j):
                return f"involutions {ncg.labels[i]}, {ncg.labels[j]} not adjacent"


def _universal_order_two(d):
    g = d.ncg.graph
    for v, x in enumerate(d.ncg.vertex_elements):
        if g.degree(v) == g.vertex_count - 1 and d.group.element_order(x) != 2:
            return f"universal vertex {d.elem(x)} has order {d.group.element_order(x)}"


def _degree_one_pairs(d):
    g, co = d.co.graph, d.co
    for v, x in enumerate(co.vertex_elements):
        if g.degree(v) != 1:
            continue
        (u,) = g.neighborhood(v)
        y = co.vertex_elements[u]
        if y != d.group.inverse(x):
            return f"degree-1 vertex {d.elem(x)} is joined to {d.elem(y)}, not its inverse"
        if g.degree(u) != 1:
            return f"neighbour {d.elem(y)} of degree-1 vertex {d.elem(x)} has degree {g.degree(u)}"


def _abelian_exclusion(d):
    degs = d.co.graph.degrees()
    if 0 in degs and 1 in degs:
        labels = d.co.labels
        return f"isolated {labels[degs.index(0)]} and degree-1 {labels[degs.index(1)]} in the complement"


def _common_neighbour(d):
    g = d.co.graph
    for u, v in g.edges():
        if not g.adjacency[u] & g.adjacency[v]:
            return f"complement edge {d.co.labels[u]}-{d.co.labels[v]} has no common neighbour"


def _common_neighbour_unless_inverse(d):
    g, co = d.co.graph, d.co
    for u, v in g.edges():
        x, y = co.vertex_elements[u], co.vertex_elements[v]
        if y == d.group.inverse(x):
            continue
        if not g.adjacency[u] & g.adjacency[v]:
            return f"complement edge {co.labels[u]}-{co.labels[v]} has no common neighbour"


def _no_long_cycle(d):
    for c in components(d.co.graph):
        if c.kind is ComponentKind.CYCLE:
            return f"complement has a C{c.size} component on {[d.co.labels[v] for v in c.vertices]}"


STRUCTURAL_CHECKS = (
    _Check("connected_diameter_at_most_3", _always, _connected_diameter),
    _Check("diameter_one_iff_elementary_abelian_2", _always, _diameter_one),
    _Check("cyclicizer_index_at_least_3", lambda d: d.t > 1, _cyc_index),
    _Check("complement_min_degree_at_least_2", lambda d: d.t >= 3, _complement_min_degree),
    _Check("vertex_count_between_n_over_2_and_n", _always, _vertex_count),
    _Check("inverse_has_same_neighbourhood", _always, _inverse_neighbourhood),
    _Check("min_degree_at_least_2", _always, _min_degree),
    _Check("involutions_pairwise_adjacent", _always, _involutions_adjacent),
    _Check("universal_vertex_is_involution", _always, _universal_order_two),
    _Check("complement_degree_one_pairs_inverses", _always, _degree_one_pairs),
    _Check("abelian_complement_not_isolated_and_degree_one", lambda d: is_abelian(d.group), _abelian_exclusion),
    _Check("complement_edge_has_common_neighbour", _always, _common_neighbour),
    # the unrestricted statement fails on every inverse pair forming a P2 component
    _Check("complement_edge_has_common_neighbour_unless_inverse_pair", _always, _common_neighbour_unless_inverse),
    _Check("complement_has_no_long_cycle_component", _always, _no_long_cycle),
)


# -- characterizations -------------------------------------------------------


def _shape_iff(clique: int, ref: Callable[[], FiniteGroup], ref_name: str):
    def run(d):
        shape = matches_clique_plus_isolated(d.co.graph, clique, d.n - clique - 1)
        iso = d.isomorphic_to(ref())
        if shape and not iso:
            return f"complement is K{clique} ∪ {d.n - clique - 1}K1 but group is not {ref_name}"
        if iso and not shape:
            shape_str = " ∪ ".join(str(c) for c in components(d.co.graph))
            return f"group is {ref_name} but complement is {shape_str}"

    return run


def _cycle_iff_klein(d):
    cycle = is_single_cycle(d.ncg.graph)
    klein = d.isomorphic_to(elementary_abelian_2(2))
    if cycle != klein:
        return f"single cycle: {cycle}, isomorphic to Z2^2: {klein}"


CHARACTERIZATION_CHECKS = (
    _Check("complement_K3_plus_isolated_iff_D8", _trivial_cyc, _shape_iff(3, lambda: dihedral_group(8), "D8")),
    _Check("complement_K4_plus_isolated_iff_D10", _trivial_cyc, _shape_iff(4, lambda: dihedral_group(10), "D10")),
    _Check("graph_is_cycle_iff_Z2xZ2", _always, _cycle_iff_klein),
)


# -- acceptable groups ---------------------------------------------------------


def _acceptable_part_closed(d):
    s_closed, t_closed = acceptable_closed_parts(d.group)
    if not (s_closed or t_closed):
        return "neither S ∪ {e} nor T ∪ {e} is closed"


def _acceptable_cyc(d):
    if d.t != 1:
        return f"|Cyc(G)| = {d.t}"


def _acceptable_complement(d):
    if is_union_of_p2_and_isolated(d.co.graph) is None:
        return "complement has a component other than P2 or K1: " + " ∪ ".join(
            str(c) for c in components(d.co.graph)
        )


def _acceptable(d):
    return is_acceptable(d.group)


ACCEPTABLE_CHECKS = (
    _Check("acceptable_has_closed_part", _acceptable, _acceptable_part_closed),
    _Check("acceptable_trivial_cyclicizer", _acceptable, _acceptable_cyc),
    _Check("acceptable_complement_is_p2_and_isolated", _acceptable, _acceptable_complement),
)


# -- domination ------------------------------------------------------------------


def _gamma_below_half(d):
    if not 2 * d.gamma.gamma < d.n - 1:
        return f"gamma = {d.gamma.gamma}, n = {d.n}"


def _gamma_bar_half(d):
    attains = 2 * d.gamma_bar.gamma == d.n - d.t
    split = is_union_of_p2_and_isolated(d.co.graph)
    matching = d.t == 1 and split is not None and split == ((d.n - 1) // 2, 0)
    if attains != matching:
        return (
            f"gamma(complement) = {d.gamma_bar.gamma}, (n-t)/2 = {(d.n - d.t) / 2}, "
            f"complement is a perfect P2 matching with t = 1: {matching}"
        )


def _z3xz3() -> FiniteGroup:
    return direct_product(cyclic_group(3), cyclic_group(3))


def _gamma_sum(d):
    s = d.gamma.gamma + d.gamma_bar.gamma
    if d.elementary_abelian_2:
        expected = d.n
    elif d.isomorphic_to(symmetric_group(3)):
        expected = d.n - 1
    elif d.isomorphic_to(dihedral_group(8)):
        expected = d.n - 2
    elif d.isomorphic_to(dihedral_group(10)) or d.isomorphic_to(_z3xz3()):
        expected = d.n - 3
    else:
        expected = None
    if expected is None:
        if s >= d.n - 3:
            return f"gamma + gamma_bar = {s} = n - {d.n - s} for a group outside the classification"
    elif s != expected:
        return f"gamma + gamma_bar = {s}, expected n - {d.n - expected}"


def _bounds(attr: str):
    def run(d):
        graph = getattr(d, attr).graph
        if not gamma_bounds_check(graph):
            return "a background domination inequality fails"

    return run


DOMINATION_CHECKS = (
    _Check("noncyclic_gamma_below_half", _trivial_cyc, _gamma_below_half),
    _Check(
        "complement_gamma_half_iff_p2_matching",
        lambda d: d.n % 2 == 1 and d.t % 2 == 1,
        _gamma_bar_half,
    ),
    _Check("gamma_sum_classification", _trivial_cyc, _gamma_sum),
    _Check("domination_bounds_graph", _always, _bounds("ncg")),
    _Check("domination_bounds_complement", _always, _bounds("co")),
)


# -- drivers ---------------------------------------------------------------------


def _run(checks, catalog: Iterable[CatalogEntry], builder: Builder, data=None) -> VerificationReport:
    entries = []
    for entry in catalog:
        d = data[entry.name] if data is not None else _GroupData(entry, builder)
        entries.extend(check(d) for check in checks)
    return VerificationReport(entries)


def _degree_one_observations(catalog, builder, data=None) -> list[str]:
    notes = []
    for entry in catalog:
        d = data[entry.name] if data is not None else _GroupData(entry, builder)
        if d.cyclic:
            continue
        g = d.co.graph
        orders = sorted({d.group.element_order(x) for v, x in enumerate(d.co.vertex_elements) if g.degree(v) == 1})
        if orders:
            notes.append(f"{d.name}: degree-1 complement vertices have orders {orders}, |Cyc(G)| = {d.t}")
    return notes


def verify_structural_lemmas(catalog, builder: Builder = build_noncyclic_graph) -> VerificationReport:
    catalog = list(catalog)
    report = _run(STRUCTURAL_CHECKS, catalog, builder)
    report.observations = _degree_one_observations(catalog, builder)
    return report


def verify_characterizations(catalog, builder: Builder = build_noncyclic_graph) -> VerificationReport:
    return _run(CHARACTERIZATION_CHECKS, catalog, builder)


def verify_acceptable_theory(catalog, builder: Builder = build_noncyclic_graph) -> VerificationReport:
    return _run(ACCEPTABLE_CHECKS, catalog, builder)


def verify_domination_theorems(catalog, builder: Builder = build_noncyclic_graph) -> VerificationReport:
    return _run(DOMINATION_CHECKS, catalog, builder)


def run_all(catalog, builder: Builder = build_noncyclic_graph) -> VerificationReport:
    """All checks over ``catalog``, grouped by family; per-group data is shared."""
    catalog = list(catalog)
    if not catalog:
        raise ValueError("catalog is empty")
    data = {e.name: _GroupData(e, builder) for e in catalog}
    report = VerificationReport()
    for checks in (STRUCTURAL_CHECKS, CHARACTERIZATION_CHECKS, ACCEPTABLE_CHECKS, DOMINATION_CHECKS):
        report = report + _run(checks, catalog, builder, data)
    report.observations = _degree_one_observations(catalog, builder, data)
    return report
