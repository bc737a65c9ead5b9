import pytest

from ncgraph.catalog import get_group, noncyclic_catalog
from ncgraph.graphs import ComponentKind, components, is_union_of_p2_and_isolated, matches_clique_plus_isolated
from ncgraph.groups import (
    alternating_group,
    cyclic_group,
    cyclicizer_of,
    dihedral_group,
    direct_product,
    elementary_abelian_2,
    symmetric_group,
)
from ncgraph.noncyclic import (
    GroupIsCyclic,
    acceptable_closed_parts,
    build_noncyclic_graph,
    degree_identity_check,
    is_acceptable,
    noncyclic_complement,
)

from oracles import noncyclic_edges

NONCYCLIC = noncyclic_catalog()


@pytest.mark.parametrize("entry", NONCYCLIC, ids=lambda e: e.name)
def test_graph_matches_oracle(entry):
    ncg = build_noncyclic_graph(entry.group)
    verts, edges = noncyclic_edges(entry.group)
    assert ncg.labels == verts
    labels = ncg.labels
    assert {frozenset((labels[u], labels[v])) for u, v in ncg.graph.edges()} == edges


def test_klein_four_is_triangle():
    g = build_noncyclic_graph(elementary_abelian_2(2)).graph
    assert g.vertex_count == 3 and g.edge_count() == 3


def test_d8():
    ncg = build_noncyclic_graph(dihedral_group(8))
    assert ncg.graph.vertex_count == 7
    comps = components(noncyclic_complement(ncg).graph)
    assert sorted((c.kind.value, c.size) for c in comps) == [("clique", 3)] + [("isolated", 1)] * 4
    s = ncg.vertex_of(ncg.group.index_of("s"))
    assert ncg.graph.degree(s) == 6


def test_s3_complement():
    ncg = build_noncyclic_graph(symmetric_group(3))
    assert ncg.graph.vertex_count == 5
    assert is_union_of_p2_and_isolated(noncyclic_complement(ncg).graph) == (1, 3)


def test_cyclic_group_rejected():
    with pytest.raises(GroupIsCyclic):
        build_noncyclic_graph(cyclic_group(6))


def test_complement_examples():
    d10 = noncyclic_complement(build_noncyclic_graph(dihedral_group(10)))
    assert matches_clique_plus_isolated(d10.graph, 4, 5)
    z3z3 = noncyclic_complement(build_noncyclic_graph(direct_product(cyclic_group(3), cyclic_group(3))))
    assert is_union_of_p2_and_isolated(z3z3.graph) == (4, 0)
    e8 = noncyclic_complement(build_noncyclic_graph(elementary_abelian_2(3)))
    assert e8.graph.vertex_count == 7 and e8.graph.edge_count() == 0
    assert noncyclic_complement(e8).graph == build_noncyclic_graph(elementary_abelian_2(3)).graph


def test_degree_identity_examples():
    v4 = build_noncyclic_graph(elementary_abelian_2(2))
    assert all(v4.graph.degree(v) == 4 - 2 for v in range(3))
    d8 = dihedral_group(8)
    assert 8 - len(cyclicizer_of(d8, d8.index_of("s"))) == 6


@pytest.mark.parametrize("entry", NONCYCLIC, ids=lambda e: e.name)
def test_graph_invariants(entry):
    g = entry.group
    ncg = build_noncyclic_graph(g)
    k = ncg.graph.vertex_count
    assert 0 not in ncg.vertex_elements
    assert list(ncg.vertex_elements) == sorted(ncg.vertex_elements)
    assert k == g.order - len(ncg.cyc) and k < g.order < 2 * k
    assert degree_identity_check(ncg)
    assert degree_identity_check(noncyclic_complement(ncg))
    for v, x in enumerate(ncg.vertex_elements):
        xi = g.inverse(x)
        assert ncg.graph.neighborhood(v) == ncg.graph.neighborhood(ncg.vertex_of(xi))
        if ncg.graph.degree(v) == k - 1:
            assert g.element_order(x) == 2
    involutions = [v for v, x in enumerate(ncg.vertex_elements) if g.element_order(x) == 2]
    for a in involutions:
        for b in involutions:
            assert a == b or ncg.graph.has_edge(a, b)
    assert all(c.kind is not ComponentKind.CYCLE for c in components(noncyclic_complement(ncg).graph))


def test_acceptable():
    assert is_acceptable(symmetric_group(3))
    assert is_acceptable(alternating_group(4))
    assert not is_acceptable(elementary_abelian_2(2))
    assert not is_acceptable(dihedral_group(8))
    assert acceptable_closed_parts(symmetric_group(3)) == (False, True)
    assert acceptable_closed_parts(alternating_group(4)) == (True, False)


def test_a4_complement():
    co = noncyclic_complement(build_noncyclic_graph(get_group("A4").group))
    assert is_union_of_p2_and_isolated(co.graph) == (4, 3)
