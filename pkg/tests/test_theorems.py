import json
import re

import pytest

from ncgraph.catalog import get_group, noncyclic_catalog, standard_catalog
from ncgraph.graphs import SimpleGraph
from ncgraph.noncyclic import NonCyclicGraph, build_noncyclic_graph
from ncgraph.theorems import (
    ACCEPTABLE_CHECKS,
    CHARACTERIZATION_CHECKS,
    DOMINATION_CHECKS,
    STRUCTURAL_CHECKS,
    Status,
    run_all,
    verify_acceptable_theory,
    verify_characterizations,
    verify_domination_theorems,
    verify_structural_lemmas,
)

CATALOG = standard_catalog()
ALL_IDS = [c.theorem for c in STRUCTURAL_CHECKS + CHARACTERIZATION_CHECKS + ACCEPTABLE_CHECKS + DOMINATION_CHECKS]
# Inverse pairs {x, x^-1} that form a P2 component of the complement have no
# common neighbour, so the unrestricted common-neighbour claim fails exactly here.
COMMON_NEIGHBOUR_COUNTEREXAMPLES = {"S3", "Q8", "Z3xZ3", "A4", "Dic3"}


@pytest.fixture(scope="module")
def report():
    return run_all(CATALOG)


def test_every_pair_appears_once(report):
    pairs = [(e.theorem, e.group) for e in report.entries]
    assert len(pairs) == len(set(pairs)) == len(ALL_IDS) * len(CATALOG)


def test_cyclic_groups_are_not_applicable(report):
    for e in report.entries:
        if e.group.startswith("Z") and e.group[1:].isdigit():
            assert e.status is Status.NA


def test_deterministic(report):
    assert run_all(CATALOG).to_json() == report.to_json()


def test_json_schema(report):
    rows = json.loads(report.to_json())
    assert all(set(r) == {"theorem", "group", "status", "witness"} for r in rows)
    assert {r["status"] for r in rows} <= {"pass", "fail", "na"}


def test_only_failures_are_common_neighbour_counterexamples(report):
    fails = report.failures()
    assert {e.theorem for e in fails} == {"complement_edge_has_common_neighbour"}
    assert {e.group for e in fails} == COMMON_NEIGHBOUR_COUNTEREXAMPLES
    for e in fails:
        group = get_group(e.group).group
        a, b = re.fullmatch(r"complement edge (.+)-(.+) has no common neighbour", e.witness).groups()
        assert group.inverse(group.index_of(a)) == group.index_of(b)


def test_refined_common_neighbour_passes(report):
    rows = report.by_theorem("complement_edge_has_common_neighbour_unless_inverse_pair")
    assert all(r.status is not Status.FAIL for r in rows)


def test_structural_examples():
    r = verify_structural_lemmas(CATALOG)
    assert r.lookup("diameter_one_iff_elementary_abelian_2", "Z2^3").status is Status.PASS
    connected = r.by_theorem("connected_diameter_at_most_3")
    assert sum(e.status is Status.PASS for e in connected) == len(noncyclic_catalog())
    assert r.lookup("min_degree_at_least_2", "D8").status is Status.PASS
    assert build_noncyclic_graph(get_group("D8").group).graph.min_degree() == 4
    # abelian-only and |Cyc| conditions
    assert r.lookup("abelian_complement_not_isolated_and_degree_one", "D8").status is Status.NA
    assert r.lookup("cyclicizer_index_at_least_3", "Q8").status is Status.PASS
    assert r.lookup("complement_min_degree_at_least_2", "Q8").status is Status.NA
    assert r.lookup("complement_min_degree_at_least_2", "Z6xZ2").status is Status.PASS


def test_observations_report_degree_one_orders():
    r = verify_structural_lemmas(CATALOG)
    text = "\n".join(r.observations)
    assert "Q8: degree-1 complement vertices have orders [4], |Cyc(G)| = 2" in text
    assert "S3: degree-1 complement vertices have orders [3], |Cyc(G)| = 1" in text


def test_characterizations():
    r = verify_characterizations(CATALOG)
    assert r.passed
    assert r.lookup("complement_K3_plus_isolated_iff_D8", "D8").status is Status.PASS
    assert r.lookup("complement_K4_plus_isolated_iff_D10", "D10").status is Status.PASS
    assert r.lookup("complement_K3_plus_isolated_iff_D8", "Q8").status is Status.NA
    assert r.lookup("graph_is_cycle_iff_Z2xZ2", "Z2^2").status is Status.PASS


def test_acceptable_theory():
    r = verify_acceptable_theory(CATALOG)
    assert r.passed
    applicable = {e.group for e in r.entries if e.status is Status.PASS}
    assert applicable == {"S3", "A4"}


def test_domination_theorems():
    r = verify_domination_theorems(CATALOG)
    assert r.passed
    assert r.lookup("gamma_sum_classification", "Q8").status is Status.NA
    assert r.lookup("gamma_sum_classification", "Z4xZ2").status is Status.PASS
    half = [e for e in r.by_theorem("complement_gamma_half_iff_p2_matching") if e.status is not Status.NA]
    assert [e.group for e in half] == ["Z3xZ3"]


def test_single_group_catalog():
    r = run_all([get_group("Z2^2")])
    assert r.passed
    assert sum(e.status is Status.NA for e in r.entries) > 0


def test_empty_catalog_rejected():
    with pytest.raises(ValueError):
        run_all([])


def _corrupted(group):
    ncg = build_noncyclic_graph(group)
    g = ncg.graph
    # drop the edge between the first two vertices (or add one if absent)
    adj = list(g.adjacency)
    adj[0] ^= 0b10
    adj[1] ^= 0b01
    return NonCyclicGraph(SimpleGraph(g.vertex_count, adj), group, ncg.vertex_elements, ncg.cyc)


def test_corrupted_adjacency_is_caught():
    catalog = [get_group(n) for n in ("Z2^2", "D8", "Z2^3")]
    r = run_all(catalog, builder=_corrupted)
    fails = r.failures()
    assert fails
    assert all(f.witness for f in fails)
    assert {f.group for f in fails} == {"Z2^2", "D8", "Z2^3"}
