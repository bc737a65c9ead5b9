import itertools
from collections import Counter

import pytest

from ncgraph.catalog import UnknownGroup, compute_tags, get_group, noncyclic_catalog, standard_catalog
from ncgraph.groups import groups_isomorphic, symmetric_group

CATALOG = standard_catalog()


def test_size_and_determinism():
    assert len(CATALOG) == 31
    assert [e.name for e in CATALOG] == [e.name for e in standard_catalog.__wrapped__()]


def test_per_order_counts():
    counts = Counter(e.order for e in CATALOG if e.order <= 15)
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1}
    assert dict(counts) == expected


def test_pairwise_non_isomorphic():
    for a, b in itertools.combinations(CATALOG, 2):
        assert not groups_isomorphic(a.group, b.group), (a.name, b.name)


def test_exactly_one_s3():
    s3 = symmetric_group(3)
    assert [e.name for e in CATALOG if groups_isomorphic(e.group, s3)] == ["S3"]


def test_trivial_entry():
    assert CATALOG[0].order == 1


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
def test_tags_recompute(entry):
    assert compute_tags(entry.group) <= entry.tags


def test_noncyclic_catalog():
    nc = noncyclic_catalog()
    assert all("cyclic" not in e.tags for e in nc)
    assert nc[0].name == "Z2^2"
    # 31 entries minus the 15 cyclic groups Z1..Z15
    assert len(nc) == 16


def test_lookup():
    assert get_group("z2xz2").name == "Z2^2"
    assert get_group("D8").order == 8
    with pytest.raises(UnknownGroup):
        get_group("M11")
