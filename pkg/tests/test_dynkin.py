import pytest

from kacscope.dynkin import (
    FiniteFactor,
    UnsupportedSubdiagramError,
    canonical_factors,
    classify_nodes,
    factors_type_string,
    sort_factors,
    total_root_count,
)


@pytest.mark.parametrize(
    "family,rank,count",
    [
        ("A", 1, 2),
        ("A", 5, 30),
        ("B", 2, 8),
        ("B", 7, 98),
        ("D", 4, 24),
        ("D", 12, 264),
        ("E", 6, 72),
        ("E", 7, 126),
        ("E", 8, 240),
        ("F", 4, 48),
        ("G", 2, 12),
    ],
)
def test_root_counts(family, rank, count):
    assert FiniteFactor(family, rank).root_count == count


@pytest.mark.parametrize(
    "family,rank,expected",
    [
        # low-rank coincidences all funnel into one canonical name
        ("B", 1, (("A", 1),)),
        ("C", 1, (("A", 1),)),
        ("C", 2, (("B", 2),)),
        ("C", 5, (("B", 5),)),
        ("D", 2, (("A", 1), ("A", 1))),
        ("D", 3, (("A", 3),)),
        ("D", 4, (("D", 4),)),
        ("G", 2, (("G", 2),)),
    ],
)
def test_canonical_factors(family, rank, expected):
    got = canonical_factors(family, rank)
    assert tuple((f.family, f.rank) for f in got) == expected


def test_canonicalisation_preserves_root_counts():
    # B_n and C_n diagrams carry the same number of roots, and the
    # D_2 / D_3 splits are root-count preserving as well.
    assert total_root_count(canonical_factors("C", 4)) == 2 * 4 * 4
    assert total_root_count(canonical_factors("D", 2)) == 4
    assert total_root_count(canonical_factors("D", 3)) == 12


def test_type_string_formatting():
    assert factors_type_string(()) == "0"
    a2 = FiniteFactor("A", 2)
    a1 = FiniteFactor("A", 1)
    assert factors_type_string((a2, a1, a2)) == "2A2+A1"
    assert factors_type_string((a1, a1, a1)) == "3A1"
    mixed = (FiniteFactor("D", 5), FiniteFactor("A", 3))
    assert factors_type_string(mixed) == "D5+A3"


def test_sort_factors_orders_by_size():
    factors = [FiniteFactor("A", 1), FiniteFactor("D", 5), FiniteFactor("A", 3)]
    ordered = sort_factors(factors)
    assert [str(f) for f in ordered] == ["D5", "A3", "A1"]


def _chain_adjacency(mults):
    """Adjacency of a chain 0-1-...-n with the given bond multiplicities."""
    adj = {i: [] for i in range(len(mults) + 1)}
    for i, m in enumerate(mults):
        adj[i].append((i + 1, m))
        adj[i + 1].append((i, m))
    return adj


def test_classify_chains():
    assert classify_nodes((0,), {0: []}) == (FiniteFactor("A", 1),)
    assert classify_nodes((0, 1, 2), _chain_adjacency([1, 1])) == (
        FiniteFactor("A", 3),
    )
    # a double bond at the end of a chain is a B diagram either way round
    assert classify_nodes((0, 1, 2), _chain_adjacency([1, 2])) == (
        FiniteFactor("B", 3),
    )
    assert classify_nodes((0, 1, 2), _chain_adjacency([2, 1])) == (
        FiniteFactor("B", 3),
    )
    assert classify_nodes((0, 1), _chain_adjacency([3])) == (FiniteFactor("G", 2),)
    # F4: double bond in the middle of a 4-chain
    assert classify_nodes((0, 1, 2, 3), _chain_adjacency([1, 2, 1])) == (
        FiniteFactor("F", 4),
    )


def test_classify_forked_shapes():
    # D5: chain of three with two tips on one end
    adj = {
        0: [(2, 1)],
        1: [(2, 1)],
        2: [(0, 1), (1, 1), (3, 1)],
        3: [(2, 1), (4, 1)],
        4: [(3, 1)],
    }
    assert classify_nodes((0, 1, 2, 3, 4), adj) == (FiniteFactor("D", 5),)
    # E6: fork two steps from each chain end
    adj6 = _chain_adjacency([1, 1, 1, 1])
    adj6[5] = [(2, 1)]
    adj6[2].append((5, 1))
    assert classify_nodes((0, 1, 2, 3, 4, 5), adj6) == (FiniteFactor("E", 6),)


def test_classify_disconnected_components():
    adj = {0: [(1, 1)], 1: [(0, 1)], 2: [], 3: [(4, 2)], 4: [(3, 2)]}
    got = classify_nodes((0, 1, 2, 3, 4), adj)
    assert factors_type_string(got) == "B2+A2+A1"


@pytest.mark.parametrize(
    "nodes,adj",
    [
        # 3-cycle
        ((0, 1, 2), {0: [(1, 1), (2, 1)], 1: [(0, 1), (2, 1)], 2: [(0, 1), (1, 1)]}),
        # quadruple bond is not a finite diagram
        ((0, 1), {0: [(1, 4)], 1: [(0, 4)]}),
        # two double bonds on one chain
        ((0, 1, 2), {0: [(1, 2)], 1: [(0, 2), (2, 2)], 2: [(1, 2)]}),
    ],
)
def test_classify_rejects_non_finite_shapes(nodes, adj):
    with pytest.raises(UnsupportedSubdiagramError):
        classify_nodes(nodes, adj)
