import pytest

import oracles
from gammaext import catalog
from gammaext.connectivity import (
    MODES,
    connectivity_level,
    connectivity_witness,
    find_separation,
    girth_bound_check,
    is_k_connected,
    is_separation,
)
from gammaext.errors import SizeError
from gammaext.matroid import direct_sum
from gammaext.reports import FAIL, PASS
from test_matroid import small_matroids


def oracle_least(m, j):
    """Least separation by the oracle, as a frozenset of labels, or None."""
    seps = oracles.separations(list(m.columns), j)
    if not seps:
        return None
    return frozenset(m.labels[i] for i in min(a for a, _ in seps))


def test_fano_is_three_connected(fano):
    assert find_separation(fano, 2) is None
    for mode in MODES:
        assert is_k_connected(fano, 3, mode)
        assert is_k_connected(fano, 2, mode)


def test_fano_extensions(fano_x, fano_y):
    assert is_k_connected(fano_y.result, 3)
    assert not is_k_connected(fano_x.result, 3)
    assert is_k_connected(fano_x.result, 2)
    sep = find_separation(fano_x.result, 2)
    assert sep is not None
    assert is_separation(fano_x.result, sep.side_a, sep.side_b, 2)
    a, b = sep.as_lists()
    assert (a, b) == (["1", "2", "3", "4", "5", "6", "7"], ["g1", "g2"])
    for mode in MODES:
        assert is_k_connected(fano_y.result, 3, mode)
        assert not is_k_connected(fano_x.result, 3, mode)


def test_direct_sum_splits_at_order_one(fano, u23):
    m = direct_sum(fano, u23)
    sep = find_separation(m, 1)
    assert sep is not None
    assert {sep.side_a, sep.side_b} == {fano.ground_set, u23.ground_set}
    assert not is_k_connected(m, 2)


def test_connected_has_no_one_separation():
    for m in small_matroids(count=40):
        assert (find_separation(m, 1) is None) == m.is_connected()
        for mode in MODES:
            assert is_k_connected(m, 2, mode) == m.is_connected()


def test_search_matches_oracle():
    for m in small_matroids(count=60):
        for j in range(1, len(m) // 2 + 1):
            sep = find_separation(m, j)
            want = oracle_least(m, j)
            assert (sep.side_a if sep else None) == want
            if sep:
                assert sep.side_b == m.ground_set - sep.side_a
                assert is_separation(m, sep.side_a, sep.side_b, j)


def test_witness_is_symmetric_in_sides():
    for m in small_matroids(count=30):
        for j in (1, 2, 3):
            sep = find_separation(m, j)
            if sep:
                assert is_separation(m, sep.side_b, sep.side_a, j)


def test_monotone_in_order_for_fixed_partition():
    for m in small_matroids(count=30):
        for j in (1, 2, 3):
            sep = find_separation(m, j)
            if sep and min(len(sep.side_a), len(sep.side_b)) >= j + 1:
                assert is_separation(m, sep.side_a, sep.side_b, j + 1)
                assert find_separation(m, j + 1) is not None


def test_is_separation_rejects_non_partitions(fano):
    assert not is_separation(fano, {"1"}, {"2"}, 1)
    assert not is_separation(fano, fano.ground_set, set(), 1)


def test_modes_differ_only_in_what_they_forbid(fano):
    # paper mode forbids only 4-separations here, and F7 has none
    assert is_k_connected(fano, 5, "paper")
    assert not is_k_connected(fano, 5, "cumulative")
    assert not is_k_connected(fano, 4, "paper")
    assert connectivity_level(fano, "cumulative") == 3
    sep = connectivity_witness(fano, 5, "cumulative")
    assert sep.order == 3


def test_mode_and_k_errors(fano):
    with pytest.raises(ValueError):
        is_k_connected(fano, 3, "tutte")
    with pytest.raises(ValueError):
        is_k_connected(fano, 1)
    with pytest.raises(ValueError):
        find_separation(fano, 0)
    with pytest.raises(SizeError):
        find_separation(fano, 1, bound=5)


def test_named_fixture_connectivity():
    assert is_k_connected(catalog.r10(), 4)
    assert is_k_connected(catalog.r10(), 4, "cumulative")
    ag = catalog.ag32()
    sep = find_separation(ag, 3)
    assert sep is not None and is_separation(ag, sep.side_a, sep.side_b, 3)
    assert not is_k_connected(ag, 4)
    assert is_k_connected(ag, 3, "cumulative")


def test_girth_bound_check_examples(fano, fano_y):
    r = girth_bound_check(fano, 3)
    assert r.verdict == PASS
    assert (r.notes["girth"], r.notes["cogirth"]) == (3, 4)
    assert girth_bound_check(fano_y.result, 3).verdict == PASS
    bad = girth_bound_check(catalog.ag32(), 5)
    assert bad.verdict == FAIL
    circuit = bad.counterexample["circuit"]
    assert len(circuit) == 4
    assert circuit_is_minimal_dependent(catalog.ag32(), circuit)


def circuit_is_minimal_dependent(m, labels):
    idx = [m.labels.index(x) for x in labels]
    cols = list(m.columns)
    if not oracles.dependent(cols, idx):
        return False
    return all(not oracles.dependent(cols, [i for i in idx if i != e]) for e in idx)
