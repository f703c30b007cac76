import itertools

import pytest

import oracles
from conftest import FANO_AX, FANO_AY, FANO_ROWS
from gammaext import catalog
from gammaext.errors import DependentError, EmptyError, LabelError
from gammaext.extensions import compose_check, gamma_extension, parallel_extension, splitting
from gammaext.gf2 import rank
from gammaext.matroid import direct_sum


def test_fano_x_matrix(fano_x):
    assert fano_x.matrix.to_lists() == FANO_AX
    assert fano_x.labels == ("1", "2", "3", "4", "5", "6", "7", "g1", "g2")
    assert fano_x.x == ("1", "2")
    assert fano_x.gamma == ("g1", "g2")
    assert dict(fano_x.pairing) == {"1": "g1", "2": "g2"}


def test_fano_y_matrix(fano_y):
    assert fano_y.matrix.to_lists() == FANO_AY
    assert fano_y.gamma == ("g1", "g2", "g3")


def test_extension_rank_and_circuits(fano_x):
    mx = fano_x.result
    assert mx.rank == 4
    circuits = set(mx.circuits())
    assert frozenset({"1", "2", "g1", "g2"}) in circuits
    assert frozenset({"6", "g1", "g2"}) in circuits
    assert fano_x.gamma_set == frozenset({"g1", "g2"})
    assert fano_x.gamma_of({"2"}) == frozenset({"g2"})
    assert fano_x.x_of({"g1", "g2"}) == frozenset({"1", "2"})


def test_custom_gamma_names(fano):
    ext = gamma_extension(fano, {"2", "1"}, gamma_names=["p", "q"])
    assert ext.labels[-2:] == ("p", "q")
    assert dict(ext.pairing) == {"1": "p", "2": "q"}


def test_extension_errors(fano):
    with pytest.raises(EmptyError):
        gamma_extension(fano, set())
    with pytest.raises(DependentError):
        gamma_extension(fano, {"1", "2", "6"})
    with pytest.raises(LabelError):
        gamma_extension(fano, {"8"})
    with pytest.raises(LabelError):
        gamma_extension(fano, {"1"}, gamma_names=["3"])


def test_single_element_extension_is_a_coloop(fano):
    ext = gamma_extension(fano, {"4"})
    cols = list(ext.result.columns)
    # gamma is a coloop: removing it drops the rank
    assert oracles.rank(cols[:-1]) == oracles.rank(cols) - 1


def test_parallel_extension(fano):
    m = parallel_extension(fano, {"1", "2"})
    assert (m.rep.n_rows, m.rep.n_cols) == (3, 9)
    rows = m.rep.to_lists()
    assert [r[7] for r in rows] == [r[0] for r in FANO_ROWS]
    assert [r[8] for r in rows] == [r[1] for r in FANO_ROWS]
    assert frozenset({"1", "g1"}) in set(m.circuits())


def test_splitting_by_single_element(fano):
    m = splitting(fano, {"5"})
    cols = list(m.columns)
    i = m.labels.index("5")
    assert oracles.rank(cols[:i] + cols[i + 1:]) < oracles.rank(cols)
    assert {frozenset({"5"})} <= set(m.cocircuits())


def test_splitting_by_ground_set():
    for m in (catalog.fano(), catalog.u23(), catalog.ag32(), catalog.k4_cycle()):
        s = splitting(m, m.ground_set)
        ones = (1 << len(m)) - 1
        outside = rank(m.rep.append_row(ones)) > m.rank
        assert s.rank == m.rank + (1 if outside else 0)
    # ag32 already has the all-ones row, k4 does not
    assert splitting(catalog.ag32(), catalog.ag32().ground_set).rank == 4
    assert splitting(catalog.fano(), catalog.fano().ground_set).rank == 4


def test_splitting_errors(fano):
    with pytest.raises(EmptyError):
        splitting(fano, set())
    with pytest.raises(LabelError):
        splitting(fano, {"z"})


def test_compose_examples(fano):
    assert compose_check(fano, {"1", "2"})
    assert compose_check(fano, {"1", "2", "3"})


def test_compose_and_delete_on_catalog():
    for r, n in catalog.small_pairs(3, 7):
        for m in catalog.enumerate_matroids(r, n):
            for size in (1, 2, 3):
                for x in _independent(m, size):
                    assert compose_check(m, x)
                    ext = gamma_extension(m, x)
                    assert ext.result.delete(ext.gamma, strict=False).equals(m)


def test_extension_of_direct_sum_has_expected_labels(u23):
    m = direct_sum(u23, u23)
    ext = gamma_extension(m, {"a_1", "a_2"})
    assert ext.gamma == ("ga_1", "ga_2")


def _independent(m, size):
    for s in itertools.combinations(m.labels, size):
        if m.is_independent(s):
            yield set(s)
