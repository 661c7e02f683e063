import pytest

from ucclab import ArgumentError
from ucclab.sweep import graph_zoo, sweep_edge_rarity, sweep_graphs
from ucclab.sweep import sweep_prop1, sweep_shift, sweep_suitable
from ucclab.sweep import sweep_translates


def test_prop1_small():
    report = sweep_prop1(max_x=2, max_y=2)
    # 1 + 1 + 1 + 7 patterns with no isolated vertex
    assert report.total == 10
    assert report.passed
    assert report.counterexample is None


def test_edge_rarity_is_seeded():
    first = sweep_edge_rarity(max_x=2, max_y=2, samples=20, class_max=5,
                              seed=3)
    second = sweep_edge_rarity(max_x=2, max_y=2, samples=20, class_max=5,
                               seed=3)
    assert first.passed
    assert first.total == second.total == 22 + 20
    assert first.params['seed'] == 3


def test_translates_small():
    report = sweep_translates(max_n=5)
    assert report.total == 1 + 3 + 7 + 15 + 31
    assert report.passed


def test_shift_given_set():
    report = sweep_shift(ns=[7], elements=[1, 2, 4, 0], anchor=1)
    # every l in 1..7 with every m in 0..l-1
    assert report.total == 28
    assert report.passed


def test_shift_sampled_and_parallel():
    report = sweep_shift(ns=[5], ls=[2, 3], ms=[0, 1], sample=4, seed=1,
                         n_jobs=2)
    assert report.total == 4 * 2 * 2
    assert report.passed


def test_suitable():
    report = sweep_suitable(max_n=5, max_l=3)
    assert report.total == 5
    assert report.passed


def test_graphs():
    report = sweep_graphs(max_hypercube=2)
    assert report.total == len(graph_zoo(max_hypercube=2))
    assert report.passed
    assert report.to_dict()['passed'] is True


def test_bad_sizes():
    with pytest.raises(ArgumentError):
        sweep_prop1(max_x=0)
    with pytest.raises(ArgumentError):
        sweep_translates(max_n=0)


@pytest.mark.slow
def test_prop1_three_by_three():
    assert sweep_prop1(max_x=3, max_y=3).passed


@pytest.mark.slow
def test_edge_rarity_full():
    assert sweep_edge_rarity().passed


@pytest.mark.slow
def test_translates_up_to_seven():
    assert sweep_translates(max_n=7).passed


@pytest.mark.slow
def test_shift_default_grid():
    assert sweep_shift().passed


@pytest.mark.slow
def test_suitable_up_to_six():
    assert sweep_suitable(max_n=6, max_l=4).passed


@pytest.mark.slow
def test_graphs_with_four_cube():
    assert sweep_graphs(max_hypercube=4).passed
