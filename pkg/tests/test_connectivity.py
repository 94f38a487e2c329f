import random

import pytest

from stpack.connectivity import (
    edge_connectivity,
    enumerate_min_cuts_bruteforce,
    enumerate_min_cuts_via_packing,
)
from stpack.errors import BudgetExceededError
from stpack.fixtures import fig1, fig3l, fig3r, fig4, k4, petersen, treepar
from stpack.graphs import Multigraph, build_graph, connected_components
from stpack.tree_packing import stp_number

from oracles import brute_lambda, random_connected_multigraph


def test_lambda_fig1():
    lam, witness = edge_connectivity(fig1())
    assert lam == 2
    assert len(witness.cut_edges) == 2


def test_lambda_k4_matches_bruteforce():
    g = k4()
    lam, _ = edge_connectivity(g)
    assert lam == 3 == brute_lambda(g)


def test_lambda_treepar():
    for k in (1, 2, 3, 4):
        g = treepar(k, [(1, 2), (2, 3), (3, 4)], 4)
        assert edge_connectivity(g)[0] == k


def test_lambda_rejects_bad_input():
    with pytest.raises(ValueError):
        edge_connectivity(build_graph(1, []))
    with pytest.raises(ValueError):
        edge_connectivity(Multigraph([1, 2, 3], {0: (1, 2)}))


def test_witness_is_a_real_cut():
    rng = random.Random(75)
    for _ in range(40):
        g = random_connected_multigraph(rng)
        lam, witness = edge_connectivity(g)
        assert len(witness.cut_edges) == lam
        assert len(connected_components(g.delete_edges(witness.cut_edges))) > 1


def test_bruteforce_cut_counts_on_fixtures():
    assert len(enumerate_min_cuts_bruteforce(fig1())) == 1
    assert len(enumerate_min_cuts_bruteforce(fig3l())) == 2
    assert len(enumerate_min_cuts_bruteforce(fig3r())) == 1


def test_bruteforce_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_min_cuts_bruteforce(petersen(), budget=10)


def test_lambda_matches_bruteforce_on_fixtures():
    for build in (fig1, fig3l, fig3r, k4, petersen):
        g = build()
        assert edge_connectivity(g)[0] == brute_lambda(g)


def test_via_packing_equals_bruteforce_on_fixtures():
    fixtures = [fig1, fig3l, fig3r, fig4]
    fixtures.append(lambda: treepar(2, [(1, 2), (2, 3)], 3))
    fixtures.append(lambda: treepar(3, [(1, 2), (2, 3), (3, 4)], 4))
    for build in fixtures:
        g = build()
        _, packing = stp_number(g)
        fast = enumerate_min_cuts_via_packing(g, packing.trees)
        slow = enumerate_min_cuts_bruteforce(g)
        assert {c.cut_edges for c in fast} == {c.cut_edges for c in slow}


def test_min_cut_report():
    from stpack.connectivity import min_cut_report

    report = min_cut_report(fig3l(), include_all=True)
    assert report.lam == 2
    assert len(report.witness.cut_edges) == 2
    assert len(report.all_min_cuts) == 2
    assert min_cut_report(fig3l()).all_min_cuts is None


def test_via_packing_validates_packing():
    g = fig1()
    _, packing = stp_number(g)
    with pytest.raises(ValueError):
        enumerate_min_cuts_via_packing(g, packing.trees[:1])
    with pytest.raises(ValueError):
        enumerate_min_cuts_via_packing(g, [packing.trees[0], packing.trees[0]])


def test_min_cuts_pairwise_disjoint_on_max_stp_fixtures():
    for build in (fig1, fig3l, fig3r, fig4):
        g = build()
        cuts = enumerate_min_cuts_bruteforce(g)
        for i, a in enumerate(cuts):
            for b in cuts[i + 1 :]:
                assert not a.cut_edges & b.cut_edges


def test_lambda_matches_bruteforce_on_random_graphs():
    rng = random.Random(76)
    for _ in range(60):
        g = random_connected_multigraph(rng)
        assert edge_connectivity(g)[0] == brute_lambda(g)
