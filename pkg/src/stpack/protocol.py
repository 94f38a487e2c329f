"""Failure-tolerant routing support: uncovering collections of spanning
trees, the rooted k-tree path condition, and seeded edge-failure
simulation.

A collection of spanning trees uncovers t failures when every t-subset of
edges is disjoint from at least one tree; k pairwise edge-disjoint trees
uncover k - 1 failures by pigeonhole. The simulator draws failure sets
from a fixed, portable stream: trial i uses a Mersenne Twister seeded with
the string "{seed}:{i}" and samples edges without replacement via
random.Random.sample, so identical inputs give byte-identical reports on
any platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import BudgetExceededError
from .graphs import Multigraph, is_spanning_tree
from .tree_packing import TreePacking

DEFAULT_BUDGET = 2**22


@dataclass(frozen=True)
class UBB:
    """Spanning trees plus the failure count t the collection claims to cover."""

    trees: tuple[frozenset[int], ...]
    t: int


@dataclass(frozen=True)
class SimulationReport:
    trials: int
    survivals: int
    failures_logged: tuple[tuple[tuple[int, ...], None], ...]
    seed: int


def ubb_from_packing(packing: TreePacking) -> UBB:
    """k disjoint trees uncover any k - 1 edge failures (pigeonhole)."""
    if not packing.trees:
        raise ValueError("empty packing")
    return UBB(tuple(packing.trees), len(packing.trees) - 1)


def _checked_trees(g: Multigraph, ubb: UBB) -> list[frozenset[int]]:
    trees = [frozenset(t) for t in ubb.trees]
    for i, t in enumerate(trees):
        if not is_spanning_tree(g, t):
            raise ValueError(f"collection member {i} is not a spanning tree")
    return trees


def verify_ubb(
    g: Multigraph,
    ubb: UBB,
    budget: int = DEFAULT_BUDGET,
    trials: int | None = None,
    seed: int = 0,
) -> bool | frozenset[int]:
    """Does every t-subset of edges miss some tree in the collection?

    Exhaustive by default: returns True, or the lexicographically first
    violating edge set. When the number of t-subsets exceeds ``budget`` a
    BudgetExceededError suggests sampled mode; passing ``trials`` switches
    to seeded sampling, which returns True when no counterexample was found
    in that many draws (or the first counterexample hit).
    """
    trees = _checked_trees(g, ubb)
    edge_ids = sorted(g.edge_ids())
    if ubb.t < 0 or ubb.t >= len(edge_ids):
        raise ValueError("tolerance t must satisfy 0 <= t < |E|")
    if ubb.t == 0:
        return True
    if trials is None:
        total = comb(len(edge_ids), ubb.t)
        if total > budget:
            raise BudgetExceededError(
                f"{total} subsets exceed the budget of {budget}; "
                "pass trials= to sample instead"
            )
        for failed in combinations(edge_ids, ubb.t):
            fs = frozenset(failed)
            if not any(t.isdisjoint(fs) for t in trees):
                return fs
        return True
    for i in range(trials):
        fs = frozenset(_trial_rng(seed, i).sample(edge_ids, ubb.t))
        if not any(t.isdisjoint(fs) for t in trees):
            return fs
    return True


def _trial_rng(seed: int, trial: int) -> random.Random:
    # Per-trial substream: independent of trial ordering, stable across runs.
    return random.Random(f"{seed}:{trial}")


def check_k_tree_condition(
    g: Multigraph, trees: Sequence[Iterable[int]], root: int
) -> bool | tuple[int, int, int]:
    """Are the root-to-w paths internally vertex-disjoint across trees?

    For every vertex w other than the root and every pair of trees i < j,
    the unique paths from the root to w in the two trees must share no
    internal vertex. Returns True, or the first violating (w, i, j) with w
    ascending, then i, then j.
    """
    if root not in g.vertices:
        raise ValueError(f"root {root} is not a vertex")
    checked = []
    for idx, t in enumerate(trees):
        edges = frozenset(t)
        if not is_spanning_tree(g, edges):
            raise ValueError(f"tree {idx} is not a spanning tree")
        checked.append(edges)
    parents = [_tree_parents(g, t, root) for t in checked]
    for w in sorted(g.vertices - {root}):
        internals = []
        for parent in parents:
            path = set()
            v = parent[w]
            while v != root:
                path.add(v)
                v = parent[v]
            internals.append(path)
        for i in range(len(internals)):
            for j in range(i + 1, len(internals)):
                if internals[i] & internals[j]:
                    return (w, i, j)
    return True


def _tree_parents(g: Multigraph, tree_edges: frozenset[int], root: int) -> dict[int, int]:
    parent = {root: root}
    stack = [root]
    while stack:
        v = stack.pop()
        for eid, w in g.incident(v):
            if eid in tree_edges and w not in parent:
                parent[w] = v
                stack.append(w)
    return parent


def simulate_failures(g: Multigraph, ubb: UBB, trials: int, seed: int) -> SimulationReport:
    """Monte Carlo edge-failure trials against the tree collection.

    Each trial fails a uniform random set of ubb.t edges (sampled without
    replacement from its own substream) and looks for the first tree
    disjoint from it. Failure sets are logged only when no tree survives.
    Deterministic given (graph, collection, trials, seed).
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    trees = _checked_trees(g, ubb)
    edge_ids = sorted(g.edge_ids())
    if ubb.t >= len(edge_ids):
        raise ValueError("tolerance t must be smaller than the edge count")
    survivals = 0
    logged: list[tuple[tuple[int, ...], None]] = []
    for i in range(trials):
        fs = frozenset(_trial_rng(seed, i).sample(edge_ids, ubb.t)) if ubb.t else frozenset()
        if any(t.isdisjoint(fs) for t in trees):
            survivals += 1
        else:
            logged.append((tuple(sorted(fs)), None))
    return SimulationReport(trials, survivals, tuple(logged), seed)
